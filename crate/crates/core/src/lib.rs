//! Exact generating-series calculus over Grothendieck-ring proxies.
//!
//! The crate is `no_std` (it needs `alloc`) and purely algebraic:
//!
//! - [`poly`]: sparse Laurent polynomials with half-integer exponents over
//!   big rationals, with Adams operations and substitutions.
//! - [`series`]: truncated power series in `t` over any [`Ring`].
//! - [`lambda`]: pre-lambda structures, Euler products and power structures.
//! - [`motives`]: punctual Hilbert series, Kapranov zeta functions,
//!   configuration spaces, virtual motives and their specializations.
//! - [`hirzebruch`]: Hirzebruch power series and homology models with stored
//!   Hirzebruch classes.
//! - [`pontrjagin`]: the free Pontrjagin ring of symmetric products and the
//!   class-level generating series built on it.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod hirzebruch;
pub mod lambda;
pub mod motives;
pub mod poly;
pub mod pontrjagin;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use hirzebruch::{BasisElement, HClass, HomologyModel};
pub use lambda::EulerExponents;
pub use poly::{LPoly, Var, VarSet};
pub use pontrjagin::{Atom, PontElement, PontSeries};
pub use ring::{AdamsRing, Rational, Ring};
pub use series::TSeries;
