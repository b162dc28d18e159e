//! Coefficient-ring abstractions shared by series, power structures and the
//! Pontrjagin model.

use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::format;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// A commutative ring with unit, as needed by truncated series arithmetic.
///
/// `div_int` is the only division ever required (by the integers `1..=N`
/// in exp/log recursions); rings that do not contain `1/n` report an error.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_int(n: i64) -> Self;

    fn div_int(&self, n: i64) -> Result<Self>;

    /// Whether the value lies in the integral subring (integer coefficients).
    fn is_integral(&self) -> bool;

    fn is_one_value(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring with Adams operations: ring endomorphisms with `Ψ_1 = id` and
/// `Ψ_r ∘ Ψ_s = Ψ_{rs}`.
pub trait AdamsRing: Ring {
    fn adams(&self, r: u32) -> Self;
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for Rational {
    fn from_int(n: i64) -> Self {
        rat(n)
    }

    fn div_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        Ok(self / rat(n))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

/// Rationals carry the trivial pre-lambda structure `λ_t(m) = (1-t)^{-m}`.
impl AdamsRing for Rational {
    fn adams(&self, _r: u32) -> Self {
        self.clone()
    }
}

impl Ring for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn div_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        let (q, r) = self.div_rem(&BigInt::from(n));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonInvertibleInteger(format!("{self}"), n))
        }
    }

    fn is_integral(&self) -> bool {
        true
    }
}

impl AdamsRing for BigInt {
    fn adams(&self, _r: u32) -> Self {
        self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_division_must_be_exact() {
        let six = BigInt::from(6);
        assert_eq!(six.div_int(3).unwrap(), BigInt::from(2));
        assert!(matches!(
            six.div_int(4),
            Err(Error::NonInvertibleInteger(_, 4))
        ));
    }

    #[test]
    fn rationals_reduce() {
        let q = rat_frac(6, -4);
        assert_eq!(q, rat_frac(-3, 2));
        assert!(!q.is_integral());
        assert_eq!(q.div_int(3).unwrap(), rat_frac(-1, 2));
    }
}
