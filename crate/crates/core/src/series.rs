//! Truncated power series in `t`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// A power series `Σ_{n=0}^{N} a_n t^n` with a fixed truncation order `N`.
///
/// Arithmetic between series of different orders is an error; use
/// [`TSeries::truncated`] to lower an order explicitly.
#[derive(Clone, PartialEq)]
pub struct TSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TSeries<R> {
    pub fn zero(order: usize) -> Self {
        TSeries { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, R::one())
    }

    /// `c · t^n`, or zero if `n > order`.
    pub fn monomial(order: usize, n: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    /// Series whose first coefficients are `prefix`; the rest are zero and
    /// anything beyond `order` is dropped.
    pub fn from_prefix(order: usize, prefix: &[R]) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(prefix) {
            *slot = c.clone();
        }
        s
    }

    /// `coeffs` must be nonempty; its length fixes the order.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least t^0");
        TSeries { coeffs }
    }

    /// `Σ_{n=0}^{N} t^n = 1/(1-t)`.
    pub fn geometric(order: usize) -> Self {
        TSeries { coeffs: vec![R::one(); order + 1] }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        self.coeffs[n] = c;
    }

    pub fn truncated(&self, order: usize) -> Self {
        Self::from_prefix(order, &self.coeffs)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        TSeries { coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        TSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + &(a.clone() * b);
                }
            }
        }
        Ok(TSeries { coeffs: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one_value() {
            return Err(Error::BadConstantTerm { expected: "1" });
        }
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        out[0] = R::one();
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc + &(self.coeffs[j].clone() * &out[k - j]);
            }
            out[k] = -acc;
        }
        Ok(TSeries { coeffs: out })
    }

    /// `exp(a)` for `a` with zero constant term, via `n f_n = Σ j a_j f_{n-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm { expected: "0" });
        }
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        out[0] = R::one();
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + &(self.coeffs[j].clone() * &R::from_int(j as i64) * &out[k - j]);
                }
            }
            out[k] = acc.div_int(k as i64)?;
        }
        Ok(TSeries { coeffs: out })
    }

    /// `log(a)` for `a` with constant term 1, via `a' = a · (log a)'`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one_value() {
            return Err(Error::BadConstantTerm { expected: "1" });
        }
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone() * &R::from_int(k as i64);
            for j in 1..k {
                if !out[j].is_zero() {
                    acc = acc - &(out[j].clone() * &R::from_int(j as i64) * &self.coeffs[k - j]);
                }
            }
            out[k] = acc.div_int(k as i64)?;
        }
        Ok(TSeries { coeffs: out })
    }

    /// Substitution `t ↦ sign · t^k`, truncated at the same order.
    pub fn subst(&self, sign: i8, k: usize) -> Self {
        self.subst_into(sign, k, self.order())
    }

    /// `t ↦ ±t^k`, producing a series of the given order.
    ///
    /// Coefficients beyond what `self` determines are not available, so the
    /// target order must satisfy `order < (self.order() + 1) * k`.
    pub fn subst_into(&self, sign: i8, k: usize, order: usize) -> Self {
        assert!(k >= 1, "t ↦ ±t^k needs k >= 1");
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        assert!(order < (self.order() + 1) * k, "substituted series is not determined to order {order}");
        let mut out = vec![R::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > order {
                break;
            }
            out[i * k] = if sign < 0 && i % 2 == 1 { -c.clone() } else { c.clone() };
        }
        TSeries { coeffs: out }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TSeries<S> {
        TSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<TSeries<S>> {
        Ok(TSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Ring::is_integral)
    }

    /// Fails loudly unless every coefficient lies in `subring`.
    pub fn assert_in(&self, what: &str, subring: impl Fn(&R) -> bool) -> Result<()> {
        match self.coeffs.iter().position(|c| !subring(c)) {
            None => Ok(()),
            Some(n) => Err(Error::Integrality(alloc::format!(
                "{what}: coefficient of t^{n} is {:?}",
                self.coeffs[n]
            ))),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.coeffs[0].is_one_value()
    }
}

impl<R: fmt::Debug> fmt::Debug for TSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
