//! Sparse multivariate Laurent polynomials with half-integer exponents.
//!
//! Exponents are stored doubled, so `L^{-3/2}` is the exponent `-3`. A
//! variable is either integral (`u`, `v`, `h`) or half-admissible (`L`, `y`).
//!
//! Half-admissible variables come in two Adams flavours. For `y` the rule is
//! `Ψ_r(y^{1/2}) = y^{r/2}`. For `L` the line element is `-L^{1/2}`, so
//! `Ψ_r(-L^{1/2}) = (-L^{1/2})^r`; on monomials this scales the exponent by
//! `r` and flips the sign when the exponent is odd and `r` is even. This is
//! the convention under which `L^{1/2} ↦ -y^{1/2}` commutes with the Adams
//! operations.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{rat, AdamsRing, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    /// Only integer exponents.
    Integral,
    /// Half-integer exponents with `Ψ_r(x^{1/2}) = x^{r/2}`.
    Half,
    /// Half-integer exponents with `-x^{1/2}` as the Adams line element.
    SignedHalf,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    name: String,
    kind: RootKind,
}

impl Var {
    pub fn integral(name: &str) -> Self {
        Var { name: name.to_string(), kind: RootKind::Integral }
    }

    pub fn half(name: &str) -> Self {
        Var { name: name.to_string(), kind: RootKind::Half }
    }

    pub fn signed_half(name: &str) -> Self {
        Var { name: name.to_string(), kind: RootKind::SignedHalf }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &RootKind {
        &self.kind
    }

    pub fn half_admissible(&self) -> bool {
        self.kind != RootKind::Integral
    }
}

/// Ordered set of distinct variables. The empty set is used by constants and
/// combines with any other set.
#[derive(Clone)]
pub struct VarSet(Arc<[Var]>);

impl VarSet {
    pub fn new(vars: Vec<Var>) -> Result<Self> {
        for (i, a) in vars.iter().enumerate() {
            if vars[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidVars(alloc::format!("duplicate variable {}", a.name)));
            }
        }
        Ok(VarSet(vars.into()))
    }

    pub fn empty() -> Self {
        VarSet(Arc::from(Vec::new()))
    }

    /// `{L}` with `-L^{1/2}` as line element: the motive proxy ring.
    pub fn motive() -> Self {
        VarSet(Arc::from(vec![Var::signed_half("L")]))
    }

    /// `{y}`, half-admissible: the χ_{-y} genus ring.
    pub fn y() -> Self {
        VarSet(Arc::from(vec![Var::half("y")]))
    }

    /// `{u, v}`: the Hodge–Deligne ring.
    pub fn uv() -> Self {
        VarSet(Arc::from(vec![Var::integral("u"), Var::integral("v")]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v.name == name)
    }

    fn describe(&self) -> String {
        let names: Vec<&str> = self.0.iter().map(|v| v.name.as_str()).collect();
        alloc::format!("[{}]", names.join(","))
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

type Exps = Vec<i32>;

/// A Laurent polynomial in half-integer powers with rational coefficients.
#[derive(Clone)]
pub struct LPoly {
    vars: VarSet,
    terms: BTreeMap<Exps, Rational>,
}

impl LPoly {
    pub fn zero_in(vars: &VarSet) -> Self {
        LPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        LPoly { vars: VarSet::empty(), terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// The monomial `c · ∏ x_i^{doubled_i / 2}`.
    pub fn monomial(vars: &VarSet, doubled: &[i32], c: Rational) -> Result<Self> {
        if doubled.len() != vars.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "exponent vector of length {} for {} variables",
                doubled.len(),
                vars.len()
            )));
        }
        for (e, v) in doubled.iter().zip(vars.vars()) {
            if e % 2 != 0 && !v.half_admissible() {
                return Err(Error::InvalidArgument(alloc::format!(
                    "half-integer power of integral variable {}",
                    v.name
                )));
            }
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(doubled.to_vec(), c);
        }
        Ok(LPoly { vars: vars.clone(), terms })
    }

    /// `name^{doubled/2}` with coefficient 1.
    pub fn var_pow(vars: &VarSet, name: &str, doubled: i32) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::InvalidVars(alloc::format!("no variable {name} in {vars:?}")))?;
        let mut e = vec![0; vars.len()];
        e[idx] = doubled;
        Self::monomial(vars, &e, Rational::one())
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        Self::var_pow(vars, name, 2)
    }

    /// Build from `(doubled exponents, coefficient)` pairs; like terms are merged.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let mut acc = Self::zero_in(vars);
        for (e, c) in terms {
            let m = Self::monomial(vars, &e, c)?;
            acc = acc.try_add(&m)?;
        }
        Ok(acc)
    }

    /// `Σ c_i x^i` for a single variable with integer exponents `0..`.
    pub fn univariate(vars: &VarSet, name: &str, coeffs: &[i64]) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::InvalidVars(alloc::format!("no variable {name}")))?;
        Self::from_terms(
            vars,
            coeffs.iter().enumerate().map(|(i, &c)| {
                let mut e = vec![0; vars.len()];
                e[idx] = 2 * i as i32;
                (e, rat(c))
            }),
        )
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Terms in canonical (lexicographic, doubled-exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, doubled: &[i32]) -> Rational {
        if self.vars.is_empty() {
            return if doubled.iter().all(|&x| x == 0) { self.constant_term() } else { Rational::zero() };
        }
        self.terms.get(doubled).cloned().unwrap_or_else(Rational::zero)
    }

    /// Re-express over `vars`. Only constants may move between variable sets.
    pub fn embed(&self, vars: &VarSet) -> Result<Self> {
        if self.vars == *vars {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(Self::zero_in(vars));
        }
        if self.is_constant() {
            let mut p = Self::zero_in(vars);
            p.terms.insert(vec![0; vars.len()], self.constant_term());
            return Ok(p);
        }
        Err(self.mismatch(vars))
    }

    fn mismatch(&self, other: &VarSet) -> Error {
        Error::VarMismatch { left: self.vars.describe(), right: other.describe() }
    }

    fn common_vars(&self, other: &Self) -> Result<VarSet> {
        if self.vars == other.vars || other.vars.is_empty() {
            Ok(self.vars.clone())
        } else if self.vars.is_empty() {
            Ok(other.vars.clone())
        } else if self.is_constant() {
            Ok(other.vars.clone())
        } else if other.is_constant() {
            Ok(self.vars.clone())
        } else {
            Err(self.mismatch(&other.vars))
        }
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        let vars = self.common_vars(other)?;
        Ok((self.embed(&vars)?, other.embed(&vars)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (mut a, b) = self.aligned(other)?;
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, c);
        }
        Ok(a)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        let mut out = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exps = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&mut out, e, ca * cb);
            }
        }
        Ok(LPoly { vars: a.vars, terms: out })
    }

    fn neg_ref(&self) -> Self {
        LPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        LPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one().embed(&self.vars).unwrap_or_else(|_| Self::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a nonzero monomial (the only units of the Laurent ring
    /// over a field besides constants).
    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let mut terms = BTreeMap::new();
        terms.insert(e.iter().map(|x| -x).collect(), c.recip());
        Ok(LPoly { vars: self.vars.clone(), terms })
    }

    /// `self^n` for any integer `n`; negative powers need a monomial.
    pub fn pow_i(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            return Ok(self.pow(n as u32));
        }
        if self.is_zero() {
            return Err(Error::NotInvertible("0".into()));
        }
        Ok(self.monomial_inverse()?.pow((-n) as u32))
    }

    fn leading(&self) -> Option<(&Exps, &Rational)> {
        self.terms.iter().next_back()
    }

    fn exponent_box(&self) -> (Vec<i32>, Vec<i32>) {
        let n = self.vars.len();
        let mut lo = vec![i32::MAX; n];
        let mut hi = vec![i32::MIN; n];
        for e in self.terms.keys() {
            for i in 0..n {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Exact quotient `self / divisor`. Fails unless the remainder is zero.
    ///
    /// Leading-term division in lexicographic order. Every quotient exponent
    /// must lie in the box `[min_a - min_b, max_a - max_b]` per variable,
    /// which bounds the loop and detects non-divisibility.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        let (a, b) = self.aligned(divisor)?;
        let vars = a.vars.clone();
        if a.is_zero() {
            return Ok(Self::zero_in(&vars));
        }
        let (alo, ahi) = a.exponent_box();
        let (blo, bhi) = b.exponent_box();
        let (lead_e, lead_c) = {
            let (e, c) = b.leading().unwrap();
            (e.clone(), c.clone())
        };
        let mut rem = a;
        let mut quot = Self::zero_in(&vars);
        while let Some((re, rc)) = rem.leading() {
            let qe: Exps = re.iter().zip(&lead_e).map(|(x, y)| x - y).collect();
            let inside = (0..vars.len()).all(|i| qe[i] >= alo[i] - blo[i] && qe[i] <= ahi[i] - bhi[i]);
            if !inside {
                return Err(Error::NonExactDivision(alloc::format!("({self}) / ({divisor})")));
            }
            let qc = rc / &lead_c;
            let mut qt = BTreeMap::new();
            qt.insert(qe.clone(), qc.clone());
            let step = LPoly { vars: vars.clone(), terms: qt };
            rem = rem.try_sub(&step.try_mul(&b)?)?;
            add_term(&mut quot.terms, qe, qc);
        }
        Ok(quot)
    }

    /// Adams operation `Ψ_r`: every exponent scaled by `r`. For `SignedHalf`
    /// variables an odd exponent picks up the sign `(-1)^{r+1}`.
    pub fn adams(&self, r: u32) -> Self {
        assert!(r >= 1, "Adams operations are indexed by r >= 1");
        let kinds: Vec<bool> = self.vars.vars().iter().map(|v| v.kind == RootKind::SignedHalf).collect();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut flip = false;
            for (x, signed) in e.iter().zip(&kinds) {
                if *signed && x % 2 != 0 && r % 2 == 0 {
                    flip = !flip;
                }
            }
            let ne: Exps = e.iter().map(|x| x * r as i32).collect();
            out.insert(ne, if flip { -c } else { c.clone() });
        }
        LPoly { vars: self.vars.clone(), terms: out }
    }

    /// Evaluate under `subst`, producing a polynomial over `target`.
    ///
    /// Variables not named in the substitution are carried over unchanged and
    /// must exist in `target`.
    pub fn substitute(&self, subst: &Substitution, target: &VarSet) -> Result<Self> {
        let mut acc = Self::zero_in(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(c.clone()).embed(target)?;
            for (x, var) in e.iter().zip(self.vars.vars()) {
                if *x == 0 {
                    continue;
                }
                let factor = match subst.get(&var.name) {
                    Some(value) => value.power(&var.name, *x)?,
                    None => Self::var_pow(target, &var.name, *x)?,
                };
                term = term.try_mul(&factor)?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Whether every exponent is integral (no square roots appear).
    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| x % 2 == 0))
    }

    /// Highest doubled exponent of variable `idx`, if nonzero.
    pub fn max_exponent(&self, idx: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    pub fn min_exponent(&self, idx: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[idx]).min()
    }
}

fn add_term(terms: &mut BTreeMap<Exps, Rational>, e: Exps, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(e) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Value assigned to a variable: `value` stands for `x`, and `half_root`, when
/// declared, stands for `x^{1/2}`. Half-integer powers are only evaluated
/// through a declared root.
#[derive(Debug, Clone)]
pub struct SubstValue {
    pub value: LPoly,
    pub half_root: Option<LPoly>,
}

impl SubstValue {
    fn power(&self, name: &str, doubled: i32) -> Result<LPoly> {
        let raised = match &self.half_root {
            Some(root) => root.pow_i(doubled as i64),
            None => {
                if doubled % 2 != 0 {
                    return Err(Error::MissingHalfRoot(name.into()));
                }
                self.value.pow_i((doubled / 2) as i64)
            }
        };
        raised.map_err(|_| Error::NotInvertible(alloc::format!("{name} = {}", self.value)))
    }
}

#[derive(Debug, Clone, Default)]
pub struct Substitution(BTreeMap<String, SubstValue>);

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, name: &str, value: LPoly) -> Self {
        self.0.insert(name.into(), SubstValue { value, half_root: None });
        self
    }

    pub fn set_rational(self, name: &str, value: Rational) -> Self {
        self.set(name, LPoly::constant(value))
    }

    /// Declare `name^{1/2} ↦ root`; `name` itself maps to `root²`.
    pub fn set_with_root(mut self, name: &str, root: LPoly) -> Self {
        let value = &root * &root;
        self.0.insert(name.into(), SubstValue { value, half_root: Some(root) });
        self
    }

    fn get(&self, name: &str) -> Option<&SubstValue> {
        self.0.get(name)
    }
}

impl PartialEq for LPoly {
    fn eq(&self, other: &Self) -> bool {
        match self.aligned(other) {
            Ok((a, b)) => a.terms == b.terms,
            Err(_) => false,
        }
    }
}

impl Eq for LPoly {}

impl Zero for LPoly {
    fn zero() -> Self {
        Self::zero_in(&VarSet::empty())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LPoly {
    fn one() -> Self {
        Self::int(1)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&LPoly> for &LPoly {
            type Output = LPoly;
            fn $method(self, rhs: &LPoly) -> LPoly {
                self.$try(rhs).expect("LPoly variable sets must agree")
            }
        }
        impl $trait<&LPoly> for LPoly {
            type Output = LPoly;
            fn $method(self, rhs: &LPoly) -> LPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LPoly> for LPoly {
            type Output = LPoly;
            fn $method(self, rhs: LPoly) -> LPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<LPoly> for &LPoly {
            type Output = LPoly;
            fn $method(self, rhs: LPoly) -> LPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        self.neg_ref()
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        self.neg_ref()
    }
}

impl Ring for LPoly {
    fn from_int(n: i64) -> Self {
        Self::int(n)
    }

    fn div_int(&self, n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        Ok(self.scale(&Rational::new(BigInt::one(), BigInt::from(n))))
    }

    fn is_integral(&self) -> bool {
        self.has_integer_coeffs()
    }
}

impl AdamsRing for LPoly {
    fn adams(&self, r: u32) -> Self {
        LPoly::adams(self, r)
    }
}

fn fmt_monomial(vars: &VarSet, e: &[i32], f: &mut String) {
    for (x, var) in e.iter().zip(vars.vars()) {
        if *x == 0 {
            continue;
        }
        f.push_str(&var.name);
        if *x == 2 {
            continue;
        }
        if x % 2 == 0 {
            f.push_str(&alloc::format!("^{}", x / 2));
        } else {
            f.push_str(&alloc::format!("^({}/2)", x));
        }
    }
}

/// Canonical text form, e.g. `1+uv+u^2v^2`, `-L^(-3/2)`, `(1/2)y-y^2`.
impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            fmt_monomial(&self.vars, e, &mut mono);
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if abs.is_integer() {
                out.push_str(&abs.to_string());
                out.push_str(&mono);
            } else {
                out.push_str(&alloc::format!("({abs}){mono}"));
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat_frac;
    use proptest::prelude::*;

    fn l() -> LPoly {
        LPoly::var(&VarSet::motive(), "L").unwrap()
    }

    fn one() -> LPoly {
        LPoly::int(1)
    }

    #[test]
    fn products() {
        assert_eq!((&one() + &l()) * (&l() - &one()), l().pow(2) - one());
        let p = &one() + &l();
        assert_eq!(&one() * &p, p);
        let q = LPoly::univariate(&VarSet::motive(), "L", &[1, 1, 1]).unwrap();
        assert_eq!(&q * &p, LPoly::univariate(&VarSet::motive(), "L", &[1, 2, 2, 1]).unwrap());
    }

    #[test]
    fn exact_division() {
        let m = VarSet::motive();
        assert_eq!((l().pow(2) - one()).exact_div(&(l() - one())).unwrap(), l() + one());
        assert_eq!(
            (l().pow(3) - one()).exact_div(&(l() - one())).unwrap(),
            LPoly::univariate(&m, "L", &[1, 1, 1]).unwrap()
        );
        let neg_root = -LPoly::var_pow(&m, "L", 1).unwrap();
        let num = neg_root.pow_i(-1).unwrap() - neg_root.clone();
        let den = &l() * &(&one() - &l());
        let expected = -LPoly::var_pow(&m, "L", -3).unwrap();
        assert_eq!(num.exact_div(&den).unwrap(), expected);
    }

    #[test]
    fn inexact_division_is_an_error() {
        let e = (l().pow(2) + one()).exact_div(&(l() - one()));
        assert!(matches!(e, Err(Error::NonExactDivision(_))));
        assert!(matches!(l().exact_div(&LPoly::zero()), Err(Error::NonExactDivision(_))));
    }

    #[test]
    fn mismatched_variables() {
        let y = LPoly::var(&VarSet::y(), "y").unwrap();
        assert!(matches!(l().try_mul(&y), Err(Error::VarMismatch { .. })));
        // constants combine with everything
        assert_eq!(LPoly::int(3).try_mul(&y).unwrap(), y.scale(&rat(3)));
    }

    #[test]
    fn adams_examples() {
        let uv = VarSet::uv();
        let p = LPoly::from_terms(&uv, [(vec![0, 0], rat(3)), (vec![2, 2], rat(2))]).unwrap();
        let q = LPoly::from_terms(&uv, [(vec![0, 0], rat(3)), (vec![4, 4], rat(2))]).unwrap();
        assert_eq!(p.adams(2), q);
        assert_eq!(p.adams(1), p);
        let y_half = LPoly::var_pow(&VarSet::y(), "y", 1).unwrap();
        assert_eq!(y_half.adams(2), LPoly::var(&VarSet::y(), "y").unwrap());
        // -L^{1/2} is line-like
        let ell = -LPoly::var_pow(&VarSet::motive(), "L", 1).unwrap();
        for r in 1..=5 {
            assert_eq!(ell.adams(r), ell.pow(r));
        }
    }

    #[test]
    fn substitutions() {
        let uv = VarSet::uv();
        let y = VarSet::y();
        let p = LPoly::var(&uv, "u").unwrap() * LPoly::var(&uv, "v").unwrap();
        let s = Substitution::new()
            .set("u", -LPoly::var(&y, "y").unwrap())
            .set_rational("v", rat(1));
        assert_eq!(p.substitute(&s, &y).unwrap(), -LPoly::var(&y, "y").unwrap());
        assert_eq!(p.substitute(&Substitution::new(), &uv).unwrap(), p);

        let root = LPoly::var_pow(&VarSet::motive(), "L", 1).unwrap();
        let chi = Substitution::new().set_with_root("L", LPoly::int(-1));
        assert_eq!(root.substitute(&chi, &VarSet::empty()).unwrap(), LPoly::int(-1));
        let no_root = Substitution::new().set("L", LPoly::int(1));
        assert!(matches!(
            root.substitute(&no_root, &VarSet::empty()),
            Err(Error::MissingHalfRoot(_))
        ));
        let inv = LPoly::var_pow(&VarSet::motive(), "L", -2).unwrap();
        let at_zero = Substitution::new().set("L", LPoly::zero());
        assert!(matches!(inv.substitute(&at_zero, &VarSet::empty()), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn display() {
        let uv = VarSet::uv();
        let p = LPoly::from_terms(
            &uv,
            [(vec![0, 0], rat(1)), (vec![2, 2], rat(1)), (vec![4, 4], rat(1))],
        )
        .unwrap();
        assert_eq!(p.to_string(), "1+uv+u^2v^2");
        let m = VarSet::motive();
        assert_eq!((-LPoly::var_pow(&m, "L", -3).unwrap()).to_string(), "-L^(-3/2)");
        let y = VarSet::y();
        let q = LPoly::from_terms(&y, [(vec![2], rat_frac(1, 2)), (vec![4], rat(-1)), (vec![-4], rat(2))])
            .unwrap();
        assert_eq!(q.to_string(), "2y^-2+(1/2)y-y^2");
        assert_eq!(LPoly::zero().to_string(), "0");
        assert_eq!(LPoly::constant(rat_frac(-1, 3)).to_string(), "-1/3");
    }

    fn arb_poly() -> impl Strategy<Value = LPoly> {
        prop::collection::vec((-2i32..=6, -2i32..=6, -3i64..=3), 0..6).prop_map(|ts| {
            let vars = VarSet::new(vec![Var::signed_half("L"), Var::half("y")]).unwrap();
            LPoly::from_terms(&vars, ts.into_iter().map(|(a, b, c)| (vec![a, b], rat(c)))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn adams_composes(a in arb_poly(), r in 1u32..=5, s in 1u32..=5) {
            prop_assert_eq!(a.adams(s).adams(r), a.adams(r * s));
        }

        #[test]
        fn adams_is_ring_map(a in arb_poly(), b in arb_poly(), r in 1u32..=4) {
            prop_assert_eq!((&a * &b).adams(r), &a.adams(r) * &b.adams(r));
            prop_assert_eq!((&a + &b).adams(r), &a.adams(r) + &b.adams(r));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn no_zero_terms_survive(a in arb_poly(), b in arb_poly()) {
            let d = &(&a * &b) - &(&b * &a);
            prop_assert!(d.is_zero());
            prop_assert_eq!(d.num_terms(), 0);
        }
    }
}
