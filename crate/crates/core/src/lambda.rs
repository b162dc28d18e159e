//! Pre-lambda structures, Euler products and the algebraic power structure.
//!
//! For an Adams ring `R`, `λ_t(m) = (1-t)^{-m} = exp(Σ_r Ψ_r(m) t^r / r)`.
//! Every normalized series factors uniquely as `∏_k (1-t^k)^{-b_k}` and the
//! power structure is `A(t)^m = ∏_k (1-t^k)^{-m b_k}`.

use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::LPoly;
use crate::ring::{AdamsRing, Ring};
use crate::series::TSeries;

/// Exponents `b_1, …, b_N` of an Euler product `∏ (1-t^k)^{-b_k}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerExponents<R> {
    exps: Vec<R>,
}

impl<R: Ring> EulerExponents<R> {
    /// `exps[k-1]` is `b_k`; the order is `exps.len()`.
    pub fn new(exps: Vec<R>) -> Self {
        EulerExponents { exps }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> R) -> Self {
        EulerExponents { exps: (1..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.exps.len()
    }

    /// `b_k` for `1 <= k <= order`.
    pub fn get(&self, k: usize) -> &R {
        &self.exps[k - 1]
    }

    pub fn as_slice(&self) -> &[R] {
        &self.exps
    }

    pub fn scale(&self, m: &R) -> Self {
        EulerExponents { exps: self.exps.iter().map(|b| m.clone() * b).collect() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> EulerExponents<S> {
        EulerExponents { exps: self.exps.iter().map(f).collect() }
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut exps: Vec<R> = self.exps.iter().take(order).cloned().collect();
        exps.resize(order, R::zero());
        EulerExponents { exps }
    }
}

pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `λ_t(m)` through `t^order`.
pub fn pre_lambda<R: AdamsRing>(m: &R, order: usize) -> Result<TSeries<R>> {
    let mut log = TSeries::zero(order);
    for r in 1..=order {
        log.set_coeff(r, m.adams(r as u32).div_int(r as i64)?);
    }
    log.exp()
}

/// `∏_{k=1}^{N} (1-t^k)^{-b_k}` with `N = b.order()`.
pub fn euler_exp<R: AdamsRing>(b: &EulerExponents<R>) -> Result<TSeries<R>> {
    let n = b.order();
    let mut acc = TSeries::one(n);
    for k in 1..=n {
        let bk = b.get(k);
        if bk.is_zero() {
            continue;
        }
        let factor = pre_lambda(bk, n / k)?.subst_into(1, k, n);
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// Unique Euler exponents of a normalized series.
///
/// With `c_n = [t^n] log A`, `b_k = (1/k) Σ_{d|k} μ(k/d) Ψ_{k/d}(d c_d)`.
/// When `A` has integral coefficients the exponents must be integral too;
/// a violation is reported as an error.
pub fn euler_log<R: AdamsRing>(a: &TSeries<R>) -> Result<EulerExponents<R>> {
    if !a.is_normalized() {
        return Err(Error::BadConstantTerm { expected: "1" });
    }
    let n = a.order();
    let c = a.log()?;
    let mut exps = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = R::zero();
        for d in (1..=k).filter(|d| k % d == 0) {
            let mu = mobius(k / d);
            if mu == 0 {
                continue;
            }
            let term = (c.coeff(d).clone() * &R::from_int(d as i64)).adams((k / d) as u32);
            acc = if mu > 0 { acc + &term } else { acc - &term };
        }
        exps.push(acc.div_int(k as i64)?);
    }
    let b = EulerExponents { exps };
    if a.is_integral() {
        if let Some(k) = b.exps.iter().position(|x| !x.is_integral()) {
            return Err(Error::Integrality(alloc::format!(
                "Euler exponent b_{} = {:?} of an integral series",
                k + 1,
                b.exps[k]
            )));
        }
    }
    Ok(b)
}

/// `A(t)^m = ∏_k (1-t^k)^{-m b_k}` where `b = euler_log(A)`.
pub fn power<R: AdamsRing>(a: &TSeries<R>, m: &R) -> Result<TSeries<R>> {
    euler_exp(&euler_log(a)?.scale(m))
}

/// `λ_t(Σ a_k x^k) = ∏ (1 - x^k t)^{-a_k}` for integer coefficients `a_k`.
pub fn pre_lambda_polyring(p: &LPoly, order: usize) -> Result<TSeries<LPoly>> {
    let mut acc = TSeries::one(order);
    for (e, a) in p.terms() {
        if !a.is_integer() {
            return Err(Error::InvalidArgument(alloc::format!(
                "coefficient {a} is not an integer"
            )));
        }
        let mono = LPoly::monomial(p.vars(), e, One::one())?;
        let count: i64 = a
            .to_integer()
            .try_into()
            .map_err(|_| Error::InvalidArgument("coefficient too large".into()))?;
        let factor = if count >= 0 {
            let geometric =
                TSeries::from_coeffs((0..=order).map(|i| mono.pow(i as u32)).collect());
            geometric.pow(count as u32)
        } else {
            let linear = TSeries::from_prefix(order, &[LPoly::one(), -mono.clone()]);
            linear.pow((-count) as u32)
        };
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Var, VarSet};
    use crate::ring::{rat, Rational};
    use num_traits::Zero;
    use proptest::prelude::*;

    /// Independent route: peel off one factor per degree by series division.
    fn euler_log_by_division<R: AdamsRing>(a: &TSeries<R>) -> EulerExponents<R> {
        let n = a.order();
        let mut exps = Vec::new();
        let mut rest = a.clone();
        for k in 1..=n {
            let bk = rest.coeff(k).clone();
            let factor = pre_lambda(&bk, n / k).unwrap().subst_into(1, k, n);
            rest = rest.mul(&factor.invert().unwrap()).unwrap();
            exps.push(bk);
        }
        EulerExponents::new(exps)
    }

    fn zq(v: &[i64], n: usize) -> TSeries<Rational> {
        TSeries::from_prefix(n, &v.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    fn ex(v: &[i64]) -> EulerExponents<Rational> {
        EulerExponents::new(v.iter().map(|&x| rat(x)).collect())
    }

    fn motive_l(k: u32) -> LPoly {
        LPoly::var(&VarSet::motive(), "L").unwrap().pow(k)
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(got, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn pre_lambda_examples() {
        assert_eq!(pre_lambda(&rat(1), 6).unwrap(), TSeries::geometric(6));
        assert_eq!(pre_lambda(&rat(0), 6).unwrap(), TSeries::one(6));
        let y = LPoly::var(&VarSet::y(), "y").unwrap();
        let got = pre_lambda(&y, 5).unwrap();
        let inv = TSeries::from_prefix(5, &[LPoly::one(), -y.clone()]).invert().unwrap();
        assert_eq!(got, inv);
        assert_eq!(got.mul(&TSeries::from_prefix(5, &[LPoly::one(), -y])).unwrap(), TSeries::one(5));
    }

    #[test]
    fn euler_exp_examples() {
        assert_eq!(euler_exp(&ex(&[1, 0, 0, 0, 0])).unwrap(), TSeries::geometric(5));
        assert_eq!(euler_exp(&ex(&[1, -1, 0, 0, 0])).unwrap(), zq(&[1, 1], 5));
        let b = EulerExponents::from_fn(3, |k| motive_l(k as u32 - 1));
        let expected = TSeries::from_coeffs(vec![
            LPoly::one(),
            LPoly::one(),
            LPoly::one() + motive_l(1),
            LPoly::one() + motive_l(1) + motive_l(2),
        ]);
        assert_eq!(euler_exp(&b).unwrap(), expected);
    }

    #[test]
    fn euler_log_examples() {
        assert_eq!(euler_log(&TSeries::<Rational>::geometric(6)).unwrap(), ex(&[1, 0, 0, 0, 0, 0]));
        let b = euler_log(&zq(&[1, 1], 6)).unwrap();
        assert_eq!(b, ex(&[1, -1, 0, 0, 0, 0]));
        assert_eq!(euler_exp(&b).unwrap(), zq(&[1, 1], 6));
        assert!(matches!(euler_log(&zq(&[2, 1], 3)), Err(Error::BadConstantTerm { .. })));
    }

    #[test]
    fn power_examples() {
        let one_plus_t = zq(&[1, 1], 6);
        assert_eq!(power(&one_plus_t, &rat(1)).unwrap(), one_plus_t);
        assert_eq!(power(&zq(&[1, 3, -2, 5], 6), &rat(0)).unwrap(), TSeries::one(6));
        // binomial coefficients by brute force
        for m in 0..=7i64 {
            let got = power(&one_plus_t, &rat(m)).unwrap();
            let mut row = vec![1i64];
            for _ in 0..m {
                let mut next = vec![1i64; row.len() + 1];
                for i in 1..row.len() {
                    next[i] = row[i - 1] + row[i];
                }
                row = next;
            }
            assert_eq!(got, zq(&row, 6), "m = {m}");
        }
    }

    #[test]
    fn polyring_examples() {
        let uv = VarSet::uv();
        let uvm = LPoly::var(&uv, "u").unwrap() * LPoly::var(&uv, "v").unwrap();
        let p = LPoly::one() + uvm.clone();
        let n = 5;
        let expected = TSeries::from_prefix(n, &[LPoly::one(), -LPoly::one()])
            .mul(&TSeries::from_prefix(n, &[LPoly::one(), -uvm]))
            .unwrap()
            .invert()
            .unwrap();
        assert_eq!(pre_lambda_polyring(&p, n).unwrap(), expected);
        assert_eq!(pre_lambda_polyring(&LPoly::zero(), n).unwrap(), TSeries::one(n));
        let two = pre_lambda_polyring(&LPoly::int(2), n).unwrap();
        let g: TSeries<LPoly> = TSeries::geometric(n);
        assert_eq!(two, g.mul(&g).unwrap());
    }

    #[test]
    fn integrality_violation_detected() {
        // A non-Adams-compatible "exponent" ring: rationals with a fractional series
        // still produce rational b; integral inputs always produce integral b.
        let a = zq(&[1, 3, 1, -4, 7], 4);
        let b = euler_log(&a).unwrap();
        assert!(b.as_slice().iter().all(|x| x.is_integer()));
    }

    fn arb_ypoly() -> impl Strategy<Value = LPoly> {
        prop::collection::vec(-3i64..=3, 0..4)
            .prop_map(|c| LPoly::univariate(&VarSet::y(), "y", &c).unwrap())
    }

    fn arb_yseries(n: usize) -> impl Strategy<Value = TSeries<LPoly>> {
        prop::collection::vec(arb_ypoly(), n).prop_map(move |cs| {
            let mut v = vec![LPoly::one()];
            v.extend(cs);
            TSeries::from_coeffs(v)
        })
    }

    fn arb_exponents(n: usize) -> impl Strategy<Value = EulerExponents<LPoly>> {
        prop::collection::vec(arb_ypoly(), n).prop_map(EulerExponents::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn mobius_formula_matches_division_oracle(a in arb_yseries(8)) {
            prop_assert_eq!(euler_log(&a).unwrap(), euler_log_by_division(&a));
        }

        #[test]
        fn exp_log_round_trips(a in arb_yseries(8), b in arb_exponents(8)) {
            prop_assert_eq!(euler_exp(&euler_log(&a).unwrap()).unwrap(), a);
            prop_assert_eq!(euler_log(&euler_exp(&b).unwrap()).unwrap(), b);
        }

        #[test]
        fn polyring_matches_adams_route(c in prop::collection::vec((0i32..=3, 0i32..=3, -2i64..=2), 0..5)) {
            let uv = VarSet::uv();
            let p = LPoly::from_terms(&uv, c.into_iter().map(|(i, j, a)| (vec![2 * i, 2 * j], rat(a)))).unwrap();
            prop_assert_eq!(pre_lambda_polyring(&p, 6).unwrap(), pre_lambda(&p, 6).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn power_structure_axioms(a in arb_yseries(6), b in arb_yseries(6), m in arb_ypoly(), n in arb_ypoly(), k in 2usize..=3) {
            let one = LPoly::one();
            prop_assert_eq!(power(&a, &LPoly::zero()).unwrap(), TSeries::one(6));
            prop_assert_eq!(power(&a, &one).unwrap(), a.clone());
            prop_assert_eq!(
                power(&a.mul(&b).unwrap(), &m).unwrap(),
                power(&a, &m).unwrap().mul(&power(&b, &m).unwrap()).unwrap()
            );
            prop_assert_eq!(
                power(&a, &(m.clone() + &n)).unwrap(),
                power(&a, &m).unwrap().mul(&power(&a, &n).unwrap()).unwrap()
            );
            prop_assert_eq!(
                power(&a, &(m.clone() * &n)).unwrap(),
                power(&power(&a, &n).unwrap(), &m).unwrap()
            );
            let lin = power(&TSeries::from_prefix(6, &[one.clone(), one]), &m).unwrap();
            prop_assert_eq!(lin.coeff(1), &m);
            prop_assert_eq!(power(&a.subst(1, k), &m).unwrap(), power(&a, &m).unwrap().subst(1, k));
        }
    }

    #[test]
    fn signed_half_variables_round_trip() {
        let vars = VarSet::new(vec![Var::signed_half("L")]).unwrap();
        let root = LPoly::var_pow(&vars, "L", -3).unwrap();
        let b = EulerExponents::new(vec![-root.clone(), root.pow(2), LPoly::one(), -root]);
        let a = euler_exp(&b).unwrap();
        assert!(a.is_integral());
        assert_eq!(euler_log(&a).unwrap(), b);
        assert_eq!(euler_log_by_division(&a), b);
    }
}
