//! Seeded randomized identity suites. Each check draws its own instances from
//! a ChaCha stream keyed by the seed and the check name, so reports depend
//! only on the flags.

use std::fmt::Debug;
use std::sync::Arc;

use motivic_core::hirzebruch::{
    adams_h, chern_class_proj, chern_limit_check, degree, eval_y, proj_space_model, product_model, qyhat_series,
    todd_series, y_pow, HClass, HomologyModel,
};
use motivic_core::lambda::{euler_exp, euler_log, pre_lambda, pre_lambda_polyring, power};
use motivic_core::motives::{
    punctual_exponents_small, spec_chi_minus_y, spec_e, surface_punctual_series, virtual_alpha,
};
use motivic_core::pontrjagin::{hom_exp_inv, pont_degree, Atom, PontElement, PontSeries, PontSpace};
use motivic_core::ring::rat;
use motivic_core::{EulerExponents, LPoly, Rational, TSeries, VarSet};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::args::Suite;
use crate::builtins::builtin;
use crate::report::{Check, SeriesReport};

/// Largest order used by the Pontrjagin suite, whose term counts grow with
/// partitions times basis size.
pub const PONT_ORDER_CAP: usize = 5;

type Outcome = Result<(), String>;

fn rng_for(seed: u64, name: &str) -> ChaCha8Rng {
    let salt = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

/// Runs `prop` on `cases` instances; the first failing instance is dumped.
fn randomized<T: Debug>(
    name: &str,
    seed: u64,
    cases: usize,
    mut gen: impl FnMut(&mut ChaCha8Rng) -> T,
    prop: impl Fn(&T) -> Outcome,
) -> Check {
    let mut rng = rng_for(seed, name);
    for i in 0..cases {
        let input = gen(&mut rng);
        if let Err(msg) = prop(&input) {
            return Check::fail(name, format!("case {i}: {msg}; input {input:?}"));
        }
    }
    Check::ok(name, format!("{cases} instances"))
}

fn fixed(name: &str, prop: impl FnOnce() -> Outcome) -> Check {
    match prop() {
        Ok(()) => Check::ok(name, ""),
        Err(msg) => Check::fail(name, msg),
    }
}

fn same<T: PartialEq + Debug>(what: &str, got: T, expected: T) -> Outcome {
    if got == expected {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {expected:?}"))
    }
}

fn ok<T>(r: motivic_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

// ---- generators -------------------------------------------------------------

fn small(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-3..=3)
}

fn ypoly(rng: &mut ChaCha8Rng) -> LPoly {
    let len = rng.gen_range(0..4);
    let c: Vec<i64> = (0..len).map(|_| small(rng)).collect();
    LPoly::univariate(&VarSet::y(), "y", &c).expect("y is a variable")
}

/// Integer combination of `L^{e/2}` with `|e| <= 4`.
fn motive_poly(rng: &mut ChaCha8Rng, half: bool) -> LPoly {
    let len = rng.gen_range(0..4);
    let terms: Vec<(Vec<i32>, Rational)> = (0..len)
        .map(|_| {
            let e = rng.gen_range(-2..=2) * 2 + if half && rng.gen_bool(0.5) { 1 } else { 0 };
            (vec![e], rat(small(rng)))
        })
        .collect();
    LPoly::from_terms(&VarSet::motive(), terms).expect("L is a variable")
}

fn normalized(rng: &mut ChaCha8Rng, order: usize, mut coeff: impl FnMut(&mut ChaCha8Rng) -> LPoly) -> TSeries<LPoly> {
    let mut v = vec![LPoly::one()];
    v.extend((0..order).map(|_| coeff(rng)));
    TSeries::from_coeffs(v)
}

// ---- suites -----------------------------------------------------------------

pub fn lambda_checks(order: usize, seed: u64, cases: usize) -> Vec<Check> {
    let n = order.max(1);
    let series = move |r: &mut ChaCha8Rng| normalized(r, n, ypoly);
    vec![
        randomized("axiom (i): A^0 = 1", seed, cases, series, |a| {
            same("A^0", ok(power(a, &LPoly::zero()))?, TSeries::one(n))
        }),
        randomized("axiom (ii): A^1 = A", seed, cases, series, |a| same("A^1", ok(power(a, &LPoly::one()))?, a.clone())),
        randomized(
            "axiom (iii): (AB)^m = A^m B^m",
            seed,
            cases,
            |r| (series(r), series(r), ypoly(r)),
            |(a, b, m)| {
                let lhs = ok(power(&ok(a.mul(b))?, m))?;
                same("(AB)^m", lhs, ok(ok(power(a, m))?.mul(&ok(power(b, m))?))?)
            },
        ),
        randomized(
            "axiom (iv): A^(m+n) = A^m A^n",
            seed,
            cases,
            |r| (series(r), ypoly(r), ypoly(r)),
            |(a, m, k)| {
                let lhs = ok(power(a, &(m.clone() + k)))?;
                same("A^(m+n)", lhs, ok(ok(power(a, m))?.mul(&ok(power(a, k))?))?)
            },
        ),
        randomized(
            "axiom (v): A^(mn) = (A^n)^m",
            seed,
            cases,
            |r| (series(r), ypoly(r), ypoly(r)),
            |(a, m, k)| same("A^(mn)", ok(power(a, &(m.clone() * k)))?, ok(power(&ok(power(a, k))?, m))?),
        ),
        randomized("axiom (vi): (1+t)^m = 1 + mt + O(t^2)", seed, cases, ypoly, |m| {
            let s = ok(power(&TSeries::from_prefix(n, &[LPoly::one(), LPoly::one()]), m))?;
            same("t^1 coefficient", s.coeff(1).clone(), m.clone())
        }),
        randomized(
            "axiom (vii): A(t^k)^m = A^m(t^k)",
            seed,
            cases,
            |r| (series(r), ypoly(r), r.gen_range(2..=3usize)),
            |(a, m, k)| same("A(t^k)^m", ok(power(&a.subst(1, *k), m))?, ok(power(a, m))?.subst(1, *k)),
        ),
        randomized("Exp(Log A) = A", seed, cases, series, |a| same("Exp Log", ok(euler_exp(&ok(euler_log(a))?))?, a.clone())),
        randomized(
            "Log(Exp b) = b",
            seed,
            cases,
            |r| EulerExponents::new((0..n).map(|_| motive_poly(r, true)).collect()),
            |b| same("Log Exp", ok(euler_log(&ok(euler_exp(b))?))?, b.clone()),
        ),
        randomized(
            "Adams composition and ring maps",
            seed,
            cases,
            |r| (motive_poly(r, true), motive_poly(r, true), r.gen_range(1..=4u32), r.gen_range(1..=4u32)),
            |(a, b, r, s)| {
                same("Psi_r Psi_s", a.adams(*s).adams(*r), a.adams(r * s))?;
                same("Psi_r additive", (a.clone() + b).adams(*r), a.adams(*r) + b.adams(*r))?;
                same("Psi_r multiplicative", (a.clone() * b).adams(*r), a.adams(*r) * b.adams(*r))
            },
        ),
        randomized(
            "pre-lambda: Adams route = polynomial-ring route",
            seed,
            cases,
            |r| {
                let terms: Vec<(Vec<i32>, Rational)> =
                    (0..r.gen_range(0..4)).map(|_| (vec![2 * r.gen_range(0..=3), 2 * r.gen_range(0..=3)], rat(small(r)))).collect();
                LPoly::from_terms(&VarSet::uv(), terms).expect("u, v are variables")
            },
            |p| same("lambda_t", ok(pre_lambda(p, n))?, ok(pre_lambda_polyring(p, n))?),
        ),
    ]
}

pub fn motives_checks(order: usize, seed: u64, cases: usize) -> Vec<Check> {
    let n = order.max(1);
    vec![
        randomized(
            "e is an Adams ring map",
            seed,
            cases,
            |r| (motive_poly(r, false), motive_poly(r, false), r.gen_range(1..=4u32)),
            |(a, b, r)| {
                same("e(Psi_r a)", ok(spec_e(&a.adams(*r)))?, ok(spec_e(a))?.adams(*r))?;
                same("e(ab)", ok(spec_e(&(a.clone() * b)))?, ok(spec_e(a))? * ok(spec_e(b))?)
            },
        ),
        randomized(
            "chi_-y is an Adams ring map",
            seed,
            cases,
            |r| (motive_poly(r, true), motive_poly(r, true), r.gen_range(1..=4u32)),
            |(a, b, r)| {
                same("chi(Psi_r a)", ok(spec_chi_minus_y(&a.adams(*r)))?, ok(spec_chi_minus_y(a))?.adams(*r))?;
                same("chi(ab)", ok(spec_chi_minus_y(&(a.clone() * b)))?, ok(spec_chi_minus_y(a))? * ok(spec_chi_minus_y(b))?)
            },
        ),
        randomized(
            "chi_-y respects the power structure",
            seed,
            cases,
            |r| (normalized(r, n.min(5), |r| motive_poly(r, true)), motive_poly(r, true)),
            |(a, m)| {
                let lhs = ok(ok(power(a, m))?.try_map(spec_chi_minus_y))?;
                let rhs = ok(power(&ok(a.try_map(spec_chi_minus_y))?, &ok(spec_chi_minus_y(m))?))?;
                same("chi((A)^m)", lhs, rhs)
            },
        ),
        fixed("punctual exponents: Euler log = closed forms, d <= 4", || {
            for d in 1..=4 {
                ok(punctual_exponents_small(d))?;
            }
            Ok(())
        }),
        fixed("surface exponents L^(k-1) give the Gaussian binomials", || {
            let got = ok(surface_punctual_series(n.min(3)))?;
            let expected = ok(motivic_core::motives::punctual_hilb_small(2, n.min(3)))?;
            same("surface series", got, expected)
        }),
        fixed("virtual exponents match their closed form", || {
            for k in 1..=n as u32 {
                ok(virtual_alpha(k))?;
            }
            Ok(())
        }),
    ]
}

/// Coefficients of `1 + a`, `Todd = a/(1-e^{-a})` and `a coth a` through
/// `a^n`, computed from their Taylor coefficients.
fn qyhat_oracles(n: usize) -> [Vec<Rational>; 3] {
    let fact = |k: usize| (1..=k as i64).fold(rat(1), |a, i| a * rat(i));
    let mut bern = vec![rat(1)];
    for m in 1..=n {
        let s = (0..m).fold(rat(0), |acc, k| acc + fact(m + 1) / (fact(k) * fact(m + 1 - k)) * &bern[k]);
        bern.push(-s / rat(m as i64 + 1));
    }
    let linear = (0..=n).map(|k| if k <= 1 { rat(1) } else { rat(0) }).collect();
    // a/(1-e^{-a}) = Σ (-1)^k B_k a^k / k!
    let todd = (0..=n).map(|k| if k % 2 == 1 { -bern[k].clone() } else { bern[k].clone() } / fact(k)).collect();
    // a coth a = Σ 2^{2k} B_{2k} a^{2k} / (2k)!
    let coth = (0..=n)
        .map(|k| if k % 2 == 0 { rat(2).pow(k as i32) * &bern[k] / fact(k) } else { rat(0) })
        .collect();
    [linear, todd, coth]
}

pub fn hirzebruch_checks(order: usize, seed: u64, cases: usize) -> Vec<Check> {
    let n = order.max(1);
    vec![
        fixed("Q-hat at y = -1, 0, 1", || {
            let q = qyhat_series(n);
            let [linear, todd, coth] = qyhat_oracles(n);
            for (y, oracle) in [(-1, linear), (0, todd), (1, coth)] {
                let got: Vec<Rational> = q.coeffs().iter().map(|c| eval_y(c, &rat(y))).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
                same(&format!("y = {y}"), got, oracle)?;
            }
            same("Todd series", todd_series(n).coeffs().to_vec(), qyhat_oracles(n)[1].clone())
        }),
        fixed("degree of P^d is 1 + y + ... + y^d", || {
            for d in 0..=4 {
                let m = ok(proj_space_model(d))?;
                let expected = (0..=d as i32).fold(LPoly::zero(), |acc, i| acc + y_pow(i));
                same(&format!("P{d}"), ok(degree(&m, &m.ty_class))?, expected)?;
            }
            Ok(())
        }),
        fixed("Chern limit of P^d for r <= 4", || {
            for d in 1..=4 {
                let m = ok(proj_space_model(d))?;
                for r in 1..=4 {
                    same(&format!("P{d}, r = {r}"), ok(chern_limit_check(&m, r))?, chern_class_proj(d))?;
                }
            }
            Ok(())
        }),
        randomized(
            "homological Adams composition",
            seed,
            cases,
            |r| (ypoly(r), r.gen_range(0..=4usize), r.gen_range(1..=4u32), r.gen_range(1..=4u32)),
            |(c, deg, r, s)| same("Psi_r Psi_s", ok(adams_h(&ok(adams_h(c, *deg, *s))?, *deg, *r))?, ok(adams_h(c, *deg, r * s))?),
        ),
        randomized(
            "degree is multiplicative on products",
            seed,
            cases,
            |r| (r.gen_range(0..=3usize), r.gen_range(0..=3usize)),
            |(a, b)| {
                let (ma, mb) = (ok(proj_space_model(*a))?, ok(proj_space_model(*b))?);
                let p = ok(product_model(&ma, &mb))?;
                let lhs = ok(degree(&p, &p.ty_class))?;
                same("deg(AxB)", lhs, ok(degree(&ma, &ma.ty_class))? * ok(degree(&mb, &mb.ty_class))?)
            },
        ),
    ]
}

const PONT_MODELS: [&str; 4] = ["point", "P1", "P2", "P1xP1"];

fn pont_model(rng: &mut ChaCha8Rng) -> HomologyModel {
    builtin(PONT_MODELS[rng.gen_range(0..PONT_MODELS.len())]).expect("builtin models exist")
}

/// Random series with constant component 1 and a few monomials per degree.
fn pont_series(rng: &mut ChaCha8Rng, space: &Arc<PontSpace>, order: usize) -> PontSeries<LPoly> {
    let mut s = PontSeries::unit(space, order);
    for _ in 0..rng.gen_range(0..=2 * order) {
        let n = rng.gen_range(1..=order);
        let mut atoms = Vec::new();
        let mut left = n;
        while left > 0 {
            let k = rng.gen_range(1..=left);
            atoms.push(Atom { k, basis: rng.gen_range(0..space.ids.len()) });
            left -= k;
        }
        s.add_element(&PontElement::monomial(atoms, ypoly(rng)).expect("atoms have k >= 1"));
    }
    s
}

fn random_class(rng: &mut ChaCha8Rng, model: &HomologyModel) -> HClass<LPoly> {
    HClass::from_pairs((0..model.basis.len()).map(|i| (i, ypoly(rng))))
}

#[derive(Debug)]
struct PontCase {
    // read only through the counterexample dump
    #[allow(dead_code)]
    model: String,
    a: PontSeries<LPoly>,
    b: PontSeries<LPoly>,
    c: PontSeries<LPoly>,
    k: usize,
    l: usize,
}

pub fn pontrjagin_checks(order: usize, seed: u64, cases: usize) -> Vec<Check> {
    let n = order.clamp(1, PONT_ORDER_CAP);
    let case = move |r: &mut ChaCha8Rng| {
        let model = pont_model(r);
        let space = PontSpace::of(&model);
        PontCase {
            model: model.name.clone(),
            a: pont_series(r, &space, n),
            b: pont_series(r, &space, n),
            c: pont_series(r, &space, n),
            k: r.gen_range(1..=3),
            l: r.gen_range(1..=2),
        }
    };
    let classes = move |r: &mut ChaCha8Rng| {
        let model = pont_model(r);
        let (g, h) = (random_class(r, &model), random_class(r, &model));
        (model, g, h)
    };
    vec![
        randomized("Pontrjagin ring laws", seed, cases, case, |p| {
            let (a, b, c) = (&p.a, &p.b, &p.c);
            same("commutativity", ok(a.mul(b))?, ok(b.mul(a))?)?;
            same("associativity", ok(ok(a.mul(b))?.mul(c))?, ok(a.mul(&ok(b.mul(c))?))?)?;
            same("distributivity", ok(a.mul(&ok(b.add(c))?))?, ok(ok(a.mul(b))?.add(&ok(a.mul(c))?))?)?;
            same("unit", ok(a.mul(&PontSeries::unit(a.space(), n)))?, a.clone())
        }),
        randomized("P_k homomorphism laws", seed, cases, case, |p| {
            let (a, b, k, l) = (&p.a, &p.b, p.k, p.l);
            same("P_k(ab)", ok(a.mul(b))?.power_op(k), ok(a.power_op(k).mul(&b.power_op(k)))?)?;
            same("P_k(a+b)", ok(a.add(b))?.power_op(k), ok(a.power_op(k).add(&b.power_op(k)))?)?;
            same("P_k P_l", a.power_op(l).power_op(k), a.power_op(k * l))
        }),
        randomized("hom_exp_inv additivity", seed, cases, classes, |(model, g, h)| {
            let space = PontSpace::of(model);
            let sum = HClass::from_pairs((0..model.basis.len()).map(|i| (i, g.get(i) + &h.get(i))));
            for k in 1..=2 {
                let lhs = ok(hom_exp_inv(&space, &sum, k, n))?;
                let rhs = ok(ok(hom_exp_inv(&space, g, k, n))?.mul(&ok(hom_exp_inv(&space, h, k, n))?))?;
                same(&format!("k = {k}"), lhs, rhs)?;
            }
            Ok(())
        }),
        randomized("degree intertwines hom_exp_inv and pre-lambda", seed, cases, classes, |(model, g, _)| {
            let space = PontSpace::of(model);
            let lhs = ok(pont_degree(&space, &ok(hom_exp_inv(&space, g, 1, n))?))?;
            same("deg", lhs, ok(pre_lambda(&ok(degree(model, g))?, n))?)
        }),
    ]
}

pub fn run(suite: Suite, order: usize, seed: u64, cases: usize) -> SeriesReport {
    let mut report = SeriesReport::new("verify", order)
        .param("suite", format!("{suite:?}").to_lowercase())
        .param("seed", Value::from(seed))
        .param("cases", Value::from(cases as u64));
    let all = suite == Suite::All;
    if all || suite == Suite::Lambda {
        report.checks.extend(lambda_checks(order, seed, cases));
    }
    if all || suite == Suite::Motives {
        report.checks.extend(motives_checks(order, seed, cases));
    }
    if all || suite == Suite::Hirzebruch {
        report.checks.extend(hirzebruch_checks(order, seed, cases));
    }
    if all || suite == Suite::Pontrjagin {
        report.checks.extend(pontrjagin_checks(order, seed, cases));
    }
    report
}
