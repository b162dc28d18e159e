//! Hirzebruch power series and homology models carrying a stored class
//! `T_{(-y)*}(X)`.
//!
//! A class is a vector over a named basis of `H^{BM}_{even}(X)`; basis
//! element `i` sits in homological degree `basis[i].deg` (that is, in
//! `H_{2 deg}`). Coefficients are polynomials in `y`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::motives::hodge_to_chi_minus_y;
use crate::poly::{LPoly, Substitution, VarSet};
use crate::ring::{rat, AdamsRing, Rational, Ring};
use crate::series::TSeries;

/// `y^k` in `Q[y]`.
pub fn y_pow(k: i32) -> LPoly {
    LPoly::var_pow(&VarSet::y(), "y", 2 * k).expect("y is a variable of VarSet::y")
}

/// Evaluate a polynomial in `y` at a rational point.
pub fn eval_y(p: &LPoly, value: &Rational) -> Result<Rational> {
    let v = p.substitute(&Substitution::new().set_rational("y", value.clone()), &VarSet::empty())?;
    Ok(v.constant_term())
}

/// `y ↦ -y`.
pub fn flip_y(p: &LPoly) -> Result<LPoly> {
    p.substitute(&Substitution::new().set("y", -y_pow(1)), &VarSet::y())
}

fn exp_coeffs(order: usize, sign: i64) -> TSeries<Rational> {
    let mut s = TSeries::zero(order);
    let mut fact = rat(1);
    for n in 0..=order {
        if n > 0 {
            fact = fact * rat(n as i64);
        }
        let c = if sign < 0 && n % 2 == 1 { -rat(1) } else { rat(1) };
        s.set_coeff(n, c / &fact);
    }
    s
}

/// Todd series `α / (1 - e^{-α})`.
pub fn todd_series(order: usize) -> TSeries<Rational> {
    // (1 - e^{-α}) / α = Σ (-1)^n α^n / (n+1)!
    let e = exp_coeffs(order + 1, -1);
    let shifted = TSeries::from_coeffs((0..=order).map(|n| -e.coeff(n + 1).clone()).collect());
    shifted.invert().expect("constant term is 1")
}

fn lift_y(s: &TSeries<Rational>) -> TSeries<LPoly> {
    s.map(|c| LPoly::constant(c.clone()).embed(&VarSet::y()).unwrap())
}

/// `Q_y(α) = α(1 + y e^{-α}) / (1 - e^{-α})` over `Q[y]`.
pub fn qy_series(order: usize) -> TSeries<LPoly> {
    let y = y_pow(1);
    let twisted = lift_y(&exp_coeffs(order, -1)).scale(&y);
    let one_plus = TSeries::one(order).add(&twisted).unwrap();
    lift_y(&todd_series(order)).mul(&one_plus).unwrap()
}

/// `Q̂_y(α) = α(1+y) / (1 - e^{-α(1+y)}) - αy`.
pub fn qyhat_series(order: usize) -> TSeries<LPoly> {
    let one_plus_y = LPoly::one() + y_pow(1);
    let todd = todd_series(order);
    let mut s = TSeries::from_coeffs(
        (0..=order)
            .map(|n| LPoly::constant(todd.coeff(n).clone()) * one_plus_y.pow(n as u32))
            .collect(),
    );
    if order >= 1 {
        let c1 = s.coeff(1).clone() - y_pow(1);
        s.set_coeff(1, c1);
    }
    s
}

/// A homology class: coefficients indexed by basis position, zeros omitted.
#[derive(Debug, Clone, PartialEq)]
pub struct HClass<C> {
    coeffs: BTreeMap<usize, C>,
}

impl<C: Ring> HClass<C> {
    pub fn zero() -> Self {
        HClass { coeffs: BTreeMap::new() }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, C)>) -> Self {
        let mut h = Self::zero();
        for (i, c) in pairs {
            h.add_to(i, c);
        }
        h
    }

    pub fn get(&self, i: usize) -> C {
        self.coeffs.get(&i).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_to(&mut self, i: usize, c: C) {
        let s = self.get(i) + &c;
        if s.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, s);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &C)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn try_map<D: Ring>(&self, mut f: impl FnMut(usize, &C) -> Result<D>) -> Result<HClass<D>> {
        let mut out = HClass::zero();
        for (i, c) in self.iter() {
            out.add_to(i, f(i, c)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub id: String,
    pub deg: usize,
}

impl BasisElement {
    pub fn new(id: impl Into<String>, deg: usize) -> Self {
        BasisElement { id: id.into(), deg }
    }
}

/// A variety given by a basis of its even Borel-Moore homology, its class
/// `T_{(-y)*}(X)`, its Hodge-Deligne polynomial and, when independently
/// known, its MacPherson Chern class.
#[derive(Debug, Clone, PartialEq)]
pub struct HomologyModel {
    pub name: String,
    pub dim: usize,
    pub proper: bool,
    pub basis: Vec<BasisElement>,
    pub zero_degree: Option<usize>,
    pub ty_class: HClass<LPoly>,
    pub e_poly: LPoly,
    pub chern: Option<HClass<Rational>>,
}

impl HomologyModel {
    /// Structural checks, and `degree(T_{(-y)*}X) = χ_{-y}(X)` for proper
    /// models.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidModel(format!("{}: {msg}", self.name)));
        for (i, b) in self.basis.iter().enumerate() {
            if self.basis[..i].iter().any(|o| o.id == b.id) {
                return bad(format!("duplicate basis id {}", b.id));
            }
            if b.deg > self.dim {
                return bad(format!("basis {} has degree {} above dimension {}", b.id, b.deg, self.dim));
            }
        }
        if let Some((i, _)) = self.ty_class.iter().find(|(i, _)| *i >= self.basis.len()) {
            return bad(format!("class refers to basis position {i}"));
        }
        match self.zero_degree {
            Some(z) if z >= self.basis.len() || self.basis[z].deg != 0 => {
                return bad("zero-degree basis element must have degree 0".to_string());
            }
            None if self.proper => return bad("proper model needs a zero-degree basis element".to_string()),
            _ => {}
        }
        if !self.e_poly.has_integer_coeffs() {
            return bad(format!("Hodge-Deligne polynomial {} has non-integer coefficients", self.e_poly));
        }
        if self.proper {
            let deg = degree(self, &self.ty_class)?;
            let chi = hodge_to_chi_minus_y(&self.e_poly)?;
            if deg != chi {
                return bad(format!("degree of the class is {deg} but χ_{{-y}} is {chi}"));
            }
        }
        Ok(())
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.id == id)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.deg).collect()
    }

    pub fn is_point(&self) -> bool {
        self.dim == 0 && self.basis.len() == 1
    }
}

/// Pushforward to a point: the sum of the degree-zero coefficients.
pub fn degree<C: Ring>(model: &HomologyModel, class: &HClass<C>) -> Result<C> {
    if !model.proper {
        return Err(Error::NonProper(model.name.clone()));
    }
    let mut acc = C::zero();
    for (i, c) in class.iter() {
        if model.basis[i].deg == 0 {
            acc = acc + c;
        }
    }
    Ok(acc)
}

fn binomial(n: usize, k: usize) -> Rational {
    (0..k).fold(rat(1), |acc, i| acc * rat((n - i) as i64) / rat(i as i64 + 1))
}

/// `c_*(P^d) = Σ_j binom(d+1, j) [P^{d-j}]`, basis position = degree.
pub fn chern_class_proj(d: usize) -> HClass<Rational> {
    HClass::from_pairs((0..=d).map(|j| (d - j, binomial(d + 1, j))))
}

/// `P^d` with basis `[P^0], …, [P^d]`.
///
/// `T*_y(TP^d) = Q_y(h)^{d+1} / (1+y)` from the Euler sequence; the `h^j`
/// coefficient of `Q_y(h)^{d+1}` must be divisible by `(1+y)^{d+1-j}`.
pub fn proj_space_model(d: usize) -> Result<HomologyModel> {
    let qd = qy_series(d).pow(d as u32 + 1);
    let one_plus_y = LPoly::one() + y_pow(1);
    let mut ty = HClass::zero();
    for j in 0..=d {
        let c = qd.coeff(j);
        c.exact_div(&one_plus_y.pow((d + 1 - j) as u32)).map_err(|_| {
            Error::NonExactDivision(format!("[h^{j}] Q_y(h)^{} by (1+y)^{}", d + 1, d + 1 - j))
        })?;
        ty.add_to(d - j, flip_y(&c.exact_div(&one_plus_y)?)?);
    }
    let uv = VarSet::uv();
    let m = LPoly::var(&uv, "u")? * LPoly::var(&uv, "v")?;
    let e_poly = (0..=d as u32).fold(LPoly::zero_in(&uv), |acc, i| acc + m.pow(i));
    let model = HomologyModel {
        name: format!("P{d}"),
        dim: d,
        proper: true,
        basis: (0..=d).map(|k| BasisElement::new(format!("P{k}"), k)).collect(),
        zero_degree: Some(0),
        ty_class: ty,
        e_poly,
        chern: Some(chern_class_proj(d)),
    };
    model.validate()?;
    Ok(model)
}

pub fn point_model() -> HomologyModel {
    proj_space_model(0).expect("the point model is valid")
}

/// `X × Y` with basis ids `AxB` and external products of the stored classes.
/// A point factor is the unit and returns the other model unchanged.
pub fn product_model(a: &HomologyModel, b: &HomologyModel) -> Result<HomologyModel> {
    if !(a.proper && b.proper) {
        return Err(Error::NonProper(format!("{} x {}", a.name, b.name)));
    }
    if a.is_point() {
        return Ok(b.clone());
    }
    if b.is_point() {
        return Ok(a.clone());
    }
    let nb = b.basis.len();
    let basis = a
        .basis
        .iter()
        .flat_map(|x| b.basis.iter().map(move |z| BasisElement::new(format!("{}x{}", x.id, z.id), x.deg + z.deg)))
        .collect();
    let ext = |p: &HClass<LPoly>, q: &HClass<LPoly>| {
        HClass::from_pairs(p.iter().flat_map(|(i, c)| q.iter().map(move |(j, d)| (i * nb + j, c.clone() * d))))
    };
    let chern = match (&a.chern, &b.chern) {
        (Some(p), Some(q)) => Some(HClass::from_pairs(
            p.iter().flat_map(|(i, c)| q.iter().map(move |(j, d)| (i * nb + j, c * d))),
        )),
        _ => None,
    };
    let model = HomologyModel {
        name: format!("{}x{}", a.name, b.name),
        dim: a.dim + b.dim,
        proper: true,
        basis,
        zero_degree: Some(a.zero_degree.unwrap() * nb + b.zero_degree.unwrap()),
        ty_class: ext(&a.ty_class, &b.ty_class),
        e_poly: a.e_poly.try_mul(&b.e_poly)?,
        chern,
    };
    model.validate()?;
    Ok(model)
}

/// Homological Adams operation on a coefficient of `H_{2k}`: `Ψ_r` on the
/// coefficient ring (`y ↦ y^r`) and multiplication by `r^{-k}`.
pub fn adams_h<C: AdamsRing>(c: &C, deg: usize, r: u32) -> Result<C> {
    let mut out = c.adams(r);
    for _ in 0..deg {
        out = out.div_int(r as i64)?;
    }
    Ok(out)
}

/// `(c / (1-y)^k)|_{y=1}`, failing with a pole when the division is inexact.
pub fn normalized_limit(c: &LPoly, k: usize) -> Result<Rational> {
    let one_minus_y = LPoly::one() - y_pow(1);
    let q = c
        .exact_div(&one_minus_y.pow(k as u32))
        .map_err(|_| Error::Pole(format!("({c}) / (1-y)^{k} at y = 1")))?;
    eval_y(&q, &rat(1))
}

/// `lim_{y→1} Ψ_{(1-y)} Ψ_r T_{(-y)*}(X)`.
pub fn chern_limit_check(model: &HomologyModel, r: u32) -> Result<HClass<Rational>> {
    if r == 0 {
        return Err(Error::InvalidArgument("Adams index r must be at least 1".into()));
    }
    model.ty_class.try_map(|i, c| {
        let deg = model.basis[i].deg;
        normalized_limit(&adams_h(c, deg, r)?, deg)
    })
}
