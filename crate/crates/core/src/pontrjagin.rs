//! Free model of the homology Pontrjagin ring `PH_*(X) = ⊕_n H^{BM}_{even}(X^{(n)})`.
//!
//! A monomial is a multiset of atoms `d^k_*(e_b)`, the pushforward of basis
//! class `e_b` along the diagonal `X → X^{(k)}`; a monomial with atoms
//! `k_1, …, k_m` lives over `X^{(k_1 + … + k_m)}`. The product `⊙` is
//! multiset union. Relations that hold in the true homology of symmetric
//! products are deliberately not imposed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;


use crate::error::{Error, Result};
use crate::hirzebruch::{adams_h, normalized_limit, HClass, HomologyModel};
use crate::lambda::{euler_log, EulerExponents};
use crate::motives::{
    punctual_exponents, spec_chi, spec_chi_minus_y, virtual_alpha_exponents, virtual_punctual_series,
};
use crate::poly::{LPoly, VarSet};
use crate::ring::{rat, AdamsRing, Rational, Ring};
use crate::series::TSeries;

/// `d^k_*` applied to basis element `basis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub k: usize,
    pub basis: usize,
}

/// Sorted list of atoms.
pub type Multiset = Vec<Atom>;

fn merge(a: &[Atom], b: &[Atom]) -> Multiset {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Basis data the free model needs: ids for display, degrees for the
/// homological Adams operations and the degree map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PontSpace {
    pub name: String,
    pub ids: Vec<String>,
    pub degrees: Vec<usize>,
    pub proper: bool,
}

impl PontSpace {
    pub fn of(model: &HomologyModel) -> Arc<Self> {
        Arc::new(PontSpace {
            name: model.name.clone(),
            ids: model.basis.iter().map(|b| b.id.clone()).collect(),
            degrees: model.degrees(),
            proper: model.proper,
        })
    }

    /// Total homological degree of a monomial.
    pub fn degree_of(&self, m: &[Atom]) -> usize {
        m.iter().map(|a| self.degrees[a.basis]).sum()
    }
}

/// Homogeneous element over `X^{(n)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PontElement<C> {
    n: usize,
    terms: BTreeMap<Multiset, C>,
}

impl<C: Ring> PontElement<C> {
    pub fn zero(n: usize) -> Self {
        PontElement { n, terms: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        let mut e = Self::zero(0);
        e.terms.insert(Vec::new(), C::one());
        e
    }

    /// `c · ⊙ atoms`; the grading is the sum of the atom indices.
    pub fn monomial(mut atoms: Multiset, c: C) -> Result<Self> {
        if atoms.iter().any(|a| a.k == 0) {
            return Err(Error::InvalidArgument("atoms need k >= 1".into()));
        }
        atoms.sort();
        let mut e = Self::zero(atoms.iter().map(|a| a.k).sum());
        e.add_term(atoms, c);
        Ok(e)
    }

    pub fn grading(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multiset, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &[Atom]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Multiset, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.clone() + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "adding elements of different grading");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), s.clone() * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(merge(ma, mb), ca.clone() * cb);
            }
        }
        out
    }

    /// `P_k`: every atom `d^j_*` becomes `d^{jk}_*`.
    pub fn power_op(&self, k: usize) -> Self {
        let mut out = Self::zero(self.n * k);
        for (m, c) in &self.terms {
            out.add_term(m.iter().map(|a| Atom { k: a.k * k, basis: a.basis }).collect(), c.clone());
        }
        out
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> PontElement<D> {
        let mut out = PontElement::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&Multiset, &C) -> Result<D>) -> Result<PontElement<D>> {
        let mut out = PontElement::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(m, c)?);
        }
        Ok(out)
    }
}

/// `d^k_*(γ) = Σ_b γ_b · d^k_*(e_b)`.
pub fn d_push<C: Ring>(k: usize, gamma: &HClass<C>) -> PontElement<C> {
    assert!(k >= 1, "d^k_* needs k >= 1");
    let mut out = PontElement::zero(k);
    for (b, c) in gamma.iter() {
        out.add_term(alloc::vec![Atom { k, basis: b }], c.clone());
    }
    out
}

/// Homological Adams operation on a class.
pub fn adams_h_class<C: AdamsRing>(space: &PontSpace, gamma: &HClass<C>, r: u32) -> Result<HClass<C>> {
    gamma.try_map(|b, c| adams_h(c, space.degrees[b], r))
}

/// Truncated series `Σ_n s_n t^n` with `s_n` over `X^{(n)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PontSeries<C> {
    space: Arc<PontSpace>,
    comps: Vec<PontElement<C>>,
}

impl<C: Ring> PontSeries<C> {
    pub fn zero(space: &Arc<PontSpace>, order: usize) -> Self {
        PontSeries { space: space.clone(), comps: (0..=order).map(PontElement::zero).collect() }
    }

    pub fn unit(space: &Arc<PontSpace>, order: usize) -> Self {
        let mut s = Self::zero(space, order);
        s.comps[0] = PontElement::unit();
        s
    }

    pub fn from_comps(space: &Arc<PontSpace>, comps: Vec<PontElement<C>>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::InvalidArgument("a series needs a constant component".into()));
        }
        if let Some((n, _)) = comps.iter().enumerate().find(|(n, e)| e.n != *n) {
            return Err(Error::InvalidArgument(format!("component {n} has the wrong grading")));
        }
        if let Some((n, e)) = comps.iter().enumerate().find(|(_, e)| e.terms.keys().any(|m| m.iter().any(|a| a.basis >= space.ids.len()))) {
            return Err(Error::InvalidArgument(format!("component {n} ({} terms) refers to an unknown basis element", e.num_terms())));
        }
        Ok(PontSeries { space: space.clone(), comps })
    }

    pub fn space(&self) -> &Arc<PontSpace> {
        &self.space
    }

    pub fn order(&self) -> usize {
        self.comps.len() - 1
    }

    pub fn comp(&self, n: usize) -> &PontElement<C> {
        &self.comps[n]
    }

    pub fn comps(&self) -> &[PontElement<C>] {
        &self.comps
    }

    /// Adds `e` to the component of its grading, when within the order.
    pub fn add_element(&mut self, e: &PontElement<C>) {
        if e.n < self.comps.len() {
            self.comps[e.n] = self.comps[e.n].add(e);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::ModelMismatch);
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        Ok(PontSeries { space: self.space.clone(), comps })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PontSeries { space: self.space.clone(), comps: self.comps.iter().map(PontElement::neg).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        PontSeries { space: self.space.clone(), comps: self.comps.iter().map(|e| e.scale(s)).collect() }
    }

    /// Pontrjagin product `⊙`, truncated.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(&self.space, n);
        for i in 0..=n {
            if self.comps[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out.comps[i + j] = out.comps[i + j].add(&self.comps[i].mul(&other.comps[j]));
            }
        }
        Ok(out)
    }

    /// `P_k`, moving `t^n` to `t^{kn}`.
    pub fn power_op(&self, k: usize) -> Self {
        assert!(k >= 1, "P_k needs k >= 1");
        let n = self.order();
        let mut out = Self::zero(&self.space, n);
        for (i, e) in self.comps.iter().enumerate() {
            if i * k > n {
                break;
            }
            out.comps[i * k] = e.power_op(k);
        }
        out
    }

    /// `t ↦ -t`.
    pub fn sign_flip(&self) -> Self {
        let comps = self.comps.iter().enumerate().map(|(n, e)| if n % 2 == 1 { e.neg() } else { e.clone() }).collect();
        PontSeries { space: self.space.clone(), comps }
    }

    /// `exp` of a series with zero constant component:
    /// `n f_n = Σ_{j=1}^n j a_j ⊙ f_{n-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.comps[0].is_zero() {
            return Err(Error::BadConstantTerm { expected: "0" });
        }
        let n = self.order();
        let mut f: Vec<PontElement<C>> = alloc::vec![PontElement::unit()];
        for m in 1..=n {
            let mut acc = PontElement::zero(m);
            for j in 1..=m {
                if self.comps[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.comps[j].mul(&f[m - j]).scale(&C::from_int(j as i64)));
            }
            f.push(acc.try_map(|_, c| c.div_int(m as i64))?);
        }
        Ok(PontSeries { space: self.space.clone(), comps: f })
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> PontSeries<D> {
        PontSeries { space: self.space.clone(), comps: self.comps.iter().map(|e| e.map(&f)).collect() }
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&Multiset, &C) -> Result<D>) -> Result<PontSeries<D>> {
        let comps = self.comps.iter().map(|e| e.try_map(&f)).collect::<Result<_>>()?;
        Ok(PontSeries { space: self.space.clone(), comps })
    }
}

/// `log (1 - t^k d^k_*)^{-γ} = Σ_r d^{rk}_*(Ψ_r γ) t^{rk} / r`.
fn hom_log_inv<C: AdamsRing>(space: &Arc<PontSpace>, gamma: &HClass<C>, k: usize, order: usize) -> Result<PontSeries<C>> {
    let mut log = PontSeries::zero(space, order);
    for r in 1..=order / k {
        let psi = adams_h_class(space, gamma, r as u32)?;
        let term = d_push(r * k, &psi).try_map(|_, c| c.div_int(r as i64))?;
        log.add_element(&term);
    }
    Ok(log)
}

fn hom_log_inv_untwisted<C: Ring>(space: &Arc<PontSpace>, gamma: &HClass<C>, k: usize, order: usize) -> Result<PontSeries<C>> {
    let mut log = PontSeries::zero(space, order);
    for r in 1..=order / k {
        let term = d_push(r * k, gamma).try_map(|_, c| c.div_int(r as i64))?;
        log.add_element(&term);
    }
    Ok(log)
}

/// `(1 - t^k d^k_*)^{-γ} = exp(Σ_r d^{rk}_*(Ψ_r γ) t^{rk} / r)`.
pub fn hom_exp_inv<C: AdamsRing>(space: &Arc<PontSpace>, gamma: &HClass<C>, k: usize, order: usize) -> Result<PontSeries<C>> {
    check_k(k)?;
    hom_log_inv(space, gamma, k, order)?.exp()
}

/// `(1 - t^k d^k_*)^{-γ} := exp(Σ_r d^{rk}_*(γ) t^{rk} / r)`, the version used
/// for MacPherson Chern classes.
pub fn hom_exp_inv_untwisted<C: Ring>(space: &Arc<PontSpace>, gamma: &HClass<C>, k: usize, order: usize) -> Result<PontSeries<C>> {
    check_k(k)?;
    hom_log_inv_untwisted(space, gamma, k, order)?.exp()
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("d^k_* needs k >= 1".into()));
    }
    Ok(())
}

fn scaled<C: Ring>(gamma: &HClass<C>, b: &C) -> HClass<C> {
    HClass::from_pairs(gamma.iter().map(|(i, c)| (i, b.clone() * c)))
}

/// `⊙_k (1 - t^k d^k_*)^{-b_k γ}`.
pub fn hom_exp_from_exponents<C: AdamsRing>(
    space: &Arc<PontSpace>,
    b: &EulerExponents<C>,
    gamma: &HClass<C>,
) -> Result<PontSeries<C>> {
    let order = b.order();
    let mut log = PontSeries::zero(space, order);
    for k in 1..=order {
        if b.get(k).is_zero() {
            continue;
        }
        log = log.add(&hom_log_inv(space, &scaled(gamma, b.get(k)), k, order)?)?;
    }
    log.exp()
}

fn hom_exp_from_exponents_untwisted<C: Ring>(space: &Arc<PontSpace>, b: &[C], gamma: &HClass<C>) -> Result<PontSeries<C>> {
    let order = b.len();
    let mut log = PontSeries::zero(space, order);
    for (i, bk) in b.iter().enumerate() {
        if bk.is_zero() {
            continue;
        }
        log = log.add(&hom_log_inv_untwisted(space, &scaled(gamma, bk), i + 1, order)?)?;
    }
    log.exp()
}

/// `(A(t))^γ`: Euler exponents of `A` in the coefficient ring, then
/// `⊙_k (1 - t^k d^k_*)^{-b_k γ}`.
pub fn hom_exponentiation<C: AdamsRing>(space: &Arc<PontSpace>, a: &TSeries<C>, gamma: &HClass<C>) -> Result<PontSeries<C>> {
    hom_exp_from_exponents(space, &euler_log(a)?, gamma)
}

fn ty_space(model: &HomologyModel) -> Arc<PontSpace> {
    PontSpace::of(model)
}

/// `Σ T_{(-y)*}(X^{(n)}) t^n = (1 - t d_*)^{-T_{(-y)*}(X)}`.
pub fn sym_prod_class_series(model: &HomologyModel, order: usize) -> Result<PontSeries<LPoly>> {
    hom_exp_inv(&ty_space(model), &model.ty_class, 1, order)
}

/// `χ_{-y}(α_k)` for the punctual Hilbert series of `C^d`.
pub fn chi_minus_y_exponents(d: u32, order: usize) -> Result<EulerExponents<LPoly>> {
    let alpha = punctual_exponents(d, order)?;
    let exps = alpha.as_slice().iter().map(spec_chi_minus_y).collect::<Result<Vec<_>>>()?;
    Ok(EulerExponents::new(exps))
}

/// `χ(α_k)`. Threefolds use `χ(α_k) = k` for every `k`; other dimensions are
/// limited to the range where the `α_k` themselves are known.
pub fn chi_exponents(d: u32, order: usize) -> Result<Vec<Rational>> {
    match d {
        3 => Ok((1..=order).map(|k| rat(k as i64)).collect()),
        _ => punctual_exponents(d, order)?.as_slice().iter().map(spec_chi).collect(),
    }
}

/// `Σ π_{n*} T_{(-y)*}(X^{[n]}) t^n = ⊙_k (1 - t^k d^k_*)^{-χ_{-y}(α_k) T_{(-y)*}(X)}`.
pub fn hilb_class_series(model: &HomologyModel, d: u32, order: usize) -> Result<PontSeries<LPoly>> {
    hom_exp_from_exponents(&ty_space(model), &chi_minus_y_exponents(d, order)?, &model.ty_class)
}

/// `T_{(-y)*}((1 + Σ A_n t^n)^X) = (1 + Σ χ_{-y}(A_n) t^n d^n_*)^{T_{(-y)*}(X)}`
/// for a normalized motivic series `A`.
pub fn mt2_series(model: &HomologyModel, a: &TSeries<LPoly>, order: usize) -> Result<PontSeries<LPoly>> {
    if a.order() < order {
        return Err(Error::OrderMismatch(a.order(), order));
    }
    let chi = a.truncated(order).try_map(|c| spec_chi_minus_y(c)?.embed(&VarSet::y()))?;
    hom_exponentiation(&ty_space(model), &chi, &model.ty_class)
}

/// Configuration spaces: `(1 - t² d²_*)^{T} ⊙ (1 - t d_*)^{-T}`.
pub fn config_class_series(model: &HomologyModel, order: usize) -> Result<PontSeries<LPoly>> {
    let space = ty_space(model);
    let minus_t = HClass::from_pairs(model.ty_class.iter().map(|(i, c)| (i, -c.clone())));
    hom_exp_inv(&space, &minus_t, 2, order)?.mul(&hom_exp_inv(&space, &model.ty_class, 1, order)?)
}

fn chern_of(model: &HomologyModel) -> Result<&HClass<Rational>> {
    model
        .chern
        .as_ref()
        .ok_or_else(|| Error::InvalidModel(format!("{}: no Chern class stored", model.name)))
}

/// `Σ π_{n*} c_*(X^{[n]}) t^n = ⊙_k (1 - t^k d^k_*)^{-χ(α_k) c_*(X)}`,
/// exponentials without Adams operations.
pub fn chern_class_series(model: &HomologyModel, d: u32, order: usize) -> Result<PontSeries<Rational>> {
    hom_exp_from_exponents_untwisted(&ty_space(model), &chi_exponents(d, order)?, chern_of(model)?)
}

/// Both sides of the virtual Hilbert-scheme formula for a threefold.
#[derive(Debug, Clone, PartialEq)]
pub struct VirtualClassSeries {
    /// `(1 + Σ χ_{-y}([Hilb^n]_vir) t^n d^n_*)^{T_{(-y)*}(X)}`.
    pub t_form: PontSeries<LPoly>,
    /// `⊙_k (1 - t^k d^k_*)^{-χ_{-y}(α_k) T_{(-y)*}(X)}`, the series in `-t`.
    pub minus_t_form: PontSeries<LPoly>,
}

pub fn virtual_class_series(model: &HomologyModel, order: usize) -> Result<VirtualClassSeries> {
    let space = ty_space(model);
    let punctual = virtual_punctual_series(order)?.try_map(spec_chi_minus_y)?;
    let t_form = hom_exponentiation(&space, &punctual, &model.ty_class)?;
    let alpha = virtual_alpha_exponents(order)?;
    let chi = EulerExponents::new(alpha.as_slice().iter().map(spec_chi_minus_y).collect::<Result<Vec<_>>>()?);
    let minus_t_form = hom_exp_from_exponents(&space, &chi, &model.ty_class)?;
    Ok(VirtualClassSeries { t_form, minus_t_form })
}

/// Aluffi classes `π_{n*} c^A_*(X^{[n]})`: the coefficients of
/// `⊙_k (1 - t^k d^k_*)^{-k c_*(X)}` read against `(-t)^n`.
pub fn aluffi_series(model: &HomologyModel, order: usize) -> Result<PontSeries<Rational>> {
    Ok(chern_class_series(model, 3, order)?.sign_flip())
}

/// Pushforward to a point: a monomial maps to 1 when all its atoms carry
/// degree-zero classes and to 0 otherwise.
pub fn pont_degree<C: Ring>(space: &PontSpace, s: &PontSeries<C>) -> Result<TSeries<C>> {
    if !space.proper || **s.space() != *space {
        return Err(if space.proper { Error::ModelMismatch } else { Error::NonProper(space.name.clone()) });
    }
    let coeffs = s
        .comps()
        .iter()
        .map(|e| {
            e.terms()
                .filter(|(m, _)| m.iter().all(|a| space.degrees[a.basis] == 0))
                .fold(C::zero(), |acc, (_, c)| acc + c)
        })
        .collect();
    Ok(TSeries::from_coeffs(coeffs))
}

/// `lim_{y→1} Ψ_{(1-y)}` termwise: a monomial of total degree `D` has its
/// coefficient divided by `(1-y)^D` before evaluation at `y = 1`.
pub fn normalize_chern_limit(s: &PontSeries<LPoly>) -> Result<PontSeries<Rational>> {
    let space = s.space().clone();
    s.try_map(|m, c| normalized_limit(c, space.degree_of(m)))
}
