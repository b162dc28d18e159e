//! One function per subcommand. Each returns a report whose checks compare
//! the computed series with an independent route.

use std::fmt::Display;

use motivic_core::hirzebruch::HomologyModel;
use motivic_core::lambda::{euler_exp, euler_log, power};
use motivic_core::motives::{
    chi_minus_y_to_chi, config_space_series, hilb_hodge_series, hodge_to_chi_minus_y, kapranov_zeta,
    punctual_exponents, punctual_series, spec_chi_minus_y, virtual_alpha_exponents,
};
use motivic_core::pontrjagin::{
    aluffi_series, chern_class_series, chi_exponents, config_class_series, hilb_class_series, mt2_series,
    normalize_chern_limit, pont_degree, sym_prod_class_series, virtual_class_series,
    PontSeries, PontSpace,
};
use motivic_core::ring::rat;
use motivic_core::{EulerExponents, LPoly, Rational, Ring, TSeries};
use num_traits::One;
use serde_json::Value;

use crate::args::{ClassesArgs, ExponentsArgs, Kind, ModelArgs, ModelSource, Spec, VerifyArgs, ZetaArgs};
use crate::builtins::builtin;
use crate::error::CliError;
use crate::model_file::{emit_model, load_model, load_series};
use crate::report::{pont_json, series_json, Check, SeriesReport};
use crate::verify;

pub const MAX_ORDER_VAR: &str = "MOTIVIC_CC_MAX_ORDER";
const DEFAULT_MAX_ORDER: usize = 12;

/// Largest accepted `--order`, from the environment when set.
pub fn max_order() -> Result<usize, CliError> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Input(format!("{MAX_ORDER_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn check_order(order: usize) -> Result<(), CliError> {
    let max = max_order()?;
    if order > max {
        return Err(CliError::Unsupported(format!("order {order} exceeds the cap {max} (set {MAX_ORDER_VAR} to raise it)")));
    }
    Ok(())
}

fn load_source(src: &ModelSource) -> Result<(HomologyModel, Value), CliError> {
    match (&src.model, &src.builtin) {
        (Some(path), _) => Ok((load_model(path)?, Value::String(path.display().to_string()))),
        (None, Some(name)) => Ok((builtin(name)?, Value::String(name.clone()))),
        (None, None) => Err(CliError::Input("one of --model or --builtin is required".into())),
    }
}

fn eq_check<T: PartialEq + Display>(name: &str, got: &TSeries<T>, expected: &TSeries<T>) -> Check
where
    T: Ring,
{
    match (0..=got.order().min(expected.order())).find(|&n| got.coeff(n) != expected.coeff(n)) {
        None if got.order() == expected.order() => Check::ok(name, ""),
        None => Check::fail(name, format!("orders differ: {} vs {}", got.order(), expected.order())),
        Some(n) => Check::fail(name, format!("t^{n}: got {}, expected {}", got.coeff(n), expected.coeff(n))),
    }
}

fn pont_eq_check<C: Ring + Display>(name: &str, got: &PontSeries<C>, expected: &PontSeries<C>) -> Check {
    if got == expected {
        return Check::ok(name, "");
    }
    let n = (0..=got.order().min(expected.order())).find(|&n| got.comp(n) != expected.comp(n));
    match n {
        Some(n) => Check::fail(name, format!("first difference at t^{n}")),
        None => Check::fail(name, format!("orders differ: {} vs {}", got.order(), expected.order())),
    }
}

/// `χ_{-y}(X)` from the Hodge-Deligne polynomial.
fn chi_y_of(model: &HomologyModel) -> Result<LPoly, CliError> {
    Ok(hodge_to_chi_minus_y(&model.e_poly)?)
}

fn euler_char(model: &HomologyModel) -> Result<Rational, CliError> {
    Ok(chi_minus_y_to_chi(&chi_y_of(model)?)?)
}

pub fn zeta(a: &ZetaArgs) -> Result<SeriesReport, CliError> {
    check_order(a.order)?;
    let (model, source) = load_source(&a.source)?;
    let z = kapranov_zeta(&model.e_poly, a.order)?;
    let chi_y = z.try_map(hodge_to_chi_minus_y)?;
    let (spec, coefficients) = match a.spec {
        Spec::Uv => ("uv", series_json(&z)),
        Spec::ChiY => ("chi-y", series_json(&chi_y)),
        Spec::Chi => ("chi", series_json(&chi_y.try_map(chi_minus_y_to_chi)?)),
    };
    let mut report = SeriesReport::new("zeta", a.order).param("model", source).param("spec", spec);
    report.coefficients = coefficients;
    if model.proper {
        let space = PontSpace::of(&model);
        let deg = pont_degree(&space, &sym_prod_class_series(&model, a.order)?)?;
        report.checks.push(eq_check("degree of symmetric-product classes = chi_-y of zeta", &deg, &chi_y));
    }
    Ok(report)
}

pub fn exponents(a: &ExponentsArgs) -> Result<SeriesReport, CliError> {
    check_order(a.order)?;
    let mut report = SeriesReport::new("exponents", a.order);
    let (alpha, series) = match (a.dim, &a.series) {
        (Some(d), _) => {
            let alpha = punctual_exponents(d, a.order)?;
            report = report.param("dim", d);
            (alpha, punctual_series(d, a.order)?)
        }
        (None, Some(path)) => {
            let series = load_series(path)?;
            if series.order() < a.order {
                return Err(CliError::Input(format!("series file stops at t^{}, asked t^{}", series.order(), a.order)));
            }
            let series = series.truncated(a.order);
            report = report.param("series", path.display().to_string());
            (euler_log(&series)?, series)
        }
        (None, None) => return Err(CliError::Input("one of --dim or --series is required".into())),
    };
    report.coefficients = alpha.as_slice().iter().map(|c| Value::String(c.to_string())).collect();
    report.checks.push(eq_check("Euler product of the exponents = series", &euler_exp(&alpha)?, &series));
    Ok(report)
}

fn dim_of(a: &ClassesArgs) -> Result<u32, CliError> {
    a.dim.ok_or_else(|| CliError::Input(format!("--kind {:?} needs --dim", a.kind).to_lowercase()))
}

fn require_threefold(a: &ClassesArgs) -> Result<(), CliError> {
    match a.dim {
        None | Some(3) => Ok(()),
        Some(d) => Err(CliError::Unsupported(format!("virtual and Aluffi classes are defined for d = 3, got d = {d}"))),
    }
}

pub fn classes(a: &ClassesArgs) -> Result<SeriesReport, CliError> {
    check_order(a.order)?;
    let (model, source) = load_source(&a.source)?;
    let space = PontSpace::of(&model);
    let n = a.order;
    let kind = format!("{:?}", a.kind).to_lowercase();
    let mut report = SeriesReport::new("classes", n).param("model", source).param("kind", kind);
    match a.kind {
        Kind::Hilb => {
            let d = dim_of(a)?;
            report = report.param("dim", d);
            let s = hilb_class_series(&model, d, n)?;
            report.coefficients = pont_json(&s);
            if model.proper {
                let cheah = hilb_hodge_series(&model.e_poly, d, n)?.try_map(hodge_to_chi_minus_y)?;
                report.checks.push(eq_check("degree-check", &pont_degree(&space, &s)?, &cheah));
            }
            if d == 1 {
                report.checks.push(pont_eq_check("curve collapse to symmetric products", &s, &sym_prod_class_series(&model, n)?));
            }
        }
        Kind::Sym => {
            let s = sym_prod_class_series(&model, n)?;
            report.coefficients = pont_json(&s);
            if model.proper {
                let zeta = kapranov_zeta(&model.e_poly, n)?.try_map(hodge_to_chi_minus_y)?;
                report.checks.push(eq_check("degree-check", &pont_degree(&space, &s)?, &zeta));
            }
        }
        Kind::Config => {
            let s = config_class_series(&model, n)?;
            report.coefficients = pont_json(&s);
            let one_plus_t = TSeries::from_prefix(n, &[LPoly::one(), LPoly::one()]);
            report.checks.push(pont_eq_check("exponentiation of 1+t", &s, &mt2_series(&model, &one_plus_t, n)?));
            if model.proper {
                let motivic = config_space_series(&model.e_poly, n)?.try_map(hodge_to_chi_minus_y)?;
                report.checks.push(eq_check("degree-check", &pont_degree(&space, &s)?, &motivic));
            }
        }
        Kind::Chern => {
            let d = dim_of(a)?;
            report = report.param("dim", d);
            let s = chern_class_series(&model, d, n)?;
            report.coefficients = pont_json(&s);
            if d != 3 || n <= 3 {
                let limit = normalize_chern_limit(&hilb_class_series(&model, d, n)?)?;
                report.checks.push(pont_eq_check("limit of Hirzebruch classes", &s, &limit));
            }
            if model.proper {
                report.checks.push(eq_check("degree-check", &pont_degree(&space, &s)?, &euler_series(&model, d, n)?));
            }
        }
        Kind::Virtual => {
            require_threefold(a)?;
            report = report.param("dim", 3).param("form", "product over k, sign restored");
            let v = virtual_class_series(&model, n)?;
            let s = v.minus_t_form.sign_flip();
            report.coefficients = pont_json(&s);
            report.checks.push(pont_eq_check("virtual punctual exponentiation = product form", &v.t_form, &s));
            if model.proper {
                let chi_alpha = virtual_alpha_exponents(n)?.as_slice().iter().map(spec_chi_minus_y).collect::<Result<Vec<_>, _>>()?;
                let base = euler_exp(&EulerExponents::new(chi_alpha))?;
                let expected = power(&base, &chi_y_of(&model)?)?.subst(-1, 1);
                report.checks.push(eq_check("degree-check", &pont_degree(&space, &s)?, &expected));
            }
        }
        Kind::Aluffi => {
            require_threefold(a)?;
            report = report.param("dim", 3).param("convention", "coefficient n multiplies (-t)^n");
            let s = aluffi_series(&model, n)?;
            report.coefficients = pont_json(&s);
            if n <= 3 {
                let limit = normalize_chern_limit(&hilb_class_series(&model, 3, n)?)?.sign_flip();
                report.checks.push(pont_eq_check("sign relation with Chern classes", &s, &limit));
            }
            if model.proper {
                let chi = euler_char(&model)?;
                let mac = euler_exp(&EulerExponents::from_fn(n, |k| rat(k as i64) * &chi))?;
                report.checks.push(eq_check("degree-check", &pont_degree(&space, &s)?.subst(-1, 1), &mac));
            }
        }
    }
    Ok(report)
}

/// `Σ χ(X^{[n]}) t^n = ∏_k (1 - t^k)^{-χ(α_k) χ(X)}`.
fn euler_series(model: &HomologyModel, d: u32, order: usize) -> Result<TSeries<Rational>, CliError> {
    let chi = euler_char(model)?;
    let exps = chi_exponents(d, order)?.into_iter().map(|c| c * &chi).collect();
    Ok(euler_exp(&EulerExponents::new(exps))?)
}

pub fn verify(a: &VerifyArgs) -> Result<SeriesReport, CliError> {
    check_order(a.order)?;
    Ok(verify::run(a.suite, a.order, a.seed, a.cases))
}

/// The model file of a builtin.
pub fn model(a: &ModelArgs) -> Result<String, CliError> {
    Ok(emit_model(&builtin(&a.builtin)?))
}
