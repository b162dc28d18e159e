//! JSON serialization of homology models and of user-supplied motivic series.

use std::collections::BTreeMap;
use std::path::Path;

use motivic_core::hirzebruch::{chern_limit_check, BasisElement, HClass, HomologyModel};
use motivic_core::poly::{LPoly, VarSet};
use motivic_core::{Rational, TSeries};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub id: String,
    pub deg: usize,
}

/// `c · y^{yNum/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YTerm {
    #[serde(rename = "yNum")]
    pub y_num: i32,
    pub c: String,
}

/// `c · u^u v^v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UvTerm {
    pub u: i32,
    pub v: i32,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub name: String,
    pub dim: usize,
    pub proper: bool,
    pub basis: Vec<BasisEntry>,
    #[serde(rename = "zeroDegreeBasisId", default, skip_serializing_if = "Option::is_none")]
    pub zero_degree_basis_id: Option<String>,
    pub ty_class: BTreeMap<String, Vec<YTerm>>,
    pub e_poly: Vec<UvTerm>,
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Input(format!("\"{s}\" is not a rational of the form p or p/q"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: num_bigint::BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: num_bigint::BigInt = q.trim().parse().map_err(|_| bad())?;
    if q == num_bigint::BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

fn y_poly(terms: &[YTerm]) -> Result<LPoly, CliError> {
    let parsed = terms
        .iter()
        .map(|t| Ok((vec![t.y_num], parse_rational(&t.c)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(LPoly::from_terms(&VarSet::y(), parsed)?)
}

impl ModelFile {
    /// Schema checks, conversion, and the model's own consistency checks.
    /// The Chern class is derived from the stored Hirzebruch class by the
    /// `y → 1` limit when that limit exists.
    pub fn to_model(&self) -> Result<HomologyModel, CliError> {
        let err = |m: String| Err(CliError::Input(format!("model {}: {m}", self.name)));
        let basis: Vec<BasisElement> = self.basis.iter().map(|b| BasisElement::new(b.id.clone(), b.deg)).collect();
        for b in &basis {
            if b.deg > self.dim {
                return err(format!("basis {} has degree {} outside 0..{}", b.id, b.deg, self.dim));
            }
        }
        let index = |id: &str| basis.iter().position(|b| b.id == id);
        let mut ty = HClass::zero();
        for (id, terms) in &self.ty_class {
            match index(id) {
                Some(i) => ty.add_to(i, y_poly(terms)?),
                None => return err(format!("ty_class refers to unknown basis id {id}")),
            }
        }
        let zero_degree = match &self.zero_degree_basis_id {
            Some(id) => match index(id) {
                Some(i) => Some(i),
                None => return err(format!("zeroDegreeBasisId {id} is not a basis id")),
            },
            None => None,
        };
        let e_poly = LPoly::from_terms(
            &VarSet::uv(),
            self.e_poly.iter().map(|t| (vec![2 * t.u, 2 * t.v], motivic_core::ring::rat(t.c))),
        )?;
        let mut model = HomologyModel {
            name: self.name.clone(),
            dim: self.dim,
            proper: self.proper,
            basis,
            zero_degree,
            ty_class: ty,
            e_poly,
            chern: None,
        };
        model.validate().map_err(|e| CliError::Input(e.to_string()))?;
        model.chern = chern_limit_check(&model, 1).ok();
        Ok(model)
    }

    pub fn from_model(model: &HomologyModel) -> Self {
        let y = VarSet::y();
        let uv = VarSet::uv();
        let ty_class = model
            .ty_class
            .iter()
            .map(|(i, c)| {
                let c = c.embed(&y).expect("class coefficients are polynomials in y");
                let terms = c.terms().map(|(e, q)| YTerm { y_num: e[0], c: q.to_string() }).collect();
                (model.basis[i].id.clone(), terms)
            })
            .collect();
        let e = model.e_poly.embed(&uv).expect("Hodge-Deligne polynomials live in u, v");
        let e_poly = e
            .terms()
            .map(|(x, q)| UvTerm {
                u: x[0] / 2,
                v: x[1] / 2,
                c: q.to_integer().try_into().expect("Hodge-Deligne coefficients fit in i64"),
            })
            .collect();
        ModelFile {
            name: model.name.clone(),
            dim: model.dim,
            proper: model.proper,
            basis: model.basis.iter().map(|b| BasisEntry { id: b.id.clone(), deg: b.deg }).collect(),
            zero_degree_basis_id: model.zero_degree.map(|i| model.basis[i].id.clone()),
            ty_class,
            e_poly,
        }
    }
}

pub fn parse_model(json: &str) -> Result<HomologyModel, CliError> {
    let file: ModelFile = serde_json::from_str(json)?;
    file.to_model()
}

pub fn load_model(path: &Path) -> Result<HomologyModel, CliError> {
    parse_model(&std::fs::read_to_string(path)?)
}

pub fn emit_model(model: &HomologyModel) -> String {
    serde_json::to_string_pretty(&ModelFile::from_model(model)).expect("model files serialize")
}

/// `c · L^{lNum/2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LTerm {
    #[serde(rename = "lNum")]
    pub l_num: i32,
    pub c: String,
}

/// A normalized motivic series: `coefficients[n]` is the class at `t^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesFile {
    pub coefficients: Vec<Vec<LTerm>>,
}

impl SeriesFile {
    pub fn to_series(&self) -> Result<TSeries<LPoly>, CliError> {
        if self.coefficients.is_empty() {
            return Err(CliError::Input("series file has no coefficients".into()));
        }
        let coeffs = self
            .coefficients
            .iter()
            .map(|terms| {
                let parsed = terms
                    .iter()
                    .map(|t| Ok((vec![t.l_num], parse_rational(&t.c)?)))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(LPoly::from_terms(&VarSet::motive(), parsed)?)
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(TSeries::from_coeffs(coeffs))
    }
}

pub fn load_series(path: &Path) -> Result<TSeries<LPoly>, CliError> {
    let file: SeriesFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    file.to_series()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;

    #[test]
    fn builtins_round_trip() {
        for name in ["point", "P1", "P3", "P1xP2"] {
            let m = builtin(name).unwrap();
            assert_eq!(parse_model(&emit_model(&m)).unwrap(), m, "{name}");
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), motivic_core::ring::rat_frac(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), motivic_core::ring::rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn schema_violations() {
        let good = emit_model(&builtin("P1").unwrap());
        let unknown = good.replacen("\"dim\"", "\"dimension\"", 1);
        assert!(matches!(parse_model(&unknown), Err(CliError::Input(_))));
        let wrong_degree = good.replacen("\"deg\": 1", "\"deg\": 2", 1);
        assert!(matches!(parse_model(&wrong_degree), Err(CliError::Input(_))));
        let wrong_genus = good.replacen("\"c\": 1\n", "\"c\": 2\n", 1);
        assert!(matches!(parse_model(&wrong_genus), Err(CliError::Input(_))));
    }
}
