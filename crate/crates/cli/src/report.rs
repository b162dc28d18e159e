//! Machine-readable results. Every number is an exact integer, rational or
//! polynomial string.

use std::collections::BTreeMap;
use std::fmt::Display;

use motivic_core::pontrjagin::{PontSeries, PontSpace};
use motivic_core::{Ring, TSeries};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn ok(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Ok, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, detail: detail.into() }
    }

    pub fn from_eq<T: PartialEq + std::fmt::Debug>(name: &str, got: &T, expected: &T) -> Self {
        if got == expected {
            Check::ok(name, "")
        } else {
            Check::fail(name, format!("got {got:?}, expected {expected:?}"))
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Ok
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesReport {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub order: usize,
    pub coefficients: Vec<Value>,
    pub checks: Vec<Check>,
}

impl SeriesReport {
    pub fn new(command: &str, order: usize) -> Self {
        SeriesReport { command: command.into(), params: BTreeMap::new(), order, coefficients: Vec::new(), checks: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{}", self.command);
        for (k, v) in &self.params {
            out.push_str(&format!("  {k}={}", plain(v)));
        }
        out.push('\n');
        // Euler exponents are indexed from 1.
        let label = |n: usize| if self.command == "exponents" { format!("alpha_{}", n + 1) } else { format!("t^{n}") };
        for (n, c) in self.coefficients.iter().enumerate() {
            match c {
                Value::Object(o) if o.contains_key("terms") => {
                    out.push_str(&format!("{}:\n", label(n)));
                    for term in o["terms"].as_array().into_iter().flatten() {
                        let atoms: Vec<String> = term["atoms"].as_array().into_iter().flatten().map(plain).collect();
                        let atoms = if atoms.is_empty() { "1".to_string() } else { atoms.join(" ⊙ ") };
                        out.push_str(&format!("    ({}) {}\n", plain(&term["coeff"]), atoms));
                    }
                }
                _ => out.push_str(&format!("{}: {}\n", label(n), plain(c))),
            }
        }
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            out.push_str(&format!("[{status}] {}", c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!(": {}", c.detail));
            }
            out.push('\n');
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn series_json<C: Ring + Display>(s: &TSeries<C>) -> Vec<Value> {
    s.coeffs().iter().map(|c| Value::String(c.to_string())).collect()
}

pub fn atom_label(space: &PontSpace, k: usize, basis: usize) -> String {
    format!("d{k}*[{}]", space.ids[basis])
}

/// One object per `t^n`: `{n, terms: [{atoms, coeff}]}`.
pub fn pont_json<C: Ring + Display>(s: &PontSeries<C>) -> Vec<Value> {
    let space = s.space();
    s.comps()
        .iter()
        .enumerate()
        .map(|(n, e)| {
            let terms: Vec<Value> = e
                .terms()
                .map(|(m, c)| {
                    let atoms: Vec<String> = m.iter().map(|a| atom_label(space, a.k, a.basis)).collect();
                    json!({ "atoms": atoms, "coeff": c.to_string() })
                })
                .collect();
            json!({ "n": n, "terms": terms })
        })
        .collect()
}
