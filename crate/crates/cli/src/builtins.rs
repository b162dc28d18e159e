//! Models whose Hirzebruch and Chern classes are computed internally.

use motivic_core::hirzebruch::{point_model, proj_space_model, product_model, HomologyModel};

use crate::error::CliError;

pub const BASIC: [&str; 6] = ["point", "P0", "P1", "P2", "P3", "P4"];

fn basic(name: &str) -> Option<HomologyModel> {
    match name {
        "point" => {
            let mut m = point_model();
            m.name = "point".into();
            Some(m)
        }
        _ => {
            let d: usize = name.strip_prefix('P')?.parse().ok()?;
            (d <= 4).then(|| proj_space_model(d).expect("projective spaces are valid models"))
        }
    }
}

/// `point`, `P0`..`P4`, or a binary product such as `P1xP2`.
pub fn builtin(name: &str) -> Result<HomologyModel, CliError> {
    let unknown = || CliError::Input(format!("unknown builtin model {name}; expected one of {BASIC:?} or a product AxB"));
    match name.split_once('x') {
        None => basic(name).ok_or_else(unknown),
        Some((a, b)) => {
            let (a, b) = (basic(a).ok_or_else(unknown)?, basic(b).ok_or_else(unknown)?);
            Ok(product_model(&a, &b)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry() {
        assert_eq!(builtin("P1xP1").unwrap().name, "P1xP1");
        assert_eq!(builtin("P2").unwrap().dim, 2);
        assert!(builtin("P5").is_err());
        assert!(builtin("P1xP1xP1").is_err());
        assert!(builtin("Q").is_err());
    }
}
