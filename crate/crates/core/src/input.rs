//! Equation and series files.
//!
//! An equation file is one of
//! - the canonical form `{"d": 0, "k": 1, "u": "1", "v": "-1", "params": []}`,
//! - a source shape `{"form": "catalan-like", "degrees": {"m": 2}, "coeffs": {"a": "a", "b": "b"}, "params": ["a", "b"]}`,
//! - a built-in seed `{"seed": "f3"}`,
//!
//! optionally with `"at": {"a": "1", "b": "1/2"}` to specialize parameters.
//! A series file is `{"coeffs": ["1", "1", "2"], "params": []}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{parse_frac, AlgebraError, Rat, Series};
use crate::fe::{fe_from_quadratic, FeError, QuadFE, QuadFEJson, QuadraticForm};
use crate::seeds;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{0}")]
    Json(String),
    #[error("unknown seed {0:?}")]
    UnknownSeed(String),
    #[error("parameter {0:?} is not declared")]
    UnknownParam(String),
    #[error("bad value for {name:?}: {value:?}")]
    BadValue { name: String, value: String },
    #[error("series file has no coefficients")]
    EmptySeries,
    #[error(transparent)]
    Fe(#[from] FeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Source {
    Seed {
        seed: String,
    },
    Form {
        form: String,
        #[serde(default)]
        degrees: BTreeMap<String, u32>,
        coeffs: BTreeMap<String, String>,
        #[serde(default)]
        params: Vec<String>,
    },
    Canonical(QuadFEJson),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EquationFile {
    #[serde(flatten)]
    source: Source,
    #[serde(default)]
    at: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SeriesFile {
    coeffs: Vec<String>,
    #[serde(default)]
    params: Vec<String>,
}

/// Parse an equation file.
pub fn load_equation(src: &str) -> Result<QuadFE, InputError> {
    let file: EquationFile = serde_json::from_str(src).map_err(|e| InputError::Json(e.to_string()))?;
    let fe = match file.source {
        Source::Seed { seed } => seeds::by_name(&seed).ok_or(InputError::UnknownSeed(seed))?,
        Source::Form { form, degrees, coeffs, params } => {
            let names: Vec<&str> = params.iter().map(String::as_str).collect();
            fe_from_quadratic(&QuadraticForm::from_named(&form, &degrees, &coeffs, &names)?, &names)?
        }
        Source::Canonical(j) => QuadFE::from_json(&j)?,
    };
    if file.at.is_empty() {
        return Ok(fe);
    }
    let point = point_from_map(fe.params(), &file.at)?;
    Ok(fe.eval_params(&point)?)
}

/// Values for every name in `params`, in order. Every parameter must be given.
pub fn point_from_map(params: &[String], values: &BTreeMap<String, String>) -> Result<Vec<Rat>, InputError> {
    if let Some(extra) = values.keys().find(|k| !params.contains(k)) {
        return Err(InputError::UnknownParam(extra.clone()));
    }
    params
        .iter()
        .map(|name| {
            let raw = values.get(name).ok_or_else(|| InputError::BadValue { name: name.clone(), value: String::new() })?;
            raw.trim().parse::<Rat>().map_err(|_| InputError::BadValue { name: name.clone(), value: raw.clone() })
        })
        .collect()
}

/// Parse a series file; coefficients are expressions in the declared parameters.
pub fn load_series(src: &str) -> Result<(Series, Vec<String>), InputError> {
    let file: SeriesFile = serde_json::from_str(src).map_err(|e| InputError::Json(e.to_string()))?;
    if file.coeffs.is_empty() {
        return Err(InputError::EmptySeries);
    }
    let names: Vec<&str> = file.params.iter().map(String::as_str).collect();
    let coeffs = file.coeffs.iter().map(|c| parse_frac(c, &names)).collect::<Result<Vec<_>, _>>()?;
    Ok((Series::new(coeffs), file.params))
}

/// Whether a JSON document looks like a series file rather than an equation.
pub fn is_series_file(src: &str) -> bool {
    serde_json::from_str::<SeriesFile>(src).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fe::solve_series;

    fn ints(s: &Series) -> Vec<String> {
        s.coeffs().iter().map(|c| c.as_constant().unwrap().to_string()).collect()
    }

    #[test]
    fn three_ways_to_write_catalan() {
        for src in [
            r#"{"seed": "catalan"}"#,
            r#"{"d": 0, "k": 1, "u": "1", "v": "-1"}"#,
            r#"{"form": "catalan-like", "degrees": {"m": 1}, "coeffs": {"a": "0", "b": "1"}}"#,
        ] {
            let fe = load_equation(src).unwrap();
            assert_eq!(ints(&solve_series(&fe, 6).unwrap()), ["1", "1", "2", "5", "14", "42", "132"], "{src}");
        }
    }

    #[test]
    fn specialized_parameters() {
        let fe = load_equation(r#"{"seed": "f2", "at": {"a": "1", "b": "1"}}"#).unwrap();
        assert_eq!(ints(&solve_series(&fe, 5).unwrap()), ["1", "1", "2", "4", "9", "21"]);
        let err = load_equation(r#"{"seed": "f2", "at": {"c": "1"}}"#).unwrap_err();
        assert_eq!(err, InputError::UnknownParam("c".into()));
    }

    #[test]
    fn rejects_vanishing_v0() {
        let err = load_equation(r#"{"d": 0, "k": 1, "u": "1", "v": "x"}"#).unwrap_err();
        assert_eq!(err.to_string(), "v(0)=0");
    }

    #[test]
    fn series_files() {
        assert!(is_series_file(r#"{"coeffs": ["1", "t"], "params": ["t"]}"#));
        assert!(!is_series_file(r#"{"seed": "catalan"}"#));
        let (s, p) = load_series(r#"{"coeffs": ["1", "t/2"], "params": ["t"]}"#).unwrap();
        assert_eq!((s.order(), p.len()), (1, 1));
    }
}
