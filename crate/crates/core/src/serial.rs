//! JSON shapes for polynomials, rational functions and fractions.
//!
//! Coefficients are decimal strings (`"p"` or `"p/q"`) so big integers
//! survive any JSON reader. Rational functions may also be given as an
//! expression string such as `"1/(1 - a*x)"`.

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_frac, parse_ratfun, AlgebraError, Frac, MPoly, RatFun, Rat};

/// One term of a parameter polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

pub type PolyJson = Vec<TermJson>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatFunJson {
    Expr(String),
    Coeffs {
        /// Ascending powers of `x`.
        num: Vec<PolyJson>,
        den: Vec<PolyJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expr: Option<String>,
    },
}

/// A parameter fraction as an expression plus exact parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracJson {
    pub expr: String,
    pub num: PolyJson,
    pub den: PolyJson,
}

pub fn poly_to_json(p: &MPoly) -> PolyJson {
    p.terms()
        .iter()
        .map(|(m, c)| TermJson { exp: m.exponents(p.nvars()), coeff: c.to_string() })
        .collect()
}

pub fn poly_from_json(nvars: usize, p: &PolyJson) -> Result<MPoly, AlgebraError> {
    let terms = p
        .iter()
        .map(|t| {
            if t.exp.len() != nvars {
                return Err(AlgebraError::ArityMismatch { left: nvars, right: t.exp.len() });
            }
            Ok((t.exp.clone(), t.coeff.parse::<Rat>()?))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MPoly::from_terms(nvars, terms))
}

pub fn ratfun_to_json(f: &RatFun, params: &[&str]) -> RatFunJson {
    RatFunJson::Coeffs {
        num: f.num_coeffs().iter().map(poly_to_json).collect(),
        den: f.den_coeffs().iter().map(poly_to_json).collect(),
        expr: Some(f.to_string_with(params)),
    }
}

pub fn ratfun_from_json(j: &RatFunJson, params: &[&str]) -> Result<RatFun, AlgebraError> {
    match j {
        RatFunJson::Expr(s) => parse_ratfun(s, params),
        RatFunJson::Coeffs { num, den, .. } => {
            let np = params.len();
            let conv = |v: &Vec<PolyJson>| v.iter().map(|p| poly_from_json(np, p)).collect::<Result<Vec<_>, _>>();
            RatFun::from_coeffs(&conv(num)?, &conv(den)?, np)
        }
    }
}

pub fn frac_to_json(f: &Frac, params: &[&str]) -> FracJson {
    FracJson { expr: f.to_string_with(params), num: poly_to_json(f.num()), den: poly_to_json(f.den()) }
}

pub fn frac_from_json(j: &FracJson, params: &[&str]) -> Result<Frac, AlgebraError> {
    let np = params.len();
    if j.num.is_empty() && j.den.is_empty() {
        return parse_frac(&j.expr, params);
    }
    Frac::new(poly_from_json(np, &j.num)?, poly_from_json(np, &j.den)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfun_roundtrip() {
        let params = ["a", "b"];
        let f = parse_ratfun("(2*a - x/3)/(1 - b*x^2)", &params).unwrap();
        let j = ratfun_to_json(&f, &params);
        let text = serde_json::to_string(&j).unwrap();
        let back: RatFunJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ratfun_from_json(&back, &params).unwrap(), f);
    }

    #[test]
    fn expression_form_accepted() {
        let j: RatFunJson = serde_json::from_str("\"1 - a*x\"").unwrap();
        let f = ratfun_from_json(&j, &["a"]).unwrap();
        assert_eq!(f, parse_ratfun("1 - a*x", &["a"]).unwrap());
    }
}
