//! Weighted enumeration of lattice paths that never go below the x-axis, as an
//! independent check on generating-function coefficients.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{parse_mpoly, AlgebraError, Frac, MPoly};
use crate::fe::{solve_series, FeError, QuadFE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("step {index} has dx = {dx}; every step must move right (dx >= 1)")]
    NonPositiveDx { index: usize, dx: i64 },
    #[error("step {index}: bad weight {weight:?}: {source}")]
    Weight { index: usize, weight: String, source: AlgebraError },
    #[error("step set is empty")]
    Empty,
    #[error("steps mix parameter counts")]
    MixedArity,
    #[error("bad step file: {0}")]
    Json(String),
    #[error(transparent)]
    Fe(#[from] FeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub dx: usize,
    pub dy: i64,
    pub weight: MPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSet {
    nparams: usize,
    steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub dx: i64,
    pub dy: i64,
    #[serde(default = "unit_weight")]
    pub w: String,
}

fn unit_weight() -> String {
    "1".into()
}

/// A step file: either a bare list of steps or `{"params": [...], "steps": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StepFile {
    Bare(Vec<StepJson>),
    Named {
        #[serde(default)]
        params: Vec<String>,
        steps: Vec<StepJson>,
    },
}

impl StepSet {
    pub fn new(steps: Vec<Step>) -> Result<StepSet, PathError> {
        let first = steps.first().ok_or(PathError::Empty)?;
        let nparams = first.weight.nvars();
        if steps.iter().any(|s| s.weight.nvars() != nparams) {
            return Err(PathError::MixedArity);
        }
        if let Some((index, s)) = steps.iter().enumerate().find(|(_, s)| s.dx == 0) {
            return Err(PathError::NonPositiveDx { index, dx: s.dx as i64 });
        }
        Ok(StepSet { nparams, steps })
    }

    /// Unit-weight steps from `(dx, dy)` pairs.
    pub fn unweighted(nparams: usize, steps: &[(usize, i64)]) -> Result<StepSet, PathError> {
        StepSet::new(steps.iter().map(|&(dx, dy)| Step { dx, dy, weight: MPoly::one(nparams) }).collect())
    }

    pub fn from_json(steps: &[StepJson], params: &[&str]) -> Result<StepSet, PathError> {
        let mut out = Vec::with_capacity(steps.len());
        for (index, s) in steps.iter().enumerate() {
            if s.dx < 1 {
                return Err(PathError::NonPositiveDx { index, dx: s.dx });
            }
            let weight = parse_mpoly(&s.w, params)
                .map_err(|source| PathError::Weight { index, weight: s.w.clone(), source })?;
            out.push(Step { dx: s.dx as usize, dy: s.dy, weight });
        }
        StepSet::new(out)
    }

    /// Parse a step file; returns the steps and their parameter names.
    pub fn parse(src: &str) -> Result<(StepSet, Vec<String>), PathError> {
        let file: StepFile = serde_json::from_str(src).map_err(|e| PathError::Json(e.to_string()))?;
        let (params, steps) = match file {
            StepFile::Bare(steps) => (Vec::new(), steps),
            StepFile::Named { params, steps } => (params, steps),
        };
        let names: Vec<&str> = params.iter().map(String::as_str).collect();
        Ok((StepSet::from_json(&steps, &names)?, params))
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn to_json(&self, params: &[&str]) -> Vec<StepJson> {
        self.steps
            .iter()
            .map(|s| StepJson { dx: s.dx as i64, dy: s.dy, w: s.weight.to_string_with(params) })
            .collect()
    }
}

/// `W[x][y]`: total weight of paths from the origin to `(x, y)` whose
/// vertices all have `y >= 0`.
#[derive(Debug, Clone)]
pub struct PathTable {
    w: Vec<Vec<MPoly>>,
}

impl PathTable {
    pub fn build(steps: &StepSet, n_max: usize) -> PathTable {
        let rise = steps.steps.iter().map(|s| s.dy.max(0) as usize).max().unwrap_or(0);
        let height = rise * n_max;
        let zero = MPoly::zero(steps.nparams);
        let mut w = vec![vec![zero; height + 1]; n_max + 1];
        w[0][0] = MPoly::one(steps.nparams);
        for x in 1..=n_max {
            for y in 0..=height {
                let mut acc = MPoly::zero(steps.nparams);
                for s in steps.steps.iter().filter(|s| s.dx <= x) {
                    let from = y as i64 - s.dy;
                    if from < 0 || from as usize > height {
                        continue;
                    }
                    let prev = &w[x - s.dx][from as usize];
                    if !prev.is_zero() {
                        acc = &acc + &(&s.weight * prev);
                    }
                }
                w[x][y] = acc;
            }
        }
        PathTable { w }
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&MPoly> {
        self.w.get(x).and_then(|col| col.get(y))
    }

    /// `W[n][0]` for `n = 0..=n_max`.
    pub fn returns(&self) -> Vec<MPoly> {
        self.w.iter().map(|col| col[0].clone()).collect()
    }
}

/// Weighted counts of paths from `(0, 0)` to `(n, 0)` for `n = 0..=n_max`.
pub fn count_paths(steps: &StepSet, n_max: usize) -> Vec<MPoly> {
    PathTable::build(steps, n_max).returns()
}

/// Whether `[x^n] F = W[n - offset][0]` for all `n <= n_max`, where the
/// left side is zero for `n < offset`.
pub fn coefficients_match_at(steps: &StepSet, fe: &QuadFE, n_max: usize, offset: usize) -> Result<bool, PathError> {
    let series = solve_series(fe, n_max)?;
    let same_arity = series.nparams() == steps.nparams;
    let counts = count_paths(steps, n_max);
    let mut pairs = series.coeffs().iter().enumerate().map(|(n, c)| match n.checked_sub(offset) {
        None => Ok(c.is_zero()),
        Some(i) if same_arity => Ok(*c == Frac::from_poly(counts[i].clone())),
        // Numeric comparison when one side was specialized to a point.
        Some(i) => match (c.as_constant(), counts[i].as_constant()) {
            (Some(x), Some(y)) => Ok(x == y),
            _ => Err(PathError::MixedArity),
        },
    });
    pairs.try_fold(true, |acc, ok| Ok(acc && ok?))
}

/// Whether the path counts are exactly the series coefficients `0..=n_max`.
pub fn coefficients_match(steps: &StepSet, fe: &QuadFE, n_max: usize) -> Result<bool, PathError> {
    coefficients_match_at(steps, fe, n_max, 0)
}

/// Smallest offset for which [`coefficients_match_at`] holds, if any.
pub fn find_offset(steps: &StepSet, fe: &QuadFE, n_max: usize) -> Result<Option<usize>, PathError> {
    for offset in 0..=n_max {
        if coefficients_match_at(steps, fe, n_max, offset)? {
            return Ok(Some(offset));
        }
    }
    Ok(None)
}

/// Steps `(1, 1)`, `(q, 0)` weighted `a`, and `(down_dx, -1)` weighted `b`, over `[a, b]`.
pub fn mql_steps(q: usize, down_dx: usize) -> Result<StepSet, PathError> {
    StepSet::new(vec![
        Step { dx: 1, dy: 1, weight: MPoly::one(2) },
        Step { dx: q, dy: 0, weight: MPoly::var(2, 0) },
        Step { dx: down_dx, dy: -1, weight: MPoly::var(2, 1) },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[MPoly]) -> Vec<i64> {
        v.iter().map(|p| p.as_constant().unwrap().to_string().parse().unwrap()).collect()
    }

    #[test]
    fn motzkin_and_dyck() {
        let motzkin = StepSet::unweighted(0, &[(1, 1), (1, 0), (1, -1)]).unwrap();
        assert_eq!(ints(&count_paths(&motzkin, 5)), [1, 1, 2, 4, 9, 21]);
        let dyck = StepSet::unweighted(0, &[(1, 1), (1, -1)]).unwrap();
        assert_eq!(ints(&count_paths(&dyck, 8)), [1, 0, 1, 0, 2, 0, 5, 0, 14]);
    }

    #[test]
    fn rejects_steps_that_do_not_advance() {
        let err = StepSet::parse(r#"[{"dx":1,"dy":1,"w":"1"},{"dx":0,"dy":-1,"w":"1"}]"#).unwrap_err();
        assert_eq!(err, PathError::NonPositiveDx { index: 1, dx: 0 });
        assert!(matches!(StepSet::parse("[]"), Err(PathError::Empty)));
    }

    #[test]
    fn parses_weighted_steps() {
        let (s, params) =
            StepSet::parse(r#"{"params":["t"],"steps":[{"dx":1,"dy":1},{"dx":1,"dy":-1},{"dx":2,"dy":0,"w":"t + 1"}]}"#)
                .unwrap();
        assert_eq!(params, ["t"]);
        assert_eq!(s.steps()[2].weight.to_string_with(&["t"]), "t + 1");
        assert_eq!(s.to_json(&["t"])[0].w, "1");
    }
}
