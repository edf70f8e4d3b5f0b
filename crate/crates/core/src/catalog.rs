//! Closed-form Hankel determinant formulas and recursion identities, keyed by
//! stable IDs, with an oracle for each that computes the same quantity by
//! direct elimination.
//!
//! Every closed form is implemented as stated. Where a stated form disagrees
//! with the oracle, the entry also carries a corrected form, and verification
//! reports a verdict for both.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Frac, MPoly, Rat, Series};
use crate::fe::{fe_from_quadratic, solve_series, FeError, QuadFE, QuadraticForm};
use crate::hankel::{hankel_dets, HankelError};
use crate::seeds;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("{id}: index outside the domain, need {predicate}")]
    Domain { id: String, predicate: String },
    #[error("missing index {0:?}")]
    MissingIndex(String),
    #[error("expected {expected} parameter values, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("series order {have} is too small; use at least N = {needed}")]
    InsufficientOrder { needed: usize, have: usize },
    #[error(transparent)]
    Fe(#[from] FeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Hankel(HankelError),
}

impl From<HankelError> for CatalogError {
    fn from(e: HankelError) -> Self {
        match e {
            HankelError::InsufficientOrder { needed, have } => CatalogError::InsufficientOrder { needed, have },
            e => CatalogError::Hankel(e),
        }
    }
}

/// Generalized Fibonacci numbers `Fib_n = a Fib_{n-1} + b Fib_{n-2}`, `Fib_0 = 0`, `Fib_1 = 1`.
pub fn fib(n: i64, a: &MPoly, b: &MPoly) -> Result<MPoly, CatalogError> {
    if n < 0 {
        return Err(CatalogError::Domain { id: "fib".into(), predicate: "n >= 0".into() });
    }
    let (mut prev, mut cur) = (MPoly::zero(a.nvars()), MPoly::one(a.nvars()));
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        let next = &(a * &cur) + &(b * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Named integer indices such as `n`, `m`, `i`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Indices(pub BTreeMap<String, i64>);

impl Indices {
    pub fn new(pairs: &[(&str, i64)]) -> Indices {
        Indices(pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect())
    }

    pub fn get(&self, name: &str) -> Result<i64, CatalogError> {
        self.0.get(name).copied().ok_or_else(|| CatalogError::MissingIndex(name.into()))
    }

    pub fn with(&self, name: &str, v: i64) -> Indices {
        let mut out = self.clone();
        out.0.insert(name.to_string(), v);
        out
    }

    pub fn describe(&self) -> String {
        self.0.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
    }
}

// ---------------------------------------------------------------------------
// Exact helpers

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn c2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn c3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

/// Parameter variables of an entry.
#[derive(Clone, Copy)]
struct Vars {
    np: usize,
}

impl Vars {
    fn var(&self, i: usize) -> Frac {
        Frac::from_poly(MPoly::var(self.np, i))
    }
    fn a(&self) -> Frac {
        self.var(0)
    }
    fn b(&self) -> Frac {
        self.var(1)
    }
    fn t(&self) -> Frac {
        self.var(2)
    }
    fn int(&self, k: i64) -> Frac {
        Frac::from_int(self.np, k)
    }
    fn rat(&self, r: Rat) -> Frac {
        Frac::from_rat(self.np, r)
    }
    fn pow2(&self, e: i64) -> Frac {
        self.rat(Rat::from_int(2).pow(e).expect("nonzero"))
    }
    fn fib(&self, n: i64) -> Result<Frac, CatalogError> {
        let a = MPoly::var(self.np, 0);
        let b = -&MPoly::var(self.np, 1);
        Ok(Frac::from_poly(fib(n, &a, &b)?))
    }
}

fn pw(f: &Frac, e: i64) -> Result<Frac, CatalogError> {
    Ok(f.pow(e)?)
}

fn prod(factors: &[Frac]) -> Frac {
    let mut it = factors.iter();
    let first = it.next().expect("at least one factor").clone();
    it.fold(first, |acc, f| &acc * f)
}

/// `Some(n)` when `big = period * n + offset` with `n >= n_min`.
fn class(big: i64, period: i64, offset: i64, n_min: i64) -> Option<i64> {
    let r = big - offset;
    (r.rem_euclid(period) == 0 && r / period >= n_min).then_some(r / period)
}

// ---------------------------------------------------------------------------
// Series builders

/// Parameter values for numeric evaluation, or `None` for symbolic.
pub type Point = Option<Vec<Rat>>;

fn at(f: &Frac, point: &Point) -> Result<Frac, CatalogError> {
    match point {
        None => Ok(f.clone()),
        Some(p) => Ok(f.eval_partial(&p.iter().cloned().map(Some).collect::<Vec<_>>())?),
    }
}

fn solve_at(fe: &QuadFE, order: usize, point: &Point) -> Result<Series, CatalogError> {
    let fe = match point {
        None => fe.clone(),
        Some(p) => fe.eval_params(p)?,
    };
    Ok(solve_series(&fe, order)?)
}

/// `f_m` over parameters whose first two are `a, b`.
fn f_m_over(m: u32, np: usize) -> QuadFE {
    let names: Vec<String> = ["a", "b", "t", "c"].iter().take(np).map(|s| s.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let form = QuadraticForm::CatalanLike { m, a: MPoly::var(np, 0), b: MPoly::var(np, 1) };
    fe_from_quadratic(&form, &refs).expect("f_m is valid")
}

/// Choice of `(alpha, beta)` in `q_m = 1/(1 - alpha x - beta x^m f_m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QPreset {
    /// `(a, b)`: `f_m` itself.
    F,
    /// `(a + t, b)`: `F_m`.
    BigF,
    /// `(a, 2b)`: `G_m`.
    G,
}

impl QPreset {
    fn coeffs(self, v: Vars) -> (Frac, Frac) {
        match self {
            QPreset::F => (v.a(), v.b()),
            QPreset::BigF => (&v.a() + &v.t(), v.b()),
            QPreset::G => (v.a(), &v.int(2) * &v.b()),
        }
    }
}

/// `1/(1 - alpha x - beta x^m f)` from the series `f` of `f_m`.
pub fn q_series(m: usize, alpha: &Frac, beta: &Frac, f: &Series) -> Result<Series, CatalogError> {
    let np = f.nparams();
    let order = f.order();
    let mut den = Series::one(np, order);
    let tail = f.scale(&-beta).shift_up(m).truncate(order)?;
    den = den.add(&tail);
    if order >= 1 {
        let mut lin = Series::zero(np, order);
        let mut c = lin.coeffs().to_vec();
        c[1] = -alpha;
        lin = Series::new(c);
        den = den.add(&lin);
    }
    Ok(den.inverse()?)
}

/// Series of `f_m`, `F_m`, `G_m` (parameters `a, b` and `t` for `F_m`) to `order`.
pub fn family_series(preset: QPreset, m: u32, order: usize, point: &Point) -> Result<Series, CatalogError> {
    let np = if preset == QPreset::BigF { 3 } else { 2 };
    let f = solve_at(&f_m_over(m, np), order, point)?;
    if preset == QPreset::F {
        return Ok(f);
    }
    let (alpha, beta) = preset.coeffs(Vars { np });
    q_series(m as usize, &at(&alpha, point)?, &at(&beta, point)?, &f)
}

fn dets(s: &Series, n_max: usize, k: usize) -> Result<Vec<Frac>, CatalogError> {
    Ok(hankel_dets(s, n_max, k)?)
}

// ---------------------------------------------------------------------------
// Entries

type ValueFn = fn(&Indices, Vars) -> Result<Frac, CatalogError>;
type OracleFn = fn(&Indices, usize, &Point) -> Result<Vec<Frac>, CatalogError>;
type DiffFn = fn(&Indices, usize, &Point) -> Result<Vec<Option<Frac>>, CatalogError>;
type DomainFn = fn(&Indices) -> Result<(), String>;

#[derive(Clone, Copy)]
enum Kind {
    Closed { value: ValueFn, oracle: OracleFn },
    /// Both sides of a recursion identity through the oracle; the value is
    /// their difference.
    Identity { diff: DiffFn },
}

/// How an entry is checked by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    /// Seeded random positive rational parameter points.
    Points(usize),
}

#[derive(Clone)]
pub struct Grid {
    pub families: Vec<Indices>,
    pub n_max: usize,
    pub mode: Mode,
}

/// A stated form that failed verification, kept next to the corrected one.
#[derive(Clone, Copy)]
pub struct Erratum {
    pub note: &'static str,
    stated: ValueFn,
}

#[derive(Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub params: &'static [&'static str],
    /// Indices besides the order `n`.
    pub family: &'static [&'static str],
    pub domain_text: &'static str,
    pub classes: &'static str,
    domain: DomainFn,
    kind: Kind,
    pub erratum: Option<Erratum>,
    grid: fn() -> Grid,
}

impl CatalogEntry {
    pub fn is_identity(&self) -> bool {
        matches!(self.kind, Kind::Identity { .. })
    }

    pub fn default_grid(&self) -> Grid {
        (self.grid)()
    }

    fn vars(&self) -> Vars {
        Vars { np: self.params.len() }
    }

    pub fn check_domain(&self, idx: &Indices) -> Result<(), CatalogError> {
        for name in self.family.iter().chain(std::iter::once(&"n")) {
            idx.get(name)?;
        }
        if idx.get("n")? < 0 {
            return Err(CatalogError::Domain { id: self.id.into(), predicate: "n >= 0".into() });
        }
        (self.domain)(idx).map_err(|predicate| CatalogError::Domain { id: self.id.into(), predicate })
    }

    /// Closed-form value (as corrected, where an erratum applies). Identity
    /// entries return the exact difference of the two sides.
    pub fn eval(&self, idx: &Indices, point: &Point) -> Result<Frac, CatalogError> {
        self.check_domain(idx)?;
        self.check_point(point)?;
        match self.kind {
            Kind::Closed { value, .. } => at(&closed(value, idx, self.vars())?, point),
            Kind::Identity { diff } => {
                let n = idx.get("n")? as usize;
                let d = diff(idx, n, point)?;
                Ok(d[n].clone().unwrap_or_else(|| Frac::zero(self.params.len())))
            }
        }
    }

    /// The form exactly as stated, when it differs from `eval`.
    pub fn eval_stated(&self, idx: &Indices, point: &Point) -> Result<Option<Frac>, CatalogError> {
        self.check_domain(idx)?;
        self.check_point(point)?;
        match self.erratum {
            Some(e) => Ok(Some(at(&closed(e.stated, idx, self.vars())?, point)?)),
            None => Ok(None),
        }
    }

    fn check_point(&self, point: &Point) -> Result<(), CatalogError> {
        match point {
            Some(p) if p.len() != self.params.len() => {
                Err(CatalogError::ParamCount { expected: self.params.len(), got: p.len() })
            }
            _ => Ok(()),
        }
    }
}

/// `H_0 = 1` by convention, whatever the closed form says at `n = 0`.
fn closed(value: ValueFn, idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    if idx.get("n")? == 0 {
        return Ok(v.int(1));
    }
    value(idx, v)
}

fn any(_: &Indices) -> Result<(), String> {
    Ok(())
}

fn need(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn m_at_least<const K: i64>(idx: &Indices) -> Result<(), String> {
    need(idx.get("m").map_err(|e| e.to_string())? >= K, &format!("m >= {K}"))
}

fn fams(name: &str, values: &[i64]) -> Vec<Indices> {
    values.iter().map(|&v| Indices::new(&[(name, v)])).collect()
}

fn none() -> Vec<Indices> {
    vec![Indices::default()]
}

// --- f_m, F_m, G_m --------------------------------------------------------

fn m_of(idx: &Indices) -> Result<i64, CatalogError> {
    idx.get("m")
}

fn oracle_family(preset: QPreset, m: i64, k: usize, n_max: usize, point: &Point) -> Result<Vec<Frac>, CatalogError> {
    let s = family_series(preset, m as u32, 2 * n_max + k, point)?;
    dets(&s, n_max, k)
}

macro_rules! family_oracle {
    ($name:ident, $preset:expr, $k:expr) => {
        fn $name(idx: &Indices, n_max: usize, point: &Point) -> Result<Vec<Frac>, CatalogError> {
            oracle_family($preset, idx.get("m").unwrap_or(0), $k, n_max, point)
        }
    };
}
family_oracle!(o_f_h0, QPreset::F, 0);
family_oracle!(o_bf_h0, QPreset::BigF, 0);
family_oracle!(o_g_h0, QPreset::G, 0);
family_oracle!(o_f_h1, QPreset::F, 1);
family_oracle!(o_bf_h1, QPreset::BigF, 1);
family_oracle!(o_g_h1, QPreset::G, 1);
family_oracle!(o_f_h2, QPreset::F, 2);
family_oracle!(o_bf_h2, QPreset::BigF, 2);
family_oracle!(o_g_h2, QPreset::G, 2);

fn fixed_m<const M: i64>(f: OracleFn) -> impl Fn(&Indices, usize, &Point) -> Result<Vec<Frac>, CatalogError> {
    move |idx, n, p| f(&idx.with("m", M), n, p)
}

macro_rules! with_m {
    ($name:ident, $m:expr, $inner:ident) => {
        fn $name(idx: &Indices, n_max: usize, point: &Point) -> Result<Vec<Frac>, CatalogError> {
            fixed_m::<$m>($inner)(idx, n_max, point)
        }
    };
}
with_m!(o_f1_h0, 1, o_f_h0);
with_m!(o_bf1_h0, 1, o_bf_h0);
with_m!(o_g1_h0, 1, o_g_h0);
with_m!(o_f1_h1, 1, o_f_h1);
with_m!(o_bf1_h1, 1, o_bf_h1);
with_m!(o_g1_h1, 1, o_g_h1);
with_m!(o_f2_h1, 2, o_f_h1);
with_m!(o_bf2_h1, 2, o_bf_h1);
with_m!(o_g2_h1, 2, o_g_h1);
with_m!(o_f1_h2, 1, o_f_h2);
with_m!(o_bf1_h2, 1, o_bf_h2);
with_m!(o_g1_h2, 1, o_g_h2);
with_m!(o_f2_h2, 2, o_f_h2);
with_m!(o_bf2_h2, 2, o_bf_h2);
with_m!(o_g2_h2, 2, o_g_h2);
with_m!(o_f3_h2, 3, o_f_h2);
with_m!(o_bf3_h2, 3, o_bf_h2);
with_m!(o_g3_h2, 3, o_g_h2);

// H_n, m = 1

fn v_f1_h(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let e = c2(idx.get("n")?);
    Ok(&pw(&v.b(), e)? * &pw(&(&v.a() + &v.b()), e)?)
}

fn v_g1_h(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    Ok(&v.pow2(n - 1) * &v_f1_h(idx, v)?)
}

// H_n, m >= 2

fn v_fm_h_with(idx: &Indices, v: Vars, two: bool) -> Result<Frac, CatalogError> {
    let (big, m) = (idx.get("n")?, m_of(idx)?);
    let s = |n: i64| v.int(sgn(c2(m - 1) * n));
    if let Some(n) = class(big, m, 0, 0) {
        let mut r = &s(n) * &pw(&v.b(), n * (m * n - 1))?;
        if two {
            r = &r * &v.pow2(m * n - 1);
        }
        return Ok(r);
    }
    if let Some(n) = class(big, m, 1, 0) {
        let mut r = &s(n) * &pw(&v.b(), n * (m * n + 1))?;
        if two {
            r = &r * &v.pow2(m * n);
        }
        return Ok(r);
    }
    Ok(v.int(0))
}

fn v_fm_h(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_fm_h_with(idx, v, false)
}

fn v_gm_h(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_fm_h_with(idx, v, true)
}

// H^1_n, m <= 2

fn v_f1_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    Ok(&pw(&v.b(), c2(n))? * &pw(&(&v.a() + &v.b()), c2(n + 1))?)
}

fn v_bf1_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let ab = &v.a() + &v.b();
    let abn = pw(&ab, n)?;
    let tail = (&v.t() * &(&abn - &pw(&v.b(), n)?)).checked_div(&v.a())?;
    Ok(prod(&[pw(&v.b(), c2(n))?, pw(&ab, c2(n))?, &abn + &tail]))
}

fn v_g1_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let ab = &v.a() + &v.b();
    Ok(prod(&[v.pow2(n - 1), pw(&v.b(), c2(n))?, pw(&ab, c2(n))?, &pw(&ab, n)? + &pw(&v.b(), n)?]))
}

fn v_f2_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    Ok(&pw(&v.b(), c2(n))? * &v.fib(n + 1)?)
}

fn v_bf2_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    Ok(&pw(&v.b(), c2(n))? * &(&v.fib(n + 1)? + &(&v.t() * &v.fib(n)?)))
}

fn v_g2_h1_stated(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let inner = &(&v.a() * &v.fib(n)?) - &prod(&[v.pow2(n - 1), v.b(), v.fib(n - 1)?]);
    Ok(prod(&[v.pow2(n - 1), pw(&v.b(), c2(n))?, inner]))
}

fn v_g2_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let inner = &(&v.a() * &v.fib(n)?) - &prod(&[v.int(2), v.b(), v.fib(n - 1)?]);
    Ok(prod(&[v.pow2(n - 1), pw(&v.b(), c2(n))?, inner]))
}

// H^1_n, m >= 3

fn v_m_h1(idx: &Indices, v: Vars, which: QPreset) -> Result<Frac, CatalogError> {
    m_h1_with(idx, v, which, false)
}

fn m_h1_with(idx: &Indices, v: Vars, which: QPreset, stated: bool) -> Result<Frac, CatalogError> {
    let (big, m) = (idx.get("n")?, m_of(idx)?);
    let s = |n: i64| v.int(sgn(c2(m) * n));
    let (a, b, t) = (v.a(), v.b(), || v.t());
    if let Some(n) = class(big, m, 0, 0) {
        let mut r = &s(n) * &pw(&b, m * n * n)?;
        if which == QPreset::G {
            r = &r * &v.pow2(m * n);
        }
        return Ok(r);
    }
    if let Some(n) = class(big, m, 1, 0) {
        let lead = match which {
            QPreset::F => &v.int(n + 1) * &a,
            QPreset::BigF => &t() + &(&v.int(n + 1) * &a),
            QPreset::G if stated => &v.int(2 * n + 1) * &a,
            QPreset::G => prod(&[v.int(2 * n + 1), v.pow2(m * n), a.clone()]),
        };
        return Ok(prod(&[s(n), lead, pw(&b, m * n * n + 2 * n)?]));
    }
    if let Some(n) = class(big, m, -1, 1) {
        let lead = match which {
            QPreset::F => &v.int(n) * &a,
            QPreset::BigF => &t() + &(&v.int(n) * &a),
            QPreset::G => prod(&[v.int(2 * n - 1), v.pow2(m * n - 2), a.clone()]),
        };
        return Ok(prod(&[-&s(n), lead, pw(&b, m * n * n - 2 * n)?]));
    }
    Ok(v.int(0))
}

fn v_fm_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_m_h1(idx, v, QPreset::F)
}
fn v_bfm_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_m_h1(idx, v, QPreset::BigF)
}
fn v_gm_h1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_m_h1(idx, v, QPreset::G)
}
fn v_gm_h1_stated(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    m_h1_with(idx, v, QPreset::G, true)
}

// H^(2)_n, m <= 2

fn v_f1_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let ab = &v.a() + &v.b();
    let q = (&pw(&ab, n + 1)? - &pw(&v.b(), n + 1)?).checked_div(&v.a())?;
    Ok(prod(&[pw(&v.b(), c2(n))?, pw(&ab, c2(n + 1))?, q]))
}

fn v_bf1_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let (a, b, t) = (v.a(), v.b(), v.t());
    let ab = &a + &b;
    let mut sum = v.int(0);
    for j in 0..=n {
        let abj = pw(&ab, j)?;
        let inner = &abj + &(&t * &(&abj - &pw(&b, j)?)).checked_div(&a)?;
        sum = &sum + &prod(&[pw(&ab, n - j)?, pw(&b, n - j)?, &inner * &inner]);
    }
    Ok(prod(&[pw(&b, c2(n))?, pw(&ab, c2(n))?, sum]))
}

fn v_g1_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let (b, ab) = (v.b(), &v.a() + &v.b());
    let mut sum = v.int(1);
    for j in 1..=n {
        let num = &pw(&ab, j)? + &pw(&b, j)?;
        let den = prod(&[v.int(2), pw(&ab, j)?, pw(&b, j)?]);
        sum = &sum + &(&num * &num).checked_div(&den)?;
    }
    Ok(prod(&[v.pow2(n), pw(&b, c2(n + 1))?, pw(&ab, c2(n + 1))?, sum]))
}

fn v_f2_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let b = v.b();
    let mut sum = v.int(0);
    for j in 0..=n {
        let f = v.fib(j + 1)?;
        sum = &sum + &(&pw(&b, n - j)? * &(&f * &f));
    }
    Ok(&pw(&b, c2(n))? * &sum)
}

fn v_bf2_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let b = v.b();
    let mut sum = v.int(0);
    for j in 0..=n {
        let f = &v.fib(j + 1)? + &(&v.t() * &v.fib(j)?);
        sum = &sum + &(&pw(&b, n - j)? * &(&f * &f));
    }
    Ok(&pw(&b, c2(n))? * &sum)
}

fn g2_h2_with(idx: &Indices, v: Vars, lead_a: bool, two: fn(i64) -> i64) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    let b = v.b();
    let mut sum = v.int(1);
    for j in 1..=n {
        let mut f = v.fib(j)?;
        if lead_a {
            f = &v.a() * &f;
        }
        let f = &f - &prod(&[v.pow2(two(j)), b.clone(), v.fib(j - 1)?]);
        sum = &sum + &(&f * &f).checked_div(&(&v.int(2) * &pw(&b, j)?))?;
    }
    Ok(prod(&[v.pow2(n), pw(&b, c2(n + 1))?, sum]))
}

fn v_g2_h2_stated(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    g2_h2_with(idx, v, false, |j| j - 1)
}

fn v_g2_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    g2_h2_with(idx, v, true, |_| 1)
}

// H^(2)_n, m = 3

fn sq_sum(n: i64) -> i64 {
    n * (n + 1) * (2 * n + 1) / 6
}

fn v_3_h2(idx: &Indices, v: Vars, which: QPreset, stated: bool) -> Result<Frac, CatalogError> {
    let big = idx.get("n")?;
    let (a, b) = (v.a(), v.b());
    let a3 = pw(&a, 3)?;
    let core = |k: i64, n: i64| &(&a3 * &v.int(sq_sum(k))) - &(&v.int(n + 1) * &b);
    match which {
        QPreset::F | QPreset::BigF => {
            let t = if which == QPreset::BigF { v.t() } else { v.int(0) };
            let at = &a * &t;
            if let Some(n) = class(big, 3, 0, 0) {
                let extra = prod(&[v.int(n), at.clone(), &t + &(&v.int(n + 1) * &a)]);
                let sign = if which == QPreset::BigF && stated { sgn(n) } else { sgn(n + 1) };
                return Ok(prod(&[v.int(sign), pw(&b, 3 * n * n + n - 1)?, &core(n, n) + &extra]));
            }
            if let Some(n) = class(big, 3, 1, 0) {
                let l = &t + &(&v.int(n + 1) * &a);
                return Ok(prod(&[v.int(sgn(n)), &l * &l, pw(&b, 3 * n * n + 3 * n)?]));
            }
            let n = class(big, 3, 2, 0).expect("classes mod 3 are complete");
            let extra = prod(&[v.int(n + 1), at, &t + &(&v.int(n + 2) * &a)]);
            Ok(prod(&[v.int(sgn(n)), pw(&b, 3 * n * n + 5 * n + 1)?, &core(n + 1, n) + &extra]))
        }
        QPreset::G => {
            if let Some(n) = class(big, 3, 0, 0) {
                let lead = if stated { (2 * n + 1) * (2 * n + 1) } else { 2 * n + 1 };
                let x = prod(&[v.int(lead), v.pow2(3 * n), pw(&b, 3 * n * n + n)?]);
                let y = prod(&[v.int(c3(2 * n + 1)), v.pow2(3 * n - 1), a3, pw(&b, 3 * n * n + n - 1)?]);
                return Ok(&v.int(sgn(n)) * &(&x - &y));
            }
            if let Some(n) = class(big, 3, 1, 0) {
                return Ok(prod(&[
                    v.int(sgn(n) * (2 * n + 1) * (2 * n + 1)),
                    v.pow2(3 * n),
                    &a * &a,
                    pw(&b, 3 * n * n + 3 * n)?,
                ]));
            }
            let n = class(big, 3, 2, 0).expect("classes mod 3 are complete");
            let x = prod(&[v.int(2 * n + 1), v.pow2(3 * n + 2), pw(&b, 3 * n * n + 5 * n + 2)?]);
            let y = prod(&[v.int(c3(2 * n + 3)), v.pow2(3 * n + 1), a3, pw(&b, 3 * n * n + 5 * n + 1)?]);
            Ok(&v.int(sgn(n + 1)) * &(&x - &y))
        }
    }
}

fn v_f3_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_3_h2(idx, v, QPreset::F, true)
}
fn v_bf3_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_3_h2(idx, v, QPreset::BigF, false)
}
fn v_bf3_h2_stated(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_3_h2(idx, v, QPreset::BigF, true)
}
fn v_g3_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_3_h2(idx, v, QPreset::G, false)
}
fn v_g3_h2_stated(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_3_h2(idx, v, QPreset::G, true)
}

// f_m - 1 and H^(2)_n, m >= 4

fn v_fm_minus1_h(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let (big, m) = (idx.get("n")?, m_of(idx)?);
    let s = |n: i64| v.int(sgn(c2(m - 1) * n));
    let (a2, b) = (&v.a() * &v.a(), v.b());
    if let Some(n) = class(big, m, 0, 0) {
        return Ok(prod(&[-&s(n), v.int(n - 1), pw(&b, m * n * n - n)?]));
    }
    if let Some(n) = class(big, m, -1, 1) {
        return Ok(prod(&[s(n), v.int(n * n), a2, pw(&b, m * n * n - 3 * n)?]));
    }
    if let Some(n) = class(big, m, 1, 0) {
        return Ok(prod(&[-&s(n), v.int(n), pw(&b, m * n * n + n)?]));
    }
    if let Some(n) = class(big, m, 2, 0) {
        return Ok(prod(&[-&s(n), v.int((n + 1) * (n + 1)), a2, pw(&b, m * n * n + 3 * n)?]));
    }
    Ok(v.int(0))
}

fn o_fm_minus1(idx: &Indices, n_max: usize, point: &Point) -> Result<Vec<Frac>, CatalogError> {
    let f = family_series(QPreset::F, idx.get("m")? as u32, 2 * n_max, point)?;
    dets(&f.sub(&Series::one(f.nparams(), f.order())), n_max, 0)
}

fn v_m_h2(idx: &Indices, v: Vars, which: QPreset) -> Result<Frac, CatalogError> {
    let (big, m) = (idx.get("n")?, m_of(idx)?);
    let s = |n: i64| v.int(sgn(c2(m - 1) * n));
    let (a, b) = (v.a(), v.b());
    let g = which == QPreset::G;
    if let Some(n) = class(big, m, 0, 0) {
        let lead = if g { &v.int(2 * n + 1) * &v.pow2(m * n) } else { v.int(n + 1) };
        return Ok(prod(&[s(n), lead, pw(&b, m * n * n + n)?]));
    }
    if let Some(n) = class(big, m, 1, 0) {
        let lead = match which {
            QPreset::F => &v.int((n + 1) * (n + 1)) * &(&a * &a),
            QPreset::BigF => {
                let l = &v.t() + &(&v.int(n + 1) * &a);
                &l * &l
            }
            QPreset::G => prod(&[v.int((2 * n + 1) * (2 * n + 1)), v.pow2(m * n), &a * &a]),
        };
        return Ok(prod(&[s(n), lead, pw(&b, m * n * n + 3 * n)?]));
    }
    if let Some(n) = class(big, m, -1, 1) {
        let lead = if g { &v.int(2 * n - 1) * &v.pow2(m * n - 1) } else { v.int(n) };
        return Ok(prod(&[s(n), lead, pw(&b, m * n * n - n)?]));
    }
    if let Some(n) = class(big, m, -2, 1) {
        let lead = match which {
            QPreset::F => &v.int(n * n) * &(&a * &a),
            QPreset::BigF => {
                let l = &v.t() + &(&v.int(n) * &a);
                &l * &l
            }
            QPreset::G => prod(&[v.int((2 * n - 1) * (2 * n - 1)), v.pow2(m * n - 3), &a * &a]),
        };
        return Ok(prod(&[-&s(n), lead, pw(&b, m * n * n - 3 * n)?]));
    }
    Ok(v.int(0))
}

fn v_fm_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_m_h2(idx, v, QPreset::F)
}
fn v_bfm_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_m_h2(idx, v, QPreset::BigF)
}
fn v_gm_h2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_m_h2(idx, v, QPreset::G)
}

// --- Catalan, the period-14 sequence, weighted paths ------------------------

fn v_catalan_hk(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let (n, i) = (idx.get("n")?, idx.get("i")?);
    let mut acc = Rat::one();
    for j in 1..i {
        for k in 1..=j {
            acc = &acc * &Rat::frac(2 * n + j + k, j + k);
        }
    }
    Ok(v.rat(acc))
}

fn o_catalan_hk(idx: &Indices, n_max: usize, _: &Point) -> Result<Vec<Frac>, CatalogError> {
    let k = idx.get("i")? as usize;
    dets(&solve_series(&seeds::catalan(), 2 * n_max + k)?, n_max, k)
}

const PROP_SEQ: [i64; 14] = [1, 1, 0, 0, -1, -1, -1, -1, -1, 0, 0, 1, 1, 1];

fn v_prop_seq(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let n = idx.get("n")?;
    Ok(v.int(PROP_SEQ[((n - 1).rem_euclid(14)) as usize]))
}

fn o_prop_seq(_: &Indices, n_max: usize, _: &Point) -> Result<Vec<Frac>, CatalogError> {
    dets(&solve_series(&seeds::prop11(), 2 * n_max)?, n_max, 0)
}

fn v_s5_ex1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let big = idx.get("n")?;
    let t1 = &v.var(0) + &v.int(1);
    let n = big.div_euclid(3);
    let e = match big.rem_euclid(3) {
        0 => 3 * n * n,
        1 => 3 * n * n + 2 * n,
        _ => 3 * n * n + 4 * n + 1,
    };
    pw(&t1, e)
}

fn o_s5_ex1(_: &Indices, n_max: usize, point: &Point) -> Result<Vec<Frac>, CatalogError> {
    dets(&solve_at(&seeds::s5_ex1(), 2 * n_max, point)?, n_max, 0)
}

fn v_s5_ex2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let big = idx.get("n")?;
    let t1 = &v.var(0) + &v.int(1);
    let n = big.div_euclid(7);
    let (sign, e) = match big.rem_euclid(7) {
        0 => (sgn(n), 14 * n * n),
        1 => (sgn(n), 14 * n * n + 4 * n),
        2 => (sgn(n), 14 * n * n + 8 * n + 1),
        3 | 4 => return Ok(v.int(0)),
        5 => (sgn(n + 1), 14 * n * n + 20 * n + 7),
        _ => (sgn(n + 1), 14 * n * n + 24 * n + 10),
    };
    Ok(&v.int(sign) * &pw(&t1, e)?)
}

fn o_s5_ex2(_: &Indices, n_max: usize, point: &Point) -> Result<Vec<Frac>, CatalogError> {
    dets(&solve_at(&seeds::s5_ex2(), 2 * n_max, point)?, n_max, 0)
}

// --- F = x^m / (1 - a x^q - b x^l F) ----------------------------------------

fn mql_of(idx: &Indices) -> Result<(i64, i64, i64), CatalogError> {
    Ok((idx.get("m")?, idx.get("q")?, idx.get("l")?))
}

fn o_mql(idx: &Indices, n_max: usize, point: &Point) -> Result<Vec<Frac>, CatalogError> {
    let (m, q, l) = mql_of(idx)?;
    let fe = seeds::mql(m as u32, q as u32, l as u32)?;
    dets(&solve_at(&fe, 2 * n_max, point)?, n_max, 0)
}

fn d_mql1(idx: &Indices) -> Result<(), String> {
    let (m, q, l) = mql_of(idx).map_err(|e| e.to_string())?;
    need(m >= 0 && m + 1 >= q && q > 0 && l >= q + 1, "m + 1 >= q > 0 and l >= q + 1")
}

fn v_mql1(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let (m, _, l) = mql_of(idx)?;
    let big = idx.get("n")?;
    let p = m + l;
    let b = v.b();
    if let Some(n) = class(big, p, p, 0) {
        let s = sgn((n + 1) * (c2(m + 1) + c2(l - 1)));
        return Ok(&v.int(s) * &pw(&b, (n + 1) * (n * l + n * m + l - 1))?);
    }
    if let Some(n) = class(big, p, m + 1, 0) {
        let s = sgn((n + 1) * c2(m + 1) + n * c2(l - 1));
        return Ok(&v.int(s) * &pw(&b, n * n * (l + m) + n * (m + 1))?);
    }
    Ok(v.int(0))
}

fn d_mql2(idx: &Indices) -> Result<(), String> {
    let (m, q, l) = mql_of(idx).map_err(|e| e.to_string())?;
    need(m >= 0 && m + l == q && l >= 2, "m + l = q and l >= 2")
}

fn v_mql2(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let (m, _, l) = mql_of(idx)?;
    let big = idx.get("n")?;
    let p = m + l;
    let (b, ab) = (v.b(), &v.a() + &v.b());
    if let Some(n) = class(big, p, 0, 0) {
        let s = sgn(c2(m + 1) * n + c2(l - 1) * n);
        let e = p * (n - 1) * n / 2;
        return Ok(prod(&[v.int(s), pw(&ab, e + (l - 1) * n)?, pw(&b, e)?]));
    }
    if let Some(n) = class(big, p, m + 1, 0) {
        let s = sgn(c2(m + 1) * (n + 1) + c2(l - 1) * n);
        let e = p * (n + 1) * n / 2;
        return Ok(prod(&[v.int(s), pw(&ab, e)?, pw(&b, e - (l - 1) * n)?]));
    }
    Ok(v.int(0))
}

fn d_mql3(idx: &Indices) -> Result<(), String> {
    let (m, q, l) = mql_of(idx).map_err(|e| e.to_string())?;
    let i = q - m;
    need(m >= 0 && i >= 2 && l >= q + 2 * i - 1, "i = q - m >= 2 and l >= q + 2i - 1")
}

fn v_mql3(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    let (m, q, l) = mql_of(idx)?;
    let i = q - m;
    let big = idx.get("n")?;
    let p = m + l;
    let b = v.b();
    let na = |n: i64| pw(&(&v.int(n + 1) * &v.a()), i - 1);
    let cl = c2(l - 2 * i + 1);
    let cm = c2(m + 1);
    if let Some(n) = class(big, p, m + i, 0) {
        let s = sgn((n + 1) * cm + n * cl + c2(i - 1) - n * (i + 3));
        return Ok(prod(&[v.int(s), pw(&b, n * n * p + n * (2 * i + m - 1))?, na(n)?]));
    }
    if let Some(n) = class(big, p, p - i + 1, 0) {
        let s = sgn((n + 1) * (cl + cm) + c2(i - 1) - n * (i + 3));
        return Ok(prod(&[v.int(s), pw(&b, (n + 1) * (n * l + n * m + l - 2 * i + 1))?, na(n)?]));
    }
    if let Some(n) = class(big, p, p, 0) {
        let s = sgn((n + 1) * (cl + cm) - n * (i + 3) + i - 1);
        return Ok(&v.int(s) * &pw(&b, (n + 1) * (n * l + n * m + l - 1))?);
    }
    if let Some(n) = class(big, p, m + 1, 0) {
        let s = sgn(n * cl + (n + 1) * cm - n * (i + 3));
        return Ok(&v.int(s) * &pw(&b, n * (n + 1) * p - n * (l - 1))?);
    }
    Ok(v.int(0))
}

fn d_mql4(idx: &Indices) -> Result<(), String> {
    let (m, q, l) = mql_of(idx).map_err(|e| e.to_string())?;
    let i = q - l;
    need(i >= 0 && l >= 2 && m >= q + 2 * i + 1, "l = q - i >= 2 with i >= 0 and m >= q + 2i + 1")
}

fn v_mql4_with(idx: &Indices, v: Vars, stated: bool) -> Result<Frac, CatalogError> {
    let (m, q, l) = mql_of(idx)?;
    let i = q - l;
    let big = idx.get("n")?;
    let p = m + l;
    let b = v.b();
    let na = |n: i64| pw(&(&v.int(n + 1) * &v.a()), i + 1);
    let cm2 = c2(m - 2 * i - 1);
    let cl = c2(l - 1);
    let cm = c2(m + 1);
    if big == m + 1 {
        return Ok(v.int(sgn(cm)));
    }
    if let Some(n) = class(big, p, p, 0) {
        let s = sgn(n * (cm2 + i - 1) + (n + 1) * cl + cm);
        return Ok(&v.int(s) * &pw(&b, (n + 1) * (n + 1) * p - (n + 1) * (m + 1))?);
    }
    if let Some(n) = class(big, p, p + i + 1, 0) {
        let s = sgn(n * (cm2 + i - 1) + (n + 1) * cl + c2(i + 1) + cm);
        let e = (n + 1) * (n + 1) * p + n * (2 * i - m + 1) + i - m;
        return Ok(prod(&[v.int(s), pw(&b, e)?, na(n)?]));
    }
    if let Some(n) = class(big, p, p + m - i, 0) {
        let s = sgn((n + 1) * (cm2 + cl) + n * (i - 1) + c2(i + 1) + cm);
        let e = (n + 1) * (n + 1) * p + n * (m - 2 * i - 1) + m - 3 * i - 2;
        return Ok(prod(&[v.int(s), pw(&b, e)?, na(n)?]));
    }
    let start = if stated { 0 } else { 1 };
    if let Some(n) = class(big, p, m + 1, start) {
        let (s, e) = if stated {
            (sgn((n + 1) * (cm2 + cl + i + 1) + cm), (n + 1) * (n + 1) * p + (n + 1) * (m + 1))
        } else {
            (sgn(n * (cm2 + cl + i + 1) + cm), n * n * p + n * (m + 1))
        };
        return Ok(&v.int(s) * &pw(&b, e)?);
    }
    Ok(v.int(0))
}

fn v_mql4(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_mql4_with(idx, v, false)
}
fn v_mql4_stated(idx: &Indices, v: Vars) -> Result<Frac, CatalogError> {
    v_mql4_with(idx, v, true)
}

// --- Recursion identities ---------------------------------------------------

fn xj(s: &Series, j: usize) -> Result<Series, CatalogError> {
    Ok(s.shift_up(j).truncate(s.order())?)
}

/// `H_n(x^j f_m) = (-1)^{C(j+1,2)+C(m-j-1,2)} b^{2n-m-j-1} H_{n-m}(x^j f_m)`, and for
/// `j = m - 1`, `H_n(x^{m-1} f_m) = (-1)^{C(m,2)} b^{n-m} H^1_{n-m}(f_m)`.
fn diff_lemma22(idx: &Indices, n_max: usize, point: &Point) -> Result<Vec<Option<Frac>>, CatalogError> {
    let (m, j) = (idx.get("m")?, idx.get("j")?);
    let f = family_series(QPreset::F, m as u32, 2 * n_max + 1, point)?;
    let b = at(&Vars { np: 2 }.b(), point)?;
    let lhs = dets(&xj(&f, j as usize)?, n_max, 0)?;
    let rhs_base = if j == m - 1 { dets(&f, n_max, 1)? } else { lhs.clone() };
    (0..=n_max as i64)
        .map(|n| {
            if n < m {
                return Ok(None);
            }
            let (sign, e) = if j == m - 1 { (sgn(c2(m)), n - m) } else { (sgn(c2(j + 1) + c2(m - j - 1)), 2 * n - m - j - 1) };
            let rhs = prod(&[Frac::from_int(2, sign), pw(&b, e)?, rhs_base[(n - m) as usize].clone()]);
            Ok(Some(&lhs[n as usize] - &rhs))
        })
        .collect()
}

fn d_lemma22(idx: &Indices) -> Result<(), String> {
    let (m, j) = (idx.get("m").map_err(|e| e.to_string())?, idx.get("j").map_err(|e| e.to_string())?);
    need(m >= 2 && 0 <= j && j <= m - 1, "m >= 2 and 0 <= j <= m - 1")
}

/// Parameters `a, b, t, c` with `alpha = t`, `beta = c`.
fn q_general(m: i64, order: usize, point: &Point) -> Result<(Series, Series, Frac, Frac, Frac), CatalogError> {
    let v = Vars { np: 4 };
    let f = solve_at(&f_m_over(m as u32, 4), order, point)?;
    let (alpha, beta, b) = (at(&v.t(), point)?, at(&v.var(3), point)?, at(&v.b(), point)?);
    let q = q_series(m as usize, &alpha, &beta, &f)?;
    Ok((f, q, alpha, beta, b))
}

fn diff_lemma23(idx: &Indices, n_max: usize, point: &Point) -> Result<Vec<Option<Frac>>, CatalogError> {
    let (m, i) = (idx.get("m")?, idx.get("i")?);
    let (f, q, _, beta, b) = q_general(m, 2 * n_max + 1, point)?;
    let lhs = dets(&xj(&q, (i - 1) as usize)?, n_max, 0)?;
    let rhs = dets(&xj(&f, (i - 1) as usize)?, n_max, 0)?;
    (0..=n_max as i64)
        .map(|n| {
            if n < m {
                return Ok(None);
            }
            let r = prod(&[
                Frac::from_int(4, sgn(c2(i) + c2(m - i))),
                pw(&beta, n - i)?,
                pw(&b, n - m)?,
                rhs[(n - m) as usize].clone(),
            ]);
            Ok(Some(&lhs[n as usize] - &r))
        })
        .collect()
}

fn d_lemma23(idx: &Indices) -> Result<(), String> {
    let (m, i) = (idx.get("m").map_err(|e| e.to_string())?, idx.get("i").map_err(|e| e.to_string())?);
    need(m >= 2 && 1 <= i && i <= m - 1, "m >= 2 and 1 <= i <= m - 1")
}

fn diff_lemma24(idx: &Indices, n_max: usize, point: &Point) -> Result<Vec<Option<Frac>>, CatalogError> {
    let m = idx.get("m")?;
    let (f, q, alpha, beta, b) = q_general(m, 2 * n_max + 2, point)?;
    let lhs = dets(&q, n_max, 1)?;
    let n_min = m.max(1);
    let (first, second): (Vec<Frac>, Vec<Frac>) = match m {
        1 => (dets(&f, n_max, 2)?, dets(&f, n_max, 0)?),
        2 => (dets(&f, n_max, 1)?, dets(&f, n_max, 1)?),
        _ => (dets(&xj(&f, (m - 3) as usize)?, n_max, 0)?, dets(&f, n_max, 1)?),
    };
    let np = 4;
    (0..=n_max as i64)
        .map(|n| {
            if n < n_min {
                return Ok(None);
            }
            let head = prod(&[alpha.clone(), pw(&beta, n - 1)?, first[(n - 1) as usize].clone()]);
            let tail = match m {
                1 => &pw(&beta, n)? * &second[n as usize],
                2 => -&prod(&[pw(&beta, n)?, pw(&b, n - 2)?, second[(n - 2) as usize].clone()]),
                _ => prod(&[
                    Frac::from_int(np, sgn(c2(m))),
                    pw(&beta, n)?,
                    pw(&b, n - m)?,
                    second[(n - m) as usize].clone(),
                ]),
            };
            Ok(Some(&lhs[n as usize] - &(&head + &tail)))
        })
        .collect()
}

fn diff_lemma25(_: &Indices, n_max: usize, point: &Point) -> Result<Vec<Option<Frac>>, CatalogError> {
    let (f, q, _, beta, b) = q_general(1, 2 * n_max + 2, point)?;
    let a = at(&Vars { np: 4 }.a(), point)?;
    let lhs = dets(&q, n_max, 0)?;
    let h2 = dets(&f, n_max, 2)?;
    let h0 = dets(&f, n_max, 0)?;
    (0..=n_max as i64)
        .map(|n| {
            if n < 2 {
                return Ok(None);
            }
            let x = prod(&[a.clone(), pw(&beta, n - 1)?, pw(&b, n - 2)?, h2[(n - 2) as usize].clone()]);
            let y = &pw(&(&beta * &b), n - 1)? * &h0[(n - 1) as usize];
            Ok(Some(&lhs[n as usize] - &(&x + &y)))
        })
        .collect()
}

// --- Table ------------------------------------------------------------------

const AB: &[&str] = &["a", "b"];
const ABT: &[&str] = &["a", "b", "t"];
const ABTC: &[&str] = &["a", "b", "t", "c"];
const T: &[&str] = &["t"];

fn sym(families: Vec<Indices>, n_max: usize) -> Grid {
    Grid { families, n_max, mode: Mode::Symbolic }
}

fn pts(families: Vec<Indices>, n_max: usize) -> Grid {
    Grid { families, n_max, mode: Mode::Points(3) }
}

fn mql_grid(list: &[(i64, i64, i64)]) -> Vec<Indices> {
    list.iter().map(|&(m, q, l)| Indices::new(&[("m", m), ("q", q), ("l", l)])).collect()
}

macro_rules! closed {
    ($id:expr, $stmt:expr, $params:expr, $family:expr, $dom_text:expr, $classes:expr, $dom:expr, $value:expr, $oracle:expr, $grid:expr) => {
        CatalogEntry {
            id: $id,
            statement: $stmt,
            params: $params,
            family: $family,
            domain_text: $dom_text,
            classes: $classes,
            domain: $dom,
            kind: Kind::Closed { value: $value, oracle: $oracle },
            erratum: None,
            grid: $grid,
        }
    };
}

fn with_erratum(mut e: CatalogEntry, note: &'static str, stated: ValueFn) -> CatalogEntry {
    e.erratum = Some(Erratum { note, stated });
    e
}

fn identity(
    id: &'static str,
    stmt: &'static str,
    family: &'static [&'static str],
    dom_text: &'static str,
    dom: DomainFn,
    diff: DiffFn,
    grid: fn() -> Grid,
) -> CatalogEntry {
    CatalogEntry {
        id,
        statement: stmt,
        params: if id == "lemma22.rec" { AB } else { ABTC },
        family,
        domain_text: dom_text,
        classes: "",
        domain: dom,
        kind: Kind::Identity { diff },
        erratum: None,
        grid,
    }
}

fn m_fams(range: std::ops::RangeInclusive<i64>) -> Vec<Indices> {
    range.map(|m| Indices::new(&[("m", m)])).collect()
}

/// Every entry, in a stable order.
pub fn catalog() -> Vec<CatalogEntry> {
    let m2 = "m >= 2";
    vec![
        closed!("f1.H", "H_n(f_1) = b^C(n,2) (a+b)^C(n,2)", AB, &[], "n >= 0", "", any, v_f1_h, o_f1_h0, || sym(none(), 12)),
        closed!("F1.H", "H_n(F_1) = b^C(n,2) (a+b)^C(n,2)", ABT, &[], "n >= 0", "", any, v_f1_h, o_bf1_h0, || sym(none(), 10)),
        closed!("G1.H", "H_n(G_1) = 2^(n-1) b^C(n,2) (a+b)^C(n,2)", AB, &[], "n >= 0", "", any, v_g1_h, o_g1_h0, || sym(none(), 12)),
        closed!("fm.H", "H_mn(f_m) = (-1)^(C(m-1,2) n) b^(n(mn-1)), H_mn+1(f_m) = (-1)^(C(m-1,2) n) b^(n(mn+1))", AB, &["m"], m2, "mn, mn+1, else 0", m_at_least::<2>, v_fm_h, o_f_h0, || sym(m_fams(2..=5), 12)),
        closed!("Fm.H", "H_n(F_m) = H_n(f_m)", ABT, &["m"], m2, "mn, mn+1, else 0", m_at_least::<2>, v_fm_h, o_bf_h0, || pts(m_fams(2..=5), 14)),
        closed!("Gm.H", "H_mn(G_m) = (-1)^(C(m-1,2) n) 2^(mn-1) b^(n(mn-1)), H_mn+1(G_m) = (-1)^(C(m-1,2) n) 2^(mn) b^(n(mn+1))", AB, &["m"], m2, "mn, mn+1, else 0", m_at_least::<2>, v_gm_h, o_g_h0, || sym(m_fams(2..=5), 12)),
        closed!("f1.H1", "H^1_n(f_1) = b^C(n,2) (a+b)^C(n+1,2)", AB, &[], "n >= 0", "", any, v_f1_h1, o_f1_h1, || sym(none(), 12)),
        closed!("F1.H1", "H^1_n(F_1) = b^C(n,2) (a+b)^C(n,2) ((a+b)^n + t((a+b)^n - b^n)/a)", ABT, &[], "n >= 0", "", any, v_bf1_h1, o_bf1_h1, || pts(none(), 14)),
        closed!("G1.H1", "H^1_n(G_1) = 2^(n-1) b^C(n,2) (a+b)^C(n,2) ((a+b)^n + b^n)", AB, &[], "n >= 0", "", any, v_g1_h1, o_g1_h1, || sym(none(), 12)),
        closed!("f2.H1", "H^1_n(f_2) = b^C(n,2) Fib_(n+1)(a,-b)", AB, &[], "n >= 0", "", any, v_f2_h1, o_f2_h1, || sym(none(), 12)),
        closed!("F2.H1", "H^1_n(F_2) = b^C(n,2) (Fib_(n+1)(a,-b) + t Fib_n(a,-b))", ABT, &[], "n >= 0", "", any, v_bf2_h1, o_bf2_h1, || pts(none(), 14)),
        with_erratum(
            closed!("G2.H1", "H^1_n(G_2) = 2^(n-1) b^C(n,2) (a Fib_n(a,-b) - 2 b Fib_(n-1)(a,-b))", AB, &[], "n >= 0", "", any, v_g2_h1, o_g2_h1, || sym(none(), 12)),
            "stated as 2^(n-1) b^C(n,2) (a Fib_n(a,-b) - 2^(n-1) b Fib_(n-1)(a,-b)); the inner 2^(n-1) must be 2",
            v_g2_h1_stated,
        ),
        closed!("fm.H1", "H^1_mn(f_m) = (-1)^(C(m,2) n) b^(mn^2), H^1_mn+1 = (-1)^(C(m,2) n) (n+1) a b^(mn^2+2n), H^1_mn-1 = -(-1)^(C(m,2) n) n a b^(mn^2-2n)", AB, &["m"], "m >= 3", "mn, mn+1, mn-1, else 0", m_at_least::<3>, v_fm_h1, o_f_h1, || sym(m_fams(3..=5), 12)),
        closed!("Fm.H1", "H^1_mn(F_m) = (-1)^(C(m,2) n) b^(mn^2), H^1_mn+1 = (-1)^(C(m,2) n) (t+(n+1)a) b^(mn^2+2n), H^1_mn-1 = -(-1)^(C(m,2) n) (t+na) b^(mn^2-2n)", ABT, &["m"], "m >= 3", "mn, mn+1, mn-1, else 0", m_at_least::<3>, v_bfm_h1, o_bf_h1, || pts(m_fams(3..=5), 14)),
        with_erratum(
            closed!("Gm.H1", "H^1_mn(G_m) = (-1)^(C(m,2) n) 2^(mn) b^(mn^2), H^1_mn+1 = (-1)^(C(m,2) n) (2n+1) 2^(mn) a b^(mn^2+2n), H^1_mn-1 = -(-1)^(C(m,2) n) (2n-1) 2^(mn-2) a b^(mn^2-2n)", AB, &["m"], "m >= 3", "mn, mn+1, mn-1, else 0", m_at_least::<3>, v_gm_h1, o_g_h1, || sym(m_fams(3..=5), 12)),
            "the class mn+1 is stated without the factor 2^(mn)",
            v_gm_h1_stated,
        ),
        closed!("f1.H2", "H^(2)_n(f_1) = b^C(n,2) (a+b)^C(n+1,2) ((a+b)^(n+1) - b^(n+1))/a", AB, &[], "n >= 0", "", any, v_f1_h2, o_f1_h2, || sym(none(), 12)),
        closed!("F1.H2", "H^(2)_n(F_1) = b^C(n,2) (a+b)^C(n,2) sum_j (a+b)^(n-j) b^(n-j) ((a+b)^j + t((a+b)^j - b^j)/a)^2", ABT, &[], "n >= 0", "", any, v_bf1_h2, o_bf1_h2, || pts(none(), 14)),
        closed!("G1.H2", "H^(2)_n(G_1) = 2^n b^C(n+1,2) (a+b)^C(n+1,2) (1 + sum_(j=1..n) ((a+b)^j + b^j)^2 / (2 (a+b)^j b^j))", AB, &[], "n >= 0", "", any, v_g1_h2, o_g1_h2, || sym(none(), 12)),
        closed!("f2.H2", "H^(2)_n(f_2) = b^C(n,2) sum_(j=0..n) b^(n-j) Fib_(j+1)(a,-b)^2", AB, &[], "n >= 0", "", any, v_f2_h2, o_f2_h2, || sym(none(), 12)),
        closed!("F2.H2", "H^(2)_n(F_2) = b^C(n,2) sum_(j=0..n) b^(n-j) (Fib_(j+1)(a,-b) + t Fib_j(a,-b))^2", ABT, &[], "n >= 0", "", any, v_bf2_h2, o_bf2_h2, || pts(none(), 14)),
        with_erratum(
            closed!("G2.H2", "H^(2)_n(G_2) = 2^n b^C(n+1,2) (1 + sum_(j=1..n) (a Fib_j(a,-b) - 2 b Fib_(j-1)(a,-b))^2 / (2 b^j))", AB, &[], "n >= 0", "", any, v_g2_h2, o_g2_h2, || sym(none(), 12)),
            "stated with (Fib_j(a,-b) - 2^(j-1) b Fib_(j-1)(a,-b)); the term needs the factor a and the constant 2, as in H^1_n(G_2)",
            v_g2_h2_stated,
        ),
        closed!("f3.H2", "H^(2)_3n(f_3) = (-1)^(n+1) b^(3n^2+n-1) (a^3 S(n) - (n+1) b), H^(2)_3n+1 = (-1)^n (n+1)^2 a^2 b^(3n^2+3n), H^(2)_3n+2 = (-1)^n b^(3n^2+5n+1) (a^3 S(n+1) - (n+1) b), S(n) = sum i^2", AB, &[], "n >= 0", "3n, 3n+1, 3n+2", any, v_f3_h2, o_f3_h2, || sym(none(), 12)),
        with_erratum(
            closed!("F3.H2", "H^(2)_3n(F_3) = (-1)^(n+1) b^(3n^2+n-1) (a^3 S(n) - (n+1) b + n a t (t+(n+1)a)), H^(2)_3n+1 = (-1)^n (t+(n+1)a)^2 b^(3n^2+3n), H^(2)_3n+2 = (-1)^n b^(3n^2+5n+1) (a^3 S(n+1) - (n+1) b + (n+1) a t (t+(n+2)a))", ABT, &[], "n >= 0", "3n, 3n+1, 3n+2", any, v_bf3_h2, o_bf3_h2, || pts(none(), 14)),
            "the 3n class is stated with sign (-1)^n; it is (-1)^(n+1), which also makes t = 0 agree with f_3",
            v_bf3_h2_stated,
        ),
        with_erratum(closed!("G3.H2", "H^(2)_3n(G_3) = (-1)^n ((2n+1) 2^(3n) b^(3n^2+n) - C(2n+1,3) 2^(3n-1) a^3 b^(3n^2+n-1)), H^(2)_3n+1 = (-1)^n (2n+1)^2 2^(3n) a^2 b^(3n^2+3n), H^(2)_3n+2 = (-1)^(n+1) ((2n+1) 2^(3n+2) b^(3n^2+5n+2) - C(2n+3,3) 2^(3n+1) a^3 b^(3n^2+5n+1))", AB, &[], "n >= 0", "3n, 3n+1, 3n+2", any, v_g3_h2, o_g3_h2, || sym(none(), 12)),
            "the class 3n is stated with (2n+1)^2 2^(3n) b^(3n^2+n); the coefficient is 2n+1",
            v_g3_h2_stated,
        ),
        closed!("fm.minus1.H", "H_mn(f_m - 1) = -(-1)^(C(m-1,2) n) (n-1) b^(mn^2-n), H_mn-1 = (-1)^(C(m-1,2) n) n^2 a^2 b^(mn^2-3n), H_mn+1 = -(-1)^(C(m-1,2) n) n b^(mn^2+n), H_mn+2 = -(-1)^(C(m-1,2) n) (n+1)^2 a^2 b^(mn^2+3n)", AB, &["m"], "m >= 4", "mn, mn-1, mn+1, mn+2, else 0", m_at_least::<4>, v_fm_minus1_h, o_fm_minus1, || sym(m_fams(4..=5), 12)),
        closed!("fm.H2", "H^(2)_mn(f_m) = (-1)^(C(m-1,2) n) (n+1) b^(mn^2+n), H^(2)_mn+1 = (-1)^(C(m-1,2) n) (n+1)^2 a^2 b^(mn^2+3n), H^(2)_mn-1 = (-1)^(C(m-1,2) n) n b^(mn^2-n), H^(2)_mn-2 = -(-1)^(C(m-1,2) n) n^2 a^2 b^(mn^2-3n)", AB, &["m"], "m >= 4", "mn, mn+1, mn-1, mn-2, else 0", m_at_least::<4>, v_fm_h2, o_f_h2, || sym(m_fams(4..=5), 12)),
        closed!("Fm.H2", "as f_m with (n+1)^2 a^2 -> (t+(n+1)a)^2 and n^2 a^2 -> (t+na)^2", ABT, &["m"], "m >= 4", "mn, mn+1, mn-1, mn-2, else 0", m_at_least::<4>, v_bfm_h2, o_bf_h2, || pts(m_fams(4..=5), 14)),
        closed!("Gm.H2", "H^(2)_mn(G_m) = (-1)^(C(m-1,2) n) (2n+1) 2^(mn) b^(mn^2+n), H^(2)_mn+1 = ... (2n+1)^2 2^(mn) a^2 b^(mn^2+3n), H^(2)_mn-1 = ... (2n-1) 2^(mn-1) b^(mn^2-n), H^(2)_mn-2 = -... (2n-1)^2 2^(mn-3) a^2 b^(mn^2-3n)", AB, &["m"], "m >= 4", "mn, mn+1, mn-1, mn-2, else 0", m_at_least::<4>, v_gm_h2, o_g_h2, || sym(m_fams(4..=5), 12)),
        closed!("catalan.Hk", "H^(i)_n(C) = prod_(j=1..i-1) prod_(k=1..j) (2n+j+k)/(j+k)", &[], &["i"], "i >= 0", "", |idx| need(idx.get("i").map_err(|e| e.to_string())? >= 0, "i >= 0"), v_catalan_hk, o_catalan_hk, || sym(fams("i", &[0, 1, 2, 3, 4]), 10)),
        closed!("prop1.seq", "(H_n)_(n>=1) = (1,1,0,0,-1,-1,-1,-1,-1,0,0,1,1,1) repeated with period 14", &[], &[], "n >= 0", "n mod 14", any, v_prop_seq, o_prop_seq, || sym(none(), 28)),
        closed!("s5.ex1.H", "H_3n = (1+t)^(3n^2), H_3n+1 = (1+t)^(3n^2+2n), H_3n+2 = (1+t)^(3n^2+4n+1)", T, &[], "n >= 0", "3n, 3n+1, 3n+2", any, v_s5_ex1, o_s5_ex1, || sym(none(), 15)),
        closed!("s5.ex2.H", "H_7n = (-1)^n (1+t)^(14n^2), H_7n+1 = (-1)^n (1+t)^(14n^2+4n), H_7n+2 = (-1)^n (1+t)^(14n^2+8n+1), H_7n+3 = H_7n+4 = 0, H_7n+5 = (-1)^(n+1) (1+t)^(14n^2+20n+7), H_7n+6 = (-1)^(n+1) (1+t)^(14n^2+24n+10)", T, &[], "n >= 0", "n mod 7", any, v_s5_ex2, o_s5_ex2, || sym(none(), 15)),
        closed!("s6.thm1.H", "H_(n+1)(m+l) = (-1)^((n+1)(C(m+1,2)+C(l-1,2))) b^((n+1)(nl+nm+l-1)), H_n(m+l)+m+1 = (-1)^((n+1)C(m+1,2)+nC(l-1,2)) b^(n^2(l+m)+n(m+1))", AB, &["m", "q", "l"], "m + 1 >= q > 0, l >= q + 1", "(n+1)(m+l), n(m+l)+m+1, else 0", d_mql1, v_mql1, o_mql, || pts(mql_grid(&[(1, 1, 2), (1, 2, 3), (2, 2, 4), (0, 1, 3), (3, 2, 3)]), 14)),
        closed!("s6.thm2.H", "H_(l+m)n = (-1)^((C(m+1,2)+C(l-1,2))n) (a+b)^((l+m)(n-1)n/2+(l-1)n) b^((l+m)(n-1)n/2), H_(l+m)n+m+1 = (-1)^(C(m+1,2)(n+1)+C(l-1,2)n) (a+b)^((l+m)(n+1)n/2) b^((l+m)(n+1)n/2-(l-1)n)", AB, &["m", "q", "l"], "m + l = q, l >= 2", "(l+m)n, (l+m)n+m+1, else 0", d_mql2, v_mql2, o_mql, || pts(mql_grid(&[(0, 2, 2), (1, 3, 2), (1, 4, 3), (2, 5, 3)]), 14)),
        closed!("s6.thm3.H", "four classes n(l+m)+m+i, (n+1)(l+m)-i+1, (n+1)(l+m), n(l+m)+m+1 with i = q - m", AB, &["m", "q", "l"], "i = q - m >= 2, l >= q + 2i - 1", "n(l+m)+m+i, (n+1)(l+m)-i+1, (n+1)(l+m), n(l+m)+m+1, else 0", d_mql3, v_mql3, o_mql, || pts(mql_grid(&[(1, 3, 8), (0, 2, 5), (0, 3, 8), (2, 4, 7)]), 14)),
        with_erratum(
            closed!("s6.thm4.H", "H_m+1 = (-1)^C(m+1,2); classes (n+1)(m+l), (n+1)(m+l)+i+1, (n+1)(m+l)+m-i, n(m+l)+m+1 (n >= 1) with i = q - l", AB, &["m", "q", "l"], "l = q - i >= 2, m >= q + 2i + 1", "m+1, (n+1)(m+l), (n+1)(m+l)+i+1, (n+1)(m+l)+m-i, n(m+l)+m+1, else 0", d_mql4, v_mql4, o_mql, || pts(mql_grid(&[(5, 2, 2), (6, 3, 2), (8, 3, 2), (7, 2, 2)]), 14)),
            "the class n(m+l)+m+1 is stated as (-1)^((n+1)(...)+C(m+1,2)) b^((n+1)^2(m+l)+(n+1)(m+1)); with n shifted down by one it is the recursion's value and agrees with H_m+1 at n = 0",
            v_mql4_stated,
        ),
        identity("lemma22.rec", "H_n(x^j f_m) = (-1)^(C(j+1,2)+C(m-j-1,2)) b^(2n-m-j-1) H_(n-m)(x^j f_m) for j <= m-2; H_n(x^(m-1) f_m) = (-1)^C(m,2) b^(n-m) H^1_(n-m)(f_m)", &["m", "j"], "m >= 2, 0 <= j <= m - 1, n >= m", d_lemma22, diff_lemma22, || {
            let fams = (2..=5).flat_map(|m| (0..m).map(move |j| Indices::new(&[("m", m), ("j", j)]))).collect();
            sym(fams, 12)
        }),
        identity("lemma23.rec", "H_n(x^(i-1) q_m) = (-1)^(C(i,2)+C(m-i,2)) beta^(n-i) b^(n-m) H_(n-m)(x^(i-1) f_m), alpha = t, beta = c", &["m", "i"], "m >= 2, 1 <= i <= m - 1, n >= m", d_lemma23, diff_lemma23, || {
            let fams = (2..=5).flat_map(|m| (1..m).map(move |i| Indices::new(&[("m", m), ("i", i)]))).collect();
            pts(fams, 14)
        }),
        identity("lemma24.rec", "H^1_n(q_m) = alpha beta^(n-1) X_(n-1) + Y_n with X = H^(2)(f_1), H^1(f_2), H(x^(m-3) f_m) and Y = beta^n H_n(f_1), -beta^n b^(n-2) H^1_(n-2)(f_2), (-1)^C(m,2) beta^n b^(n-m) H^1_(n-m)(f_m) for m = 1, 2, >= 3", &["m"], "m >= 1, n >= max(m, 1)", |idx| need(idx.get("m").map_err(|e| e.to_string())? >= 1, "m >= 1"), diff_lemma24, || pts(m_fams(1..=5), 14)),
        identity("lemma25.rec", "H_n(q_1) = a beta^(n-1) b^(n-2) H^(2)_(n-2)(f_1) + (beta b)^(n-1) H_(n-1)(f_1)", &[], "n >= 2", any, diff_lemma25, || pts(none(), 14)),
    ]
}

pub fn entry(id: &str) -> Result<CatalogEntry, CatalogError> {
    catalog().into_iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownId(id.into()))
}

/// Closed-form value of `id` at `indices` (`n` is the Hankel order).
pub fn eval_catalog(id: &str, indices: &Indices, point: &Point) -> Result<Frac, CatalogError> {
    entry(id)?.eval(indices, point)
}

// ---------------------------------------------------------------------------
// Verification

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointResult {
    pub family: String,
    pub n: usize,
    /// Parameter values, empty when symbolic.
    pub point: Vec<String>,
    pub pass: bool,
    pub expected: String,
    pub oracle: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
}

/// Verdict on a stated form that the catalog corrects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatedVerdict {
    pub pass: bool,
    pub note: String,
    /// First grid point where the stated form disagrees with the oracle.
    pub first_failure: Option<PointResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub statement: String,
    pub mode: Mode,
    pub seed: u64,
    pub pass: bool,
    pub checked: usize,
    pub results: Vec<PointResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stated: Option<StatedVerdict>,
}

pub const DEFAULT_SEED: u64 = 0x5eed_1234;

/// Seeded positive rational points, so factors like `a`, `a + b` never vanish.
pub fn random_points(nparams: usize, count: usize, seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..nparams).map(|_| Rat::frac(rng.gen_range(1..=12), rng.gen_range(1..=5))).collect())
        .collect()
}

fn result(family: &Indices, n: usize, point: &Point, expected: &Frac, oracle: &Frac, params: &[&str]) -> PointResult {
    let pass = expected == oracle;
    PointResult {
        family: family.describe(),
        n,
        point: point.as_ref().map(|p| p.iter().map(Rat::to_string).collect()).unwrap_or_default(),
        pass,
        expected: expected.to_string_with(params),
        oracle: oracle.to_string_with(params),
        discrepancy: (!pass).then(|| (expected - oracle).to_string_with(params)),
    }
}

/// Compare an entry against the oracle over its default grid.
pub fn verify_entry(e: &CatalogEntry, seed: u64) -> Result<VerificationReport, CatalogError> {
    verify_entry_on(e, &e.default_grid(), seed)
}

pub fn verify_entry_on(e: &CatalogEntry, grid: &Grid, seed: u64) -> Result<VerificationReport, CatalogError> {
    for fam in &grid.families {
        e.check_domain(&fam.with("n", grid.n_max as i64))?;
    }
    let points: Vec<Point> = match grid.mode {
        Mode::Symbolic => vec![None],
        Mode::Points(k) => random_points(e.params.len(), k, seed).into_iter().map(Some).collect(),
    };
    let jobs: Vec<(&Indices, &Point)> = grid.families.iter().flat_map(|f| points.iter().map(move |p| (f, p))).collect();
    let per_job: Vec<Result<(Vec<PointResult>, Vec<PointResult>), CatalogError>> =
        jobs.par_iter().map(|(fam, point)| verify_job(e, fam, point, grid.n_max)).collect();
    let mut results = Vec::new();
    let mut stated_results = Vec::new();
    for r in per_job {
        let (a, b) = r?;
        results.extend(a);
        stated_results.extend(b);
    }
    let stated = e.erratum.map(|er| StatedVerdict {
        pass: stated_results.iter().all(|r| r.pass),
        note: er.note.to_string(),
        first_failure: stated_results.iter().find(|r| !r.pass).cloned(),
    });
    Ok(VerificationReport {
        id: e.id.to_string(),
        statement: e.statement.to_string(),
        mode: grid.mode,
        seed,
        pass: results.iter().all(|r| r.pass),
        checked: results.len(),
        results,
        stated,
    })
}

type JobResult = (Vec<PointResult>, Vec<PointResult>);

fn verify_job(e: &CatalogEntry, fam: &Indices, point: &Point, n_max: usize) -> Result<JobResult, CatalogError> {
    let np = e.params.len();
    let zero = Frac::zero(np);
    let mut out = Vec::new();
    let mut stated = Vec::new();
    match e.kind {
        Kind::Closed { oracle, .. } => {
            let h = oracle(fam, n_max, point)?;
            for (n, hn) in h.iter().enumerate() {
                let idx = fam.with("n", n as i64);
                if e.check_domain(&idx).is_err() {
                    continue;
                }
                out.push(result(fam, n, point, &e.eval(&idx, point)?, hn, e.params));
                if let Some(s) = e.eval_stated(&idx, point)? {
                    stated.push(result(fam, n, point, &s, hn, e.params));
                }
            }
        }
        Kind::Identity { diff } => {
            for (n, d) in diff(fam, n_max, point)?.into_iter().enumerate() {
                if let Some(d) = d {
                    out.push(result(fam, n, point, &zero, &d, e.params));
                }
            }
        }
    }
    Ok((out, stated))
}

/// One row per grid point.
pub fn reports_to_csv(reports: &[VerificationReport]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "family", "n", "point", "seed", "pass", "expected", "oracle"])?;
    for r in reports {
        for p in &r.results {
            w.write_record([
                r.id.as_str(),
                &p.family,
                &p.n.to_string(),
                &p.point.join(";"),
                &r.seed.to_string(),
                if p.pass { "true" } else { "false" },
                &p.expected,
                &p.oracle,
            ])?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub statement: String,
    pub params: Vec<String>,
    pub indices: Vec<String>,
    pub domain: String,
    pub classes: String,
    pub identity: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub erratum: Option<String>,
}

/// Contents of `catalog.json`.
pub fn manifest() -> Vec<ManifestEntry> {
    catalog()
        .iter()
        .map(|e| ManifestEntry {
            id: e.id.into(),
            statement: e.statement.into(),
            params: e.params.iter().map(|s| s.to_string()).collect(),
            indices: e.family.iter().chain(std::iter::once(&"n")).map(|s| s.to_string()).collect(),
            domain: e.domain_text.into(),
            classes: e.classes.into(),
            identity: e.is_identity(),
            erratum: e.erratum.map(|x| x.note.to_string()),
        })
        .collect()
}
