//! Quadratic functional equations `F = x^d / (u + x^k v F)` and the τ transformation.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{parse_mpoly, AlgebraError, Frac, MPoly, RatFun, Series};
use crate::serial::{frac_to_json, ratfun_from_json, ratfun_to_json, FracJson, RatFunJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FeError {
    #[error("u(0)=0")]
    ZeroU0,
    #[error("v(0)=0")]
    ZeroV0,
    #[error("k must be positive")]
    ZeroK,
    #[error("equation is not quadratic: the F^2 coefficient vanishes")]
    NotQuadratic,
    #[error("τ leaves representable class: {0}")]
    LeavesClass(String),
    #[error("index {n} is below the total shift {shift}")]
    IndexBelowShift { n: i64, shift: i64 },
    #[error("unknown form {0:?}")]
    UnknownForm(String),
    #[error("missing coefficient {0:?}")]
    MissingCoeff(String),
    #[error("τ failed at step {step}: {source}")]
    Step { step: usize, source: Box<FeError> },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `F = x^d / (u + x^k v F)` with `u(0) != 0`, `v(0) != 0`, `k >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadFE {
    d: u32,
    k: u32,
    u: RatFun,
    v: RatFun,
    params: Vec<String>,
}

impl QuadFE {
    pub fn new(d: u32, k: u32, u: RatFun, v: RatFun, params: Vec<String>) -> Result<QuadFE, FeError> {
        if k == 0 {
            return Err(FeError::ZeroK);
        }
        let np = params.len();
        if u.nparams() != np || v.nparams() != np {
            return Err(AlgebraError::ArityMismatch { left: np, right: u.nparams().max(v.nparams()) }.into());
        }
        if u.at_zero().map_or(true, |c| c.is_zero()) {
            return Err(FeError::ZeroU0);
        }
        if v.at_zero().map_or(true, |c| c.is_zero()) {
            return Err(FeError::ZeroV0);
        }
        Ok(QuadFE { d, k, u, v, params })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn u(&self) -> &RatFun {
        &self.u
    }

    pub fn v(&self) -> &RatFun {
        &self.v
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn param_names(&self) -> Vec<&str> {
        self.params.iter().map(String::as_str).collect()
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    /// Substitute rational values for all parameters.
    pub fn eval_params(&self, point: &[crate::algebra::Rat]) -> Result<QuadFE, FeError> {
        QuadFE::new(self.d, self.k, self.u.eval_params(point)?, self.v.eval_params(point)?, self.params.clone())
    }

    pub fn to_json(&self) -> QuadFEJson {
        let names = self.param_names();
        QuadFEJson {
            d: self.d,
            k: self.k,
            u: ratfun_to_json(&self.u, &names),
            v: ratfun_to_json(&self.v, &names),
            params: self.params.clone(),
        }
    }

    pub fn from_json(j: &QuadFEJson) -> Result<QuadFE, FeError> {
        let names: Vec<&str> = j.params.iter().map(String::as_str).collect();
        let u = ratfun_from_json(&j.u, &names)?;
        let v = ratfun_from_json(&j.v, &names)?;
        QuadFE::new(j.d, j.k, u, v, j.params.clone())
    }
}

impl fmt::Display for QuadFE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.param_names();
        write!(
            f,
            "F = x^{}/(({}) + x^{}*({})*F)",
            self.d,
            self.u.to_string_with(&names),
            self.k,
            self.v.to_string_with(&names)
        )
    }
}

impl fmt::Debug for QuadFE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadFEJson {
    pub d: u32,
    pub k: u32,
    pub u: RatFunJson,
    pub v: RatFunJson,
    #[serde(default)]
    pub params: Vec<String>,
}

/// Source shapes accepted by [`fe_from_quadratic`].
#[derive(Debug, Clone)]
pub enum QuadraticForm {
    /// `f = 1 + a x f + b x^m f^2`.
    CatalanLike { m: u32, a: MPoly, b: MPoly },
    /// `F = 1 + P1 F + P2 F^2`.
    Reciprocal { p1: RatFun, p2: RatFun },
    /// `F = x^m / (1 - a x^q - b x^l F)`.
    Mql { m: u32, q: u32, l: u32, a: MPoly, b: MPoly },
}

impl QuadraticForm {
    /// Build from a form name and named coefficient expressions
    /// (`a`, `b` for `catalan-like` and `mql`; `p1`, `p2` for `reciprocal`).
    pub fn from_named(
        form: &str,
        degrees: &BTreeMap<String, u32>,
        coeffs: &BTreeMap<String, String>,
        params: &[&str],
    ) -> Result<QuadraticForm, FeError> {
        let deg = |k: &str| degrees.get(k).copied().ok_or_else(|| FeError::MissingCoeff(k.into()));
        let coeff = |k: &str| coeffs.get(k).ok_or_else(|| FeError::MissingCoeff(k.into()));
        let poly = |k: &str| -> Result<MPoly, FeError> { Ok(parse_mpoly(coeff(k)?, params)?) };
        let ratfun = |k: &str| -> Result<RatFun, FeError> {
            Ok(crate::algebra::parse_ratfun(coeff(k)?, params)?)
        };
        match form {
            "catalan-like" => Ok(QuadraticForm::CatalanLike { m: deg("m")?, a: poly("a")?, b: poly("b")? }),
            "reciprocal" => Ok(QuadraticForm::Reciprocal { p1: ratfun("p1")?, p2: ratfun("p2")? }),
            "mql" => Ok(QuadraticForm::Mql {
                m: deg("m")?,
                q: deg("q")?,
                l: deg("l")?,
                a: poly("a")?,
                b: poly("b")?,
            }),
            other => Err(FeError::UnknownForm(other.into())),
        }
    }
}

fn lift(c: &MPoly) -> RatFun {
    RatFun::constant(&Frac::from_poly(c.clone()))
}

pub fn fe_from_quadratic(form: &QuadraticForm, params: &[&str]) -> Result<QuadFE, FeError> {
    let np = params.len();
    let names: Vec<String> = params.iter().map(|s| s.to_string()).collect();
    match form {
        QuadraticForm::CatalanLike { m, a, b } => {
            let p1 = &lift(a) * &RatFun::x_pow(np, 1);
            let p2 = &lift(b) * &RatFun::x_pow(np, *m);
            fe_from_quadratic(&QuadraticForm::Reciprocal { p1, p2 }, params)
        }
        QuadraticForm::Reciprocal { p1, p2 } => {
            if p2.is_zero() {
                return Err(FeError::NotQuadratic);
            }
            let k = p2.valuation().expect("nonzero");
            if k < 1 {
                return Err(FeError::ZeroK);
            }
            let u = &RatFun::one(np) - p1;
            let v = -&p2.shift(-k);
            QuadFE::new(0, k as u32, u, v, names)
        }
        QuadraticForm::Mql { m, q, l, a, b } => {
            if b.is_zero() {
                return Err(FeError::NotQuadratic);
            }
            let u = &RatFun::one(np) - &(&lift(a) * &RatFun::x_pow(np, *q));
            QuadFE::new(*m, *l, u, -&lift(b), names)
        }
    }
}

/// Power-series solution of the equation to order `n`.
///
/// Coefficients come from `F * (u + x^k v F) = x^d` read one degree at a
/// time; coefficient `n` of the bracket only involves `F` up to `n - k`.
pub fn solve_series(fe: &QuadFE, n: usize) -> Result<Series, FeError> {
    if fe.nparams() > 0 {
        return solve_series_cleared(fe, n);
    }
    solve_series_direct(fe, n)
}

fn solve_series_direct(fe: &QuadFE, n: usize) -> Result<Series, FeError> {
    let np = fe.nparams();
    let us = fe.u.expand(n)?;
    let vs = fe.v.expand(n)?;
    let (u, v) = (us.coeffs(), vs.coeffs());
    let inv_u0 = u[0].recip()?;
    let k = fe.k as usize;
    let d = fe.d as usize;
    let mut f: Vec<Frac> = Vec::with_capacity(n + 1);
    // w[m] = [x^m] (u + x^k v F)
    let mut w: Vec<Frac> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut wm = u[m].clone();
        if m >= k {
            for j in 0..=m - k {
                let (vj, fj) = (&v[j], &f[m - k - j]);
                if !vj.is_zero() && !fj.is_zero() {
                    wm = &wm + &(vj * fj);
                }
            }
        }
        w.push(wm);
        let mut acc = if m == d { Frac::one(np) } else { Frac::zero(np) };
        for i in 0..m {
            if !f[i].is_zero() && !w[m - i].is_zero() {
                acc = &acc - &(&f[i] * &w[m - i]);
            }
        }
        f.push(&acc * &inv_u0);
    }
    Ok(Series::new(f))
}

/// Same recurrence with denominators cleared: with `u = Nu/Du`, `v = Nv/Dv`,
/// `A = Nu Dv`, `B = Nv Du`, `R = x^d Du Dv`, the equation is `F (A + x^k B F) = R`
/// and `[x^m] F = P_m / A_0^{2m+1}` with polynomial `P_m`, so the loop needs
/// no gcds until each coefficient is reduced once at the end.
fn solve_series_cleared(fe: &QuadFE, n: usize) -> Result<Series, FeError> {
    let np = fe.nparams();
    let coeffs = |p: &MPoly| -> Vec<MPoly> {
        let mut c = p.unstack_leading_var();
        c.resize(n + 1, MPoly::zero(np));
        c.truncate(n + 1);
        c
    };
    let (nu, du) = (fe.u.as_frac().num(), fe.u.as_frac().den());
    let (nv, dv) = (fe.v.as_frac().num(), fe.v.as_frac().den());
    let a = coeffs(&(nu * dv));
    let b = coeffs(&(nv * du));
    let r0 = coeffs(&(du * dv));
    let d = fe.d as usize;
    let r = |m: usize| if m >= d { r0[m - d].clone() } else { MPoly::zero(np) };
    let a0 = a[0].clone();
    if a0.is_zero() {
        return Err(FeError::ZeroU0);
    }
    let k = fe.k as usize;
    let mut a0_pow = vec![MPoly::one(np)];
    for i in 1..=2 * n + 1 {
        let next = &a0_pow[i - 1] * &a0;
        a0_pow.push(next);
    }
    let mut p: Vec<MPoly> = Vec::with_capacity(n + 1);
    // w[j] = W_j = A_0^{2j-1} [x^j] (A + x^k B F) for j >= 1.
    let mut w: Vec<MPoly> = vec![MPoly::zero(np)];
    for m in 0..=n {
        if m >= 1 {
            let mut wm = &a[m] * &a0_pow[2 * m - 1];
            if m >= k {
                for i in 0..=m - k {
                    let (bj, pi) = (&b[m - k - i], &p[i]);
                    if !bj.is_zero() && !pi.is_zero() {
                        wm = &wm + &(&(bj * pi) * &a0_pow[2 * m - 2 * i - 2]);
                    }
                }
            }
            w.push(wm);
        }
        let mut acc = &r(m) * &a0_pow[2 * m];
        for i in 0..m {
            if !p[i].is_zero() && !w[m - i].is_zero() {
                acc = &acc - &(&p[i] * &w[m - i]);
            }
        }
        p.push(acc);
    }
    let f = p
        .into_par_iter()
        .enumerate()
        .map(|(m, pm)| reduce_by_power(pm, &a0, 2 * m + 1))
        .collect::<Result<Vec<Frac>, AlgebraError>>()?;
    Ok(Series::new(f))
}

/// `num / base^e` in lowest terms, dividing out whole powers of `base` first.
fn reduce_by_power(mut num: MPoly, base: &MPoly, mut e: usize) -> Result<Frac, AlgebraError> {
    if num.is_zero() {
        return Ok(Frac::zero(base.nvars()));
    }
    if base.is_constant() {
        return Frac::new(num, base.pow(e as u32));
    }
    while e > 0 {
        match num.div_exact(base) {
            Some(q) => {
                num = q;
                e -= 1;
            }
            None => break,
        }
    }
    Frac::new(num, base.pow(e as u32))
}

/// `u = u_L + x^{d+2} u_H` with `deg u_L <= d + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UDecomposition {
    pub u_l: RatFun,
    pub u_h: RatFun,
}

pub fn decompose_u(u: &RatFun, d: u32) -> Result<UDecomposition, FeError> {
    let top = d as usize + 1;
    let s = u.expand(top)?;
    let np = u.nparams();
    let mut u_l = RatFun::zero(np);
    for (i, c) in s.coeffs().iter().enumerate() {
        if !c.is_zero() {
            u_l = &u_l + &(&RatFun::constant(c) * &RatFun::x_pow(np, i as u32));
        }
    }
    let u_h = (u - &u_l).shift(-(d as i64 + 2));
    Ok(UDecomposition { u_l, u_h })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TauCase {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
}

/// `H_n(F) = sign * gamma^n * H_{n - shift}(τF)` for `n >= shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauRelation {
    pub case: TauCase,
    pub shift: u32,
    pub sign: i8,
    pub gamma: Frac,
}

/// `(-1)^{C(n, 2)}` computed from the exact binomial.
pub fn sign_binom2(n: u64) -> i8 {
    if (n * n.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Rewrite `G = P / (Q - x^e G)` into canonical form.
fn canonicalize(p: RatFun, q: RatFun, e: u32, params: Vec<String>) -> Result<QuadFE, FeError> {
    if p.is_zero() {
        return Err(FeError::LeavesClass("the numerator vanishes".into()));
    }
    let dp = p.valuation().expect("nonzero");
    if dp < 0 {
        return Err(FeError::LeavesClass(format!("numerator has a pole of order {}", -dp)));
    }
    let unit = p.shift(-dp);
    let u = q.checked_div(&unit)?;
    let v = -&unit.recip()?;
    QuadFE::new(dp as u32, e, u, v, params).map_err(|err| FeError::LeavesClass(err.to_string()))
}

/// One raw step of the transformation (exactly one of the three cases).
pub fn tau(fe: &QuadFE) -> Result<(QuadFE, TauRelation), FeError> {
    let np = fe.nparams();
    let u0 = fe.u.at_zero()?;
    if !u0.is_one() {
        let inv = u0.recip()?;
        let u = fe.u.scale(&inv);
        let v = fe.v.scale(&(&inv * &inv));
        let next = QuadFE::new(fe.d, fe.k, u, v, fe.params.clone())?;
        let rel = TauRelation { case: TauCase::I, shift: 0, sign: 1, gamma: inv };
        return Ok((next, rel));
    }
    let d = fe.d;
    let UDecomposition { u_l, u_h } = decompose_u(&fe.u, d)?;
    let x = |e: u32| RatFun::x_pow(np, e);
    let lu = &u_l * &u_h;
    let q0 = &u_l - &(&x(d + 2) * &u_h);
    let (case, next) = if fe.k == 1 {
        // G = N / (Q0 - x^{d+1} G), then τF = (G - G(0)) / x.
        let n = &(-&fe.v) - &(&x(1) * &lu);
        let g0 = RatFun::constant(&n.at_zero()?.checked_div(&q0.at_zero()?)?);
        let r = &(&(&g0 * &q0) - &(&x(d + 1) * &(&g0 * &g0))) - &n;
        let p = -&r.shift(-1);
        let q = &q0 - &(&x(d + 1) * &(&g0 + &g0));
        (TauCase::II, canonicalize(p, q, d + 2, fe.params.clone())?)
    } else {
        let p = &(-&(&x(fe.k - 2) * &fe.v)) - &lu;
        (TauCase::III, canonicalize(p, q0, d + 2, fe.params.clone())?)
    };
    let rel = TauRelation { case, shift: d + 1, sign: sign_binom2(d as u64 + 1), gamma: Frac::one(np) };
    Ok((next, rel))
}

/// States `F_0 -> F_1 -> ...` with the relation of each step.
#[derive(Debug, Clone)]
pub struct TauChain {
    pub states: Vec<QuadFE>,
    pub relations: Vec<TauRelation>,
}

impl TauChain {
    pub fn origin(&self) -> &QuadFE {
        &self.states[0]
    }

    pub fn last(&self) -> &QuadFE {
        self.states.last().expect("chain has an origin")
    }

    /// Run `steps` raw τ steps.
    pub fn build(seed: &QuadFE, steps: usize) -> Result<TauChain, FeError> {
        let mut chain = TauChain { states: vec![seed.clone()], relations: Vec::new() };
        for step in 0..steps {
            chain.push_step().map_err(|e| FeError::Step { step, source: Box::new(e) })?;
        }
        Ok(chain)
    }

    pub fn push_step(&mut self) -> Result<(), FeError> {
        let (next, rel) = tau(self.last())?;
        self.states.push(next);
        self.relations.push(rel);
        Ok(())
    }

    pub fn total_shift(&self) -> u32 {
        self.relations.iter().map(|r| r.shift).sum()
    }

    /// Composite factor over relations `from..to`.
    pub fn composite(&self, from: usize, to: usize) -> CompositeFactor {
        let np = self.states[0].nparams();
        let mut c = CompositeFactor::one(np);
        for r in &self.relations[from..to] {
            c.sign *= r.sign;
            c.push_power(&r.gamma, 1, -c.shift);
            c.shift += r.shift as i64;
        }
        c
    }
}

/// `H_n(F_from) = sign * prod c^{alpha n + beta} * H_{n - shift}(F_to)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeFactor {
    pub nparams: usize,
    pub sign: i8,
    /// `(c, alpha, beta)` with distinct bases `c != 1`.
    pub powers: Vec<(Frac, i64, i64)>,
    pub shift: i64,
}

impl CompositeFactor {
    pub fn one(nparams: usize) -> CompositeFactor {
        CompositeFactor { nparams, sign: 1, powers: Vec::new(), shift: 0 }
    }

    /// Multiply by `c^{alpha n + beta}`.
    pub fn push_power(&mut self, c: &Frac, alpha: i64, beta: i64) {
        if c.is_one() || (alpha == 0 && beta == 0) {
            return;
        }
        let inv = c.recip().ok();
        if let Some(e) = self.powers.iter_mut().find(|(b, _, _)| b == c) {
            e.1 += alpha;
            e.2 += beta;
        } else if let Some(e) = self.powers.iter_mut().find(|(b, _, _)| Some(&*b) == inv.as_ref()) {
            e.1 -= alpha;
            e.2 -= beta;
        } else {
            self.powers.push((c.clone(), alpha, beta));
        }
        self.powers.retain(|(_, a, b)| *a != 0 || *b != 0);
    }

    pub fn eval(&self, n: i64) -> Result<Frac, FeError> {
        if n < self.shift {
            return Err(FeError::IndexBelowShift { n, shift: self.shift });
        }
        let mut acc = Frac::from_int(self.nparams, self.sign as i64);
        for (c, a, b) in &self.powers {
            acc = &acc * &c.pow(a * n + b)?;
        }
        Ok(acc)
    }

    pub fn to_json(&self, params: &[&str]) -> CompositeJson {
        CompositeJson {
            shift: self.shift,
            sign: self.sign,
            factors: self
                .powers
                .iter()
                .map(|(c, a, b)| AffinePowerJson { base: frac_to_json(c, params), alpha: *a, beta: *b })
                .collect(),
        }
    }

    pub fn describe(&self, params: &[&str]) -> String {
        let mut parts = vec![if self.sign < 0 { "-1".to_string() } else { "1".to_string() }];
        for (c, a, b) in &self.powers {
            let e = match (*a, *b) {
                (0, b) => format!("{b}"),
                (1, 0) => "n".to_string(),
                (a, 0) => format!("{a}n"),
                (1, b) if b < 0 => format!("n-{}", -b),
                (1, b) => format!("n+{b}"),
                (a, b) if b < 0 => format!("{a}n-{}", -b),
                (a, b) => format!("{a}n+{b}"),
            };
            parts.push(format!("({})^({e})", c.to_string_with(params)));
        }
        format!("H_n = {} * H_(n-{})", parts.join(" * "), self.shift)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffinePowerJson {
    pub base: FracJson,
    pub alpha: i64,
    pub beta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeJson {
    pub shift: i64,
    pub sign: i8,
    pub factors: Vec<AffinePowerJson>,
}

/// `(phi(n), n - S)` with `H_n(F_0) = phi(n) H_{n-S}(F_last)` over the whole chain.
pub fn compose_relations(chain: &TauChain, n: i64) -> Result<(Frac, i64), FeError> {
    let c = chain.composite(0, chain.relations.len());
    Ok((c.eval(n)?, n - c.shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfun;

    fn fe(d: u32, k: u32, u: &str, v: &str, params: &[&str]) -> QuadFE {
        QuadFE::new(
            d,
            k,
            parse_ratfun(u, params).unwrap(),
            parse_ratfun(v, params).unwrap(),
            params.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cleared_solver_matches_direct() {
        let cases = [
            crate::seeds::f_m(3),
            crate::seeds::g_m_shifted(1),
            crate::seeds::s5_ex2(),
            crate::seeds::mql(1, 3, 2).unwrap(),
            fe(2, 1, "1 - a*x/(1 + b*x)", "(a - b)/(1 - x^2)", &["a", "b"]),
        ];
        for f in &cases {
            assert_eq!(solve_series_cleared(f, 9).unwrap(), solve_series_direct(f, 9).unwrap(), "{f:?}");
        }
        let t = tau(&crate::seeds::big_f_m(2)).unwrap().0;
        assert_eq!(solve_series_cleared(&t, 9).unwrap(), solve_series_direct(&t, 9).unwrap());
    }

    #[test]
    fn catalan_series() {
        let c = fe(0, 1, "1", "-1", &[]);
        let s = solve_series(&c, 5).unwrap();
        assert_eq!(s.to_strings(&[]), ["1", "1", "2", "5", "14", "42"]);
    }

    #[test]
    fn mql_catalan_embedding() {
        // F = x/(1 - x^2 F) means F/x = C(x^3).
        let form = QuadraticForm::Mql { m: 1, q: 1, l: 2, a: MPoly::zero(0), b: MPoly::one(0) };
        let f = fe_from_quadratic(&form, &[]).unwrap();
        let s = solve_series(&f, 10).unwrap();
        assert_eq!(s.to_strings(&[]), ["0", "1", "0", "0", "1", "0", "0", "2", "0", "0", "5"]);
    }

    #[test]
    fn catalan_like_rewrite() {
        let a = MPoly::var(2, 0);
        let b = MPoly::var(2, 1);
        let f = fe_from_quadratic(&QuadraticForm::CatalanLike { m: 2, a, b }, &["a", "b"]).unwrap();
        assert_eq!((f.d(), f.k()), (0, 2));
        assert_eq!(f.u(), &parse_ratfun("1 - a*x", &["a", "b"]).unwrap());
        assert_eq!(f.v(), &parse_ratfun("-b", &["a", "b"]).unwrap());
    }

    #[test]
    fn invalid_v_rejected() {
        let r = QuadFE::new(0, 1, RatFun::one(0), RatFun::x_pow(0, 1), vec![]);
        assert_eq!(r.unwrap_err().to_string(), "v(0)=0");
    }

    #[test]
    fn catalan_tau_step() {
        let c = fe(0, 1, "1", "-1", &[]);
        let (c1, rel) = tau(&c).unwrap();
        assert_eq!(c1, fe(0, 2, "1 - 2*x", "-1", &[]));
        assert_eq!((rel.case, rel.shift, rel.sign), (TauCase::II, 1, 1));
        // C_1 is a fixed point.
        let (c2, _) = tau(&c1).unwrap();
        assert_eq!(c2, c1);
    }

    #[test]
    fn decomposition_truncates() {
        let u = parse_ratfun("1 - a*x^3", &["a"]).unwrap();
        let dec = decompose_u(&u, 0).unwrap();
        assert!(dec.u_l.is_one());
        assert_eq!(dec.u_h, parse_ratfun("-a*x", &["a"]).unwrap());
    }

    #[test]
    fn case_one_scaling_composes() {
        let f = fe(0, 1, "3 - x", "-1", &[]);
        let chain = TauChain::build(&f, 1).unwrap();
        let (phi, idx) = compose_relations(&chain, 4).unwrap();
        assert_eq!(phi, Frac::from_rat(0, crate::algebra::Rat::frac(1, 81)));
        assert_eq!(idx, 4);
    }
}
