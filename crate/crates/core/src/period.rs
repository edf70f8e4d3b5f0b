//! Periodic and shifted-periodic τ chains, and the Hankel recursions they imply.
//!
//! A chain is periodic when a state repeats exactly. It is shifted-periodic
//! when the states sampled every `q` steps form a family whose coefficients
//! are rational functions of the sample index `p`; such families are found
//! by exact interpolation and then checked on held-out samples.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Frac, MPoly, Rat, RatFun};
use crate::fe::{solve_series, CompositeFactor, CompositeJson, FeError, QuadFE, QuadFEJson, TauCase, TauChain};
use crate::hankel::{hankel_dets, HankelError};
use crate::serial::{frac_to_json, FracJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodError {
    #[error(transparent)]
    Fe(#[from] FeError),
    #[error(transparent)]
    Hankel(#[from] HankelError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("recursion disagrees with the determinant oracle at n = {n}")]
    Validation { n: usize },
    #[error("fitted maps do not reproduce the held-out states")]
    Unverified,
}

/// `H_0..=H_n` of the solution of an equation, by direct elimination.
pub fn fe_oracle(fe: &QuadFE) -> impl Fn(usize) -> Result<Vec<Frac>, PeriodError> + '_ {
    move |n| {
        let s = solve_series(fe, 2 * n)?;
        Ok(hankel_dets(&s, n, 0)?)
    }
}

/// A τ step whose relation fails against direct determinants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepMismatch {
    pub step: usize,
    pub n: usize,
}

/// Check `H_n(F_i) = sign gamma^n H_{n-shift}(F_{i+1})` for every step and
/// every `shift <= n <= n_max`. Returns the number of checked pairs.
pub fn verify_chain(chain: &TauChain, n_max: usize) -> Result<Result<usize, StepMismatch>, PeriodError> {
    let dets: Vec<Vec<Frac>> =
        chain.states.par_iter().map(|s| fe_oracle(s)(n_max)).collect::<Result<_, _>>()?;
    let mut checked = 0;
    for (i, r) in chain.relations.iter().enumerate() {
        let np = chain.states[i].nparams();
        for n in r.shift as usize..=n_max {
            let rhs = prod3(&Frac::from_int(np, r.sign as i64), &r.gamma.pow(n as i64)?, &dets[i + 1][n - r.shift as usize]);
            if dets[i][n] != rhs {
                return Ok(Err(StepMismatch { step: i, n }));
            }
            checked += 1;
        }
    }
    Ok(Ok(checked))
}

/// [`verify_chain`] with every state and factor specialized to `point`.
pub fn verify_chain_at(
    chain: &TauChain,
    n_max: usize,
    point: &[Rat],
) -> Result<Result<usize, StepMismatch>, PeriodError> {
    let dets: Vec<Vec<Frac>> = chain
        .states
        .par_iter()
        .map(|s| fe_oracle(&s.eval_params(point)?)(n_max))
        .collect::<Result<_, _>>()?;
    let mut checked = 0;
    for (i, r) in chain.relations.iter().enumerate() {
        let np = chain.states[i].nparams();
        let gamma = Frac::from_rat(np, r.gamma.eval(point)?);
        for n in r.shift as usize..=n_max {
            let rhs = prod3(&Frac::from_int(np, r.sign as i64), &gamma.pow(n as i64)?, &dets[i + 1][n - r.shift as usize]);
            if dets[i][n] != rhs {
                return Ok(Err(StepMismatch { step: i, n }));
            }
            checked += 1;
        }
    }
    Ok(Ok(checked))
}

fn prod3(a: &Frac, b: &Frac, c: &Frac) -> Frac {
    &(a * b) * c
}

fn extend_chain(chain: &mut TauChain, steps: usize) -> Result<(), FeError> {
    while chain.relations.len() < steps {
        let step = chain.relations.len();
        chain.push_step().map_err(|e| FeError::Step { step, source: Box::new(e) })?;
    }
    Ok(())
}

/// `states[preperiod + period] == states[preperiod]`.
#[derive(Debug, Clone)]
pub struct PeriodReport {
    pub preperiod: usize,
    pub period: usize,
    /// Runs exactly to `preperiod + period`.
    pub chain: TauChain,
    /// From the seed to the first state of the cycle.
    pub pre: CompositeFactor,
    /// Once around the cycle.
    pub cycle: CompositeFactor,
}

/// First repeated state within `max_steps` raw τ steps, if any.
pub fn detect_period(seed: &QuadFE, max_steps: usize) -> Result<Option<PeriodReport>, FeError> {
    let mut chain = TauChain::build(seed, 0)?;
    let mut seen: FxHashMap<QuadFE, usize> = FxHashMap::default();
    seen.insert(seed.clone(), 0);
    for i in 1..=max_steps {
        extend_chain(&mut chain, i)?;
        if let Some(&j) = seen.get(chain.last()) {
            let pre = chain.composite(0, j);
            let cycle = chain.composite(j, i);
            return Ok(Some(PeriodReport { preperiod: j, period: i - j, chain, pre, cycle }));
        }
        seen.insert(chain.last().clone(), i);
    }
    Ok(None)
}

impl PeriodReport {
    pub fn seed(&self) -> &QuadFE {
        self.chain.origin()
    }

    pub fn cases(&self) -> Vec<TauCase> {
        self.chain.relations.iter().map(|r| r.case).collect()
    }

    /// `H_n(seed) = psi(n) H_{n-S}(seed)` for `n >= S + S_pre`, returned with
    /// that lower bound.
    pub fn seed_recursion(&self) -> (CompositeFactor, usize) {
        let s = self.cycle.shift;
        let sp = self.pre.shift;
        let mut psi = CompositeFactor::one(self.seed().nparams());
        psi.sign = self.cycle.sign;
        psi.shift = s;
        for (c, a, _) in &self.pre.powers {
            psi.push_power(c, 0, a * s);
        }
        for (c, a, b) in &self.cycle.powers {
            psi.push_power(c, *a, b - a * sp);
        }
        (psi, (s + sp) as usize)
    }

    pub fn to_json(&self) -> PeriodReportJson {
        let params = self.seed().param_names();
        PeriodReportJson {
            preperiod: self.preperiod,
            period: self.period,
            cases: self.cases(),
            preperiod_composite: self.pre.to_json(&params),
            composite: self.cycle.to_json(&params),
            states: self.chain.states.iter().map(QuadFE::to_json).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReportJson {
    pub preperiod: usize,
    pub period: usize,
    pub cases: Vec<TauCase>,
    pub preperiod_composite: CompositeJson,
    pub composite: CompositeJson,
    pub states: Vec<QuadFEJson>,
}

/// `H_n = factor(n) H_{n-S}` for `n >= base.len()`, with `H_n = base[n]` below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedRecursion {
    pub shift: usize,
    pub factor: CompositeFactor,
    pub base: Vec<Frac>,
    /// Checked against the oracle for every `n <= validated_upto`.
    pub validated_upto: usize,
}

impl ClosedRecursion {
    pub fn eval(&self, n: usize) -> Result<Frac, FeError> {
        let mut acc = Frac::one(self.factor.nparams);
        let mut m = n;
        while m >= self.base.len() {
            acc = &acc * &self.factor.eval(m as i64)?;
            m -= self.shift;
        }
        Ok(&acc * &self.base[m])
    }

    pub fn to_json(&self, params: &[&str]) -> ClosedRecursionJson {
        ClosedRecursionJson {
            shift: self.shift,
            factor: self.factor.to_json(params),
            formula: self.factor.describe(params),
            base: self.base.iter().map(|h| frac_to_json(h, params)).collect(),
            validated_upto: self.validated_upto,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedRecursionJson {
    pub shift: usize,
    pub factor: CompositeJson,
    pub formula: String,
    pub base: Vec<FracJson>,
    pub validated_upto: usize,
}

/// Turn a period report into a recursion for the seed and check it against
/// `oracle(n) = [H_0, ..., H_n]` up to `n_max`.
///
/// The base table is as short as the oracle allows: it stops at the first
/// `n >= S` from which the recursion holds on.
pub fn closed_recursion<O>(report: &PeriodReport, oracle: O, n_max: usize) -> Result<ClosedRecursion, PeriodError>
where
    O: Fn(usize) -> Result<Vec<Frac>, PeriodError>,
{
    let (factor, valid_from) = report.seed_recursion();
    let s = factor.shift as usize;
    let n_max = n_max.max(valid_from);
    let h = oracle(n_max)?;
    let holds = |n: usize| -> Result<bool, PeriodError> { Ok(&factor.eval(n as i64)? * &h[n - s] == h[n]) };
    for n in valid_from..=n_max {
        if !holds(n)? {
            return Err(PeriodError::Validation { n });
        }
    }
    let mut start = valid_from;
    while start > s && holds(start - 1)? {
        start -= 1;
    }
    Ok(ClosedRecursion { shift: s, factor, base: h[..start].to_vec(), validated_upto: n_max })
}

// ---------------------------------------------------------------------------
// Shifted periods

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Num,
    Den,
}

/// One coefficient of a sampled state: the `exp` monomial (`x` first, then
/// the parameters) of the numerator or denominator of `name`, where `name` is
/// `u`, `v`, `gamma<i>` for the i-th relation of a stride, or `d`/`k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub name: String,
    pub side: Side,
    pub exp: Vec<u32>,
}

impl Slot {
    fn scalar(name: &str) -> Slot {
        Slot { name: name.to_string(), side: Side::Num, exp: Vec::new() }
    }

    pub fn label(&self) -> String {
        if self.name == "d" || self.name == "k" {
            return self.name.clone();
        }
        let exp: Vec<String> = self.exp.iter().map(u32::to_string).collect();
        format!("{}.{}[{}]", self.name, if self.side == Side::Num { "num" } else { "den" }, exp.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftConfig {
    /// Cap on numerator and denominator degree in `p`.
    pub degree_cap: usize,
    pub holdout: usize,
    pub max_preperiod: usize,
}

impl Default for ShiftConfig {
    fn default() -> Self {
        ShiftConfig { degree_cap: 4, holdout: 2, max_preperiod: 8 }
    }
}

/// Shape of one raw step inside a stride.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepShape {
    pub case: TauCase,
    pub shift: u32,
    pub sign: i8,
}

/// Samples `F^{(p)} = states[preperiod + p * stride]` and the fitted maps
/// `p -> coefficient` that reproduce them.
#[derive(Debug, Clone)]
pub struct ShiftedPeriodReport {
    pub seed: QuadFE,
    pub preperiod: usize,
    pub stride: usize,
    /// Fitted on `p = 0..window`.
    pub window: usize,
    /// Checked on `p = window..window + holdout`.
    pub holdout: usize,
    pub degree_cap: usize,
    pub steps: Vec<StepShape>,
    /// Rational functions in one variable `p`.
    pub maps: BTreeMap<Slot, Frac>,
    pub holdout_verified: bool,
    /// From the seed to `F^{(0)}`.
    pub pre: CompositeFactor,
}

/// `(fields, gammas)` of a sampled state, keyed by slot.
fn slot_values(fe: &QuadFE, gammas: &[Frac]) -> BTreeMap<Slot, Rat> {
    let mut out = BTreeMap::new();
    out.insert(Slot::scalar("d"), Rat::from_int(fe.d()));
    out.insert(Slot::scalar("k"), Rat::from_int(fe.k()));
    let mut add = |name: String, f: &Frac| {
        for (side, poly) in [(Side::Num, f.num()), (Side::Den, f.den())] {
            for (m, c) in poly.terms() {
                out.insert(Slot { name: name.clone(), side, exp: m.exponents(poly.nvars()) }, c.clone());
            }
        }
    };
    add("u".into(), fe.u().as_frac());
    add("v".into(), fe.v().as_frac());
    for (i, g) in gammas.iter().enumerate() {
        add(format!("gamma{i}"), g);
    }
    out
}

fn frac_from_slots(maps: &BTreeMap<Slot, Rat>, name: &str, nvars: usize) -> Result<Frac, AlgebraError> {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for (slot, c) in maps.range(Slot::scalar(name)..) {
        if slot.name != name {
            break;
        }
        if c.is_zero() {
            continue;
        }
        let target = if slot.side == Side::Num { &mut num } else { &mut den };
        target.push((slot.exp.clone(), c.clone()));
    }
    Frac::new(MPoly::from_terms(nvars, num), MPoly::from_terms(nvars, den))
}

/// Nonzero kernel vector of a rational matrix, if the kernel is nontrivial.
fn kernel_vector(mut rows: Vec<Vec<Rat>>, ncols: usize) -> Option<Vec<Rat>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rat::zero(); ncols];
    v[free] = Rat::one();
    for (i, &c) in pivots.iter().enumerate() {
        v[c] = -&rows[i][free];
    }
    Some(v)
}

fn poly_in_p(coeffs: &[Rat]) -> MPoly {
    MPoly::from_terms(1, coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())))
}

/// Lowest-degree `N(p)/D(p)` with `deg N, deg D <= cap` through `(p, ys[p])`.
///
/// A fit with `n` unknown coefficients is only accepted when there are more
/// than `n` points, so every accepted fit is overdetermined.
pub fn fit_rational(ys: &[Rat], cap: usize) -> Option<Frac> {
    if ys.windows(2).all(|w| w[0] == w[1]) {
        return ys.first().map(|y| Frac::from_rat(1, y.clone()));
    }
    let pts: Vec<Rat> = (0..ys.len()).map(Rat::from_int).collect();
    for total in 1..=2 * cap {
        for dd in 0..=total.min(cap) {
            let dn = total - dd;
            let unknowns = dn + dd + 2;
            if dn > cap || ys.len() <= unknowns {
                continue;
            }
            let rows = pts
                .iter()
                .zip(ys)
                .map(|(p, y)| {
                    let mut row = Vec::with_capacity(unknowns);
                    let mut pw = Rat::one();
                    for _ in 0..=dn {
                        row.push(pw.clone());
                        pw = &pw * p;
                    }
                    let mut pw = Rat::one();
                    for _ in 0..=dd {
                        row.push(-&(&pw * y));
                        pw = &pw * p;
                    }
                    row
                })
                .collect();
            let Some(sol) = kernel_vector(rows, unknowns) else {
                continue;
            };
            let den = poly_in_p(&sol[dn + 1..]);
            if den.is_zero() || pts.iter().any(|p| den.eval(std::slice::from_ref(p)).is_zero()) {
                continue;
            }
            return Frac::new(poly_in_p(&sol[..=dn]), den).ok();
        }
    }
    None
}

struct Sample {
    state: QuadFE,
    gammas: Vec<Frac>,
    steps: Vec<StepShape>,
}

fn sample(chain: &TauChain, start: usize, stride: usize) -> Sample {
    let rels = &chain.relations[start..start + stride];
    Sample {
        state: chain.states[start].clone(),
        gammas: rels.iter().map(|r| r.gamma.clone()).collect(),
        steps: rels.iter().map(|r| StepShape { case: r.case, shift: r.shift, sign: r.sign }).collect(),
    }
}

/// First `(stride, preperiod)` whose sampled states fit rational maps in `p`
/// and reproduce the held-out samples.
pub fn detect_shifted_period(
    seed: &QuadFE,
    stride_max: usize,
    window: usize,
) -> Result<Option<ShiftedPeriodReport>, PeriodError> {
    detect_shifted_period_with(seed, stride_max, window, &ShiftConfig::default())
}

pub fn detect_shifted_period_with(
    seed: &QuadFE,
    stride_max: usize,
    window: usize,
    config: &ShiftConfig,
) -> Result<Option<ShiftedPeriodReport>, PeriodError> {
    let total = window + config.holdout;
    let mut chain = TauChain::build(seed, 0)?;
    for stride in 1..=stride_max {
        for pre in 0..=config.max_preperiod {
            extend_chain(&mut chain, pre + total * stride)?;
            let samples: Vec<Sample> = (0..total).map(|p| sample(&chain, pre + p * stride, stride)).collect();
            if samples.iter().any(|s| s.steps != samples[0].steps) {
                continue;
            }
            let Some(maps) = fit_samples(&samples[..window], config.degree_cap) else {
                continue;
            };
            let mut report = ShiftedPeriodReport {
                seed: seed.clone(),
                preperiod: pre,
                stride,
                window,
                holdout: config.holdout,
                degree_cap: config.degree_cap,
                steps: samples[0].steps.clone(),
                maps,
                holdout_verified: false,
                pre: chain.composite(0, pre),
            };
            let reproduced = samples.par_iter().enumerate().all(|(p, s)| {
                report.instantiate(p as i64).is_ok_and(|(fe, g)| fe == s.state && g == s.gammas)
            });
            if reproduced {
                report.holdout_verified = true;
                return Ok(Some(report));
            }
        }
    }
    Ok(None)
}

fn fit_samples(samples: &[Sample], cap: usize) -> Option<BTreeMap<Slot, Frac>> {
    let values: Vec<BTreeMap<Slot, Rat>> = samples.iter().map(|s| slot_values(&s.state, &s.gammas)).collect();
    let slots: BTreeSet<&Slot> = values.iter().flat_map(|v| v.keys()).collect();
    let zero = Rat::zero();
    slots
        .into_par_iter()
        .map(|slot| {
            let ys: Vec<Rat> = values.iter().map(|v| v.get(slot).unwrap_or(&zero).clone()).collect();
            fit_rational(&ys, cap).map(|f| (slot.clone(), f))
        })
        .collect()
}

impl ShiftedPeriodReport {
    /// `F^{(p)}` and the step multipliers of its stride, from the fitted maps.
    pub fn instantiate(&self, p: i64) -> Result<(QuadFE, Vec<Frac>), PeriodError> {
        let at = [Rat::from_int(p)];
        let values: BTreeMap<Slot, Rat> =
            self.maps.iter().map(|(s, f)| Ok((s.clone(), f.eval(&at)?))).collect::<Result<_, AlgebraError>>()?;
        let int = |name: &str| -> Result<u32, PeriodError> {
            let v = &values[&Slot::scalar(name)];
            u32::try_from(v.numer()).ok().filter(|_| v.is_integer()).ok_or(PeriodError::Unverified)
        };
        let np = self.seed.nparams();
        let u = RatFun::from_frac(frac_from_slots(&values, "u", np + 1)?);
        let v = RatFun::from_frac(frac_from_slots(&values, "v", np + 1)?);
        let fe = QuadFE::new(int("d")?, int("k")?, u, v, self.seed.params().to_vec())?;
        let gammas = (0..self.stride)
            .map(|i| {
                let name = format!("gamma{i}");
                if values.keys().any(|s| s.name == name) {
                    frac_from_slots(&values, &name, np)
                } else {
                    Ok(Frac::one(np))
                }
            })
            .collect::<Result<_, _>>()?;
        Ok((fe, gammas))
    }

    /// Total index shift of one stride.
    pub fn shift(&self) -> usize {
        self.steps.iter().map(|s| s.shift as usize).sum()
    }

    /// Stride counted with each case-i normalization folded into the step after it.
    pub fn fused_stride(&self) -> usize {
        self.steps.iter().filter(|s| s.case != TauCase::I).count()
    }

    /// `H_n(F^{(p)}) = factor(n) H_{n-S}(F^{(p+1)})`.
    pub fn step_factor(&self, p: i64) -> Result<CompositeFactor, PeriodError> {
        let (_, gammas) = self.instantiate(p)?;
        let mut c = CompositeFactor::one(self.seed.nparams());
        for (s, g) in self.steps.iter().zip(&gammas) {
            c.sign *= s.sign;
            c.push_power(g, 1, -c.shift);
            c.shift += s.shift as i64;
        }
        Ok(c)
    }

    pub fn to_json(&self) -> ShiftedPeriodReportJson {
        ShiftedPeriodReportJson {
            preperiod: self.preperiod,
            stride: self.stride,
            window: (0, self.window - 1),
            holdout: (self.window, self.window + self.holdout - 1),
            degree_cap: self.degree_cap,
            steps: self.steps.clone(),
            maps: self
                .maps
                .iter()
                .map(|(slot, f)| SlotMapJson { slot: slot.label(), map: frac_to_json(f, &["p"]) })
                .collect(),
            holdout_verified: self.holdout_verified,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotMapJson {
    pub slot: String,
    pub map: FracJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedPeriodReportJson {
    pub preperiod: usize,
    pub stride: usize,
    pub window: (usize, usize),
    pub holdout: (usize, usize),
    pub degree_cap: usize,
    pub steps: Vec<StepShape>,
    pub maps: Vec<SlotMapJson>,
    pub holdout_verified: bool,
}

/// `H_n(seed)` evaluated through a shifted-periodic chain:
/// `pre(n) * prod_p factor_p(...) * H_r(F^{(P)})` with `r < S`.
#[derive(Debug, Clone)]
pub struct ShiftedRecursion {
    pub report: ShiftedPeriodReport,
    /// `H_n(seed)` for `n` below the pre-period shift.
    pub seed_base: Vec<Frac>,
    pub validated_upto: usize,
}

impl ShiftedRecursion {
    pub fn eval(&self, n: usize) -> Result<Frac, PeriodError> {
        let pre = &self.report.pre;
        if n < pre.shift as usize {
            return Ok(self.seed_base[n].clone());
        }
        let s = self.report.shift();
        let mut acc = pre.eval(n as i64)?;
        let mut m = n - pre.shift as usize;
        let mut p = 0;
        while m >= s {
            acc = &acc * &self.report.step_factor(p)?.eval(m as i64)?;
            m -= s;
            p += 1;
        }
        if m > 0 {
            let (fe, _) = self.report.instantiate(p)?;
            acc = &acc * &fe_oracle(&fe)(m)?[m];
        }
        Ok(acc)
    }
}

/// Validate the telescoped recursion of a shifted report against the oracle
/// for every `n <= n_max`.
pub fn shifted_recursion<O>(
    report: &ShiftedPeriodReport,
    oracle: O,
    n_max: usize,
) -> Result<ShiftedRecursion, PeriodError>
where
    O: Fn(usize) -> Result<Vec<Frac>, PeriodError>,
{
    if !report.holdout_verified {
        return Err(PeriodError::Unverified);
    }
    let h = oracle(n_max)?;
    let sp = (report.pre.shift as usize).min(n_max + 1);
    let rec = ShiftedRecursion { report: report.clone(), seed_base: h[..sp].to_vec(), validated_upto: n_max };
    let got: Vec<Result<Frac, PeriodError>> = (0..=n_max).into_par_iter().map(|n| rec.eval(n)).collect();
    for (n, g) in got.into_iter().enumerate() {
        if g? != h[n] {
            return Err(PeriodError::Validation { n });
        }
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds;

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let r = |v: &[i64]| v.iter().map(|&x| Rat::from_int(x)).collect::<Vec<_>>();
        let v = kernel_vector(vec![r(&[1, 2, 3]), r(&[2, 4, 6])], 3).unwrap();
        assert!(v.iter().any(|c| !c.is_zero()));
        assert_eq!(&v[0] + &(&(&Rat::from_int(2) * &v[1]) + &(&Rat::from_int(3) * &v[2])), Rat::zero());
        assert!(kernel_vector(vec![r(&[1, 0]), r(&[0, 1])], 2).is_none());
    }

    #[test]
    fn fits_a_rational_sequence() {
        let ys: Vec<Rat> = (0..8).map(|p| Rat::frac(p * p + 1, p + 2)).collect();
        let f = fit_rational(&ys, 4).unwrap();
        assert_eq!(f.to_string_with(&["p"]), crate::algebra::parse_frac("(p^2+1)/(p+2)", &["p"]).unwrap().to_string_with(&["p"]));
        let noise: Vec<Rat> = [3, 1, 4, 1, 5, 9, 2, 6].iter().map(|&v| Rat::from_int(v)).collect();
        assert!(fit_rational(&noise, 2).is_none());
    }

    #[test]
    fn catalan_fixed_point() {
        let r = detect_period(&seeds::catalan(), 5).unwrap().unwrap();
        assert_eq!((r.preperiod, r.period), (1, 1));
        let rec = closed_recursion(&r, fe_oracle(&seeds::catalan()), 8).unwrap();
        assert_eq!(rec.shift, 1);
        assert!(rec.factor.eval(5).unwrap().is_one());
        assert_eq!(rec.base, vec![Frac::one(0)]);
    }
}
