//! Sparse multivariate polynomials over `Rat`.
//!
//! Exponent vectors are packed into a `u128`, sixteen bits per variable with
//! variable 0 in the most significant field, so integer comparison of the
//! packed key is lexicographic order with variable 0 dominant. Terms are kept
//! sorted in descending order with no stored zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::{AlgebraError, Rat};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 8;
const FIELD_BITS: u32 = 16;
const FIELD_MASK: u128 = 0xFFFF;
/// Exponents must stay below `2^15`; the top bit of each field is a guard.
pub const MAX_EXPONENT: u32 = 0x7FFF;
const GUARD: u128 = {
    let mut g = 0u128;
    let mut i = 0;
    while i < MAX_VARS {
        g |= 0x8000u128 << (i as u32 * FIELD_BITS);
        i += 1;
    }
    g
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(u128);

impl Monomial {
    #[inline]
    fn shift(var: usize) -> u32 {
        (MAX_VARS - 1 - var) as u32 * FIELD_BITS
    }

    pub fn one() -> Self {
        Monomial(0)
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent overflow");
            m |= (e as u128) << Self::shift(i);
        }
        Monomial(m)
    }

    #[inline]
    pub fn exp(self, var: usize) -> u32 {
        ((self.0 >> Self::shift(var)) & FIELD_MASK) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|v| self.exp(v)).collect()
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        let s = self.0 + other.0;
        assert!(s & GUARD == 0, "exponent overflow in monomial product");
        Monomial(s)
    }

    /// `self / other` when every exponent of `other` is at most that of `self`.
    #[inline]
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        // Borrowing out of a field sets that field's guard bit.
        let d = (self.0 | GUARD).wrapping_sub(other.0);
        if d & GUARD == GUARD {
            Some(Monomial(d & !GUARD))
        } else {
            None
        }
    }

    pub fn with_exp(self, var: usize, e: u32) -> Monomial {
        assert!(e <= MAX_EXPONENT, "exponent overflow");
        let sh = Self::shift(var);
        Monomial((self.0 & !(FIELD_MASK << sh)) | ((e as u128) << sh))
    }

    pub fn gcd(self, other: Monomial, nvars: usize) -> Monomial {
        let mut m = self;
        for v in 0..nvars {
            m = m.with_exp(v, self.exp(v).min(other.exp(v)));
        }
        m
    }

    pub fn total_degree(self, nvars: usize) -> u32 {
        (0..nvars).map(|v| self.exp(v)).sum()
    }

    /// Insert a new variable at position 0 with exponent `e`.
    fn prepend(self, e: u32) -> Monomial {
        assert!(e <= MAX_EXPONENT, "exponent overflow");
        Monomial((self.0 >> FIELD_BITS) | ((e as u128) << Self::shift(0)))
    }

    /// Remove variable 0, returning its exponent.
    fn split_first(self) -> (u32, Monomial) {
        (self.exp(0), Monomial(self.0 << FIELD_BITS))
    }
}

/// Sparse polynomial in `nvars` variables with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: Vec<(Monomial, Rat)>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        MPoly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::one(), c));
        }
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rat::from_int(c))
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        assert!(v < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::monomial(nvars, &e, Rat::one())
    }

    pub fn monomial(nvars: usize, exps: &[u32], c: Rat) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector arity");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::from_exponents(exps), c));
        }
        p
    }

    /// Build from arbitrary (possibly repeated, unsorted, zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(nvars: usize, terms: I) -> Self {
        let mut acc: FxHashMap<Monomial, Rat> = FxHashMap::default();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector arity");
            *acc.entry(Monomial::from_exponents(&e)).or_default() += &c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: FxHashMap<Monomial, Rat>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rat {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rat::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rat)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rat::zero)
    }

    fn check_arity(&self, other: &MPoly) -> Result<(), AlgebraError> {
        if self.nvars != other.nvars {
            Err(AlgebraError::ArityMismatch { left: self.nvars, right: other.nvars })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, AlgebraError> {
        self.check_arity(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, AlgebraError> {
        self.check_arity(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, AlgebraError> {
        self.check_arity(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MPoly { nvars: self.nvars, terms: out }
    }

    fn mul_impl(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(*m, c);
        }
        let mut acc: FxHashMap<Monomial, Rat> =
            FxHashMap::with_capacity_and_hasher(small.len() * big.len(), Default::default());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(*mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        MPoly::from_map(self.nvars, acc)
    }

    pub fn mul_term(&self, m: Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect();
        MPoly { nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        self.mul_term(Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert_eq!(self.nvars, d.nvars, "arity mismatch in division");
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero(self.nvars));
        }
        let (dm, dc) = d.terms[0].clone();
        if d.len() == 1 {
            let inv = dc.recip().ok()?;
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                terms.push((m.div(dm)?, c * &inv));
            }
            return Some(MPoly { nvars: self.nvars, terms });
        }
        let inv = dc.recip().ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        let tail = MPoly { nvars: d.nvars, terms: d.terms[1..].to_vec() };
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            let qm = rm.div(dm)?;
            let qc = &rc * &inv;
            // Leading terms cancel by construction; subtract only the tail.
            rem.terms.remove(0);
            let sub = tail.mul_term(qm, &qc);
            rem = rem.merge(&sub, true);
            quot.push((qm, qc));
        }
        Some(MPoly { nvars: self.nvars, terms: quot })
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total_degree(self.nvars)).max().unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.degree_in(v) > 0).collect()
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return Monomial::one() };
        it.fold(*first, |g, (m, _)| g.gcd(*m, self.nvars))
    }

    pub fn div_monomial(&self, m: Monomial) -> Option<MPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(mm, c)| mm.div(m).map(|q| (q, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(MPoly { nvars: self.nvars, terms })
    }

    /// Coefficients with respect to variable `v`: `self = sum_i out[i] * v^i`.
    pub fn to_univariate(&self, v: usize) -> Vec<MPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rat)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            buckets[e].push((m.with_exp(v, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                // Clearing one exponent field can reorder terms.
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                MPoly { nvars: self.nvars, terms: t }
            })
            .collect()
    }

    pub fn from_univariate(nvars: usize, v: usize, coeffs: &[MPoly]) -> MPoly {
        let mut acc = MPoly::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let shift = Monomial::one().with_exp(v, i as u32);
            acc = &acc + &c.mul_term(shift, &Rat::one());
        }
        acc
    }

    /// Substitute a rational value for variable `v`.
    pub fn eval_var(&self, v: usize, value: &Rat) -> MPoly {
        let mut acc: FxHashMap<Monomial, Rat> = FxHashMap::default();
        let mut powers: Vec<Rat> = vec![Rat::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let t = c * &powers[e];
            if !t.is_zero() {
                *acc.entry(m.with_exp(v, 0)).or_default() += &t;
            }
        }
        MPoly::from_map(self.nvars, acc)
    }

    /// Substitute rational values for all variables.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "evaluation point arity");
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in point.iter().enumerate() {
                let e = m.exp(v);
                if e > 0 {
                    t = &t * &x.pow(e as i64).expect("nonnegative power");
                }
            }
            total += &t;
        }
        total
    }

    /// Substitute rational values for a subset of variables (`None` keeps the variable).
    pub fn eval_partial(&self, point: &[Option<Rat>]) -> MPoly {
        let mut p = self.clone();
        for (v, x) in point.iter().enumerate() {
            if let Some(x) = x {
                p = p.eval_var(v, x);
            }
        }
        p
    }

    /// Prepend a new variable 0; `coeffs[i]` multiplies `new_var^i`.
    pub fn stack_leading_var(coeffs: &[MPoly], nvars: usize) -> MPoly {
        assert!(nvars < MAX_VARS, "no room for an extra variable");
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate().rev() {
            assert_eq!(c.nvars, nvars, "arity mismatch");
            for (m, cc) in &c.terms {
                terms.push((m.prepend(i as u32), cc.clone()));
            }
        }
        // Higher powers of the new leading variable dominate, and within one
        // power the original order is preserved.
        MPoly { nvars: nvars + 1, terms }
    }

    /// Inverse of [`MPoly::stack_leading_var`].
    pub fn unstack_leading_var(&self) -> Vec<MPoly> {
        assert!(self.nvars >= 1, "no leading variable");
        let deg = self.degree_in(0) as usize;
        let mut out = vec![MPoly::zero(self.nvars - 1); deg + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_first();
            out[e as usize].terms.push((rest, c.clone()));
        }
        out
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip().expect("nonzero leading coefficient"))
    }

    /// Scale to coprime integer coefficients with positive leading coefficient.
    pub fn integer_primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = Rat::content(self.terms.iter().map(|t| &t.1));
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        self.scale(&c.recip().expect("nonzero content"))
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for v in 0..self.nvars {
                let e = m.exp(v);
                let name = names.get(v).copied().unwrap_or("?");
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.to_string_with(&refs))
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("MPoly arity mismatch")
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("MPoly arity mismatch")
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("MPoly arity mismatch")
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// The ring operation selector of [`mpoly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation; fails on arity mismatch.
pub fn mpoly_arith(op: RingOp, p: &MPoly, q: &MPoly) -> Result<MPoly, AlgebraError> {
    match op {
        RingOp::Add => p.checked_add(q),
        RingOp::Sub => p.checked_sub(q),
        RingOp::Mul => p.checked_mul(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> MPoly {
        MPoly::var(2, 0)
    }
    fn b() -> MPoly {
        MPoly::var(2, 1)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&a() + &b()) * &(&a() - &b());
        let rhs = &a().pow(2) - &b().pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn absorbing_zero() {
        assert!((&(&a() + &b()) * &MPoly::zero(2)).is_zero());
    }

    #[test]
    fn binomial_square() {
        let sq = (&a() + &b()).pow(2);
        let expect = MPoly::from_terms(
            2,
            vec![(vec![2, 0], Rat::one()), (vec![1, 1], Rat::from_int(2)), (vec![0, 2], Rat::one())],
        );
        assert_eq!(sq, expect);
        assert_eq!(sq.to_string_with(&["a", "b"]), "a^2 + 2*a*b + b^2");
    }

    #[test]
    fn arity_mismatch_is_error() {
        let p = MPoly::var(2, 0);
        let q = MPoly::var(3, 0);
        assert!(matches!(
            mpoly_arith(RingOp::Add, &p, &q),
            Err(AlgebraError::ArityMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn exact_division() {
        let p = &(&a() + &b()).pow(3) * &(&a() - &b());
        assert_eq!(p.div_exact(&(&a() - &b())).unwrap(), (&a() + &b()).pow(3));
        assert!(p.div_exact(&(&a() + &MPoly::from_int(2, 1))).is_none());
    }

    #[test]
    fn monomial_division_detects_borrow() {
        let m = Monomial::from_exponents(&[2, 1]);
        assert_eq!(m.div(Monomial::from_exponents(&[1, 1])), Some(Monomial::from_exponents(&[1, 0])));
        assert_eq!(m.div(Monomial::from_exponents(&[0, 2])), None);
    }

    #[test]
    fn stack_roundtrip() {
        let c = vec![&a() + &b(), MPoly::zero(2), a().pow(2)];
        let s = MPoly::stack_leading_var(&c, 2);
        assert_eq!(s.nvars(), 3);
        assert_eq!(s.unstack_leading_var(), c);
        assert_eq!(s.degree_in(0), 2);
    }

    #[test]
    fn univariate_split() {
        let p = &(&a() + &b()).pow(2) + &MPoly::from_int(2, 3);
        let parts = p.to_univariate(0);
        assert_eq!(parts.len(), 3);
        assert_eq!(MPoly::from_univariate(2, 0, &parts), p);
    }
}
