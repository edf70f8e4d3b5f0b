//! Shifted Hankel matrices and exact determinants.
//!
//! Determinants clear denominators with one common multiple and then run
//! fraction-free Bareiss elimination, over `BigInt` when the entries are
//! parameter-free and over `MPoly` otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::gcd::lcm;
use crate::algebra::{AlgebraError, Frac, MPoly, Rat, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    #[error("series order {have} is too small, need at least {needed}")]
    InsufficientOrder { needed: usize, have: usize },
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("condensation needs n >= 2, got {0}")]
    CondensationSize(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Dense square matrix over the parameter fraction field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrix {
    n: usize,
    nparams: usize,
    entries: Vec<Frac>,
}

impl SquareMatrix {
    pub fn from_rows(nparams: usize, rows: Vec<Vec<Frac>>) -> Result<SquareMatrix, HankelError> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(HankelError::NotSquare { row, len: r.len(), n });
            }
        }
        Ok(SquareMatrix { n, nparams, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(nparams: usize, n: usize, f: impl Fn(usize, usize) -> Frac) -> SquareMatrix {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        SquareMatrix { n, nparams, entries }
    }

    pub fn identity(nparams: usize, n: usize) -> SquareMatrix {
        SquareMatrix::from_fn(nparams, n, |i, j| if i == j { Frac::one(nparams) } else { Frac::zero(nparams) })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn get(&self, i: usize, j: usize) -> &Frac {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Frac>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading(&self, k: usize) -> SquareMatrix {
        SquareMatrix::from_fn(self.nparams, k, |i, j| self.get(i, j).clone())
    }
}

/// `H_n^{(k)}` of a series: `n x n` matrix `(a_{i+j+k})`.
#[derive(Clone, Debug)]
pub struct HankelSpec {
    pub source: Series,
    pub offset: usize,
    pub size: usize,
}

impl HankelSpec {
    pub fn new(source: Series, size: usize, offset: usize) -> Result<HankelSpec, HankelError> {
        check_order(&source, size, offset)?;
        Ok(HankelSpec { source, offset, size })
    }
}

/// Highest coefficient index an `n x n` shifted Hankel matrix reads.
pub fn required_order(n: usize, k: usize) -> usize {
    (2 * n + k).saturating_sub(2)
}

fn check_order(a: &Series, n: usize, k: usize) -> Result<(), HankelError> {
    if n == 0 {
        return Ok(());
    }
    let needed = required_order(n, k);
    if a.order() < needed {
        return Err(HankelError::InsufficientOrder { needed, have: a.order() });
    }
    Ok(())
}

pub fn hankel_matrix(spec: &HankelSpec) -> Result<SquareMatrix, HankelError> {
    let (a, n, k) = (&spec.source, spec.size, spec.offset);
    check_order(a, n, k)?;
    Ok(SquareMatrix::from_fn(a.nparams(), n, |i, j| a.coeffs()[i + j + k].clone()))
}

pub fn hankel_det(a: &Series, n: usize, k: usize) -> Result<Frac, HankelError> {
    let spec = HankelSpec { source: a.clone(), offset: k, size: n };
    Ok(det_exact(&hankel_matrix(&spec)?))
}

/// `[H_0^{(k)}, ..., H_{n_max}^{(k)}]`.
///
/// Hankel determinants of growing size are the leading principal minors of
/// the largest matrix, so one elimination yields all of them until a minor
/// vanishes; later sizes are then computed individually.
pub fn hankel_dets(a: &Series, n_max: usize, k: usize) -> Result<Vec<Frac>, HankelError> {
    check_order(a, n_max, k)?;
    let m = hankel_matrix(&HankelSpec { source: a.clone(), offset: k, size: n_max })?;
    let minors = leading_minors(&m);
    let mut out: Vec<Option<Frac>> = minors;
    out.insert(0, Some(Frac::one(a.nparams())));
    let missing: Vec<usize> = (0..=n_max).filter(|&i| out[i].is_none()).collect();
    let filled: Vec<(usize, Frac)> = missing.par_iter().map(|&i| (i, det_exact(&m.leading(i)))).collect();
    for (i, d) in filled {
        out[i] = Some(d);
    }
    Ok(out.into_iter().map(|d| d.expect("all minors computed")).collect())
}

trait BareissRing: Clone + Send + Sync {
    /// Whether row updates are expensive enough to spread over threads.
    const PARALLEL: bool;
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl BareissRing for BigInt {
    const PARALLEL: bool = false;
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        a * b - c * d
    }
    fn div_exact(&self, d: &Self) -> Self {
        if d.is_one() {
            return self.clone();
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(Zero::is_zero(&r), "Bareiss division must be exact");
        q
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl BareissRing for MPoly {
    const PARALLEL: bool = true;
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        MPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MPoly::one(self.nvars())
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        if c.is_zero() || d.is_zero() {
            return a * b;
        }
        &(a * b) - &(c * d)
    }
    fn div_exact(&self, d: &Self) -> Self {
        if d.is_one() {
            return self.clone();
        }
        MPoly::div_exact(self, d).expect("Bareiss division must be exact")
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// One Bareiss step eliminating column `k` below the pivot.
fn bareiss_step<T: BareissRing>(rows: &mut [Vec<T>], k: usize, prev: &T) {
    let (top, rest) = rows.split_at_mut(k + 1);
    let pivot_row = &top[k];
    let work = |row: &mut Vec<T>| {
        let lead = row[k].clone();
        for j in k + 1..row.len() {
            let v = T::mul_sub(&pivot_row[k], &row[j], &lead, &pivot_row[j]);
            row[j] = v.div_exact(prev);
        }
        row[k] = lead.zero_like();
    };
    if T::PARALLEL && rest.len() > 2 {
        rest.par_iter_mut().for_each(work);
    } else {
        rest.iter_mut().for_each(work);
    }
}

fn bareiss_det<T: BareissRing>(mut rows: Vec<Vec<T>>) -> T {
    let n = rows.len();
    let one = rows[0][0].one_like();
    let mut prev = one.clone();
    let mut negated = false;
    for k in 0..n {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&i| !rows[i][k].is_zero()) {
                Some(i) => {
                    rows.swap(k, i);
                    negated = !negated;
                }
                None => return one.zero_like(),
            }
        }
        if k + 1 == n {
            break;
        }
        bareiss_step(&mut rows, k, &prev);
        prev = rows[k][k].clone();
    }
    let d = rows[n - 1][n - 1].clone();
    if negated {
        d.negate()
    } else {
        d
    }
}

/// Leading principal minors `1..=n` from a pivot-free elimination; `None`
/// once a zero pivot stops it.
fn bareiss_minors<T: BareissRing>(mut rows: Vec<Vec<T>>) -> Vec<Option<T>> {
    let n = rows.len();
    let mut out = vec![None; n];
    let mut prev = rows[0][0].one_like();
    for k in 0..n {
        out[k] = Some(rows[k][k].clone());
        if rows[k][k].is_zero() || k + 1 == n {
            break;
        }
        bareiss_step(&mut rows, k, &prev);
        prev = rows[k][k].clone();
    }
    out
}

/// Rows over their own common denominators: `(numerators, row denominators)`.
enum Cleared {
    Int(Vec<Vec<BigInt>>, Vec<BigInt>),
    Poly(Vec<Vec<MPoly>>, Vec<MPoly>),
}

fn clear_denominators(m: &SquareMatrix) -> Cleared {
    let n = m.n;
    let constants: Option<Vec<Rat>> = m.entries.iter().map(Frac::as_constant).collect();
    if let Some(c) = constants {
        let (rows, dens) = c
            .chunks(n)
            .map(|row| {
                let l = row.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
                (row.iter().map(|r| r.numer() * (&l / r.denom())).collect(), l)
            })
            .unzip();
        return Cleared::Int(rows, dens);
    }
    let (rows, dens) = m
        .entries
        .chunks(n)
        .map(|row| {
            let mut l = MPoly::one(m.nparams);
            for e in row {
                if !e.den().is_one() && l.div_exact(e.den()).is_none() {
                    l = lcm(&l, e.den());
                }
            }
            let nums = row
                .iter()
                .map(|e| {
                    if e.den().is_one() {
                        e.num() * &l
                    } else {
                        e.num() * &l.div_exact(e.den()).expect("lcm is a multiple")
                    }
                })
                .collect();
            (nums, l)
        })
        .unzip();
    Cleared::Poly(rows, dens)
}

/// Products of the first `1..=n` row denominators.
fn prefix_products<T: Clone>(dens: &[T], one: T, mul: impl Fn(&T, &T) -> T) -> Vec<T> {
    dens.iter()
        .scan(one, |acc, d| {
            *acc = mul(acc, d);
            Some(acc.clone())
        })
        .collect()
}

fn int_frac(nparams: usize, v: BigInt, den: &BigInt) -> Frac {
    Frac::from_rat(nparams, Rat::new(v, den.clone()).expect("nonzero denominator"))
}

/// Exact determinant; `det` of the empty matrix is 1.
pub fn det_exact(m: &SquareMatrix) -> Frac {
    let np = m.nparams;
    let n = m.n;
    if n == 0 {
        return Frac::one(np);
    }
    match clear_denominators(m) {
        Cleared::Int(rows, dens) => {
            let l = dens.iter().fold(BigInt::one(), |acc, d| acc * d);
            int_frac(np, bareiss_det(rows), &l)
        }
        Cleared::Poly(rows, dens) => {
            let d = bareiss_det(rows);
            let l = dens.iter().fold(MPoly::one(np), |acc, d| &acc * d);
            Frac::new(d, l).expect("nonzero denominator")
        }
    }
}

fn leading_minors(m: &SquareMatrix) -> Vec<Option<Frac>> {
    let np = m.nparams;
    if m.n == 0 {
        return Vec::new();
    }
    match clear_denominators(m) {
        Cleared::Int(rows, dens) => {
            let ls = prefix_products(&dens, BigInt::one(), |a, b| a * b);
            bareiss_minors(rows).into_iter().zip(ls).map(|(d, l)| d.map(|d| int_frac(np, d, &l))).collect()
        }
        Cleared::Poly(rows, dens) => {
            let ls = prefix_products(&dens, MPoly::one(np), |a, b| a * b);
            bareiss_minors(rows)
                .into_iter()
                .zip(ls)
                .map(|(d, l)| d.map(|d| Frac::new(d, l).expect("nonzero denominator")))
                .collect()
        }
    }
}

/// Cofactor expansion along the first row; exponential, for cross-checks only.
pub fn det_cofactor(m: &SquareMatrix) -> Frac {
    fn rec(rows: &[Vec<Frac>], np: usize) -> Frac {
        let n = rows.len();
        if n == 0 {
            return Frac::one(np);
        }
        let mut acc = Frac::zero(np);
        for (j, e) in rows[0].iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let minor: Vec<Vec<Frac>> = rows[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let t = e * &rec(&minor, np);
            acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }
    rec(&m.rows(), m.nparams)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelVariant {
    /// `(x A(x) - y A(y)) / (x - y)`, giving `H_n(A)`.
    Ordinary,
    /// `(A(x) - A(y)) / (x - y)`, giving `H_n^1(A)`.
    Shifted,
}

/// Coefficient matrix `[x^i y^j]` of the divided difference of `A`, built by
/// exact synthetic division of `B(x) - B(y)` by `x - y`.
pub fn kernel_matrix(a: &Series, n: usize, variant: KernelVariant) -> Result<SquareMatrix, HankelError> {
    let np = a.nparams();
    if n == 0 {
        return Ok(SquareMatrix::identity(np, 0));
    }
    let extra = match variant {
        KernelVariant::Ordinary => 0,
        KernelVariant::Shifted => 1,
    };
    check_order(a, n, extra)?;
    let zero = Frac::zero(np);
    // B as a polynomial of known degree `deg`.
    let b: Vec<Frac> = match variant {
        KernelVariant::Ordinary => std::iter::once(zero.clone()).chain(a.coeffs().iter().cloned()).collect(),
        KernelVariant::Shifted => a.coeffs().to_vec(),
    };
    let deg = b.len() - 1;
    // P(x, y) = B(x) - B(y) = sum_i c_i(y) x^i with c_i(y) dense in y.
    let mut c: Vec<Vec<Frac>> = b
        .iter()
        .map(|bi| {
            let mut col = vec![zero.clone(); deg + 1];
            col[0] = bi.clone();
            col
        })
        .collect();
    for (j, bj) in b.iter().enumerate() {
        c[0][j] = &c[0][j] - bj;
    }
    // Divide by (x - y): q_{i-1} = c_i + y q_i, from the top down.
    let mut q: Vec<Vec<Frac>> = vec![vec![zero.clone(); deg + 1]; deg];
    let mut carry = vec![zero.clone(); deg + 1];
    for i in (1..=deg).rev() {
        let mut qi = c[i].clone();
        for j in 1..=deg {
            qi[j] = &qi[j] + &carry[j - 1];
        }
        carry = qi.clone();
        q[i - 1] = qi;
    }
    let mut rem = c[0].clone();
    for j in 1..=deg {
        rem[j] = &rem[j] + &carry[j - 1];
    }
    debug_assert!(rem.iter().all(Frac::is_zero), "x - y divides B(x) - B(y)");
    Ok(SquareMatrix::from_fn(np, n, |i, j| q[i][j].clone()))
}

/// Checks `H_n^{(k)} H_{n-2}^{(k+2)} = H_{n-1}^{(k)} H_{n-1}^{(k+2)} - (H_{n-1}^{(k+1)})^2`.
pub fn condensation_check(a: &Series, n: usize, k: usize) -> Result<bool, HankelError> {
    if n < 2 {
        return Err(HankelError::CondensationSize(n));
    }
    check_order(a, n, k)?;
    let h = |n, k| hankel_det(a, n, k);
    let lhs = &h(n, k)? * &h(n - 2, k + 2)?;
    let mid = h(n - 1, k + 1)?;
    let rhs = &(&h(n - 1, k)? * &h(n - 1, k + 2)?) - &(&mid * &mid);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfun;

    fn catalan(order: usize) -> Series {
        let mut c = vec![1i64];
        for n in 1..=order {
            let v: i64 = (0..n).map(|i| c[i] * c[n - 1 - i]).sum();
            c.push(v);
        }
        Series::from_ints(0, &c)
    }

    fn ints(m: &SquareMatrix) -> Vec<Vec<i64>> {
        m.rows()
            .iter()
            .map(|r| r.iter().map(|e| e.as_constant().unwrap().to_string().parse().unwrap()).collect())
            .collect()
    }

    #[test]
    fn catalan_h4_matrix() {
        let spec = HankelSpec::new(catalan(6), 4, 0).unwrap();
        let m = hankel_matrix(&spec).unwrap();
        assert_eq!(ints(&m), vec![vec![1, 1, 2, 5], vec![1, 2, 5, 14], vec![2, 5, 14, 42], vec![5, 14, 42, 132]]);
        assert!(det_exact(&m).is_one());
    }

    #[test]
    fn empty_and_identity() {
        assert!(det_exact(&SquareMatrix::identity(0, 0)).is_one());
        assert!(det_exact(&SquareMatrix::identity(2, 5)).is_one());
    }

    #[test]
    fn shifted_catalan() {
        assert_eq!(hankel_det(&catalan(20), 5, 2).unwrap(), Frac::from_int(0, 6));
        let dets = hankel_dets(&catalan(20), 8, 2).unwrap();
        for (n, d) in dets.iter().enumerate() {
            assert_eq!(d, &Frac::from_int(0, n as i64 + 1));
        }
    }

    #[test]
    fn insufficient_order_is_reported() {
        let e = hankel_det(&catalan(5), 4, 0).unwrap_err();
        assert_eq!(e, HankelError::InsufficientOrder { needed: 6, have: 5 });
    }

    #[test]
    fn zero_pivots_need_row_swaps() {
        // [[0,1],[1,0]] has determinant -1.
        let s = Series::from_ints(0, &[0, 1, 0]);
        assert_eq!(hankel_det(&s, 2, 0).unwrap(), Frac::from_int(0, -1));
        let dets = hankel_dets(&Series::from_ints(0, &[0, 1, 0, 1, 0]), 3, 0).unwrap();
        assert_eq!(dets[2], Frac::from_int(0, -1));
    }

    #[test]
    fn symbolic_determinant_with_denominators() {
        let f = parse_ratfun("1/(a - x)", &["a"]).unwrap();
        let s = f.expand(6).unwrap();
        let m = hankel_matrix(&HankelSpec::new(s, 2, 0).unwrap()).unwrap();
        // Geometric sequences have rank one Hankel matrices.
        assert!(det_exact(&m).is_zero());
        assert_eq!(det_exact(&m.leading(1)).to_string_with(&["a"]), "1/a");
    }

    #[test]
    fn kernel_small_case() {
        let s = catalan(4);
        let k = kernel_matrix(&s, 1, KernelVariant::Ordinary).unwrap();
        assert!(k.get(0, 0).is_one());
    }

    #[test]
    fn condensation_needs_size_two() {
        assert_eq!(condensation_check(&catalan(10), 1, 0), Err(HankelError::CondensationSize(1)));
        assert!(condensation_check(&catalan(10), 2, 0).unwrap());
    }
}
