//! Rational functions in `x` with parameter-polynomial coefficients.
//!
//! Stored as a [`Frac`] over `1 + nparams` variables with `x` as variable 0,
//! so gcd removal happens over the coefficient fraction field for free and
//! the trailing-term normalization makes the denominator's lowest `x`
//! coefficient start with 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, Frac, MPoly, Rat, Series};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    f: Frac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratfun_arith(op: FieldOp, f: &RatFun, g: &RatFun) -> Result<RatFun, AlgebraError> {
    if f.nparams() != g.nparams() {
        return Err(AlgebraError::ArityMismatch { left: f.nparams(), right: g.nparams() });
    }
    Ok(match op {
        FieldOp::Add => f + g,
        FieldOp::Sub => f - g,
        FieldOp::Mul => f * g,
        FieldOp::Div => f.checked_div(g)?,
    })
}

impl RatFun {
    /// Wrap a fraction whose variable 0 is `x`.
    pub fn from_frac(f: Frac) -> RatFun {
        assert!(f.nvars() >= 1, "rational function needs an x variable");
        RatFun { f }
    }

    pub fn new(num: MPoly, den: MPoly) -> Result<RatFun, AlgebraError> {
        Ok(RatFun::from_frac(Frac::new(num, den)?))
    }

    /// Build from `x`-coefficient lists over the parameters.
    pub fn from_coeffs(num: &[MPoly], den: &[MPoly], nparams: usize) -> Result<RatFun, AlgebraError> {
        RatFun::new(
            MPoly::stack_leading_var(num, nparams),
            MPoly::stack_leading_var(den, nparams),
        )
    }

    pub fn zero(nparams: usize) -> RatFun {
        RatFun { f: Frac::zero(nparams + 1) }
    }

    pub fn one(nparams: usize) -> RatFun {
        RatFun { f: Frac::one(nparams + 1) }
    }

    pub fn from_int(nparams: usize, k: i64) -> RatFun {
        RatFun { f: Frac::from_int(nparams + 1, k) }
    }

    /// `x^k`.
    pub fn x_pow(nparams: usize, k: u32) -> RatFun {
        let mut e = vec![0; nparams + 1];
        e[0] = k;
        RatFun { f: Frac::from_poly(MPoly::monomial(nparams + 1, &e, Rat::one())) }
    }

    /// A constant (x-free) element of the parameter fraction field.
    pub fn constant(c: &Frac) -> RatFun {
        let lift = |p: &MPoly| MPoly::stack_leading_var(std::slice::from_ref(p), p.nvars());
        RatFun { f: Frac::new(lift(c.num()), lift(c.den())).expect("nonzero denominator") }
    }

    /// A polynomial in `x` given by parameter-polynomial coefficients.
    pub fn from_poly_coeffs(coeffs: &[MPoly], nparams: usize) -> RatFun {
        RatFun { f: Frac::from_poly(MPoly::stack_leading_var(coeffs, nparams)) }
    }

    pub fn nparams(&self) -> usize {
        self.f.nvars() - 1
    }

    pub fn as_frac(&self) -> &Frac {
        &self.f
    }

    pub fn num(&self) -> &MPoly {
        self.f.num()
    }

    pub fn den(&self) -> &MPoly {
        self.f.den()
    }

    /// Numerator coefficients in ascending powers of `x`.
    pub fn num_coeffs(&self) -> Vec<MPoly> {
        self.f.num().unstack_leading_var()
    }

    /// Denominator coefficients in ascending powers of `x`.
    pub fn den_coeffs(&self) -> Vec<MPoly> {
        self.f.den().unstack_leading_var()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.f.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.f.is_poly()
    }

    /// `x`-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.f.num().min_degree_in(0) as i64 - self.f.den().min_degree_in(0) as i64)
    }

    /// Value at `x = 0` as an element of the parameter fraction field.
    pub fn at_zero(&self) -> Result<Frac, AlgebraError> {
        let d0 = lowest(self.f.den(), 0);
        if d0.is_zero() {
            return Err(AlgebraError::NotExpandable);
        }
        Frac::new(lowest(self.f.num(), 0), d0)
    }

    /// Multiply by `x^k` (`k` may be negative).
    pub fn shift(&self, k: i64) -> RatFun {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let xk = RatFun::x_pow(self.nparams(), k.unsigned_abs() as u32);
        if k > 0 {
            self * &xk
        } else {
            self.checked_div(&xk).expect("x^k is nonzero")
        }
    }

    pub fn recip(&self) -> Result<RatFun, AlgebraError> {
        Ok(RatFun { f: self.f.recip()? })
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun, AlgebraError> {
        Ok(RatFun { f: self.f.checked_div(&rhs.f)? })
    }

    pub fn pow(&self, e: i64) -> Result<RatFun, AlgebraError> {
        Ok(RatFun { f: self.f.pow(e)? })
    }

    pub fn scale(&self, c: &Frac) -> RatFun {
        self * &RatFun::constant(c)
    }

    /// Maclaurin coefficients `0..=order`.
    pub fn expand(&self, order: usize) -> Result<Series, AlgebraError> {
        let np = self.nparams();
        let num = self.num_coeffs();
        let den = self.den_coeffs();
        let d0 = den.first().cloned().unwrap_or_else(|| MPoly::zero(np));
        if d0.is_zero() {
            return Err(AlgebraError::NotExpandable);
        }
        let inv = Frac::from_poly(d0).recip()?;
        let den: Vec<Frac> = den.into_iter().map(Frac::from_poly).collect();
        let mut out: Vec<Frac> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.get(n).cloned().map(Frac::from_poly).unwrap_or_else(|| Frac::zero(np));
            for i in 1..den.len().min(n + 1) {
                if !den[i].is_zero() && !out[n - i].is_zero() {
                    acc = &acc - &(&den[i] * &out[n - i]);
                }
            }
            out.push(&acc * &inv);
        }
        Ok(Series::new(out))
    }

    /// Substitute rational values for all parameters; the result keeps the
    /// same arity with constant coefficients.
    pub fn eval_params(&self, point: &[Rat]) -> Result<RatFun, AlgebraError> {
        if point.len() != self.nparams() {
            return Err(AlgebraError::ArityMismatch { left: self.nparams(), right: point.len() });
        }
        let full: Vec<Option<Rat>> = std::iter::once(None).chain(point.iter().cloned().map(Some)).collect();
        Ok(RatFun { f: self.f.eval_partial(&full)? })
    }

    /// Evaluate at rational `x` and parameter values.
    pub fn eval(&self, x: &Rat, params: &[Rat]) -> Result<Rat, AlgebraError> {
        let full: Vec<Rat> = std::iter::once(x.clone()).chain(params.iter().cloned()).collect();
        self.f.eval(&full)
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, other: &RatFun) -> bool {
        self.f.equals(&other.f)
    }

    pub fn to_string_with(&self, params: &[&str]) -> String {
        let mut names = vec!["x"];
        names.extend_from_slice(params);
        self.f.to_string_with(&names)
    }
}

/// Coefficient of `x^e` (variable `v = 0`) of a stacked polynomial.
fn lowest(p: &MPoly, e: usize) -> MPoly {
    p.unstack_leading_var().into_iter().nth(e).unwrap_or_else(|| MPoly::zero(p.nvars() - 1))
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.f, f)
    }
}

impl<'a> Add<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun { f: &self.f + &rhs.f }
    }
}

impl<'a> Sub<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        RatFun { f: &self.f - &rhs.f }
    }
}

impl<'a> Mul<&'a RatFun> for &'a RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun { f: &self.f * &rhs.f }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { f: -&self.f }
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfun;

    fn rf(s: &str) -> RatFun {
        parse_ratfun(s, &["a", "b"]).unwrap()
    }

    #[test]
    fn self_difference_is_zero() {
        let f = rf("1/(1 - a*x)");
        assert!(ratfun_arith(FieldOp::Sub, &f, &f).unwrap().is_zero());
    }

    #[test]
    fn common_factor_cancels() {
        let f = rf("(1 - x^2)/(1 - x)");
        assert_eq!(f, rf("1 + x"));
        assert!(f.is_polynomial());
    }

    #[test]
    fn inverse_product() {
        let f = ratfun_arith(FieldOp::Mul, &rf("1/(1 - a*x)"), &rf("1 - a*x")).unwrap();
        assert!(f.is_one());
    }

    #[test]
    fn divide_by_zero_rejected() {
        let e = ratfun_arith(FieldOp::Div, &rf("x"), &RatFun::zero(2));
        assert_eq!(e, Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn denominator_starts_with_one() {
        let f = rf("3/(2 - 4*x)");
        assert_eq!(f.den_coeffs()[0], MPoly::one(2));
        assert_eq!(f.num_coeffs()[0], MPoly::constant(2, Rat::frac(3, 2)));
    }

    #[test]
    fn geometric_expansion() {
        let s = rf("1/(1 - x)").expand(4).unwrap();
        assert!(s.coeffs().iter().all(|c| c.is_one()));
        let s = rf("1/(1 - a*x - b*x)").expand(3).unwrap();
        let ab = Frac::from_poly(parse_ratfun("a + b", &["a", "b"]).unwrap().num_coeffs()[0].clone());
        for (i, c) in s.coeffs().iter().enumerate() {
            assert_eq!(c, &ab.pow(i as i64).unwrap());
        }
    }

    #[test]
    fn not_expandable_at_pole() {
        assert_eq!(rf("1/x").expand(2).unwrap_err(), AlgebraError::NotExpandable);
        assert_eq!(rf("x/(x + x^2)").expand(1).unwrap().coeffs()[0], Frac::one(2));
    }

    #[test]
    fn valuation_and_value_at_zero() {
        let f = rf("x^3/(2*a + x)");
        assert_eq!(f.valuation(), Some(3));
        assert!(f.at_zero().unwrap().is_zero());
        let g = rf("(a + x)/(b - x)");
        assert_eq!(g.at_zero().unwrap().to_string_with(&["a", "b"]), "a/b");
    }
}
