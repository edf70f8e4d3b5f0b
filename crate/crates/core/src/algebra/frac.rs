//! Fractions of multivariate polynomials.
//!
//! Canonical form: numerator and denominator coprime, and the trailing
//! (lex-smallest) term of the denominator has coefficient 1. Two canonical
//! fractions are equal iff their parts are equal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::gcd::gcd;
use super::{AlgebraError, MPoly, Rat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frac {
    num: MPoly,
    den: MPoly,
}

impl Frac {
    pub fn new(num: MPoly, den: MPoly) -> Result<Frac, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        assert_eq!(num.nvars(), den.nvars(), "arity mismatch in fraction");
        if num.is_zero() {
            return Ok(Frac::zero(num.nvars()));
        }
        if den.is_constant() {
            let c = den.constant_term();
            return Ok(Frac { num: num.scale(&c.recip()?), den: MPoly::one(den.nvars()) });
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Ok(Self::scaled(num, den))
    }

    /// Normalize scale only; caller guarantees coprimality.
    fn scaled(num: MPoly, den: MPoly) -> Frac {
        let tc = den.terms().last().expect("nonzero").1.clone();
        if tc.is_one() {
            Frac { num, den }
        } else {
            let inv = tc.recip().expect("nonzero");
            Frac { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero(nvars: usize) -> Frac {
        Frac { num: MPoly::zero(nvars), den: MPoly::one(nvars) }
    }

    pub fn one(nvars: usize) -> Frac {
        Frac { num: MPoly::one(nvars), den: MPoly::one(nvars) }
    }

    pub fn from_poly(p: MPoly) -> Frac {
        let n = p.nvars();
        Frac { num: p, den: MPoly::one(n) }
    }

    pub fn from_rat(nvars: usize, r: Rat) -> Frac {
        Frac::from_poly(MPoly::constant(nvars, r))
    }

    pub fn from_int(nvars: usize, k: i64) -> Frac {
        Frac::from_poly(MPoly::from_int(nvars, k))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly, MPoly) {
        (self.num, self.den)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&MPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_poly() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Frac, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::scaled(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Frac, AlgebraError> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let e = e as u32;
        // Powers of coprime parts stay coprime.
        Ok(Self::scaled(self.num.pow(e), self.den.pow(e)))
    }

    pub fn scale(&self, c: &Rat) -> Frac {
        if c.is_zero() {
            return Frac::zero(self.nvars());
        }
        Frac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn checked_div(&self, rhs: &Frac) -> Result<Frac, AlgebraError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat, AlgebraError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(AlgebraError::PoleAtPoint);
        }
        Ok(&self.num.eval(point) / &d)
    }

    /// Substitute rational values for a subset of variables.
    pub fn eval_partial(&self, point: &[Option<Rat>]) -> Result<Frac, AlgebraError> {
        Frac::new(self.num.eval_partial(point), self.den.eval_partial(point))
    }

    /// Cross-multiplication equality; agrees with `==` on canonical values but
    /// avoids relying on normalization.
    pub fn equals(&self, other: &Frac) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Printed with an integer-primitive denominator.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.den.is_one() {
            return self.num.to_string_with(names);
        }
        let den = self.den.integer_primitive();
        let num = self.num.scale(&(&den.leading_coeff() / &self.den.leading_coeff()));
        let wrap = |p: &MPoly| {
            let s = p.to_string_with(names);
            if p.len() > 1 { format!("({s})") } else { s }
        };
        if den.is_one() {
            return num.to_string_with(names);
        }
        format!("{}/{}", wrap(&num), wrap(&den))
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<'a> Add<&'a Frac> for &'a Frac {
    type Output = Frac;
    fn add(self, rhs: &Frac) -> Frac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Frac::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Frac::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        if rhs.den.is_one() {
            return Frac::scaled(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return Frac::scaled(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let ld = self.den.div_exact(&g).expect("gcd divides");
        let rd = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &rd) + &(&rhs.num * &ld);
        let den = &(&ld * &rd) * &g;
        Frac::new(num, den).expect("nonzero")
    }
}

impl<'a> Sub<&'a Frac> for &'a Frac {
    type Output = Frac;
    fn sub(self, rhs: &Frac) -> Frac {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Frac> for &'a Frac {
    type Output = Frac;
    fn mul(self, rhs: &Frac) -> Frac {
        if self.is_zero() || rhs.is_zero() {
            return Frac::zero(self.nvars());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Frac::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel: gcd(a, d) and gcd(c, b) for (a/b)(c/d).
        let cancel = |n: &MPoly, d: &MPoly| -> (MPoly, MPoly) {
            if d.is_one() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        Frac::scaled(&a * &c, &b * &d)
    }
}

impl<'a> Div<&'a Frac> for &'a Frac {
    type Output = Frac;
    /// Panics on division by zero; use [`Frac::checked_div`] otherwise.
    fn div(self, rhs: &Frac) -> Frac {
        self.checked_div(rhs).expect("division by zero fraction")
    }
}

impl Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        -&self
    }
}

impl Add for Frac {
    type Output = Frac;
    fn add(self, rhs: Frac) -> Frac {
        &self + &rhs
    }
}

impl Sub for Frac {
    type Output = Frac;
    fn sub(self, rhs: Frac) -> Frac {
        &self - &rhs
    }
}

impl Mul for Frac {
    type Output = Frac;
    fn mul(self, rhs: Frac) -> Frac {
        &self * &rhs
    }
}

impl From<MPoly> for Frac {
    fn from(p: MPoly) -> Self {
        Frac::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Frac {
        Frac::from_poly(MPoly::var(2, 0))
    }
    fn b() -> Frac {
        Frac::from_poly(MPoly::var(2, 1))
    }

    #[test]
    fn field_inverse() {
        let f = &(&a() + &b()) / &(&a() - &b());
        let g = &f * &f.recip().unwrap();
        assert!(g.is_one());
    }

    #[test]
    fn canonical_denominator() {
        // (2a)/(4a + 4b) -> a/(2a + 2b)... scaled so the trailing term (b) is 1
        let num = MPoly::var(2, 0).scale(&Rat::from_int(2));
        let den = (&MPoly::var(2, 0) + &MPoly::var(2, 1)).scale(&Rat::from_int(4));
        let f = Frac::new(num, den).unwrap();
        assert_eq!(f.den().terms().last().unwrap().1, Rat::one());
        assert_eq!(f.num(), &MPoly::var(2, 0).scale(&Rat::frac(1, 2)));
    }

    #[test]
    fn sums_cancel() {
        let f = &Frac::one(2) / &(&a() + &b());
        let g = &f - &f;
        assert!(g.is_zero());
        let h = &(&a() / &(&a() + &b())) + &(&b() / &(&a() + &b()));
        assert!(h.is_one());
    }

    #[test]
    fn zero_division_errors() {
        assert!(Frac::zero(2).recip().is_err());
        assert!(Frac::new(MPoly::one(2), MPoly::zero(2)).is_err());
    }
}
