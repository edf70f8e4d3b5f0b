//! Arbitrary-precision rationals.
//!
//! A thin wrapper over `BigRational` that short-circuits the integer case,
//! which dominates the fraction-free determinant work.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// Canonical rational number: `gcd(|num|, den) = 1`, `den > 0`, zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Rat::new(num.into(), den.into()).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat, AlgebraError> {
        if self.is_zero() {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }

    pub fn pow(&self, e: i64) -> Result<Rat, AlgebraError> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Rat::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// `gcd` of numerators over `lcm` of denominators; the rational content of a list.
    pub fn content<'a, I: IntoIterator<Item = &'a Rat>>(items: I) -> Rat {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for r in items {
            g = g.gcd(r.numer());
            l = l.lcm(r.denom());
        }
        if g.is_zero() {
            return Rat::one();
        }
        Rat(BigRational::new(g, l))
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_int(n)
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        if self.is_integer() && rhs.is_integer() {
            return Rat(BigRational::from_integer(self.numer() + rhs.numer()));
        }
        Rat(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        if self.is_integer() && rhs.is_integer() {
            return Rat(BigRational::from_integer(self.numer() - rhs.numer()));
        }
        Rat(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        if self.is_integer() && rhs.is_integer() {
            return Rat(BigRational::from_integer(self.numer() * rhs.numer()));
        }
        Rat(&self.0 * &rhs.0)
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    /// Panics on division by zero; use [`Rat::recip`] for the checked path.
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        &self + &rhs
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        &self - &rhs
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        &self * &rhs
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        if self.is_integer() && rhs.is_integer() {
            let n = self.numer() + rhs.numer();
            self.0 = BigRational::from_integer(n);
        } else {
            self.0 += &rhs.0;
        }
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        if self.is_integer() && rhs.is_integer() {
            let n = self.numer() - rhs.numer();
            self.0 = BigRational::from_integer(n);
        } else {
            self.0 -= &rhs.0;
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0.clone())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = AlgebraError;

    /// Accepts `"p"` or `"p/q"` with decimal integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                Rat::new(n, d)
            }
            None => Ok(Rat::from_int(BigInt::from_str(s).map_err(|_| bad())?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rat::new(BigInt::from(4), BigInt::from(-6)).unwrap();
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(Rat::new(BigInt::from(0), BigInt::from(-5)).unwrap(), Rat::zero());
        assert_eq!(Rat::zero().denom(), &BigInt::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            Rat::new(BigInt::from(1), BigInt::from(0)),
            Err(AlgebraError::DivisionByZero)
        ));
        assert!("3/0".parse::<Rat>().is_err());
    }

    #[test]
    fn parse_and_arith() {
        let x: Rat = "3/4".parse().unwrap();
        let y: Rat = "-1/4".parse().unwrap();
        assert_eq!(&x + &y, Rat::frac(1, 2));
        assert_eq!(&x * &y, Rat::frac(-3, 16));
        assert_eq!(Rat::frac(2, 3).pow(-2).unwrap(), Rat::frac(9, 4));
    }

    #[test]
    fn content_of_list() {
        let c = Rat::content(&[Rat::frac(2, 3), Rat::frac(4, 9)]);
        assert_eq!(c, Rat::frac(2, 9));
    }
}
