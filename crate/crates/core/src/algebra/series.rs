//! Truncated power series in `x` with coefficients in the parameter fraction field.

use std::fmt;

use super::{AlgebraError, Frac, MPoly, Rat};

/// Coefficients `0..=order` of a power series. Operations never report more
/// coefficients than their inputs determine.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Frac>,
}

pub fn series_equal_upto(s: &Series, t: &Series, n: usize) -> Result<bool, AlgebraError> {
    s.equal_upto(t, n)
}

impl Series {
    /// Panics if `coeffs` is empty or of mixed arity.
    pub fn new(coeffs: Vec<Frac>) -> Series {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        let n = coeffs[0].nvars();
        assert!(coeffs.iter().all(|c| c.nvars() == n), "mixed coefficient arity");
        Series { coeffs }
    }

    pub fn from_polys(coeffs: Vec<MPoly>) -> Series {
        Series::new(coeffs.into_iter().map(Frac::from_poly).collect())
    }

    pub fn from_ints(nparams: usize, values: &[i64]) -> Series {
        Series::new(values.iter().map(|&v| Frac::from_int(nparams, v)).collect())
    }

    pub fn from_rats(nparams: usize, values: &[Rat]) -> Series {
        Series::new(values.iter().map(|v| Frac::from_rat(nparams, v.clone())).collect())
    }

    pub fn zero(nparams: usize, order: usize) -> Series {
        Series { coeffs: vec![Frac::zero(nparams); order + 1] }
    }

    pub fn one(nparams: usize, order: usize) -> Series {
        let mut s = Series::zero(nparams, order);
        s.coeffs[0] = Frac::one(nparams);
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn nparams(&self) -> usize {
        self.coeffs[0].nvars()
    }

    pub fn coeffs(&self) -> &[Frac] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Result<&Frac, AlgebraError> {
        self.coeffs.get(i).ok_or(AlgebraError::InsufficientOrder { needed: i, have: self.order() })
    }

    pub fn truncate(&self, order: usize) -> Result<Series, AlgebraError> {
        self.require(order)?;
        Ok(Series { coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn require(&self, order: usize) -> Result<(), AlgebraError> {
        if self.order() < order {
            Err(AlgebraError::InsufficientOrder { needed: order, have: self.order() })
        } else {
            Ok(())
        }
    }

    pub fn equal_upto(&self, other: &Series, n: usize) -> Result<bool, AlgebraError> {
        self.require(n)?;
        other.require(n)?;
        Ok(self.coeffs[..=n] == other.coeffs[..=n])
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series { coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series { coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect() }
    }

    pub fn neg(&self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Frac) -> Series {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Cauchy product. When an operand has valuation `v`, the other one's
    /// unknown tail only enters from index `order + v + 1` on.
    pub fn mul(&self, other: &Series) -> Series {
        let va = self.valuation().unwrap_or(self.order() + 1);
        let vb = other.valuation().unwrap_or(other.order() + 1);
        let n = (self.order() + vb).min(other.order() + va);
        let np = self.nparams();
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = Frac::zero(np);
                for i in va..=k.saturating_sub(vb) {
                    let (Some(a), Some(b)) = (self.coeffs.get(i), other.coeffs.get(k - i)) else {
                        continue;
                    };
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect();
        Series { coeffs }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Series, AlgebraError> {
        let inv0 = self.coeffs[0].recip().map_err(|_| AlgebraError::NotExpandable)?;
        let np = self.nparams();
        let mut out: Vec<Frac> = vec![inv0.clone()];
        for n in 1..=self.order() {
            let mut acc = Frac::zero(np);
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[n - i]);
                }
            }
            out.push(-&(&acc * &inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// Multiply by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Series {
        let mut coeffs = vec![Frac::zero(self.nparams()); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Divide by `x^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Series, AlgebraError> {
        if k > self.order() {
            return Err(AlgebraError::InsufficientOrder { needed: k, have: self.order() });
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(AlgebraError::NotExpandable);
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval_params(&self, point: &[Rat]) -> Result<Series, AlgebraError> {
        let full: Vec<Option<Rat>> = point.iter().cloned().map(Some).collect();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.eval_partial(&full))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series { coeffs })
    }

    /// Coefficients as rationals; `None` if any still depends on parameters.
    pub fn to_rats(&self) -> Option<Vec<Rat>> {
        self.coeffs.iter().map(Frac::as_constant).collect()
    }

    pub fn to_strings(&self, params: &[&str]) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string_with(params)).collect()
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()?;
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_checks_order() {
        let s = Series::from_ints(0, &[1, 1, 2, 5]);
        let t = Series::from_ints(0, &[1, 1, 3, 5]);
        assert!(series_equal_upto(&s, &s, 3).unwrap());
        assert!(!series_equal_upto(&s, &t, 2).unwrap());
        assert!(series_equal_upto(&s, &t, 1).unwrap());
        assert!(series_equal_upto(&s, &t, 4).is_err());
    }

    #[test]
    fn product_order_accounts_for_valuation() {
        let x = Series::from_ints(0, &[0, 1, 0]);
        let s = Series::from_ints(0, &[1, 1, 1, 1]);
        let p = x.mul(&s);
        assert_eq!(p.order(), 2);
        assert_eq!(p.to_rats().unwrap(), [0, 1, 1].map(Rat::from_int).to_vec());
        let xx = Series::from_ints(0, &[0, 1, 0, 0, 0]);
        assert_eq!(xx.mul(&s).order(), 4);
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let s = Series::from_ints(0, &[1, -1, 0, 0, 0]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.to_rats().unwrap(), vec![Rat::one(); 5]);
        assert!(Series::from_ints(0, &[0, 1]).inverse().is_err());
    }
}
