use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Truncated Laurent series in q = p^{1/2} with exact rational coefficients.
///
/// Every coefficient below `lo` is zero and every coefficient up to `hi` is exact;
/// nothing is known above `hi`. `lo` is kept at the lowest nonzero term when there is one,
/// so an empty series has `lo == hi + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfLaurent {
    lo: i64,
    hi: i64,
    coeffs: Vec<Rat>,
}

impl HalfLaurent {
    /// Zero, known up to `hi`.
    pub fn zero(hi: i64) -> Self {
        HalfLaurent { lo: hi + 1, hi, coeffs: Vec::new() }
    }

    pub fn one(hi: i64) -> Self {
        Self::monomial(Rat::one(), 0, hi)
    }

    pub fn constant(c: Rat, hi: i64) -> Self {
        Self::monomial(c, 0, hi)
    }

    /// `c * q^e`, known up to `hi`.
    pub fn monomial(c: Rat, e: i64, hi: i64) -> Self {
        Self::from_terms([(e, c)], hi)
    }

    /// `c * p^e`, known up to q-exponent `hi`.
    pub fn p_monomial(c: i64, e: i64, hi: i64) -> Self {
        Self::monomial(rat(c), 2 * e, hi)
    }

    /// Builds a series from `(q-exponent, coefficient)` pairs; terms above `hi` are dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I, hi: i64) -> Self {
        let terms: Vec<(i64, Rat)> = terms.into_iter().filter(|(e, c)| *e <= hi && !c.is_zero()).collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero(hi);
        };
        let mut coeffs = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        let mut s = HalfLaurent { lo, hi, coeffs };
        s.normalize();
        s
    }

    /// Builds a series in p from integer `(p-exponent, coefficient)` pairs.
    pub fn from_p_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I, hi: i64) -> Self {
        Self::from_terms(terms.into_iter().map(|(e, c)| (2 * e, rat(c))), hi)
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.lo = self.hi + 1;
            }
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.lo += k as i64;
            }
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.lo)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^e`, or `None` when `e` lies above the precision.
    pub fn coeff(&self, e: i64) -> Option<Rat> {
        if e > self.hi {
            None
        } else if e < self.lo {
            Some(Rat::zero())
        } else {
            Some(self.coeffs[(e - self.lo) as usize].clone())
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Lowers the precision to `hi` (no-op if already lower).
    pub fn truncate(&self, hi: i64) -> Self {
        if hi >= self.hi {
            return self.clone();
        }
        let keep = (hi - self.lo + 1).max(0) as usize;
        let mut s =
            HalfLaurent { lo: self.lo.min(hi + 1), hi, coeffs: self.coeffs[..keep.min(self.coeffs.len())].to_vec() };
        s.normalize();
        s
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        HalfLaurent { lo: self.lo + k, hi: self.hi + k, coeffs: self.coeffs.clone() }
    }

    /// Substitutes `q -> q^m` (so `p -> p^m`), `m >= 1`.
    pub fn scale_exponents(&self, m: i64) -> Self {
        assert!(m >= 1, "exponent scale must be positive");
        let hi = m * self.hi + m - 1;
        Self::from_terms(self.terms().map(|(e, c)| (e * m, c.clone())), hi)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut s = HalfLaurent { lo: self.lo, hi: self.hi, coeffs: self.coeffs.iter().map(|x| x * c).collect() };
        s.normalize();
        s
    }

    pub fn neg(&self) -> Self {
        HalfLaurent { lo: self.lo, hi: self.hi, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let hi = self.hi.min(other.hi);
        let lo = self.lo.min(other.lo).min(hi + 1);
        let mut coeffs = vec![Rat::zero(); (hi - lo + 1) as usize];
        for s in [self, other] {
            for (e, c) in s.terms() {
                if e <= hi {
                    coeffs[(e - lo) as usize] += c;
                }
            }
        }
        let mut s = HalfLaurent { lo, hi, coeffs };
        s.normalize();
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let hi = (self.hi + other.lo).min(other.hi + self.lo);
        let lo = (self.lo + other.lo).min(hi + 1);
        let mut coeffs = vec![Rat::zero(); (hi - lo + 1).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = self.lo + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ea + other.lo + j as i64;
                if e > hi {
                    break;
                }
                if !b.is_zero() {
                    coeffs[(e - lo) as usize] += a * b;
                }
            }
        }
        let mut s = HalfLaurent { lo, hi, coeffs };
        s.normalize();
        s
    }

    /// Multiplicative inverse; the lowest nonzero term must be known.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.valuation().ok_or_else(|| Error::NonUnit("zero within window".into()))?;
        let rel = self.hi - v;
        let a0_inv = Rat::one() / &self.coeffs[0];
        let n = (rel + 1) as usize;
        let mut b: Vec<Rat> = Vec::with_capacity(n);
        b.push(a0_inv.clone());
        for k in 1..n {
            let mut acc = Rat::zero();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[i];
                if !a.is_zero() && !b[k - i].is_zero() {
                    acc += a * &b[k - i];
                }
            }
            b.push(-(acc * &a0_inv));
        }
        let mut s = HalfLaurent { lo: -v, hi: -v + rel, coeffs: b };
        s.normalize();
        Ok(s)
    }

    /// Integer power; negative exponents go through `inverse`.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut k = n.unsigned_abs();
        if k == 0 {
            return Ok(HalfLaurent::one(self.hi.max(0)));
        }
        let mut acc: Option<HalfLaurent> = None;
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq),
                });
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc.expect("k > 0"))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// True when every nonzero exponent is even, i.e. the value is a series in p.
    pub fn is_p_integral(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.is_integer())
    }

    /// Checks that both series are known on `[lo, hi]` and agree there.
    pub fn agree_on(&self, other: &Self, lo: i64, hi: i64) -> Result<()> {
        for s in [self, other] {
            if s.hi < hi {
                return Err(Error::WindowExhausted { needed: hi, have: s.hi });
            }
        }
        for e in lo..=hi {
            let (a, b) = (self.coeff(e).unwrap(), other.coeff(e).unwrap());
            if a != b {
                return Err(Error::Mismatch(format!("q^{e}: {a} vs {b}")));
            }
        }
        Ok(())
    }

    /// Requires the precision to reach `hi`.
    pub fn require(&self, hi: i64) -> Result<()> {
        if self.hi < hi {
            Err(Error::WindowExhausted { needed: hi, have: self.hi })
        } else {
            Ok(())
        }
    }

    /// Largest absolute numerator, used for reporting sizes.
    pub fn max_abs(&self) -> Rat {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Rat::zero)
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})q^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.hi + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let one_minus_p = HalfLaurent::from_p_terms([(0, 1), (1, -1)], 20);
        let inv = one_minus_p.inverse().unwrap();
        for k in 0..10 {
            assert_eq!(inv.coeff(2 * k).unwrap(), rat(1));
            assert_eq!(inv.coeff(2 * k + 1).unwrap(), rat(0));
        }
        assert!(one_minus_p.mul(&inv).agree_on(&HalfLaurent::one(20), -4, 20).is_ok());
    }

    #[test]
    fn monomial_inverse() {
        let q2 = HalfLaurent::monomial(rat(1), 2, 10);
        let inv = q2.inverse().unwrap();
        assert_eq!(inv.valuation(), Some(-2));
        assert_eq!(inv.hi(), 6);
        assert_eq!(inv.terms().count(), 1);
    }

    #[test]
    fn precision_narrows_under_negative_order() {
        let a = HalfLaurent::from_terms([(-2, rat(1)), (0, rat(3))], 10);
        let b = HalfLaurent::from_terms([(0, rat(1)), (1, rat(1))], 10);
        let c = a.mul(&b);
        assert_eq!(c.hi(), 8);
        assert_eq!(c.lo(), -2);
    }

    #[test]
    fn zero_times_anything_keeps_precision() {
        let z = HalfLaurent::zero(6);
        let b = HalfLaurent::from_terms([(-4, rat(1))], 10);
        let c = z.mul(&b);
        assert!(c.is_zero());
        assert_eq!(c.hi(), 2);
    }

    #[test]
    fn scaling_exponents_extends_precision() {
        let a = HalfLaurent::from_p_terms([(0, 1), (1, 2)], 4);
        let s = a.scale_exponents(2);
        assert_eq!(s.hi(), 9);
        assert_eq!(s.coeff(4).unwrap(), rat(2));
    }
}
