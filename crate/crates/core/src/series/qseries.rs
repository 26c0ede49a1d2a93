use num_traits::One;

use super::laurent::{rat, HalfLaurent, Rat};
use crate::error::{Error, Result};

/// Exponent vector of `(Qs, Q1, Q2, Q3)`.
pub type QExp = [u32; 4];

pub const VAR_NAMES: [&str; 4] = ["Qs", "Q1", "Q2", "Q3"];

/// A signed monomial `sign * Qs^b Q1^d1 Q2^d2 Q3^d3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QMonomial {
    pub sign: i8,
    pub exp: QExp,
}

impl QMonomial {
    pub fn new(sign: i8, exp: QExp) -> Self {
        assert!(sign == 1 || sign == -1, "monomial sign must be +1 or -1");
        QMonomial { sign, exp }
    }

    pub fn plus(exp: QExp) -> Self {
        Self::new(1, exp)
    }

    pub fn minus(exp: QExp) -> Self {
        Self::new(-1, exp)
    }
}

/// Truncated power series in `(Qs, Q1, Q2, Q3)` with `HalfLaurent` coefficients.
///
/// Storage is dense over the box `0 <= exp <= caps`; each coefficient carries its own window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    caps: QExp,
    terms: Vec<HalfLaurent>,
}

fn grid_len(caps: &QExp) -> usize {
    caps.iter().map(|&c| c as usize + 1).product()
}

impl QSeries {
    pub fn zero(caps: QExp, hi: i64) -> Self {
        QSeries { caps, terms: vec![HalfLaurent::zero(hi); grid_len(&caps)] }
    }

    pub fn one(caps: QExp, hi: i64) -> Self {
        Self::constant(HalfLaurent::one(hi), caps)
    }

    /// The series with the given Q-constant coefficient and zero elsewhere.
    pub fn constant(c: HalfLaurent, caps: QExp) -> Self {
        Self::monomial(c, [0; 4], caps)
    }

    /// `c * Q^exp`; zero if `exp` lies outside the caps.
    pub fn monomial(c: HalfLaurent, exp: QExp, caps: QExp) -> Self {
        let mut s = Self::zero(caps, c.hi());
        if let Some(i) = s.index(&exp) {
            s.terms[i] = c;
        }
        s
    }

    /// Univariate template `sum_k coeffs[k] Q^k`, stored in the `Qs` slot.
    pub fn univariate(coeffs: Vec<HalfLaurent>) -> Self {
        assert!(!coeffs.is_empty(), "template needs at least a constant term");
        let caps = [coeffs.len() as u32 - 1, 0, 0, 0];
        QSeries { caps, terms: coeffs }
    }

    pub fn caps(&self) -> QExp {
        self.caps
    }

    fn index(&self, e: &QExp) -> Option<usize> {
        let mut idx = 0usize;
        for (&x, &cap) in e.iter().zip(&self.caps) {
            if x > cap {
                return None;
            }
            idx = idx * (cap as usize + 1) + x as usize;
        }
        Some(idx)
    }

    fn exp_of(&self, mut idx: usize) -> QExp {
        let mut e = [0u32; 4];
        for v in (0..4).rev() {
            let r = self.caps[v] as usize + 1;
            e[v] = (idx % r) as u32;
            idx /= r;
        }
        e
    }

    /// All exponent vectors within caps, in lexicographic order.
    pub fn exps(&self) -> Vec<QExp> {
        (0..self.terms.len()).map(|i| self.exp_of(i)).collect()
    }

    /// Coefficient of `Q^exp`; errors outside the caps.
    pub fn coeff(&self, exp: QExp) -> Result<&HalfLaurent> {
        self.index(&exp).map(|i| &self.terms[i]).ok_or(Error::OutsideCaps { exp, caps: self.caps })
    }

    pub fn set_coeff(&mut self, exp: QExp, c: HalfLaurent) -> Result<()> {
        let i = self.index(&exp).ok_or(Error::OutsideCaps { exp, caps: self.caps })?;
        self.terms[i] = c;
        Ok(())
    }

    /// `(exp, coefficient)` pairs for every nonzero coefficient, lexicographic.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (QExp, &HalfLaurent)> + '_ {
        self.terms.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.exp_of(i), c))
    }

    /// Shared window: lowest nonzero exponent and worst precision over all coefficients.
    pub fn window(&self) -> (i64, i64) {
        let hi = self.terms.iter().map(|c| c.hi()).min().expect("grid is never empty");
        let lo = self.terms.iter().filter_map(|c| c.valuation()).min().unwrap_or(hi + 1);
        (lo, hi)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|c| c.is_zero())
    }

    fn same_caps(&self, other: &Self) -> Result<()> {
        if self.caps == other.caps {
            Ok(())
        } else {
            Err(Error::CapsMismatch(self.caps, other.caps))
        }
    }

    pub fn map<F: Fn(&HalfLaurent) -> HalfLaurent>(&self, f: F) -> Self {
        QSeries { caps: self.caps, terms: self.terms.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_caps(other)?;
        let terms = self.terms.iter().zip(&other.terms).map(|(a, b)| a.add(b)).collect();
        Ok(QSeries { caps: self.caps, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Multiplies every coefficient by a Q-free series.
    pub fn mul_laurent(&self, c: &HalfLaurent) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_caps(other)?;
        let exps = self.exps();
        let mut acc: Vec<Option<HalfLaurent>> = vec![None; self.terms.len()];
        for (i, ei) in exps.iter().enumerate() {
            for (j, ej) in exps.iter().enumerate() {
                let e = [ei[0] + ej[0], ei[1] + ej[1], ei[2] + ej[2], ei[3] + ej[3]];
                let Some(k) = self.index(&e) else { continue };
                let prod = self.terms[i].mul(&other.terms[j]);
                acc[k] = Some(match acc[k].take() {
                    None => prod,
                    Some(a) => a.add(&prod),
                });
            }
        }
        let out =
            QSeries { caps: self.caps, terms: acc.into_iter().map(|c| c.expect("every index reached")).collect() };
        out.check_window()?;
        Ok(out)
    }

    fn check_window(&self) -> Result<()> {
        let (lo, hi) = self.window();
        if !self.is_zero() && hi < lo {
            return Err(Error::WindowExhausted { needed: lo, have: hi });
        }
        Ok(())
    }

    /// Multiplicative inverse; the constant coefficient must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.terms[0].inverse()?;
        let exps = self.exps();
        let mut out: Vec<HalfLaurent> = Vec::with_capacity(self.terms.len());
        out.push(inv0.clone());
        for (n, en) in exps.iter().enumerate().skip(1) {
            let mut acc: Option<HalfLaurent> = None;
            for (i, ei) in exps.iter().enumerate().take(n + 1).skip(1) {
                if (0..4).any(|v| ei[v] > en[v]) {
                    continue;
                }
                let rest = [en[0] - ei[0], en[1] - ei[1], en[2] - ei[2], en[3] - ei[3]];
                let r = self.index(&rest).expect("sub-exponent within caps");
                let prod = self.terms[i].mul(&out[r]);
                acc = Some(match acc {
                    None => prod,
                    Some(a) => a.add(&prod),
                });
            }
            let acc = acc.expect("n > 0 has at least one splitting");
            out.push(acc.mul(&inv0).neg());
        }
        let out = QSeries { caps: self.caps, terms: out };
        out.check_window()?;
        Ok(out)
    }

    /// Integer power; negative powers invert first.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc: Option<QSeries> = None;
        let mut sq = base;
        if k == 0 {
            let (_, hi) = self.window();
            return Ok(QSeries::one(self.caps, hi.max(0)));
        }
        while k > 0 {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => sq.clone(),
                    Some(a) => a.mul(&sq)?,
                });
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc.expect("k > 0"))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }

    fn total_cap(&self) -> u32 {
        self.caps.iter().sum()
    }

    /// Formal logarithm; the Q-constant coefficient must be exactly 1.
    pub fn log(&self) -> Result<Self> {
        let c0 = &self.terms[0];
        let mut terms = c0.terms();
        let is_one = matches!(terms.next(), Some((0, c)) if c.is_one()) && terms.next().is_none();
        if !is_one {
            return Err(Error::LogConstant);
        }
        let mut x = self.clone();
        x.terms[0] = HalfLaurent::zero(c0.hi());
        let mut result = QSeries::zero(self.caps, c0.hi());
        let mut power = x.clone();
        for k in 1..=self.total_cap() as i64 {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            result = result.add(&power.scale(&Rat::new(sign.into(), k.into())))?;
            power = power.mul(&x)?;
        }
        Ok(result)
    }

    /// Formal exponential of a series with zero Q-constant coefficient.
    pub fn exp(&self) -> Result<Self> {
        if !self.terms[0].is_zero() {
            return Err(Error::NonUnit("exp needs zero Q-constant coefficient".into()));
        }
        let hi = self.terms[0].hi();
        let mut result = QSeries::one(self.caps, hi);
        let mut power = QSeries::one(self.caps, hi);
        let mut fact = Rat::one();
        for k in 1..=self.total_cap() as i64 {
            power = power.mul(self)?;
            fact *= rat(k);
            result = result.add(&power.scale(&(Rat::one() / &fact)))?;
        }
        Ok(result)
    }

    /// Substitutes `Q -> sign * Q^exp` into a univariate template.
    pub fn subst_q_monomial(template: &QSeries, target: QMonomial, caps: QExp) -> Result<Self> {
        let t_cap = template.caps[0];
        if target.exp == [0; 4] {
            return Err(Error::Parse("substitution target must be a non-constant monomial".into()));
        }
        let hi = template.terms.iter().map(|c| c.hi()).min().expect("template non-empty");
        let mut out = QSeries::zero(caps, hi);
        let mut k = 0u32;
        loop {
            let e = target.exp.map(|x| x * k);
            let Some(i) = out.index(&e) else { break };
            if k > t_cap {
                return Err(Error::OutsideCaps { exp: [k, 0, 0, 0], caps: template.caps });
            }
            let c = &template.terms[k as usize];
            out.terms[i] = if target.sign < 0 && k % 2 == 1 { c.neg() } else { c.clone() };
            k += 1;
        }
        Ok(out)
    }

    /// Drops coefficients outside the new (smaller) caps.
    pub fn restrict_caps(&self, caps: QExp) -> Self {
        let hi = self.window().1;
        let mut out = QSeries::zero(caps, hi);
        for (i, e) in out.exps().into_iter().enumerate() {
            if let Some(j) = self.index(&e) {
                out.terms[i] = self.terms[j].clone();
            }
        }
        out
    }

    /// Re-embeds into larger caps; new coefficients are exact zeros at the current precision.
    pub fn extend_caps(&self, caps: QExp) -> Self {
        let hi = self.window().1;
        let mut out = QSeries::zero(caps, hi);
        for (i, e) in self.exps().into_iter().enumerate() {
            if let Some(j) = out.index(&e) {
                out.terms[j] = self.terms[i].clone();
            }
        }
        out
    }

    /// Lowers every coefficient's precision to at most `hi`.
    pub fn truncate(&self, hi: i64) -> Self {
        self.map(|c| c.truncate(hi))
    }

    /// Checks every coefficient is known on `[lo, hi]` and the two series agree there.
    pub fn agree_on(&self, other: &Self, lo: i64, hi: i64) -> Result<()> {
        self.same_caps(other)?;
        for (i, e) in self.exps().into_iter().enumerate() {
            self.terms[i].agree_on(&other.terms[i], lo, hi).map_err(|err| match err {
                Error::Mismatch(m) => Error::Mismatch(format!("Q^{e:?}: {m}")),
                other => other,
            })?;
        }
        Ok(())
    }

    /// Requires every coefficient to be known up to `hi`.
    pub fn require(&self, hi: i64) -> Result<()> {
        let have = self.window().1;
        if have < hi {
            Err(Error::WindowExhausted { needed: hi, have })
        } else {
            Ok(())
        }
    }

    /// True when every coefficient is a series in p.
    pub fn is_p_integral(&self) -> bool {
        self.terms.iter().all(|c| c.is_p_integral())
    }

    /// Sets every Q-variable to zero.
    pub fn q_constant(&self) -> HalfLaurent {
        self.terms[0].clone()
    }

    /// Multiplies by the monomial `Q^exp`, dropping anything past the caps.
    pub fn shift_q(&self, exp: QExp) -> Self {
        let hi = self.window().1;
        let mut out = QSeries::zero(self.caps, hi);
        for (i, e) in self.exps().into_iter().enumerate() {
            let t = [e[0] + exp[0], e[1] + exp[1], e[2] + exp[2], e[3] + exp[3]];
            if let Some(j) = out.index(&t) {
                out.terms[j] = self.terms[i].clone();
            }
        }
        out
    }

    /// Substitutes `Q_v -> -Q_v` for the selected variables.
    pub fn negate_vars(&self, vars: [bool; 4]) -> Self {
        let mut out = self.clone();
        for (i, e) in self.exps().into_iter().enumerate() {
            let odd = (0..4).filter(|&v| vars[v]).map(|v| e[v]).sum::<u32>() % 2 == 1;
            if odd {
                out.terms[i] = out.terms[i].neg();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3_poly(coeffs: &[i64], hi: i64) -> QSeries {
        let mut s = QSeries::zero([0, 0, 0, coeffs.len() as u32 - 1], hi);
        for (k, &c) in coeffs.iter().enumerate() {
            s.set_coeff([0, 0, 0, k as u32], HalfLaurent::constant(rat(c), hi)).unwrap();
        }
        s
    }

    #[test]
    fn product_of_conjugates() {
        let caps = [0, 0, 2, 0];
        let q = HalfLaurent::monomial(rat(1), 1, 20);
        let a = QSeries::one(caps, 20).add(&QSeries::monomial(q.clone(), [0, 0, 1, 0], caps)).unwrap();
        let b = QSeries::one(caps, 20).add(&QSeries::monomial(q.neg(), [0, 0, 1, 0], caps)).unwrap();
        let c = a.mul(&b).unwrap();
        assert!(c.coeff([0, 0, 1, 0]).unwrap().is_zero());
        assert_eq!(c.coeff([0, 0, 2, 0]).unwrap().coeff(2).unwrap(), rat(-1));
    }

    #[test]
    fn invert_one_plus_q3() {
        let inv = q3_poly(&[1, 1, 0, 0, 0], 10).invert().unwrap();
        for k in 0..5 {
            let want = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(inv.coeff([0, 0, 0, k]).unwrap().coeff(0).unwrap(), rat(want));
        }
    }

    #[test]
    fn log_of_one_plus_qs() {
        let s = QSeries::univariate(vec![
            HalfLaurent::one(8),
            HalfLaurent::one(8),
            HalfLaurent::zero(8),
            HalfLaurent::zero(8),
        ]);
        let l = s.log().unwrap();
        assert_eq!(l.coeff([1, 0, 0, 0]).unwrap().coeff(0).unwrap(), rat(1));
        assert_eq!(l.coeff([2, 0, 0, 0]).unwrap().coeff(0).unwrap(), Rat::new((-1).into(), 2.into()));
        assert_eq!(l.coeff([3, 0, 0, 0]).unwrap().coeff(0).unwrap(), Rat::new(1.into(), 3.into()));
        assert!(l.exp().unwrap().agree_on(&s, -2, 8).is_ok());
    }

    #[test]
    fn log_rejects_bad_constant() {
        let s = q3_poly(&[2, 1], 4);
        assert_eq!(s.log(), Err(Error::LogConstant));
    }

    #[test]
    fn substitution_signs() {
        let t = QSeries::univariate(vec![
            HalfLaurent::one(10),
            HalfLaurent::p_monomial(1, 1, 10),
            HalfLaurent::p_monomial(1, 2, 10),
        ]);
        let s = QSeries::subst_q_monomial(&t, QMonomial::minus([0, 0, 1, 1]), [0, 0, 2, 2]).unwrap();
        assert_eq!(s.coeff([0, 0, 1, 1]).unwrap().coeff(2).unwrap(), rat(-1));
        assert_eq!(s.coeff([0, 0, 2, 2]).unwrap().coeff(4).unwrap(), rat(1));
        assert!(s.coeff([0, 0, 1, 0]).unwrap().is_zero());
    }

    #[test]
    fn coeff_outside_caps_errors() {
        let s = q3_poly(&[1, 1], 4);
        assert!(s.coeff([0, 0, 0, 2]).is_err());
        assert_eq!(s.coeff([0, 0, 0, 1]).unwrap().coeff(0).unwrap(), rat(1));
    }
}
