use super::macmahon::{binomial_factor, macmahon_pow, macmahon_unit};
use crate::error::Result;
use crate::series::{QExp, QMonomial, QSeries};

/// Largest `d` for which `Q2^{d-1} Q3^d` or `Q2^d Q3^{d-1}` fits in the caps.
fn fibre_degree(caps: &QExp) -> u32 {
    caps[2].max(caps[3]) + 1
}

/// The fibre-class partition function
/// `M(p)^24 prod_{d>0} M(p, Q2^d Q3^d)^24 / ((1 - Q2^d Q3^d)^12 M(p, -Q2^{d-1} Q3^d)^12 M(p, -Q2^d Q3^{d-1})^12)`
/// in the variables `Q2, Q3` (the other caps must be zero).
pub fn z_fibre_closed(caps: QExp, hi: i64) -> Result<QSeries> {
    let mut z = QSeries::constant(macmahon_unit(hi).pow(24)?, caps);
    for d in 1..=fibre_degree(&caps) {
        let diag = [0, 0, d, d];
        let factors = [
            macmahon_pow(QMonomial::plus(diag), 24, caps, hi)?,
            binomial_factor(1, 0, QMonomial::plus(diag), -12, caps, hi)?,
            macmahon_pow(QMonomial::minus([0, 0, d - 1, d]), -12, caps, hi)?,
            macmahon_pow(QMonomial::minus([0, 0, d, d - 1]), -12, caps, hi)?,
        ];
        for f in &factors {
            z = z.mul(f)?;
        }
    }
    Ok(z)
}

/// `prod_{m>0} 1 / ((1 - Q^m)^8 (1 - p Q^m)^2 (1 - p^{-1} Q^m)^2)` with `Q = Q2 Q3`.
pub fn section_product(caps: QExp, hi: i64) -> Result<QSeries> {
    let mut z = QSeries::one(caps, hi);
    for m in 1..=caps[2].min(caps[3]) {
        let t = QMonomial::plus([0, 0, m, m]);
        for (e, power) in [(0, -8), (1, -2), (-1, -2)] {
            z = z.mul(&binomial_factor(1, e, t, power, caps, hi)?)?;
        }
    }
    Ok(z)
}
