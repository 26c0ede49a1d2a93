use num_bigint::BigInt;
use num_traits::Zero;

use super::psi::binomial;
use crate::error::Result;
use crate::series::{HalfLaurent, QExp, QMonomial, QSeries, Rat};

/// Plane partition counts `pp(0..=n)` from `n pp(n) = sum_k sigma_2(k) pp(n-k)`.
pub fn plane_partition_counts(n: usize) -> Vec<BigInt> {
    let sigma2: Vec<BigInt> = (0..=n)
        .map(|k| {
            if k == 0 {
                return BigInt::zero();
            }
            (1..=k).filter(|d| k % d == 0).map(|d| BigInt::from(d * d)).sum()
        })
        .collect();
    let mut pp = vec![BigInt::from(1)];
    for m in 1..=n {
        let s: BigInt = (1..=m).map(|k| &sigma2[k] * &pp[m - k]).sum();
        pp.push(s / BigInt::from(m));
    }
    pp
}

/// `M(p) = prod_{m>0} (1 - p^m)^{-m}`, exact through q-exponent `hi`.
pub fn macmahon_unit(hi: i64) -> HalfLaurent {
    if hi < 0 {
        return HalfLaurent::zero(hi);
    }
    let n = (hi / 2) as usize;
    let pp = plane_partition_counts(n);
    HalfLaurent::from_terms(pp.into_iter().enumerate().map(|(k, c)| (2 * k as i64, Rat::from_integer(c))), hi)
}

/// Largest `k` with `k * target` inside the caps.
pub(crate) fn template_degree(target: &QMonomial, caps: &QExp) -> usize {
    (0..4).filter(|&i| target.exp[i] > 0).map(|i| caps[i] / target.exp[i]).min().unwrap_or(0) as usize
}

/// Product of two univariate templates, truncated at the common length.
pub(crate) fn template_mul(a: &[HalfLaurent], b: &[HalfLaurent]) -> Vec<HalfLaurent> {
    let n = a.len().min(b.len());
    (0..n).map(|d| (1..=d).fold(a[0].mul(&b[d]), |acc, i| acc.add(&a[i].mul(&b[d - i])))).collect()
}

/// Template of `(1 - c p^e t)^power` in the variable `t`, up to `t^deg`.
pub(crate) fn binomial_template(c: i64, e: i64, power: i64, deg: usize, hi: i64) -> Vec<HalfLaurent> {
    let base = Rat::from_integer((-c).into());
    let mut out = Vec::with_capacity(deg + 1);
    let mut pow = Rat::from_integer(1.into());
    for k in 0..=deg {
        out.push(HalfLaurent::monomial(binomial(power, k as u32) * &pow, 2 * e * k as i64, hi));
        pow *= &base;
    }
    out
}

/// `(1 - c p^e target)^power` in the curve variables, exact through `hi`.
pub fn binomial_factor(c: i64, e: i64, target: QMonomial, power: i64, caps: QExp, hi: i64) -> Result<QSeries> {
    let deg = template_degree(&target, &caps);
    QSeries::subst_q_monomial(&QSeries::univariate(binomial_template(c, e, power, deg, hi)), target, caps)
}

/// Template of `M(p, t)^power` up to `t^deg`, exact through `hi`.
pub(crate) fn macmahon_template(power: i64, deg: usize, hi: i64) -> Vec<HalfLaurent> {
    let mut series: Vec<HalfLaurent> =
        (0..=deg).map(|d| if d == 0 { HalfLaurent::one(hi) } else { HalfLaurent::zero(hi) }).collect();
    if deg == 0 {
        return series;
    }
    // Factors with p^m beyond the window only touch exponents above `hi`.
    for m in 1..=(hi / 2).max(0) {
        let f = binomial_template(1, m, -m * power, deg, hi);
        series = template_mul(&series, &f).into_iter().map(|s| s.truncate(hi)).collect();
    }
    series
}

/// `M(p, target) = prod_{m>0} (1 - p^m target)^{-m}` as a series in the curve variables,
/// with every coefficient known through `hi`.
pub fn macmahon(target: QMonomial, caps: QExp, hi: i64) -> Result<QSeries> {
    macmahon_pow(target, 1, caps, hi)
}

/// `M(p, target)^power`.
pub fn macmahon_pow(target: QMonomial, power: i64, caps: QExp, hi: i64) -> Result<QSeries> {
    let deg = template_degree(&target, &caps);
    QSeries::subst_q_monomial(&QSeries::univariate(macmahon_template(power, deg, hi)), target, caps)
}
