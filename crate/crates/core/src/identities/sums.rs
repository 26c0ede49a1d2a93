use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{agree, agree_q};
use crate::closed_forms::{
    binomial_factor, binomial_template, macmahon, macmahon_pow, macmahon_unit, norm_d, template_mul, theta_coeffs,
};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::series::{HalfLaurent, QExp, QMonomial, QSeries};
use crate::strata::{phi_closed, phi_gf, PhiKind};
use crate::vertex::{min_renorm_volume, vertex_brute, VertexKey, VertexTable};

const SLACKS: [i64; 4] = [16, 32, 64, 128];

/// Runs `f` at growing working precision until it no longer runs out of window.
fn retry<T>(hi: i64, f: impl Fn(i64) -> Result<T>) -> Result<T> {
    let mut last = Error::WindowExhausted { needed: hi, have: hi };
    for s in SLACKS {
        match f(hi + s) {
            Err(e @ Error::WindowExhausted { .. }) => last = e,
            other => return other,
        }
    }
    Err(last)
}

/// `||x||^2 + ||x^t||^2`, the q-exponent of `p^{(||x||^2 + ||x^t||^2) / 2}`.
fn framing(x: &Partition) -> i64 {
    x.norm_sq() + x.conjugate().norm_sq()
}

/// Leg shapes of the oracle: the empty partition, one box and both two-box shapes.
pub fn oracle_legs() -> Vec<Partition> {
    vec![
        Partition::empty(),
        Partition::single(),
        Partition::from_unsorted(vec![2]),
        Partition::from_unsorted(vec![1, 1]),
    ]
}

pub(crate) fn oracle_keys() -> Vec<VertexKey> {
    let legs = oracle_legs();
    let mut keys = Vec::new();
    for l in &legs {
        for m in &legs {
            for n in &legs {
                keys.push(VertexKey(l.clone(), m.clone(), n.clone()));
            }
        }
    }
    keys
}

/// Closed formula against `p^{volume}` times the box count, through `hi` above the leading term.
pub(crate) fn check_oracle(keys: &[VertexKey], hi: i64) -> Result<()> {
    let max_extra = (hi / 2).max(0) as u32;
    keys.par_iter().try_for_each(|key| {
        let v = min_renorm_volume(key);
        let brute = vertex_brute(key, max_extra)?.shift(2 * v);
        let closed = VertexTable::new(2 * v + 2 * max_extra as i64).get(key)?;
        closed.agree_on(&brute, 2 * v, 2 * v + 2 * max_extra as i64).map_err(|e| match e {
            Error::Mismatch(m) => Error::Mismatch(format!("vertex-oracle {}: {m}", key.to_json())),
            other => other,
        })
    })
}

/// `M(p) num(p) / (p^a (1 - p)^b)`.
fn m_times_rational(num: &[i64], a: i64, b: i64, hi: i64) -> Result<HalfLaurent> {
    let w = hi + 2 * a + 8;
    let n = HalfLaurent::from_p_terms(num.iter().enumerate().map(|(i, &c)| (i as i64, c)), w);
    let den = HalfLaurent::from_p_terms([(0, 1), (1, -1)], w).pow(b)?;
    Ok(macmahon_unit(w).mul(&n).div(&den)?.shift(-2 * a))
}

pub(crate) fn check_squares(hi: i64) -> Result<usize> {
    let t = VertexTable::new(hi);
    let (e, b) = (Partition::empty(), Partition::single());
    let cases = [
        ((e.clone(), e.clone(), e.clone()), m_times_rational(&[1], 0, 0, hi)?),
        ((b.clone(), e.clone(), e.clone()), m_times_rational(&[1], 0, 1, hi)?),
        ((b.clone(), b.clone(), e.clone()), m_times_rational(&[1, -1, 1], 1, 2, hi)?),
        ((b.clone(), b.clone(), b.clone()), m_times_rational(&[1, -1, 1, -1, 1], 2, 3, hi)?),
    ];
    for ((l, m, n), want) in &cases {
        let key = VertexKey(l.clone(), m.clone(), n.clone());
        agree(&t.get(&key)?, want, hi, &format!("vertex-squares {}", key.to_json()))?;
    }
    Ok(cases.len())
}

/// `V_{l□□} V_{l∅∅} = p^{-1} V_{l∅∅}^2 + V_{l□∅} V_{l∅□}`.
pub(crate) fn check_splitting(lambdas: &[Partition], hi: i64) -> Result<()> {
    lambdas.par_iter().try_for_each(|l| {
        retry(hi, |w| {
            let t = VertexTable::new(w);
            let (e, b) = (Partition::empty(), Partition::single());
            let lee = t.v(l, &e, &e)?;
            let lhs = t.v(l, &b, &b)?.mul(&lee);
            let rhs = lee.mul(&lee).shift(-2).add(&t.v(l, &b, &e)?.mul(&t.v(l, &e, &b)?));
            agree(&lhs, &rhs, hi, &format!("vertex-splitting {}", l.to_json()))
        })
    })
}

/// Renormalized volumes `0`, `-l_1`, `-||l||^2` and `-l_1 - l^t_1` of the keys `(l,∅,∅)`,
/// `(l,□,∅)`, `(l,l^t,∅)` and (for nonempty `l`) `(l,□,□)`, each confirmed against the box count.
pub(crate) fn check_normalization(lambdas: &[Partition], hi: i64) -> Result<()> {
    let (e, b) = (Partition::empty(), Partition::single());
    for l in lambdas {
        let lt = l.conjugate();
        let mut cases = vec![
            (VertexKey(l.clone(), e.clone(), e.clone()), 0),
            (VertexKey(l.clone(), b.clone(), e.clone()), -(l.part(0) as i64)),
            (VertexKey(l.clone(), lt.clone(), e.clone()), -l.norm_sq()),
        ];
        // The count for (l,□,□) assumes the l-leg meets both box legs.
        if !l.is_empty() {
            cases.push((VertexKey(l.clone(), b.clone(), b.clone()), -(l.part(0) as i64) - lt.part(0) as i64));
        }
        for (key, want) in &cases {
            let got = min_renorm_volume(key);
            if got != *want {
                return Err(Error::Mismatch(format!(
                    "vertex-normalization {}: volume {got}, expected {want}",
                    key.to_json()
                )));
            }
        }
        let keys: Vec<VertexKey> = cases.into_iter().map(|(k, _)| k).collect();
        check_oracle(&keys, hi.min(8))?;
    }
    Ok(())
}

fn univariate_caps(deg: u32) -> QExp {
    [deg, 0, 0, 0]
}

fn t_pow(d: u32) -> QMonomial {
    QMonomial::plus([d, 0, 0, 0])
}

fn sum_over_partitions<F>(deg: u32, w: i64, f: F) -> Result<QSeries>
where
    F: Fn(&Partition) -> Result<HalfLaurent> + Sync,
{
    let coeffs = (0..=deg)
        .into_par_iter()
        .map(|a| {
            partitions_of(a).iter().try_fold(HalfLaurent::zero(w), |acc, alpha| Ok::<_, Error>(acc.add(&f(alpha)?)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QSeries::univariate(coeffs))
}

/// Left side of trace formula `n` (1 to 4) in the variable `Q`, placed in the first slot.
pub fn trace_sum(n: u8, deg: u32, hi: i64) -> Result<QSeries> {
    retry(hi, |w| {
        let t = VertexTable::new(w);
        let (e, b) = (Partition::empty(), Partition::single());
        let v000 = t.v(&e, &e, &e)?;
        let s = sum_over_partitions(deg, w, |a| {
            let ratio = || -> Result<HalfLaurent> { t.v(a, &b, &e)?.div(&t.v(a, &e, &e)?) };
            let diag = || -> Result<HalfLaurent> { Ok(t.v(a, &a.conjugate(), &e)?.div(&v000)?.shift(2 * a.norm_sq())) };
            match n {
                1 => Ok(HalfLaurent::one(w)),
                2 => ratio(),
                3 => diag(),
                _ => Ok(diag()?.mul(&ratio()?)),
            }
        })?;
        s.require(hi)?;
        Ok(s.truncate(hi))
    })
}

/// Right side of trace formula `n`.
pub fn trace_closed(n: u8, deg: u32, hi: i64) -> Result<QSeries> {
    let caps = univariate_caps(deg);
    let w = hi + 2 * deg as i64 + 8;
    let mut z = QSeries::one(caps, w);
    if matches!(n, 2 | 4) {
        z = z.mul_laurent(&HalfLaurent::from_p_terms([(0, 1), (1, -1)], w).inverse()?);
    }
    for d in 1..=deg {
        let t = t_pow(d);
        let mut factors = Vec::new();
        match n {
            1 => factors.push(binomial_factor(1, 0, t, -1, caps, w)?),
            2 => {
                factors.push(binomial_factor(1, 0, t, 1, caps, w)?);
                factors.push(binomial_factor(1, 1, t, -1, caps, w)?);
                factors.push(binomial_factor(1, -1, t, -1, caps, w)?);
            }
            3 => {
                factors.push(macmahon(t, caps, w)?);
                factors.push(binomial_factor(1, 0, t, -1, caps, w)?);
            }
            _ => {
                factors.push(macmahon(t, caps, w)?);
                factors.push(binomial_factor(1, 1, t, -1, caps, w)?);
                factors.push(binomial_factor(1, -1, t, -1, caps, w)?);
            }
        }
        for f in &factors {
            z = z.mul(f)?;
        }
    }
    Ok(z.truncate(hi))
}

/// `sum_{alpha, mu} Q2^{|alpha|} Q3^{|mu|} p^{...} V_{∅ mu alpha} V_{∅ mu^t alpha^t}` with both
/// degrees up to `deg`.
pub fn banana_double_sum(deg: u32, hi: i64) -> Result<QSeries> {
    let caps = [0, 0, deg, deg];
    retry(hi, |w| {
        let t = VertexTable::new(w);
        let e = Partition::empty();
        let cells: Vec<(u32, u32)> = (0..=deg).flat_map(|a| (0..=deg).map(move |m| (a, m))).collect();
        let values = cells
            .par_iter()
            .map(|&(a, m)| {
                let mut acc = HalfLaurent::zero(w);
                for alpha in partitions_of(a) {
                    for mu in partitions_of(m) {
                        let x = t.v(&e, &mu, &alpha)?.mul(&t.v(&e, &mu.conjugate(), &alpha.conjugate())?);
                        acc = acc.add(&x.shift(framing(&alpha) + framing(&mu)));
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut s = QSeries::zero(caps, w);
        for (&(a, m), v) in cells.iter().zip(values) {
            s.set_coeff([0, 0, a, m], v)?;
        }
        s.require(hi)?;
        Ok(s.truncate(hi))
    })
}

/// `M^2 prod_m M(p, Q2^m Q3^m)^2 / ((1 - Q2^m Q3^m) M(p, -Q2^{m-1} Q3^m) M(p, -Q2^m Q3^{m-1}))`.
pub fn banana_double_closed(deg: u32, hi: i64) -> Result<QSeries> {
    let caps = [0, 0, deg, deg];
    let w = hi + 8;
    let mut z = QSeries::constant(macmahon_unit(w).pow(2)?, caps);
    for m in 1..=deg + 1 {
        let diag = QMonomial::plus([0, 0, m, m]);
        let factors = [
            macmahon_pow(diag, 2, caps, w)?,
            binomial_factor(1, 0, diag, -1, caps, w)?,
            macmahon_pow(QMonomial::minus([0, 0, m - 1, m]), -1, caps, w)?,
            macmahon_pow(QMonomial::minus([0, 0, m, m - 1]), -1, caps, w)?,
        ];
        for f in &factors {
            z = z.mul(f)?;
        }
    }
    Ok(z.truncate(hi))
}

/// `phi_gf(kind)` against `phi_closed(kind)` through `t^deg`.
pub(crate) fn check_phi(kind: PhiKind, deg: u32, hi: i64) -> Result<()> {
    let lhs = retry(hi, |w| {
        let s = phi_gf(kind, deg, &VertexTable::new(w))?;
        s.require(hi)?;
        Ok(s.truncate(hi))
    })?;
    let rhs = QSeries::univariate(phi_closed(kind, deg, hi + 8));
    agree_q(&lhs, &rhs, hi, &format!("phi {kind}"))
}

/// The `PP` closed form exactly as printed, without the square of the `MM` polynomial.
pub fn phi_printed_pp(deg: u32, hi: i64) -> QSeries {
    let full = phi_closed(PhiKind::PP, deg, hi + 8);
    let t = phi_closed(PhiKind::MM, deg, hi + 8);
    let ee = phi_closed(PhiKind::EE, deg, hi + 8);
    // full = ee * (T^2 + P) and t = ee * T / p, so P-part = full - (p t)^2 / ee.
    let pt: Vec<HalfLaurent> = t.iter().map(|c| c.shift(2)).collect();
    let inv_ee = series_inverse(&ee);
    let square = template_mul(&template_mul(&pt, &pt), &inv_ee);
    QSeries::univariate(full.iter().zip(&square).map(|(a, b)| a.sub(b).truncate(hi)).collect())
}

fn series_inverse(a: &[HalfLaurent]) -> Vec<HalfLaurent> {
    let inv0 = a[0].inverse().expect("M(p)^2 is a unit");
    let mut out = vec![inv0.clone()];
    for m in 1..a.len() {
        let acc = (1..=m).fold(HalfLaurent::zero(inv0.hi()), |acc, i| acc.add(&a[i].mul(&out[m - i])));
        out.push(acc.mul(&inv0).neg());
    }
    out
}

/// `sum_alpha Q^{|alpha|} p^{(||alpha||^2 + ||alpha^t||^2)/2 + 1} V_{□∅alpha}^2`.
pub fn section_square_sum(deg: u32, hi: i64) -> Result<QSeries> {
    retry(hi, |w| {
        let t = VertexTable::new(w);
        let (e, b) = (Partition::empty(), Partition::single());
        let s = sum_over_partitions(deg, w, |a| {
            let v = t.v(&b, &e, a)?;
            Ok(v.mul(&v).shift(framing(a) + 2))
        })?;
        s.require(hi)?;
        Ok(s.truncate(hi))
    })
}

/// `M^2 prod (1 + p^m Q)^m (psi_0 + (2 psi_0 + psi_1) Q + (psi_0 + psi_1) Q^2)`.
pub fn section_square_closed(deg: u32, hi: i64) -> QSeries {
    QSeries::univariate(phi_closed(PhiKind::MBar, deg, hi + 8).iter().map(|c| c.shift(2).truncate(hi)).collect())
}

/// The rank-three triple sum, coefficients of total degree at most `deg`.
pub fn rank3_sum(deg: u32, hi: i64) -> Result<QSeries> {
    let caps = [0, deg, deg, deg];
    retry(hi, |w| {
        let t = VertexTable::new(w);
        let mut cells = Vec::new();
        for i in 0..=deg {
            for j in 0..=deg - i {
                for k in 0..=deg - i - j {
                    cells.push([0, i, j, k]);
                }
            }
        }
        let values = cells
            .par_iter()
            .map(|e| {
                let mut acc = HalfLaurent::zero(w);
                for nu in partitions_of(e[1]) {
                    for alpha in partitions_of(e[2]) {
                        for mu in partitions_of(e[3]) {
                            let x = t.v(&nu, &mu, &alpha)?.mul(&t.v(
                                &nu.conjugate(),
                                &mu.conjugate(),
                                &alpha.conjugate(),
                            )?);
                            acc = acc.add(&x.shift(framing(&nu) + framing(&alpha) + framing(&mu)));
                        }
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut s = QSeries::zero(caps, w);
        for (e, v) in cells.iter().zip(values) {
            s.set_coeff(*e, v)?;
        }
        for e in &cells {
            s.coeff(*e)?.require(hi)?;
        }
        Ok(s.truncate(hi))
    })
}

/// `prod_d prod_k (1 - (-Q1)^{d1} (-Q2)^{d2} (-Q3)^{d3} p^k)^{-c(||d||, k)}` with `k > 0` when
/// `d = 0`, coefficients of total degree at most `deg`.
pub fn rank3_product(deg: u32, hi: i64) -> Result<QSeries> {
    let caps = [0, deg, deg, deg];
    let w = hi + 8 * deg as i64 + 8;
    let mut ds = Vec::new();
    for i in 0..=deg {
        for j in 0..=deg - i {
            for k in 0..=deg - i - j {
                ds.push([i as i64, j as i64, k as i64]);
            }
        }
    }
    let a_max = ds.iter().map(|&d| norm_d(d)).max().unwrap_or(0);
    let k_hi = w / 2 + 4 * deg as i64 + 4;
    let theta = theta_coeffs(a_max, (-4 * (a_max + 2) - 8, k_hi))?;
    let mut by_a: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    for row in theta.rows()? {
        by_a.entry(row.a).or_default().push((row.k, row.c));
    }
    let mut z = QSeries::one(caps, w);
    for d in ds {
        let total = (d[0] + d[1] + d[2]) as u32;
        let a = norm_d(d);
        let Some(rows) = by_a.get(&a) else { continue };
        if total == 0 {
            let mut m = HalfLaurent::one(w);
            for &(k, c) in rows.iter().filter(|(k, _)| *k > 0) {
                m = m.mul(&HalfLaurent::from_p_terms([(0, 1), (k, -1)], w).pow(-c)?);
            }
            z = z.mul_laurent(&m);
            continue;
        }
        let tdeg = (deg as i64 / d.iter().copied().max().unwrap_or(1)) as usize;
        let sign = if total.is_multiple_of(2) { 1 } else { -1 };
        let mut template: Vec<HalfLaurent> =
            (0..=tdeg).map(|i| if i == 0 { HalfLaurent::one(w) } else { HalfLaurent::zero(w) }).collect();
        for &(k, c) in rows {
            template = template_mul(&template, &binomial_template(sign, k, -c, tdeg, w));
        }
        let target = QMonomial::plus([0, d[0] as u32, d[1] as u32, d[2] as u32]);
        z = z.mul(&QSeries::subst_q_monomial(&QSeries::univariate(template), target, caps)?)?;
    }
    Ok(z.truncate(hi))
}
