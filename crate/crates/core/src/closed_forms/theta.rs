//! Coefficients `c(a, k)` of `theta_4(2 tau, z) / theta_1(4 tau, z)^2`.
//!
//! With `Q = e^{2 pi i tau}` and `y = e^{2 pi i z}` the numerator is `sum_k Q^{k^2} (-y)^k`
//! and the denominator is `Q * E` with
//! `E = sum_{j1, j2} Q^{2(j1^2 + j1 + j2^2 + j2)} (-y)^{j1 + j2 + 1}`.
//! The `Q^0` part of `E` is `-y^{-1} (1 - y)^2`, so the quotient is expanded in positive
//! powers of `y`. Laurent series in `y` reuse [`HalfLaurent`] with `y` in place of `q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{rat, HalfLaurent};

const MAX_RETRIES: usize = 6;

/// `||d|| = 2 d1 d2 + 2 d1 d3 + 2 d2 d3 - d1^2 - d2^2 - d3^2`.
pub fn norm_d(d: [i64; 3]) -> i64 {
    let [a, b, c] = d;
    2 * a * b + 2 * a * c + 2 * b * c - a * a - b * b - c * c
}

/// One `c(a, k)` value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaRow {
    pub a: i64,
    pub k: i64,
    pub c: i64,
}

/// `c(a, k)` for `-1 <= a <= a_max` and `k` in a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaCoeffTable {
    pub a_max: i64,
    pub k_window: (i64, i64),
    entries: BTreeMap<(i64, i64), BigInt>,
}

impl ThetaCoeffTable {
    /// `c(a, k)`; zero for `a < -1`, `None` outside the computed bounds.
    pub fn get(&self, a: i64, k: i64) -> Option<BigInt> {
        if a < -1 {
            return Some(BigInt::from(0));
        }
        if a > self.a_max || k < self.k_window.0 || k > self.k_window.1 {
            return None;
        }
        Some(self.entries.get(&(a, k)).cloned().unwrap_or_default())
    }

    /// Nonzero entries in `(a, k)` order.
    pub fn rows(&self) -> Result<Vec<ThetaRow>> {
        self.entries
            .iter()
            .map(|(&(a, k), c)| {
                let c = i64::try_from(c).map_err(|_| Error::Parse(format!("c({a},{k}) exceeds i64")))?;
                Ok(ThetaRow { a, k, c })
            })
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(&self.rows()?).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Parses the row format written by [`ThetaCoeffTable::to_json`]. Bounds are taken from
    /// the rows, so only the nonzero support is recovered.
    pub fn from_json(s: &str) -> Result<Self> {
        let rows: Vec<ThetaRow> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for r in &rows {
            if r.a < -1 {
                return Err(Error::Parse(format!("row with a = {} < -1", r.a)));
            }
            if r.c == 0 {
                return Err(Error::Parse(format!("zero row at ({}, {})", r.a, r.k)));
            }
            if entries.insert((r.a, r.k), BigInt::from(r.c)).is_some() {
                return Err(Error::Parse(format!("duplicate row ({}, {})", r.a, r.k)));
            }
        }
        let a_max = rows.iter().map(|r| r.a).max().unwrap_or(-1);
        let k_lo = rows.iter().map(|r| r.k).min().unwrap_or(0);
        let k_hi = rows.iter().map(|r| r.k).max().unwrap_or(0);
        Ok(ThetaCoeffTable { a_max, k_window: (k_lo, k_hi), entries })
    }
}

/// `(-y)^e` as a single-term Laurent series.
fn signed_y(e: i64, coeff: i64, hi: i64) -> HalfLaurent {
    let s = if e.rem_euclid(2) == 1 { -coeff } else { coeff };
    HalfLaurent::monomial(rat(s), e, hi)
}

/// Numerator `Q`-coefficients `0..=n`.
fn numerator(n: usize, hi: i64) -> Vec<HalfLaurent> {
    let mut out = vec![HalfLaurent::zero(hi); n + 1];
    let r = (n as f64).sqrt() as i64 + 1;
    for k in -r..=r {
        let e = (k * k) as usize;
        if e <= n {
            out[e] = out[e].add(&signed_y(k, 1, hi));
        }
    }
    out
}

/// `E` coefficients `0..=n`.
fn denominator(n: usize, hi: i64) -> Vec<HalfLaurent> {
    let mut out = vec![HalfLaurent::zero(hi); n + 1];
    let r = (n as f64).sqrt() as i64 + 2;
    for j1 in -r..=r {
        for j2 in -r..=r {
            let e = 2 * (j1 * j1 + j1 + j2 * j2 + j2);
            if e >= 0 && (e as usize) <= n {
                out[e as usize] = out[e as usize].add(&signed_y(j1 + j2 + 1, 1, hi));
            }
        }
    }
    out
}

fn attempt(a_max: i64, hi: i64) -> Result<Vec<HalfLaurent>> {
    // c(a, .) is the Q^{a+1} coefficient of N / E.
    let n = (a_max + 1) as usize;
    let num = numerator(n, hi);
    let den = denominator(n, hi);
    let inv0 = den[0].inverse()?;
    let mut inv: Vec<HalfLaurent> = vec![inv0.clone()];
    for m in 1..=n {
        let acc = (1..=m).fold(HalfLaurent::zero(hi), |acc, i| acc.add(&den[i].mul(&inv[m - i])));
        inv.push(acc.mul(&inv0).neg());
    }
    Ok((0..=n).map(|m| (0..=m).fold(HalfLaurent::zero(hi), |acc, i| acc.add(&num[i].mul(&inv[m - i])))).collect())
}

/// Coefficients `c(a, k)` for `-1 <= a <= a_max`, `k_window.0 <= k <= k_window.1`, by exact
/// division of the lattice sums.
pub fn theta_coeffs(a_max: i64, k_window: (i64, i64)) -> Result<ThetaCoeffTable> {
    if a_max < -1 || k_window.0 > k_window.1 {
        return Err(Error::Parse(format!("bad theta bounds a_max={a_max}, k_window={k_window:?}")));
    }
    let mut hi = k_window.1 + 4 * (a_max + 3);
    for _ in 0..MAX_RETRIES {
        let rows = attempt(a_max, hi)?;
        let have = rows.iter().map(|r| r.hi()).min().unwrap_or(hi);
        if have < k_window.1 {
            hi += k_window.1 - have + 4;
            continue;
        }
        let mut entries = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            let a = i as i64 - 1;
            for (k, c) in row.terms() {
                if k < k_window.0 || k > k_window.1 {
                    continue;
                }
                if !c.is_integer() {
                    return Err(Error::NonIntegral { beta: [0; 4], genus: 0, value: format!("c({a},{k}) = {c}") });
                }
                entries.insert((a, k), c.to_integer());
            }
        }
        return Ok(ThetaCoeffTable { a_max, k_window, entries });
    }
    Err(Error::WindowExhausted { needed: k_window.1, have: hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_rows() {
        let t = theta_coeffs(1, (-6, 12)).unwrap();
        for k in 1..=12 {
            assert_eq!(t.get(-1, k).unwrap(), BigInt::from(-k));
            assert_eq!(t.get(0, k).unwrap(), BigInt::from(2 * k));
        }
        assert_eq!(t.get(-1, 0).unwrap(), BigInt::from(0));
        assert_eq!(t.get(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(t.get(-2, 3).unwrap(), BigInt::from(0));
        assert_eq!(t.get(2, 0), None);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_d([1, 0, 0]), -1);
        assert_eq!(norm_d([1, 1, 0]), 0);
        assert_eq!(norm_d([1, 1, 1]), 3);
        assert_eq!(norm_d([1, 1, 2]), 4);
    }

    #[test]
    fn json_round_trip() {
        let t = theta_coeffs(2, (-4, 6)).unwrap();
        let back = ThetaCoeffTable::from_json(&t.to_json().unwrap()).unwrap();
        assert_eq!(back.rows().unwrap(), t.rows().unwrap());
        assert!(ThetaCoeffTable::from_json(r#"[{"a":-2,"k":0,"c":1}]"#).is_err());
    }
}
