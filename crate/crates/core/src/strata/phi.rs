use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{macmahon_template, macmahon_unit, psi, template_mul};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::series::{rat, HalfLaurent, QSeries};
use crate::vertex::{VertexKey, VertexTable};

/// The six edge functions attached to a curve meeting the section or a banana node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PhiKind {
    EE,
    ME,
    MM,
    MBar,
    PE,
    PP,
}

impl PhiKind {
    pub const ALL: [PhiKind; 6] = [PhiKind::EE, PhiKind::ME, PhiKind::MM, PhiKind::MBar, PhiKind::PE, PhiKind::PP];

    /// The two vertex keys for `alpha` and the extra power of `p`.
    fn keys(self, alpha: &Partition) -> (VertexKey, VertexKey, i64) {
        let e = Partition::empty;
        let b = Partition::single;
        let at = alpha.conjugate();
        let a = alpha.clone();
        match self {
            PhiKind::EE => (VertexKey(e(), e(), a), VertexKey(e(), e(), at), 0),
            PhiKind::ME => (VertexKey(b(), e(), a), VertexKey(e(), e(), at), 0),
            PhiKind::MM => (VertexKey(b(), e(), a), VertexKey(b(), e(), at), 0),
            PhiKind::MBar => (VertexKey(e(), b(), a.clone()), VertexKey(e(), b(), a), 0),
            PhiKind::PE => (VertexKey(b(), b(), a), VertexKey(e(), e(), at), 1),
            PhiKind::PP => (VertexKey(b(), b(), a), VertexKey(b(), b(), at), 2),
        }
    }
}

impl fmt::Display for PhiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for PhiKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PhiKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown Phi kind {s:?}")))
    }
}

/// `Phi_kind(a) = sum_{alpha |- a} p^{(|alpha|^2 + |alpha^t|^2)/2 + shift} V V'`.
pub fn phi(kind: PhiKind, a: u32, table: &VertexTable) -> Result<HalfLaurent> {
    let mut acc: Option<HalfLaurent> = None;
    for alpha in partitions_of(a) {
        let (k1, k2, shift) = kind.keys(&alpha);
        let weight = alpha.norm_sq() + alpha.conjugate().norm_sq() + 2 * shift;
        let term = table.get(&k1)?.mul(&table.get(&k2)?).shift(weight);
        acc = Some(match acc {
            None => term,
            Some(s) => s.add(&term),
        });
    }
    Ok(acc.expect("every a has at least one partition"))
}

/// `sum_{a <= cap} t^a Phi_kind(a)` as a univariate template.
pub fn phi_gf(kind: PhiKind, cap: u32, table: &VertexTable) -> Result<QSeries> {
    let coeffs = (0..=cap).map(|a| phi(kind, a, table)).collect::<Result<Vec<_>>>()?;
    Ok(QSeries::univariate(coeffs))
}

/// `M(p)^2 prod_{m>0} (1 + p^m t)^m` up to `t^deg`.
fn ee_template(deg: usize, hi: i64) -> Vec<HalfLaurent> {
    let m2 = macmahon_unit(hi).pow(2).expect("positive power");
    macmahon_template(-1, deg, hi)
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c }.mul(&m2))
        .collect()
}

/// Polynomial `sum_k t^k (sum_g c_{k,g} psi_g)` as a template, scaled by `p^shift`.
pub(crate) fn psi_poly(rows: &[&[(i64, i64)]], shift: i64, deg: usize, hi: i64) -> Vec<HalfLaurent> {
    (0..=deg)
        .map(|k| {
            let mut c = HalfLaurent::zero(hi + 8);
            if let Some(row) = rows.get(k) {
                for &(coef, g) in row.iter() {
                    c = c.add(&psi(g, hi + 8).scale(&rat(coef)));
                }
            }
            c.shift(2 * shift).truncate(hi)
        })
        .collect()
}

/// Closed form of `sum_a t^a Phi_kind(a)` up to `t^deg`, exact through `hi`.
///
/// The `MM` and `MBar` forms carry `1/p` because their defining sums have no extra power of
/// `p`, unlike the companion sums weighted by one more `p`.
pub fn phi_closed(kind: PhiKind, deg: u32, hi: i64) -> Vec<HalfLaurent> {
    let deg = deg as usize;
    let work = hi + 8;
    let base = ee_template(deg, work);
    let factor: Vec<HalfLaurent> = match kind {
        PhiKind::EE => psi_poly(&[&[(1, 1)]], 0, deg, work),
        PhiKind::ME => {
            // (1 + t) / (1 - p)
            let inv = HalfLaurent::from_p_terms([(0, 1), (1, -1)], work).inverse().expect("unit");
            (0..=deg).map(|k| if k <= 1 { inv.clone() } else { HalfLaurent::zero(work) }).collect()
        }
        PhiKind::MM => psi_poly(&[&[(1, 0)], &[(1, 1), (2, 0)], &[(1, 0)]], -1, deg, work),
        PhiKind::MBar => psi_poly(&[&[(1, 0)], &[(2, 0), (1, 1)], &[(1, 0), (1, 1)]], -1, deg, work),
        PhiKind::PE => psi_poly(&[&[(1, 0), (1, 1)], &[(2, 0), (1, 1)], &[(1, 0)]], 0, deg, work),
        PhiKind::PP => {
            let t = psi_poly(&[&[(1, 0)], &[(1, 1), (2, 0)], &[(1, 0)]], 0, deg, work);
            let rest = psi_poly(
                &[
                    &[(2, 0), (1, 1)],
                    &[(8, 0), (6, 1), (1, 2)],
                    &[(12, 0), (10, 1), (2, 2)],
                    &[(8, 0), (6, 1), (1, 2)],
                    &[(2, 0), (1, 1)],
                ],
                0,
                deg,
                work,
            );
            template_mul(&t, &t).iter().zip(&rest).map(|(a, b)| a.add(b)).collect()
        }
    };
    template_mul(&base, &factor).into_iter().map(|c| c.truncate(hi)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_values() {
        let t = VertexTable::new(14);
        let m2 = macmahon_unit(20).pow(2).unwrap();
        let inv1p = HalfLaurent::from_p_terms([(0, 1), (1, -1)], 20).inverse().unwrap();
        phi(PhiKind::EE, 0, &t).unwrap().agree_on(&m2, 0, 14).unwrap();
        let mm = m2.mul(&inv1p).mul(&inv1p);
        phi(PhiKind::MM, 0, &t).unwrap().agree_on(&mm, 0, 14).unwrap();
        let pe = mm.mul(&HalfLaurent::from_p_terms([(0, 1), (1, -1), (2, 1)], 20));
        phi(PhiKind::PE, 0, &t).unwrap().agree_on(&pe, 0, 14).unwrap();
    }

    #[test]
    fn kind_names_round_trip() {
        for k in PhiKind::ALL {
            assert_eq!(k.to_string().parse::<PhiKind>().unwrap(), k);
        }
        assert!("Psi".parse::<PhiKind>().is_err());
    }
}
