use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::closed_forms::{macmahon_pow, macmahon_unit};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::series::{rat, HalfLaurent, QExp, QMonomial, QSeries};
use crate::vertex::VertexTable;

use super::phi::{phi_gf, psi_poly, PhiKind};
use super::precision::with_precision;
use super::table::{StrataTable, StratumRecord, VertexWord};

const QS: usize = 0;
const Q3: usize = 3;

fn caps_of(caps: (u32, u32)) -> QExp {
    [caps.0, 0, 0, caps.1]
}

fn unit(var: usize) -> QMonomial {
    let mut e = [0; 4];
    e[var] = 1;
    QMonomial::plus(e)
}

/// The four leg-box vertex values `V000, V100, V110, V111`.
struct BoxVertices([HalfLaurent; 4]);

impl BoxVertices {
    fn new(table: &VertexTable) -> Result<Self> {
        let e = Partition::empty;
        let b = Partition::single;
        Ok(BoxVertices([
            table.v(&e(), &e(), &e())?,
            table.v(&b(), &e(), &e())?,
            table.v(&b(), &b(), &e())?,
            table.v(&b(), &b(), &b())?,
        ]))
    }

    /// `p^{extra + word.p} V^word`.
    fn word(&self, w: &VertexWord, extra_p: i64) -> Result<HalfLaurent> {
        let exps = [w.v000, w.v100, w.v110, w.v111];
        let mut acc = HalfLaurent::one(self.0[0].hi());
        for (v, &k) in self.0.iter().zip(&exps) {
            if k != 0 {
                acc = acc.mul(&v.pow(k)?);
            }
        }
        Ok(acc.shift(2 * (w.p + extra_p)))
    }
}

/// Scalar part of a record: multiplicity, Euler characteristic, `p^chi` and the vertex word.
fn record_scalar(table: &StrataTable, r: &StratumRecord, boxes: &BoxVertices) -> Result<HalfLaurent> {
    Ok(boxes.word(&r.ratio, r.chi)?.scale(&rat(table.weight(r) * r.euler)))
}

fn stratified_at(table: &StrataTable, caps: QExp, work: i64) -> Result<QSeries> {
    let vt = VertexTable::new(work);
    let boxes = BoxVertices::new(&vt)?;
    let sigma_kinds: BTreeSet<PhiKind> = table.records.iter().map(|r| r.sigma).collect();
    let banana_kinds: BTreeSet<(PhiKind, u32)> = table.records.iter().flat_map(|r| r.banana.iter().copied()).collect();

    let sigma: BTreeMap<PhiKind, QSeries> = sigma_kinds
        .into_par_iter()
        .map(|k| Ok((k, QSeries::subst_q_monomial(&phi_gf(k, caps[QS], &vt)?, unit(QS), caps)?)))
        .collect::<Result<_>>()?;
    let kinds: BTreeSet<PhiKind> = banana_kinds.iter().map(|(k, _)| *k).collect();
    let base: BTreeMap<PhiKind, QSeries> = kinds
        .into_par_iter()
        .map(|k| Ok((k, QSeries::subst_q_monomial(&phi_gf(k, caps[Q3], &vt)?, unit(Q3), caps)?)))
        .collect::<Result<_>>()?;
    let powers: BTreeMap<(PhiKind, u32), QSeries> =
        banana_kinds.into_par_iter().map(|(k, m)| Ok(((k, m), base[&k].pow(m as i64)?))).collect::<Result<_>>()?;

    let terms: Vec<QSeries> = table
        .records
        .par_iter()
        .map(|r| {
            let mut s = sigma[&r.sigma].clone();
            for slot in &r.banana {
                s = s.mul(&powers[slot])?;
            }
            Ok(s.mul_laurent(&record_scalar(table, r, &boxes)?).shift_q([0, 0, 0, r.prefactor.q3]))
        })
        .collect::<Result<_>>()?;
    let mut total = QSeries::zero(caps, work);
    for t in &terms {
        total = total.add(t)?;
    }
    Ok(total)
}

/// `Z_{. sigma + (i, j, .)}` summed over the strata of `table`, in `Q_sigma, Q3` with caps
/// `(b, d3)`, exact through q-exponent `hi`.
pub fn theorem_b_stratified(table: &StrataTable, caps: (u32, u32), hi: i64) -> Result<QSeries> {
    let caps = caps_of(caps);
    with_precision(hi, |w| stratified_at(table, caps, w))
}

/// `M(p)^24 prod_{m>0} (1 + p^m Q_sigma)^m (1 + p^m Q3)^{12m}`.
fn b1_series(caps: QExp, hi: i64) -> Result<QSeries> {
    let m24 = QSeries::constant(macmahon_unit(hi).pow(24)?, caps);
    let s = macmahon_pow(QMonomial::minus([1, 0, 0, 0]), -1, caps, hi)?;
    let t = macmahon_pow(QMonomial::minus([0, 0, 0, 1]), -12, caps, hi)?;
    m24.mul(&s)?.mul(&t)
}

type PsiCoeff = &'static [(i64, i64)];

/// `(b, d3, sum_g c_g psi_g)` rows of the closed forms, relative to the `(0, 0)` series.
fn closed_rows(ij: (u32, u32)) -> Result<Vec<(u32, u32, PsiCoeff)>> {
    const X00: PsiCoeff = &[(144, -1), (24, 0), (12, 1)];
    const X01: PsiCoeff = &[(576, -1), (384, 0), (72, 1), (12, 2)];
    const X02: PsiCoeff = &[(864, -1), (720, 0), (264, 1), (24, 2)];
    const X10: PsiCoeff = &[(12, 0), (2, 1)];
    const X11: PsiCoeff = &[(288, -1), (96, 0), (44, 1)];
    const X12: PsiCoeff = &[(576, -1), (600, 0), (156, 1), (24, 2)];
    Ok(match ij {
        (0, 0) => vec![(0, 0, &[(1, 1)])],
        (0, 1) | (1, 0) => vec![(0, 0, &[(12, 0)]), (0, 1, &[(24, 0), (12, 1)]), (0, 2, &[(12, 0)]), (1, 1, X10)],
        (1, 1) => vec![
            (0, 0, X00),
            (0, 1, X01),
            (0, 2, X02),
            (0, 3, X01),
            (0, 4, X00),
            (1, 0, X10),
            (1, 1, X11),
            (1, 2, X12),
            (1, 3, X11),
            (1, 4, X10),
            (2, 2, &[(144, -1), (48, 0), (4, 1)]),
        ],
        other => return Err(Error::Strata(format!("no closed form for class {other:?}"))),
    })
}

/// The closed form of `Z_{. sigma + (i, j, .)}`.
pub fn theorem_b_closed(ij: (u32, u32), caps: (u32, u32), hi: i64) -> Result<QSeries> {
    let caps = caps_of(caps);
    let rows = closed_rows(ij)?;
    with_precision(hi, |w| {
        let mut poly = QSeries::zero(caps, w);
        for &(b, d, coeffs) in &rows {
            if b <= caps[QS] && d <= caps[Q3] {
                let c = psi_poly(&[coeffs], 0, 0, w).remove(0);
                poly.set_coeff([b, 0, 0, d], c)?;
            }
        }
        b1_series(caps, w)?.mul(&poly)
    })
}

/// `sum over records of a group` of multiplicity, Euler characteristic, `p^chi` and the vertex
/// word, with the overall `M(p)^{-2}` removed.
pub fn group_factor(table: &StrataTable, group: &str, hi: i64) -> Result<HalfLaurent> {
    let work = hi + 16;
    let vt = VertexTable::new(work);
    let boxes = BoxVertices::new(&vt)?;
    let m2 = macmahon_unit(work).pow(2)?;
    let mut acc = HalfLaurent::zero(work);
    let mut seen = false;
    for r in table.records.iter().filter(|r| r.group.as_deref() == Some(group)) {
        seen = true;
        acc = acc.add(&record_scalar(table, r, &boxes)?.mul(&m2));
    }
    if !seen {
        return Err(Error::Strata(format!("no records in group {group:?}")));
    }
    acc.require(hi)?;
    Ok(acc.truncate(hi))
}
