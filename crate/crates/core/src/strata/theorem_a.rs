use crate::closed_forms::{psi, section_product, z_fibre_closed};
use crate::error::Result;
use crate::partitions::Partition;
use crate::series::{HalfLaurent, QExp, QMonomial, QSeries};
use crate::vertex::VertexTable;

use super::gweights::{g_weight, GKind};
use super::precision::with_precision;

/// Euler characteristics of the four fibre strata: smooth and nodal fibres meeting the section,
/// and smooth and nodal fibres away from it.
const E_SM_SIGMA: i64 = -10;
const E_N_SIGMA: i64 = 12;
const E_SM_EMPTY: i64 = 10;
const E_N_EMPTY: i64 = -12;

/// Number of banana configurations.
const BANANAS: i64 = 12;

fn fibre_caps(caps: (u32, u32)) -> QExp {
    [0, 0, caps.0, caps.1]
}

/// `sum_a (Q2 Q3)^a g_kind(a)`.
fn diagonal_sum(kind: GKind, caps: QExp, table: &VertexTable) -> Result<QSeries> {
    let deg = caps[2].min(caps[3]);
    let coeffs = (0..=deg).map(|a| g_weight(kind, (a, 0), table)).collect::<Result<Vec<_>>>()?;
    QSeries::subst_q_monomial(&QSeries::univariate(coeffs), QMonomial::plus([0, 0, 1, 1]), caps)
}

fn banana_sum(caps: QExp, table: &VertexTable) -> Result<QSeries> {
    let mut s = QSeries::zero(caps, table.hi());
    for m in 0..=caps[2] {
        for n in 0..=caps[3] {
            s.set_coeff([0, 0, m, n], g_weight(GKind::B, (m, n), table)?)?;
        }
    }
    Ok(s)
}

fn stratified_at(caps: QExp, work: i64) -> Result<QSeries> {
    let table = VertexTable::new(work);
    let e = Partition::empty();
    let v000 = table.v(&e, &e, &e)?;
    let v100 = table.v(&Partition::single(), &e, &e)?;
    let pre = v000.pow(24)?.mul(&v100.div(&v000)?.pow(2)?).shift(2);
    let mut z = QSeries::constant(pre, caps);
    for (kind, power) in [
        (GKind::SmSigma, E_SM_SIGMA),
        (GKind::NSigma, E_N_SIGMA),
        (GKind::SmEmpty, E_SM_EMPTY),
        (GKind::NEmpty, E_N_EMPTY),
    ] {
        z = z.mul(&diagonal_sum(kind, caps, &table)?.pow(power)?)?;
    }
    z.mul(&banana_sum(caps, &table)?.pow(BANANAS)?)
}

/// `Z_{sigma + (0, ., .)}` from the stratification, in `Q2, Q3` with caps `(c2, c3)`, exact
/// through q-exponent `hi`.
pub fn theorem_a_stratified(caps: (u32, u32), hi: i64) -> Result<QSeries> {
    let caps = fibre_caps(caps);
    with_precision(hi, |w| stratified_at(caps, w))
}

/// The closed product for `Z_{sigma + (0, ., .)}`.
pub fn theorem_a_closed(caps: (u32, u32), hi: i64) -> Result<QSeries> {
    let caps = fibre_caps(caps);
    with_precision(hi, |w| {
        let z = z_fibre_closed(caps, w)?;
        z.mul(&section_product(caps, w)?).map(|s| s.mul_laurent(&psi(0, w)))
    })
}

/// `M(p)^24 p / (1 - p)^2`, the Q-constant term of both routes.
pub fn theorem_a_leading(hi: i64) -> Result<HalfLaurent> {
    Ok(crate::closed_forms::macmahon_unit(hi).pow(24)?.mul(&psi(0, hi)))
}
