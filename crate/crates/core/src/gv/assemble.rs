use crate::error::{Error, Result};
use crate::series::{HalfLaurent, QExp, QSeries};
use crate::strata::{theorem_b_closed, theorem_b_stratified, StrataTable};

/// Which route produces the blocks `Z_{. sigma + (i, j, .)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSource {
    Closed,
    Stratified,
}

fn block(ij: (u32, u32), caps: (u32, u32), hi: i64, source: BlockSource) -> Result<QSeries> {
    match source {
        BlockSource::Closed => theorem_b_closed(ij, caps, hi),
        BlockSource::Stratified => theorem_b_stratified(&StrataTable::builtin(ij)?, caps, hi),
    }
}

/// `sum_{i, j <= 1} Q1^i Q2^j Z_{. sigma + (i, j, .)}` with caps `[b, c1, c2, d3]`, `c1, c2 <= 1`.
pub fn banana_partition_function(caps: QExp, hi: i64, source: BlockSource) -> Result<QSeries> {
    if caps[1] > 1 || caps[2] > 1 {
        return Err(Error::Strata(format!("only Q1, Q2 degrees up to 1 are available, caps {caps:?}")));
    }
    let mut z = QSeries::zero(caps, hi);
    for i in 0..=caps[1] {
        for j in 0..=caps[2] {
            let b = block((i, j), (caps[0], caps[3]), hi, source)?;
            for (e, c) in b.nonzero_terms() {
                z.set_coeff([e[0], i, j, e[3]], c.clone())?;
            }
        }
    }
    Ok(z)
}

/// `log(Z / Z0)` where `Z0` is `Z` with every `Q` set to zero.
pub fn connected_series(z: &QSeries, z0: &HalfLaurent) -> Result<QSeries> {
    let inv = z0.inverse()?;
    z.mul_laurent(&inv).log()
}
