use crate::error::Result;
use crate::partitions::{partitions_of, Partition};
use crate::series::{rat, HalfLaurent};
use crate::vertex::VertexTable;

/// Local weight functions of the section-class computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GKind {
    /// Smooth fibre meeting the section.
    SmSigma,
    /// Nodal fibre meeting the section.
    NSigma,
    /// Smooth fibre away from the section.
    SmEmpty,
    /// Nodal fibre away from the section.
    NEmpty,
    /// Banana node, two-argument.
    B,
}

fn empty() -> Partition {
    Partition::empty()
}

/// `g_kind(a)`; for [`GKind::B`] the pair is `(m, n)`, otherwise only `args.0` is used.
pub fn g_weight(kind: GKind, args: (u32, u32), table: &VertexTable) -> Result<HalfLaurent> {
    let e = empty();
    let b = Partition::single();
    let v000 = table.v(&e, &e, &e)?;
    let v100 = table.v(&b, &e, &e)?;
    let hi = table.hi();
    let mut acc = HalfLaurent::zero(hi);
    match kind {
        GKind::SmSigma => {
            for alpha in partitions_of(args.0) {
                acc = acc.add(&table.v(&alpha, &b, &e)?.div(&table.v(&alpha, &e, &e)?)?);
            }
            acc = acc.mul(&v000).div(&v100)?;
        }
        GKind::NSigma => {
            for g in partitions_of(args.0) {
                let num = table.v(&g, &b, &e)?.mul(&table.v(&g, &g.conjugate(), &e)?);
                let den = v000.mul(&table.v(&g, &e, &e)?);
                acc = acc.add(&num.div(&den)?.shift(2 * g.norm_sq()));
            }
            acc = acc.mul(&v000).div(&v100)?;
        }
        GKind::SmEmpty => {
            acc = HalfLaurent::constant(rat(partitions_of(args.0).len() as i64), hi);
        }
        GKind::NEmpty => {
            for l in partitions_of(args.0) {
                acc = acc.add(&table.v(&l, &l.conjugate(), &e)?.div(&v000)?.shift(2 * l.norm_sq()));
            }
        }
        GKind::B => {
            let v2 = v000.mul(&v000);
            for mu in partitions_of(args.0) {
                for nu in partitions_of(args.1) {
                    let w = mu.norm_sq() + mu.conjugate().norm_sq() + nu.norm_sq() + nu.conjugate().norm_sq();
                    let num = table.v(&mu, &nu, &e)?.mul(&table.v(&mu.conjugate(), &nu.conjugate(), &e)?);
                    acc = acc.add(&num.div(&v2)?.shift(w));
                }
            }
        }
    }
    Ok(acc)
}
