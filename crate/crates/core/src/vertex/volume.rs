use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Legs `(lambda, mu, nu)` of a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexKey(pub Partition, pub Partition, pub Partition);

impl VertexKey {
    pub fn new(l: Partition, m: Partition, n: Partition) -> Self {
        VertexKey(l, m, n)
    }

    /// Parses `[[...],[...],[...]]`.
    pub fn from_json(s: &str) -> Result<Self> {
        let legs: Vec<Partition> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        match <[Partition; 3]>::try_from(legs) {
            Ok([l, m, n]) => Ok(VertexKey(l, m, n)),
            Err(v) => Err(Error::Parse(format!("expected three legs, got {}", v.len()))),
        }
    }

    pub fn to_json(&self) -> String {
        format!("[{},{},{}]", self.0.to_json(), self.1.to_json(), self.2.to_json())
    }

    /// `(mu, nu, lambda)`: the same diagram with coordinates permuted cyclically.
    pub fn rotate(&self) -> Self {
        VertexKey(self.1.clone(), self.2.clone(), self.0.clone())
    }

    /// Largest coordinate reached by the overlap region of the legs.
    pub(crate) fn extent(&self) -> usize {
        [&self.0, &self.1, &self.2].iter().map(|p| p.len().max(p.part(0) as usize)).max().unwrap_or(0)
    }
}

/// Planar cell `(a, b)` of a leg cross-section: `a` runs along a part, `b` selects the part.
pub(crate) fn cell(p: &Partition, a: usize, b: usize) -> bool {
    p.has_cell(b, a)
}

/// Number of legs containing the lattice point `(i, j, k)`.
///
/// The lambda leg runs along the first axis with cross-section `(j, k)`, mu along the
/// second with `(k, i)`, nu along the third with `(i, j)`.
pub(crate) fn leg_count(key: &VertexKey, i: usize, j: usize, k: usize) -> u8 {
    cell(&key.0, j, k) as u8 + cell(&key.1, k, i) as u8 + cell(&key.2, i, j) as u8
}

/// Renormalized volume of the minimal configuration: the sum of `1 - #legs` over points
/// lying in at least two legs. Points in a single leg have weight zero, so the sum is finite.
pub fn min_renorm_volume(key: &VertexKey) -> i64 {
    let b = key.extent();
    let mut total = 0i64;
    for i in 0..b {
        for j in 0..b {
            for k in 0..b {
                let c = leg_count(key, i, j, k) as i64;
                if c >= 2 {
                    total += 1 - c;
                }
            }
        }
    }
    total
}

/// Curve types whose thickenings enter the holomorphic Euler characteristic table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Thickened {
    /// Thickening of the section along a partition.
    Section(Partition),
    /// Thickening of a smooth fibre.
    Fibre(Partition),
    /// Thickening of a fibre meeting the section.
    FibreMeetingSection(Partition),
    /// Thickened banana curve with partitions `(mu, lambda)` at its two nodes.
    BananaPair(Partition, Partition),
}

/// Holomorphic Euler characteristic of a thickened curve.
pub fn chi_thickened(kind: &Thickened) -> i64 {
    let half = |l: &Partition| (l.norm_sq() + l.conjugate().norm_sq()) / 2;
    match kind {
        Thickened::Section(l) => half(l),
        Thickened::Fibre(_) => 0,
        Thickened::FibreMeetingSection(l) => l.part(0) as i64,
        Thickened::BananaPair(mu, lam) => {
            let e1 = min_renorm_volume(&VertexKey(mu.clone(), lam.clone(), Partition::empty()));
            let e2 = min_renorm_volume(&VertexKey(mu.conjugate(), lam.conjugate(), Partition::empty()));
            e1 + e2 + half(mu) + half(lam)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_volumes() {
        let e = Partition::empty();
        assert_eq!(min_renorm_volume(&VertexKey(e.clone(), e.clone(), e.clone())), 0);
        assert_eq!(min_renorm_volume(&VertexKey(p(&[1]), p(&[1]), e.clone())), -1);
        assert_eq!(min_renorm_volume(&VertexKey(p(&[1]), p(&[1]), p(&[1]))), -2);
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_thickened(&Thickened::Section(p(&[1]))), 1);
        assert_eq!(chi_thickened(&Thickened::Fibre(p(&[3, 1]))), 0);
        assert_eq!(chi_thickened(&Thickened::BananaPair(p(&[1]), p(&[1]))), 0);
        assert_eq!(chi_thickened(&Thickened::FibreMeetingSection(p(&[2, 1]))), 2);
    }

    #[test]
    fn key_json() {
        let k = VertexKey::from_json("[[1],[1],[]]").unwrap();
        assert_eq!(k, VertexKey(p(&[1]), p(&[1]), Partition::empty()));
        assert_eq!(k.to_json(), "[[1],[1],[]]");
        assert!(VertexKey::from_json("[[1],[1]]").is_err());
    }
}
