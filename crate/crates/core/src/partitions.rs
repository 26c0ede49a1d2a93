//! Integer partitions (Young diagrams).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. The empty list is the empty partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-box partition.
    pub fn single() -> Self {
        Partition(vec![1])
    }

    /// Builds a partition, rejecting zero or increasing parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Partition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Partition(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from arbitrary non-negative parts by sorting and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0) as usize;
        let cols = (0..first).map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32).collect();
        Partition(cols)
    }

    /// Sum of squared parts.
    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|&p| (p as i64) * (p as i64)).sum()
    }

    /// Whether `other` fits inside `self` as a diagram.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Whether the cell in row `r`, column `c` (both 0-based) belongs to the diagram.
    pub fn has_cell(&self, r: usize, c: usize) -> bool {
        (c as u32) < self.part(r)
    }

    /// All partitions contained in `self` and in `other`.
    pub fn common_subpartitions(&self, other: &Partition) -> Vec<Partition> {
        let n = self.len().min(other.len());
        let bound: Vec<u32> = (0..n).map(|i| self.part(i).min(other.part(i))).collect();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_rec(&bound, 0, u32::MAX, &mut cur, &mut out);
        out
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let parts: Vec<u32> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Partition::new(parts)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("vector of integers serializes")
    }
}

fn sub_rec(bound: &[u32], i: usize, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition(cur.clone()));
    if i == bound.len() {
        return;
    }
    for v in 1..=bound[i].min(prev) {
        cur.push(v);
        sub_rec(bound, i + 1, v, cur, out);
        cur.pop();
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, reverse-lexicographic (largest first part first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    part_rec(n, n, &mut cur, &mut out);
    out
}

fn part_rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for v in (1..=rest.min(max)).rev() {
        cur.push(v);
        part_rec(rest - v, v, cur, out);
        cur.pop();
    }
}

/// Cartesian product of `partitions_of` over the components, first component slowest.
pub fn partition_tuples(sizes: &[u32]) -> Vec<Vec<Partition>> {
    let lists: Vec<Vec<Partition>> = sizes.iter().map(|&n| partitions_of(n)).collect();
    let mut out = vec![Vec::new()];
    for list in &lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for p in list {
                let mut t = prefix.clone();
                t.push(p.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        let l = Partition::new(vec![3, 2, 1, 1]).unwrap();
        assert_eq!(l.conjugate().parts(), &[4, 2, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let s = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(s.conjugate(), s);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(Partition::new(vec![3, 2, 2]).unwrap().norm_sq(), 17);
        assert_eq!(Partition::empty().norm_sq(), 0);
        assert_eq!(Partition::new(vec![1, 1, 1]).unwrap().norm_sq(), 3);
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![Partition::single()]);
        let four: Vec<Vec<u32>> = partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn tuples_small() {
        assert_eq!(partition_tuples(&[0, 0]), vec![vec![Partition::empty(), Partition::empty()]]);
        assert_eq!(partition_tuples(&[1, 1]), vec![vec![Partition::single(), Partition::single()]]);
        let two = partition_tuples(&[2]);
        assert_eq!(two.len(), 2);
        assert_eq!(two[0][0].parts(), &[2]);
        assert_eq!(two[1][0].parts(), &[1, 1]);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::from_json("[3,2,1,1]").is_ok());
        assert!(Partition::from_json("[1,3]").is_err());
    }

    #[test]
    fn common_subpartitions_of_box_pair() {
        let a = Partition::new(vec![2, 1]).unwrap();
        let b = Partition::new(vec![1, 1]).unwrap();
        let subs = a.common_subpartitions(&b);
        assert_eq!(subs.len(), 3);
        assert!(subs.iter().all(|s| a.contains(s) && b.contains(s)));
    }
}
