//! Direct enumeration of asymptotic 3D partitions.

use rayon::prelude::*;

use super::volume::{leg_count, VertexKey};
use crate::error::{Error, Result};
use crate::series::{rat, HalfLaurent};

/// Default cap on the number of enumerated configurations.
pub const DEFAULT_BUDGET: usize = 50_000_000;

/// Largest supported `max_extra`.
pub const MAX_EXTRA_LIMIT: u32 = 14;

struct Grid {
    side: usize,
    legs: Vec<bool>,
}

impl Grid {
    fn new(key: &VertexKey, max_extra: u32) -> Self {
        let side = max_extra as usize + key.extent() + 1;
        let mut legs = vec![false; side * side * side];
        for i in 0..side {
            for j in 0..side {
                for k in 0..side {
                    legs[(i * side + j) * side + k] = leg_count(key, i, j, k) > 0;
                }
            }
        }
        Grid { side, legs }
    }

    fn idx(&self, b: [usize; 3]) -> usize {
        (b[0] * self.side + b[1]) * self.side + b[2]
    }
}

struct Walk<'a> {
    grid: &'a Grid,
    filled: Vec<bool>,
    extra: Vec<[usize; 3]>,
    max_extra: usize,
    counts: Vec<u64>,
    seen: usize,
    budget: usize,
}

impl Walk<'_> {
    fn occupied(&self, b: [usize; 3]) -> bool {
        let i = self.grid.idx(b);
        self.grid.legs[i] || self.filled[i]
    }

    fn addable(&self) -> Vec<[usize; 3]> {
        let s = self.grid.side;
        let mut out = Vec::new();
        for i in 0..s {
            for j in 0..s {
                for k in 0..s {
                    let b = [i, j, k];
                    if self.occupied(b) {
                        continue;
                    }
                    let below = (0..3).all(|x| {
                        if b[x] == 0 {
                            return true;
                        }
                        let mut c = b;
                        c[x] -= 1;
                        self.occupied(c)
                    });
                    if below {
                        out.push(b);
                    }
                }
            }
        }
        out
    }

    /// Whether `b` is the largest extra box that can be removed from the current state.
    fn is_max_removable(&self, b: [usize; 3]) -> bool {
        let s = self.grid.side;
        self.extra.iter().all(|&c| {
            if c <= b {
                return true;
            }
            (0..3).any(|x| {
                let mut d = c;
                d[x] += 1;
                d[x] < s && self.occupied(d)
            })
        })
    }

    fn dfs(&mut self) -> Result<()> {
        self.seen += 1;
        if self.seen > self.budget {
            return Err(Error::Budget(self.seen - 1));
        }
        self.counts[self.extra.len()] += 1;
        if self.extra.len() == self.max_extra {
            return Ok(());
        }
        for b in self.addable() {
            let i = self.grid.idx(b);
            self.filled[i] = true;
            self.extra.push(b);
            if self.is_max_removable(b) {
                self.dfs()?;
            }
            self.extra.pop();
            self.filled[i] = false;
        }
        Ok(())
    }
}

/// Counts `p^{n(eta)}` over asymptotic 3D partitions with at most `max_extra` boxes outside the
/// legs. The result is exact through `p^{max_extra}`.
pub fn vertex_brute(key: &VertexKey, max_extra: u32) -> Result<HalfLaurent> {
    vertex_brute_with_budget(key, max_extra, DEFAULT_BUDGET)
}

/// As [`vertex_brute`], failing once more than `budget` configurations are visited.
pub fn vertex_brute_with_budget(key: &VertexKey, max_extra: u32, budget: usize) -> Result<HalfLaurent> {
    if max_extra > MAX_EXTRA_LIMIT {
        return Err(Error::Budget(0));
    }
    let grid = Grid::new(key, max_extra);
    let n = grid.legs.len();
    let root = Walk {
        grid: &grid,
        filled: vec![false; n],
        extra: Vec::new(),
        max_extra: max_extra as usize,
        counts: vec![0; max_extra as usize + 1],
        seen: 1,
        budget,
    };
    let mut counts = vec![0u64; max_extra as usize + 1];
    counts[0] = 1;
    if max_extra > 0 {
        // Every first-level branch is independent; each gets the full remaining budget check
        // through a shared total afterwards.
        let firsts = root.addable();
        let results: Vec<Result<(Vec<u64>, usize)>> = firsts
            .par_iter()
            .map(|&b| {
                let mut w = Walk {
                    grid: &grid,
                    filled: vec![false; n],
                    extra: vec![b],
                    max_extra: max_extra as usize,
                    counts: vec![0; max_extra as usize + 1],
                    seen: 0,
                    budget,
                };
                w.filled[grid.idx(b)] = true;
                w.dfs()?;
                Ok((w.counts, w.seen))
            })
            .collect();
        let mut seen = 1usize;
        for r in results {
            let (c, s) = r?;
            seen += s;
            for (acc, x) in counts.iter_mut().zip(c) {
                *acc += x;
            }
        }
        if seen > budget {
            return Err(Error::Budget(seen));
        }
    }
    let hi = 2 * max_extra as i64;
    Ok(HalfLaurent::from_terms(counts.iter().enumerate().map(|(d, &c)| (2 * d as i64, rat(c as i64))), hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    #[test]
    fn plane_partitions() {
        let e = Partition::empty();
        let v = vertex_brute(&VertexKey(e.clone(), e.clone(), e), 4).unwrap();
        let want = HalfLaurent::from_p_terms([(0, 1), (1, 1), (2, 3), (3, 6), (4, 13)], 8);
        assert_eq!(v, want);
    }

    #[test]
    fn zero_extra_is_one() {
        let k = VertexKey(Partition::single(), Partition::new(vec![2]).unwrap(), Partition::empty());
        assert_eq!(vertex_brute(&k, 0).unwrap(), HalfLaurent::one(0));
    }

    #[test]
    fn budget_is_enforced() {
        let e = Partition::empty();
        let r = vertex_brute_with_budget(&VertexKey(e.clone(), e.clone(), e), 6, 10);
        assert!(matches!(r, Err(Error::Budget(_))));
    }
}
