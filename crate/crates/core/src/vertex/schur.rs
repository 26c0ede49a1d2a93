//! Skew Schur functions at the principal specializations used by the vertex.

use std::collections::HashMap;

use crate::partitions::Partition;
use crate::series::HalfLaurent;

/// q-exponent of the variable `x_i` (1-based) in the specialization `x_i = q^{-2 nu_i + 2i - 1}`.
fn var_exp(nu: &Partition, i: usize) -> i64 {
    2 * i as i64 - 1 - 2 * nu.part(i - 1) as i64
}

/// Complete homogeneous functions `h_0..=h_k` at the specialization attached to `nu`,
/// exact through q-exponent `hi`.
pub fn complete_homogeneous(nu: &Partition, k: usize, hi: i64) -> Vec<HalfLaurent> {
    let n_fixed = nu.len();
    let exps_fixed: Vec<i64> = (1..=n_fixed).map(|i| var_exp(nu, i)).collect();
    let e_min = exps_fixed.iter().copied().chain([2 * n_fixed as i64 + 1]).min().unwrap_or(1);
    let neg_total: i64 = exps_fixed.iter().filter(|&&e| e < 0).map(|&e| -e).sum();
    // A variable whose exponent exceeds this bound only enters monomials above `hi`.
    let bound = hi - (k as i64 - 1).max(0) * e_min.min(0);

    let hi0 = hi + k as i64 * neg_total;
    let mut h: Vec<HalfLaurent> =
        (0..=k).map(|d| if d == 0 { HalfLaurent::one(hi0) } else { HalfLaurent::zero(hi0) }).collect();
    let absorb = |e: i64, h: &mut Vec<HalfLaurent>| {
        for d in 1..=k {
            let next = h[d].add(&h[d - 1].shift(e));
            h[d] = next;
        }
    };
    let mut order: Vec<i64> = exps_fixed.clone();
    order.sort_unstable();
    for &e in order.iter().filter(|&&e| e < 0) {
        absorb(e, &mut h);
    }
    for &e in order.iter().filter(|&&e| e > 0 && e <= bound) {
        absorb(e, &mut h);
    }
    if k > 0 {
        let mut i = n_fixed + 1;
        loop {
            let e = var_exp(nu, i);
            if e > bound {
                break;
            }
            absorb(e, &mut h);
            i += 1;
        }
    }
    h.into_iter().map(|s| s.truncate(hi)).collect()
}

/// Determinant by cofactor expansion along the first row with memoized minors.
fn det(m: &[Vec<HalfLaurent>], hi: i64) -> HalfLaurent {
    let n = m.len();
    let mut memo: HashMap<u32, HalfLaurent> = HashMap::new();
    fn rec(
        m: &[Vec<HalfLaurent>],
        row: usize,
        cols: u32,
        hi: i64,
        memo: &mut HashMap<u32, HalfLaurent>,
    ) -> HalfLaurent {
        if row == m.len() {
            return HalfLaurent::one(hi);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = HalfLaurent::zero(hi);
        let mut sign_neg = false;
        for c in 0..m.len() {
            if cols & (1 << c) != 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = rec(m, row + 1, cols | (1 << c), hi, memo);
                let t = m[row][c].mul(&minor);
                acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    if n == 0 {
        return HalfLaurent::one(hi);
    }
    rec(m, 0, 0, hi, &mut memo)
}

/// Skew Schur function `S_{lambda/eta}` from a table of complete homogeneous functions
/// (Jacobi-Trudi). Zero when `eta` does not fit in `lambda`.
pub fn skew_schur_from_h(lambda: &Partition, eta: &Partition, h: &[HalfLaurent], hi: i64) -> HalfLaurent {
    if !lambda.contains(eta) {
        return HalfLaurent::zero(hi);
    }
    let n = lambda.len();
    let m: Vec<Vec<HalfLaurent>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = lambda.part(i) as i64 - eta.part(j) as i64 - i as i64 + j as i64;
                    if d < 0 {
                        HalfLaurent::zero(hi)
                    } else {
                        h[d as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    det(&m, hi)
}

/// `S_{lambda/eta}` at `x_i = q^{-2 nu_i + 2i - 1}` (that is, `p^{-nu-rho}`), exact through `hi`.
pub fn schur_principal(lambda: &Partition, eta: &Partition, nu: &Partition, hi: i64) -> HalfLaurent {
    let k = lambda.part(0) as usize + lambda.len();
    let h = complete_homogeneous(nu, k, hi);
    skew_schur_from_h(lambda, eta, &h, hi)
}
