//! Independent check of `c(a, k)`: multiplying the expansion back by the denominator lattice
//! sum must give the numerator, coefficient by coefficient.

use std::collections::BTreeMap;

use banana_core::closed_forms::{theta_coeffs, ThetaCoeffTable};
use num_bigint::BigInt;

type Grid = BTreeMap<(i64, i64), i128>;

fn sign(e: i64) -> i128 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn numerator(qmax: i64) -> Grid {
    let mut g = Grid::new();
    for k in -10i64..=10 {
        if k * k <= qmax {
            *g.entry((k * k, k)).or_default() += sign(k);
        }
    }
    g
}

/// `Q * E`, so the numerator equals this grid times `sum c(a, k) Q^a y^k`.
fn denominator(qmax: i64) -> Grid {
    let mut g = Grid::new();
    for j1 in -10i64..=10 {
        for j2 in -10i64..=10 {
            let e = 2 * (j1 * j1 + j1 + j2 * j2 + j2) + 1;
            if e <= qmax {
                *g.entry((e, j1 + j2 + 1)).or_default() += sign(j1 + j2 + 1);
            }
        }
    }
    g.retain(|_, c| *c != 0);
    g
}

#[test]
fn expansion_times_denominator_is_numerator() {
    let a_max = 4;
    let (k_lo, k_hi) = (-40, 30);
    let t: ThetaCoeffTable = theta_coeffs(a_max, (k_lo, k_hi)).unwrap();
    let qmax = a_max;
    // c(-1, .) pairs with Q^{qmax + 1} terms of Q E.
    let den = denominator(qmax + 1);
    let num = numerator(qmax);
    let mut prod = Grid::new();
    for (&(ea, ek), &dc) in &den {
        for a in -1..=a_max {
            if ea + a > qmax {
                continue;
            }
            for k in k_lo..=k_hi {
                let c = i128::try_from(t.get(a, k).unwrap()).unwrap();
                if c != 0 {
                    *prod.entry((ea + a, ek + k)).or_default() += dc * c;
                }
            }
        }
    }
    let y_span = den.keys().map(|&(_, k)| k.abs()).max().unwrap();
    for q in 0..=qmax {
        for y in (k_lo + y_span)..=(k_hi - y_span) {
            let got = prod.get(&(q, y)).copied().unwrap_or(0);
            let want = num.get(&(q, y)).copied().unwrap_or(0);
            assert_eq!(got, want, "Q^{q} y^{y}");
        }
    }
}

#[test]
fn first_rows_are_linear_in_k() {
    let t = theta_coeffs(0, (0, 25)).unwrap();
    for k in 1..=25 {
        assert_eq!(t.get(-1, k).unwrap(), BigInt::from(-k));
        assert_eq!(t.get(0, k).unwrap(), BigInt::from(2 * k));
    }
}

#[test]
fn expansion_is_not_symmetric_in_k() {
    let t = theta_coeffs(1, (-8, 8)).unwrap();
    assert_ne!(t.get(-1, 3), t.get(-1, -3));
}
