use num_bigint::BigInt;

use crate::series::{HalfLaurent, Rat};

/// Binomial coefficient `C(n, k)` for any integer `n` and `k >= 0`.
pub(crate) fn binomial(n: i64, k: u32) -> Rat {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k as i64 {
        num *= n - i;
        den *= i + 1;
    }
    Rat::new(num, den)
}

/// `(1 - p)^n` through q-exponent `hi`.
fn one_minus_p_pow(n: i64, hi: i64) -> HalfLaurent {
    let top = if n >= 0 { n } else { (hi / 2).max(0) };
    HalfLaurent::from_terms(
        (0..=top).map(|j| {
            let c = binomial(n, j as u32);
            (2 * j, if j % 2 == 1 { -c } else { c })
        }),
        hi,
    )
}

/// `psi_g = (p / (1-p)^2)^{1-g}` expanded about `p = 0`, exact through q-exponent `hi`.
pub fn psi(g: i64, hi: i64) -> HalfLaurent {
    let n = 1 - g;
    // p^n (1-p)^{-2n}; the inner factor is needed through hi - 2n before the shift.
    one_minus_p_pow(-2 * n, hi - 2 * n).shift(2 * n)
}
