use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::series::{HalfLaurent, Rat};

/// `v = (p^{1/2} - p^{-1/2})^2 = 1/psi_0`, exact through `hi`.
pub(crate) fn v_poly(hi: i64) -> HalfLaurent {
    HalfLaurent::from_p_terms([(-1, 1), (0, -2), (1, 1)], hi)
}

/// Writes `f` as `sum_g n_g psi_g` and returns the nonzero `n_g`.
///
/// `f * v` must be a Laurent polynomial in `v`, and the window must reach its top degree so
/// the fit is checked rather than assumed.
pub fn psi_basis_fit(f: &HalfLaurent) -> Result<BTreeMap<u32, Rat>> {
    let mut out = BTreeMap::new();
    if f.is_zero() {
        return Ok(out);
    }
    let span = f.hi() - f.lo() + 8;
    let v = v_poly(span);
    let mut r = f.mul(&v);
    let top = r.hi();
    let mut g_max = 0i64;
    let mut powers: Vec<HalfLaurent> = vec![HalfLaurent::one(span)];
    while let Some(e) = r.valuation() {
        let c = r.coeff(e).expect("valuation is inside the window");
        if e > 0 || e % 2 != 0 {
            return Err(Error::NotInPsiSpan(format!("stray term q^{e} with coefficient {c}")));
        }
        let g = -e / 2;
        while powers.len() <= g as usize {
            let next = powers.last().expect("nonempty").mul(&v);
            powers.push(next);
        }
        r = r.sub(&powers[g as usize].scale(&c)).truncate(top);
        g_max = g_max.max(g);
        out.insert(g as u32, c);
    }
    if top < 2 * g_max {
        return Err(Error::NotInPsiSpan(format!("window ends at q^{top}, genus {g_max} needs q^{}", 2 * g_max)));
    }
    Ok(out)
}

/// `psi_g(p^m)` exact through `hi`.
pub(crate) fn psi_multicover(g: i64, m: i64, hi: i64) -> HalfLaurent {
    crate::closed_forms::psi(g, hi / m + 2).scale_exponents(m).truncate(hi)
}

/// `sum_g n_g psi_g(p^m)`.
pub(crate) fn psi_combination(ns: &BTreeMap<u32, Rat>, m: i64, hi: i64) -> HalfLaurent {
    ns.iter().fold(HalfLaurent::zero(hi), |acc, (&g, n)| acc.add(&psi_multicover(g as i64, m, hi).scale(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::psi;
    use crate::series::rat;

    #[test]
    fn fits_basis_elements() {
        let got = psi_basis_fit(&psi(0, 12)).unwrap();
        assert_eq!(got, BTreeMap::from([(0, rat(1))]));
        let f = psi(0, 12).scale(&rat(12)).add(&psi(1, 12).scale(&rat(2)));
        assert_eq!(psi_basis_fit(&f).unwrap(), BTreeMap::from([(0, rat(12)), (1, rat(2))]));
        assert!(psi_basis_fit(&HalfLaurent::zero(10)).unwrap().is_empty());
    }

    #[test]
    fn rejects_outside_span() {
        let f = HalfLaurent::from_p_terms([(1, 1)], 12);
        assert!(matches!(psi_basis_fit(&f), Err(Error::NotInPsiSpan(_))));
    }

    #[test]
    fn rejects_short_window() {
        // psi_3 = v^2 needs the window to reach q^6 after multiplying by v.
        let f = psi(3, 4);
        assert!(matches!(psi_basis_fit(&f), Err(Error::NotInPsiSpan(_))));
        assert_eq!(psi_basis_fit(&psi(3, 12)).unwrap(), BTreeMap::from([(3, rat(1))]));
    }

    #[test]
    fn multicover_scales() {
        let s = psi_multicover(0, 2, 12);
        assert_eq!(s, HalfLaurent::from_p_terms([(2, 1), (4, 2), (6, 3)], 12));
    }
}
