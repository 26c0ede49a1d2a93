use banana_core::closed_forms::psi;
use banana_core::gv::{
    banana_partition_function, connected_series, gv_invariants, psi_basis_fit, BlockSource, GVTable,
};
use banana_core::identities::phi_printed_pp;
use banana_core::series::{rat, HalfLaurent, QSeries};
use banana_core::strata::{phi_gf, PhiKind};
use banana_core::vertex::VertexTable;
use banana_core::Error;

fn table(caps: [u32; 4], hi: i64, source: BlockSource) -> (GVTable, QSeries) {
    let z = banana_partition_function(caps, hi, source).unwrap();
    let f = connected_series(&z, &z.q_constant()).unwrap();
    (gv_invariants(&f).unwrap(), f)
}

#[test]
fn section_classes_match_table() {
    let (t, f) = table([2, 1, 1, 4], 16, BlockSource::Closed);
    let rows: [([u32; 4], [i64; 3]); 8] = [
        ([1, 0, 0, 0], [1, 0, 0]),
        ([1, 0, 1, 1], [12, 2, 0]),
        ([1, 1, 0, 1], [12, 2, 0]),
        ([1, 1, 1, 0], [12, 2, 0]),
        ([1, 1, 1, 1], [48, 44, 0]),
        ([1, 1, 1, 2], [216, 108, 24]),
        ([1, 1, 1, 3], [48, 44, 0]),
        ([1, 1, 1, 4], [12, 2, 0]),
    ];
    for (beta, ns) in rows {
        for (g, n) in ns.into_iter().enumerate() {
            assert_eq!(t.get(beta, g as u32), n, "{beta:?} genus {g}");
        }
    }
    assert!(t.entries.keys().all(|b| b[0] != 2), "b = 2 classes must vanish");
    t.rebuild([2, 1, 1, 4], f.window().1).unwrap().agree_on(&f, -8, f.window().1).unwrap();
}

#[test]
fn pure_q3_fibre_class_has_no_multiple_covers() {
    let (t, _) = table([0, 0, 0, 4], 14, BlockSource::Closed);
    assert_eq!(t.class([0, 0, 0, 1]).into_iter().collect::<Vec<_>>(), vec![(0, 12)]);
    assert_eq!(t.entries.len(), 1);
}

#[test]
fn stratified_blocks_give_the_same_table() {
    let (a, _) = table([1, 1, 1, 2], 12, BlockSource::Closed);
    let (b, _) = table([1, 1, 1, 2], 12, BlockSource::Stratified);
    assert_eq!(a, b);
}

#[test]
fn json_round_trip_and_rejections() {
    let (t, _) = table([1, 1, 1, 2], 12, BlockSource::Closed);
    assert_eq!(GVTable::from_json(&t.to_json()).unwrap(), t);
    assert!(GVTable::from_json(r#"[{"beta":[1,0,0,0],"genus":0,"n":0}]"#).is_err());
    let dup = r#"[{"beta":[1,0,0,0],"genus":0,"n":1},{"beta":[1,0,0,0],"genus":0,"n":2}]"#;
    assert!(GVTable::from_json(dup).is_err());
    assert!(GVTable::from_json(r#"[{"beta":[1,0,0,0],"genus":0,"n":1,"x":3}]"#).is_err());
}

#[test]
fn connected_series_of_trivial_inputs() {
    let caps = [1, 0, 0, 2];
    let one = QSeries::one(caps, 10);
    assert!(connected_series(&one, &HalfLaurent::one(10)).unwrap().is_zero());
    // 1 + x Q3 has log x Q3 - x^2 Q3^2 / 2.
    let mut z = one.clone();
    let x = HalfLaurent::p_monomial(3, 1, 10);
    z.set_coeff([0, 0, 0, 1], x.clone()).unwrap();
    let f = connected_series(&z, &HalfLaurent::one(10)).unwrap();
    f.coeff([0, 0, 0, 1]).unwrap().agree_on(&x, 0, 10).unwrap();
    f.coeff([0, 0, 0, 2])
        .unwrap()
        .agree_on(&x.mul(&x).scale(&rat(-1).recip()).scale(&(rat(1) / rat(2))), 0, 10)
        .unwrap();
}

#[test]
fn genus_fit_rejects_non_integral_windows() {
    let f = psi(0, 12).add(&psi(1, 12).scale(&(rat(1) / rat(2))));
    let fit = psi_basis_fit(&f).unwrap();
    assert_eq!(fit.get(&1), Some(&(rat(1) / rat(2))));
    assert!(matches!(psi_basis_fit(&HalfLaurent::p_monomial(1, 1, 12)), Err(Error::NotInPsiSpan(_))));
}

#[test]
fn printed_pp_form_misses_the_box_sum() {
    let sum = phi_gf(PhiKind::PP, 2, &VertexTable::new(24)).unwrap();
    let printed = phi_printed_pp(2, 10);
    assert!(sum.truncate(10).agree_on(&printed, -8, 10).is_err());
}
