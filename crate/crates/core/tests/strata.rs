use banana_core::series::HalfLaurent;
use banana_core::strata::{
    group_factor, theorem_a_closed, theorem_a_leading, theorem_a_stratified, theorem_b_closed, theorem_b_stratified,
    StrataTable,
};

#[test]
fn theorem_a_routes_agree() {
    let s = theorem_a_stratified((1, 2), 12).unwrap();
    s.agree_on(&theorem_a_closed((1, 2), 12).unwrap(), -6, 12).unwrap();
    s.q_constant().agree_on(&theorem_a_leading(12).unwrap(), -6, 12).unwrap();
}

#[test]
fn theorem_b_routes_agree() {
    for ij in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let table = StrataTable::builtin(ij).unwrap();
        let s = theorem_b_stratified(&table, (1, 2), 10).unwrap();
        s.agree_on(&theorem_b_closed(ij, (1, 2), 10).unwrap(), -8, 10).unwrap();
    }
}

#[test]
fn dropping_a_stratum_breaks_agreement() {
    let mut table = StrataTable::builtin((0, 1)).unwrap();
    table.records.pop();
    let s = theorem_b_stratified(&table, (1, 2), 10).unwrap();
    assert!(s.agree_on(&theorem_b_closed((0, 1), (1, 2), 10).unwrap(), -8, 10).is_err());
}

#[test]
fn grouping_one_factor() {
    let table = StrataTable::builtin((1, 1)).unwrap();
    let got = group_factor(&table, "a1", 16).unwrap();
    let num = HalfLaurent::from_p_terms([(0, 2), (1, 16), (2, -24), (3, 16), (4, 2)], 40);
    let den = HalfLaurent::from_p_terms([(1, 1), (2, -2), (3, 1)], 40);
    got.agree_on(&num.div(&den).unwrap(), -8, 16).unwrap();
    assert!(group_factor(&table, "no-such-group", 16).is_err());
}

#[test]
fn malformed_tables_are_rejected() {
    assert!(StrataTable::from_toml("class = [0, 1]\n").is_err());
    assert!(StrataTable::builtin((2, 0)).is_err());
    let text = include_str!("../data/b01.toml").replacen("copies", "copys", 1);
    assert!(StrataTable::from_toml(&text).is_err());
}
