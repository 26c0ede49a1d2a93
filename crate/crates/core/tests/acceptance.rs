//! Acceptance criteria 1 to 10: one PASS/FAIL line each, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use banana_core::closed_forms::{psi, section_product, z_fibre_closed};
use banana_core::gv::{banana_partition_function, connected_series, gv_invariants, BlockSource};
use banana_core::identities::{check, CheckParams, Identity};
use banana_core::series::HalfLaurent;
use banana_core::strata::{
    group_factor, theorem_a_closed, theorem_a_leading, theorem_a_stratified, theorem_b_closed, theorem_b_stratified,
    StrataTable,
};
use banana_core::{Error, Result};

fn identity(id: Identity, degree: u32, hi: i64) -> Result<String> {
    let o = check(id, &CheckParams { degree, hi, ..CheckParams::default() })?;
    Ok(format!("{} cases", o.cases))
}

fn identities(ids: &[Identity], degree: u32, hi: i64) -> Result<String> {
    let mut parts = Vec::new();
    for &id in ids {
        parts.push(format!("{id}: {}", identity(id, degree, hi)?));
    }
    Ok(parts.join(", "))
}

fn criterion_6() -> Result<String> {
    let s = theorem_a_stratified((2, 2), 14)?;
    s.agree_on(&theorem_a_closed((2, 2), 14)?, -6, 14)?;
    s.q_constant().agree_on(&theorem_a_leading(14)?, -6, 14)?;
    Ok("caps (2,2), q^-6..q^14".into())
}

fn criterion_7() -> Result<String> {
    for ij in [(0, 0), (0, 1), (1, 1)] {
        let s = theorem_b_stratified(&StrataTable::builtin(ij)?, (2, 4), 16)?;
        s.agree_on(&theorem_b_closed(ij, (2, 4), 16)?, -8, 16)?;
    }
    let g = group_factor(&StrataTable::builtin((1, 1))?, "a1", 16)?;
    let num = HalfLaurent::from_p_terms([(0, 2), (1, 16), (2, -24), (3, 16), (4, 2)], 40);
    let den = HalfLaurent::from_p_terms([(1, 1), (2, -2), (3, 1)], 40);
    g.agree_on(&num.div(&den)?, -8, 16)?;
    Ok("classes 00, 01, 11 at caps (2,4), q^-8..q^16; grouping-1 factor".into())
}

/// Section-class columns `(d1, d2, d3)` with genus 0, 1, 2 values.
const SECTION_CLASSES: [([u32; 3], [i64; 3]); 8] = [
    ([0, 0, 0], [1, 0, 0]),
    ([0, 1, 1], [12, 2, 0]),
    ([1, 0, 1], [12, 2, 0]),
    ([1, 1, 0], [12, 2, 0]),
    ([1, 1, 1], [48, 44, 0]),
    ([1, 1, 2], [216, 108, 24]),
    ([1, 1, 3], [48, 44, 0]),
    ([1, 1, 4], [12, 2, 0]),
];

fn criterion_8() -> Result<String> {
    let caps = [2, 1, 1, 4];
    let z = banana_partition_function(caps, 16, BlockSource::Closed)?;
    let f = connected_series(&z, &z.q_constant())?;
    let table = gv_invariants(&f)?;
    let mut cells = 0;
    for (d, ns) in SECTION_CLASSES {
        let beta = [1, d[0], d[1], d[2]];
        for (g, &want) in ns.iter().enumerate() {
            let got = table.get(beta, g as u32);
            if got != want {
                return Err(Error::Mismatch(format!("n^{g}_{beta:?} = {got}, expected {want}")));
            }
            cells += 1;
        }
        if table.class(beta).keys().any(|&g| g > 2) {
            return Err(Error::Mismatch(format!("class {beta:?} has genus above 2")));
        }
    }
    let mut others = 0;
    for (&beta, gs) in &table.entries {
        let listed = SECTION_CLASSES.iter().any(|(d, _)| beta == [1, d[0], d[1], d[2]]);
        if beta[0] == 2 || (beta[0] == 1 && !listed) {
            return Err(Error::Mismatch(format!("class {beta:?} should vanish, got {gs:?}")));
        }
        others += 1;
    }
    let rebuilt = table.rebuild(caps, f.window().1)?;
    rebuilt.agree_on(&f, -8, f.window().1)?;
    Ok(format!("{cells} section-class cells, b=2 classes vanish, {others} classes in total, round trip exact"))
}

fn criterion_10() -> Result<String> {
    let caps = [1, 0, 2, 2];
    let hi = 12;
    let z0 = z_fibre_closed(caps, hi + 8)?;
    let zs = theorem_a_stratified((2, 2), hi + 8)?;
    let mut z = z0.clone();
    for (e, c) in zs.nonzero_terms() {
        z.set_coeff([1, 0, e[2], e[3]], c.clone())?;
    }
    let f = connected_series(&z, &z.q_constant())?.negate_vars([true, false, false, false]);
    let want = section_product(caps, hi + 8)?.mul_laurent(&psi(0, hi + 8).neg());
    let mut n = 0;
    for d in 0..=2 {
        let got = f.coeff([1, 0, d, d])?;
        got.agree_on(want.coeff([0, 0, d, d])?, -8, hi)?;
        n += 1;
    }
    // Off-diagonal Q_sigma-linear terms must vanish.
    for e in f.exps().into_iter().filter(|e| e[0] == 1 && e[2] != e[3]) {
        f.coeff(e)?.agree_on(&HalfLaurent::zero(hi), -8, hi)?;
    }
    Ok(format!("(Q2Q3)-degree 0..{}, through q^{hi}", n - 1))
}

type Criterion = (u32, &'static str, Box<dyn Fn() -> Result<String>>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "vertex closed form equals box count (64 keys)", Box::new(|| identity(Identity::VertexOracle, 0, 12))),
        (2, "vertex squares through p^12", Box::new(|| identity(Identity::VertexSquares, 0, 24))),
        (3, "vertex splitting for |lambda| <= 4", Box::new(|| identity(Identity::VertexSplitting, 0, 10))),
        (
            4,
            "trace formulas 1-4 through Q^4",
            Box::new(|| identities(&[Identity::Trace1, Identity::Trace2, Identity::Trace3, Identity::Trace4], 4, 12)),
        ),
        (
            5,
            "banana sub-partition and section identities through Q^4",
            Box::new(|| {
                identities(
                    &[
                        Identity::BananaDouble,
                        Identity::BananaEe,
                        Identity::BananaMm,
                        Identity::BananaPp,
                        Identity::SectionMe,
                        Identity::SectionPe,
                        Identity::SectionSquare,
                    ],
                    4,
                    12,
                )
            }),
        ),
        (6, "Theorem A stratified equals closed", Box::new(criterion_6)),
        (7, "Theorem B stratified equals closed", Box::new(criterion_7)),
        (8, "GV invariants of the section classes and b = 2 vanishing", Box::new(criterion_8)),
        (9, "rank-3 theta product through total Q-degree 3", Box::new(|| identity(Identity::Rank3Theta, 3, 10))),
        (10, "connected section series of Theorem A", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (n, what, run) in &criteria {
        let t = Instant::now();
        let r = run();
        let ms = t.elapsed().as_millis();
        match r {
            Ok(detail) => println!("criterion {n:>2}: PASS  {what} [{detail}] ({ms} ms)"),
            Err(e) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {what}: {e} ({ms} ms)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
