use std::fmt::Write as _;

use banana_core::closed_forms::theta_coeffs;
use banana_core::gv::{banana_partition_function, connected_series, gv_invariants, BlockSource};
use banana_core::identities::{check, CheckParams, Identity};
use banana_core::series::{LaurentReport, QSeries, SeriesReport};
use banana_core::strata::{
    theorem_a_closed, theorem_a_stratified, theorem_b_closed, theorem_b_stratified, StrataTable,
};
use banana_core::vertex::{min_renorm_volume, vertex_brute, vertex_closed, MAX_EXTRA_LIMIT};
use banana_core::{Error, Result};
use serde_json::{json, Value};

use crate::{Cli, Command, Route};

pub const DEFAULT_WINDOW: (i64, i64) = (-8, 16);
pub const DEFAULT_CAPS: [u32; 4] = [2, 1, 2, 4];

/// What a command prints: text, an equivalent JSON value, and whether a check passed.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, passed: true }
    }

    pub fn json_line(&self) -> String {
        format!("{}\n", self.json)
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let (lo, hi) = cli.global.window.as_deref().map_or(DEFAULT_WINDOW, |w| (w[0], w[1]));
    let caps = cli.global.caps.unwrap_or(DEFAULT_CAPS);
    match &cli.command {
        Command::Vertex { legs, oracle } => {
            let closed = vertex_closed(legs, hi)?;
            let mut text = String::new();
            let mut checked = Value::Null;
            if *oracle {
                let v = min_renorm_volume(legs);
                let extra = u32::try_from((hi - 2 * v + 1).div_euclid(2).max(0)).unwrap_or(u32::MAX);
                if extra > MAX_EXTRA_LIMIT {
                    return Err(Error::WindowExhausted { needed: hi, have: 2 * v + 2 * MAX_EXTRA_LIMIT as i64 });
                }
                let brute = vertex_brute(legs, extra)?.shift(2 * v);
                closed.agree_on(&brute, lo.max(2 * v), hi)?;
                writeln!(text, "oracle: box count agrees through q^{hi} ({extra} extra boxes)").unwrap();
                checked = json!({ "volume": v, "extra_boxes": extra });
            }
            let report = LaurentReport::from_series(&closed, lo, hi)?;
            let text = format!("V{} = {}\n{text}", legs.to_json(), report.to_text());
            let mut value = serde_json::to_value(&report).expect("report serializes");
            if *oracle {
                value["oracle"] = checked;
            }
            Ok(Output::ok(text, value))
        }
        Command::Identity { name, list, lambda, legs, degree } => {
            let Some(id) = name.filter(|_| !*list) else {
                let names: Vec<String> = Identity::ALL.iter().map(|i| i.to_string()).collect();
                return Ok(Output::ok(names.join("\n") + "\n", json!(names)));
            };
            let params = CheckParams { lambda: lambda.clone(), legs: legs.clone(), degree: *degree, hi };
            match check(id, &params) {
                Ok(o) => Ok(Output::ok(
                    format!("PASS {id} ({} cases through q^{hi})\n", o.cases),
                    json!({ "identity": id.to_string(), "result": "PASS", "cases": o.cases, "hi": hi }),
                )),
                Err(e @ Error::Mismatch(_)) => Ok(Output {
                    text: format!("FAIL {id}: {e}\n"),
                    json: json!({ "identity": id.to_string(), "result": "FAIL", "message": e.to_string() }),
                    passed: false,
                }),
                Err(e) => Err(e),
            }
        }
        Command::TheoremA { route, oracle } => {
            let dc = (caps[2], caps[3]);
            let a = || theorem_a_stratified(dc, hi);
            let b = || theorem_a_closed(dc, hi);
            let (main, other) = match route {
                Route::Stratified => (a()?, oracle.then(b)),
                Route::Closed => (b()?, oracle.then(a)),
            };
            series_output(&main, other.transpose()?, lo, hi)
        }
        Command::TheoremB { class, strata, route, oracle, list } => {
            let table = match strata {
                Some(path) => {
                    let text =
                        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                    StrataTable::from_toml(&text)?
                }
                None => StrataTable::builtin(class.unwrap_or((1, 1)))?,
            };
            let ij = (table.class[0], table.class[1]);
            if let Some(c) = class {
                if *c != ij && *c != (ij.1, ij.0) {
                    return Err(Error::Strata(format!("--class {c:?} disagrees with table class {ij:?}")));
                }
            }
            let bd = (caps[0], caps[3]);
            let a = || theorem_b_stratified(&table, bd, hi);
            let b = || theorem_b_closed(ij, bd, hi);
            let (main, other) = match route {
                Route::Stratified => (a()?, oracle.then(b)),
                Route::Closed => (b()?, oracle.then(a)),
            };
            let mut out = series_output(&main, other.transpose()?, lo, hi)?;
            if *list {
                out.text = format!("{}{}", table.to_text(), out.text);
                out.json["strata"] = json!(table.to_text());
            }
            Ok(out)
        }
        Command::Gv { class, route } => {
            let caps = [caps[0], caps[1].min(1), caps[2].min(1), caps[3]];
            let source = match route {
                Route::Stratified => BlockSource::Stratified,
                Route::Closed => BlockSource::Closed,
            };
            let z = banana_partition_function(caps, hi, source)?;
            let f = connected_series(&z, &z.q_constant())?;
            let table = gv_invariants(&f)?;
            let rows: Vec<_> = table
                .rows()
                .into_iter()
                .filter(|r| class.is_none_or(|(i, j)| r.beta[1] == i && r.beta[2] == j))
                .collect();
            let mut text = format!("caps {caps:?}, q^{}\n{:<16} {:>5} {:>8}\n", f.window().1, "beta", "genus", "n");
            for r in &rows {
                writeln!(text, "{:<16} {:>5} {:>8}", format!("{:?}", r.beta), r.genus, r.n).unwrap();
            }
            Ok(Output::ok(text, json!({ "caps": caps, "rows": rows })))
        }
        Command::Theta { a_max } => {
            let t = theta_coeffs(*a_max, (lo, hi))?;
            let rows = t.rows()?;
            let mut text = String::new();
            for a in -1..=*a_max {
                let row: Vec<String> = rows.iter().filter(|r| r.a == a).map(|r| format!("{}:{}", r.k, r.c)).collect();
                writeln!(text, "a={a:<3} {}", row.join(" ")).unwrap();
            }
            Ok(Output::ok(text, json!({ "k_window": [lo, hi], "rows": rows })))
        }
    }
}

fn series_output(main: &QSeries, other: Option<QSeries>, lo: i64, hi: i64) -> Result<Output> {
    let mut suffix = String::new();
    if let Some(o) = &other {
        main.agree_on(o, lo, hi)?;
        suffix = format!("oracle: both routes agree on q^{lo}..q^{hi}\n");
    }
    let report = SeriesReport::from_series(main, lo, hi)?;
    let mut value = serde_json::to_value(&report).expect("report serializes");
    if other.is_some() {
        value["oracle"] = json!("agree");
    }
    Ok(Output::ok(format!("{}{suffix}", report.to_text()), value))
}
