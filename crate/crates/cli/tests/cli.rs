use std::process::{Command, Output};

use serde_json::Value;

fn banana(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_banana")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn vertex_json_matches_two_leg_closed_form() {
    let o = banana(&["vertex", "--legs", "[[1],[1],[]]", "--window", "-2", "12", "--json", "--oracle"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // M(p) (p^2 - p + 1) / (p (1 - p)^2) = p^-1 + 2 + 6p + 14p^2 + ...
    let q = &v["q"];
    for (e, c) in [("-2", "1/1"), ("0", "2/1"), ("2", "6/1"), ("4", "14/1"), ("12", "273/1")] {
        assert_eq!(q[e], c, "q^{e}");
    }
    assert_eq!(v["oracle"]["volume"], -1);
}

#[test]
fn splitting_identity_passes() {
    let o = banana(&["identity", "--name", "vertex-splitting", "--lambda", "[2,1]"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn gv_rows_for_class_one_one() {
    let o = banana(&["gv", "--class", "1,1", "--caps", "2,4", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let n = |beta: [u64; 4], g: u64| {
        rows.iter()
            .find(|r| r["beta"] == serde_json::json!(beta) && r["genus"] == g)
            .map_or(0, |r| r["n"].as_i64().unwrap())
    };
    assert_eq!([n([1, 1, 1, 2], 0), n([1, 1, 1, 2], 1), n([1, 1, 1, 2], 2)], [216, 108, 24]);
    assert_eq!([n([1, 1, 1, 0], 0), n([1, 1, 1, 0], 1)], [12, 2]);
    assert!(rows.iter().all(|r| r["beta"][1] == 1 && r["beta"][2] == 1));
}

#[test]
fn output_is_deterministic() {
    let args = ["theorem-b", "--class", "0,1", "--caps", "1,3", "--json"];
    assert_eq!(banana(&args).stdout, banana(&args).stdout);
}

#[test]
fn theorem_routes_agree_through_the_cli() {
    for args in [&["theorem-a", "--oracle", "--caps", "0,0,1,2"][..], &["theorem-b", "--oracle", "--caps", "1,2"][..]] {
        let o = banana(args);
        assert!(o.status.success(), "{args:?}");
        assert!(stdout(&o).contains("both routes agree"));
    }
}

#[test]
fn strata_file_is_echoed() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/b01.toml");
    let o = banana(&["theorem-b", "--strata", path, "--list", "--caps", "1,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("class (0, 1)"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["vertex", "--legs", "[[1]]"][..],
        &["identity", "--name", "no-such-identity"][..],
        &["theta", "--window", "4", "1"][..],
        &["gv", "--caps", "1,2,3"][..],
        &["frobnicate"][..],
    ] {
        assert_eq!(banana(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn computation_errors_emit_a_json_record() {
    let o = banana(&["theorem-b", "--strata", "/no/such/file.toml"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "parse");
    let o = banana(&["vertex", "--legs", "[[3,2],[2],[1]]", "--window", "0", "60", "--oracle"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "window-exhausted");
}
