use std::path::PathBuf;

use serde_json::Value;
use superalg_cli::{run, EXIT_GUARD, EXIT_OK, EXIT_USAGE};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("superalg").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str, args: &[&str]) {
    let (code, out, err) = invoke(args);
    assert_eq!(code, EXIT_OK, "{err}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(out, expected, "{name} differs from golden output");
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn golden_outputs() {
    golden("nucleus.json", &["rootdata", "nucleus", "--ell", "1", "--theta", "2,1"]);
    golden("schur_dims.json", &["schur", "dims", "--n", "1", "--d", "2", "--ell", "1"]);
    golden("rock_l1.json", &["rootdata", "rock", "--ell", "1", "--mass", "1"]);
    golden("brauer_l1.json", &["brauer", "table", "--ell", "1"]);
    golden("affine_rank.csv", &["--format", "csv", "brauer", "affine-rank", "--ell", "1", "--d", "2", "--max-degree", "4", "--cap", "2"]);
    golden("blocks_3.json", &["blocks", "decompose", "--n", "3", "--p", "3"]);
}

#[test]
fn documented_values() {
    let v = json(&["rootdata", "nucleus", "--ell", "1", "--theta", "2,1"]);
    assert_eq!(v["in_W"], true);
    assert_eq!(v["d"], 1);
    let v = json(&["schur", "dims", "--n", "1", "--d", "2", "--ell", "1"]);
    assert_eq!((v["rank_S"].as_u64(), v["rank_T"].as_u64(), v["rank_T0"].as_u64()), (Some(5), Some(5), Some(3)));
    let v = json(&["rootdata", "rock", "--ell", "1", "--mass", "1"]);
    assert!(v["smallest"].is_null());
}

#[test]
fn deterministic() {
    let args = ["qhs", "dims", "--ell", "1", "--theta", "1,1"];
    assert_eq!(invoke(&args).1, invoke(&args).1);
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["blocks", "decompose", "--n", "9", "--p", "3"]).0, EXIT_GUARD);
    assert_eq!(invoke(&["schur", "dims", "--ring", "Fp"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["nonsense"]).0, EXIT_USAGE);
}

#[test]
fn quick_suite_passes() {
    let v = json(&["verify", "--suite", "quick"]);
    assert_eq!(v["ok"], true, "{v}");
    assert_eq!(v["failed"], 0);
}
