use std::path::PathBuf;
use std::process::{Command, Output};

use ghg::fgab::FgAbGroup;
use serde_json::Value;

fn ghg(args: &str) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ghg"));
    cmd.args(args.split_whitespace()).env_remove("GHG_CATALOG");
    cmd
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ghg-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

const SMALL_CATALOG: &str = r#"[
  {"name": "CIRCLE", "connected": true, "abelian": true, "rational_exponents": [1],
   "pi": [
     {"degree": 0, "rank": 0, "factors": [], "source": "test"},
     {"degree": 1, "rank": 1, "factors": [], "source": "test"},
     {"degree": 2, "rank": 0, "factors": [], "source": "test"},
     {"degree": 3, "rank": 0, "factors": [], "source": "test"},
     {"degree": 4, "rank": 0, "factors": [], "source": "test"}
   ],
   "samelson": []}
]"#;

#[test]
fn documented_examples() {
    let (code, out, _) = run(&mut ghg("compute --group SU2 --base sphere:4 --class 6 --degree 2"));
    assert_eq!((code, out.as_str()), (0, "Z/6\n"));
    let (code, out, _) = run(&mut ghg("rational --group SU2 --base surface:2 --degree 2"));
    assert_eq!((code, out.as_str()), (0, "Q^4\n"));
    let (code, out, err) = run(&mut ghg("compute --group SU2 --base sphere:4 --class 1 --degree 0"));
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(!err.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&mut ghg("compute --group SU2 --base sphere:4")).0, 1);
    assert_eq!(run(&mut ghg("frobnicate")).0, 1);
    assert_eq!(run(&mut ghg("compute --group SU3 --base sphere:4 --class 1 --degree 2")).0, 2);
    assert_eq!(run(&mut ghg("compute --group SU2 --base sphere:4 --class 1 --degree 12")).0, 2);
    assert_eq!(run(&mut ghg("compute --group TEST --base sphere:2 --class 2 --degree 2 --torsion-bound 4")).0, 2);
    assert_eq!(run(&mut ghg("catalog")).0, 0);
    assert_eq!(run(&mut ghg("--version")).0, 0);
}

#[test]
fn negative_and_vector_classes() {
    let (code, out, _) = run(ghg("compute --group SU2 --base sphere:4 --degree 2").arg("--class=-9"));
    assert_eq!((code, out.as_str()), (0, "Z/3\n"));
    // parsed, then stopped by the missing pi_2 x pi_3 pairing
    let (code, _, err) = run(&mut ghg("compute --group TEST --base sphere:4 --class 1,2 --degree 1"));
    assert_eq!(code, 2);
    assert!(err.contains("not catalogued"), "{err}");
    let (code, _, err) = run(&mut ghg("compute --group TEST --base sphere:4 --class 1 --degree 1"));
    assert_eq!(code, 1);
    assert!(err.contains("2 coordinates"), "{err}");
}

#[test]
fn ambiguous_results_list_candidates() {
    let (code, out, _) = run(&mut ghg("compute --group TEST --base sphere:2 --class 2 --degree 2"));
    assert_eq!(code, 0);
    assert_eq!(
        out.trim(),
        "extension of Z/2 by Z/2 + Z/2; candidates: Z/2 + Z/2 + Z/2, Z/2 + Z/4"
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        "compute --group TEST --base surface:2 --class 1 --degree 2 --format json",
        "compute --group TEST --base surface:1 --class 0 --degree 2",
        "catalog --format json",
    ] {
        let first = run(&mut ghg(args));
        let second = run(&mut ghg(args));
        assert_eq!(first, second, "{args}");
    }
}

#[test]
fn json_and_text_agree() {
    for args in [
        "compute --group SU2 --base sphere:4 --class 4 --degree 2",
        "compute --group SU2 --base sphere:4 --class 0 --degree 1",
        "compute --group TEST --base surface:1 --class 1 --degree 2",
        "compute --group TEST --base sphere:2 --class 2 --degree 2",
        "compute --group U1 --base surface:2 --class 5 --degree 1",
    ] {
        let (_, text, _) = run(&mut ghg(args));
        let (code, json, _) = run(&mut ghg(&format!("{args} --format json")));
        assert_eq!(code, 0);
        let doc: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["name"].as_str().unwrap(), text.trim());
        let group = |v: &Value| {
            let factors: Vec<u64> = v["factors"].as_array().unwrap().iter().map(|f| f.as_u64().unwrap()).collect();
            FgAbGroup::from_u64(v["rank"].as_u64().unwrap() as usize, &factors).unwrap()
        };
        let candidates = doc["candidates"].as_array().unwrap();
        if doc["resolved"].as_bool().unwrap() {
            assert_eq!(group(&doc).to_string(), text.trim());
            assert_eq!(candidates.len(), 1);
        } else {
            let names: Vec<String> = candidates.iter().map(|c| group(c).to_string()).collect();
            assert!(text.trim().ends_with(&names.join(", ")), "{text}");
        }
    }
}

#[test]
fn catalog_override_by_flag_and_environment() {
    let path = temp_file("small.json", SMALL_CATALOG);
    let query = "compute --group CIRCLE --base surface:1 --class 3 --degree 1";

    let (code, out, _) = run(ghg(query).arg("--catalog").arg(&path));
    assert_eq!((code, out.as_str()), (0, "Z\n"));

    let (code, out, _) = run(ghg(query).env("GHG_CATALOG", &path));
    assert_eq!((code, out.as_str()), (0, "Z\n"));

    // the builtin catalog has no CIRCLE
    assert_eq!(run(&mut ghg(query)).0, 1);

    // the flag wins over the environment
    let (code, out, _) = run(ghg("catalog").arg("--catalog").arg(&path).env("GHG_CATALOG", "/nonexistent.json"));
    assert_eq!(code, 0);
    assert!(out.starts_with("CIRCLE"), "{out}");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn bad_catalogs_are_reported() {
    let (code, _, err) = run(ghg("catalog").env("GHG_CATALOG", "/nonexistent/catalog.json"));
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/catalog.json"), "{err}");

    let bad = SMALL_CATALOG.replace(r#""rational_exponents": [1]"#, r#""rational_exponents": [2]"#);
    let path = temp_file("bad.json", &bad);
    let (code, _, err) = run(ghg("catalog").arg("--catalog").arg(&path));
    assert_eq!(code, 2);
    assert!(err.contains("CIRCLE") && err.contains("rational_exponents"), "{err}");

    let unknown = SMALL_CATALOG.replace(r#""abelian": true,"#, r#""abelian": true, "colour": "red","#);
    std::fs::write(&path, unknown).unwrap();
    let (code, _, err) = run(ghg("catalog").arg("--catalog").arg(&path));
    assert_eq!(code, 2);
    assert!(err.contains("colour"), "{err}");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn verify_reports_counts() {
    let (code, out, _) = run(&mut ghg("verify --seed 3"));
    assert_eq!(code, 0, "{out}");
    assert!(out.trim_end().ends_with("10 passed, 0 failed (seed 3)"), "{out}");
}
