use hasse_core::curve::CurveSpec;
use serde_json::Value;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_hasse")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), stdout, json)
}

#[test]
fn verify_paper_passes() {
    let (code, _, j) = run(&["verify-paper"]);
    assert_eq!(code, 0, "{j:#}");
    assert_eq!(j["schema"], "hasse-cli/1");
    assert_eq!(j["status"], "pass");
    assert!(j["result"]["checks"].as_u64().unwrap() >= 40);
}

#[test]
fn find_triples_recovers_examples() {
    for (p, want) in [("29", ("29", "1", "3")), ("5", ("5", "1", "1"))] {
        let (code, _, j) = run(&["find-triples", "--p", p, "--b0", "1", "--xmax", "5", "--ymax", "5"]);
        assert_eq!(code, 0);
        let hits = j["result"].as_array().unwrap();
        assert!(hits.iter().any(|h| (h["triple"]["p"].as_str(), h["triple"]["b"].as_str(), h["triple"]["d"].as_str()) == (Some(want.0), Some(want.1), Some(want.2))));
    }
    let (code, _, j) = run(&["find-triples", "--p", "7", "--b0", "1", "--xmax", "5", "--ymax", "5"]);
    assert_eq!((code, j["status"].as_str()), (1, Some("error")));
}

#[test]
fn emit_curve_and_exclusions() {
    let (code, _, j) = run(&["emit-curve", "--family", "1", "--n", "7", "--T", "0"]);
    assert_eq!(code, 0);
    let spec: CurveSpec = serde_json::from_value(j["result"].clone()).unwrap();
    assert_eq!(spec.coefficients.degree(), Some(16));
    assert_eq!(spec.family_id, Some(1));

    let (code, _, j) = run(&["emit-curve", "--family", "1", "--n", "4", "--T", "0"]);
    assert_eq!(code, 1);
    assert!(j["error"].as_str().unwrap().contains("0 mod 4"));
    let (code, _, j) = run(&["emit-curve", "--family", "2", "--n", "5", "--T", "0"]);
    assert_eq!(code, 1);
    assert!(j["error"].as_str().unwrap().contains("n > 5"));
    let (code, _, j) = run(&["emit-curve", "--family", "1", "--n", "21", "--T", "0"]);
    assert_eq!(code, 1);
    assert!(j["error"].as_str().unwrap().contains("genus gate"));
    let (code, _, j) = run(&["emit-curve", "--family", "2", "--n", "37", "--T", "-1/3"]);
    assert_eq!(code, 1, "{j:#}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["emit-curve", "--family", "3", "--n", "7", "--T", "0"],
        vec!["emit-curve", "--family", "1", "--n", "seven", "--T", "0"],
        vec!["search-points"],
        vec!["frobnicate"],
        vec!["extend-sextuple", "--family", "1"],
    ] {
        let (code, stdout, _) = run(&args);
        assert_eq!(code, 2, "{args:?}: {stdout}");
    }
}

#[test]
fn sextuple_commands() {
    let (code, _, j) = run(&["check-sextuple", "--family", "1", "--n", "7"]);
    assert_eq!(code, 0, "{j:#}");
    let (code, _, j) = run(&[
        "check-sextuple", "--p", "29", "--b", "1", "--d", "3", "--alpha", "7", "--beta", "261", "--gamma", "15", "--witness", "166257,3020031,3", "--n", "7",
    ]);
    assert_eq!(code, 1);
    assert!(j["failures"].as_array().unwrap().iter().any(|f| f == "A3"));

    let (code, _, j) = run(&["extend-sextuple", "--family", "2", "--A", "0", "--B", "1"]);
    assert_eq!(code, 0, "{j:#}");
    let (code, _, j) = run(&["extend-sextuple", "--family", "2", "--A", "0", "--B", "2"]);
    assert_eq!(code, 1);
    assert!(j["error"].as_str().unwrap().contains("C1"));
    let (code, _, j) = run(&["extend-sextuple", "--family", "2", "--B0", "3", "--xmin", "-5", "--xmax", "5"]);
    assert_eq!(code, 0);
    assert_eq!(j["result"]["extensions"].as_array().unwrap().len(), 11);
}

#[test]
fn curve_checks() {
    let (code, _, j) = run(&["check-curve", "--family", "1", "--n", "7", "--T", "0"]);
    assert_eq!(code, 0, "{j:#}");
    assert_eq!(j["result"]["local"]["status"], "solvable");
    assert_eq!(j["result"]["points"]["found"].as_array().unwrap().len(), 0);
    let (code, _, j) = run(&["search-points", "--coeffs", "1,0,0,0,0,0,1", "--height-bound", "10"]);
    assert_eq!(code, 0);
    assert_eq!(j["result"]["points"].as_array().unwrap().len(), 4);
    let (code, _, j) = run(&["threefold-scan", "--p", "29", "--b", "1", "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(j["result"]["two_adic_scan"]["all_admissible_half"], true);
    let (code, _, _) = run(&["threefold-scan", "--p", "29", "--b", "1", "--d", "3", "--precision", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["search-points", "--family", "2", "--n", "7", "--T", "1", "--height-bound", "200"],
        vec!["threefold-scan", "--p", "5", "--b", "1", "--d", "1", "--precision", "8"],
        vec!["find-triples", "--p", "29", "--b0", "1", "--xmax", "8", "--ymax", "8"],
    ] {
        let (_, a, _) = run(&args);
        let mut one = args.clone();
        one.extend(["--jobs", "1"]);
        let (_, b, _) = run(&one);
        let mut four = args.clone();
        four.extend(["--jobs", "4"]);
        let (_, c, _) = run(&four);
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
    let (_, a, _) = run(&["verify-paper", "--seed", "7"]);
    let (_, b, _) = run(&["verify-paper", "--seed", "7"]);
    assert_eq!(a, b);
}
