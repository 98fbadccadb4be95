//! End-to-end checks of the command-line surface: file formats, the report
//! schema, and the exit-code contract (0 pass, 1 fail, 2 usage, 3
//! inconclusive).

use serde_json::Value;
use std::path::PathBuf;
use transmeasure::cli::dispatch;

fn run(args: &[&str]) -> i32 {
    let mut argv = vec!["transmeasure"];
    argv.extend_from_slice(args);
    dispatch(argv)
}

fn temp_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("transmeasure-it-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn zero_estimate_instance_file() {
    let dir = temp_dir();
    let path = dir.join("instance.txt");
    std::fs::write(
        &path,
        "# demo instance\nd0 = 1\nd1 = 1\ns = 4\nm = 3\nbeta = 1\npoint = 0, 1\npoint = 1, 2\npoint = 2, 4\n",
    )
    .unwrap();
    assert_eq!(run(&["zero-estimate", "--file", path.to_str().unwrap()]), 0);
}

#[test]
fn interp_demo_config_file() {
    let dir = temp_dir();
    let path = dir.join("toy.txt");
    std::fs::write(&path, "s=2\ns1=2\nt=1\nt1=1\nh=2\nalpha=2\nbeta=1\n").unwrap();
    let out = dir.join("toy-report.json");
    assert_eq!(
        run(&[
            "interp-demo",
            "--file",
            path.to_str().unwrap(),
            "--out",
            out.to_str().unwrap()
        ]),
        0
    );
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["results"]["rank"], 6);
    assert_eq!(v["results"]["l"], 6);
    assert!(v["results"]["minor"].is_string());
    assert_eq!(v["results"]["selected_rows"].as_array().unwrap().len(), 6);
}

#[test]
fn report_schema_golden_structure() {
    let dir = temp_dir();
    let out = dir.join("chain.json");
    assert_eq!(
        run(&[
            "chain-verify",
            "--theorem",
            "thm2",
            "--d",
            "1",
            "--out",
            out.to_str().unwrap()
        ]),
        0
    );
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    // stable top-level schema
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        vec![
            "checks",
            "command",
            "input",
            "max_bits",
            "results",
            "timing_ms"
        ]
    );
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 4);
    for c in checks {
        assert!(c["pass"].as_bool().unwrap());
        for side in ["lhs", "rhs"] {
            let lo = c[side]["lo"].as_str().unwrap();
            let hi = c[side]["hi"].as_str().unwrap();
            // decimal endpoint pairs parse as numbers
            assert!(lo.parse::<f64>().is_ok(), "{lo}");
            assert!(hi.parse::<f64>().is_ok(), "{hi}");
            assert!(c[side]["width_le"].is_string());
        }
    }
}

#[test]
fn inconclusive_precision_exits_3() {
    // a width far beyond a tiny precision ceiling cannot be certified
    assert_eq!(
        run(&[
            "height",
            "--minpoly",
            "1,0,-2",
            "--precision",
            "1e-80",
            "--max-precision",
            "64"
        ]),
        3
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]), 2);
    assert_eq!(
        run(&[
            "measure-bound",
            "--target",
            "pi",
            "--form",
            "polynomial",
            "--d",
            "1",
            "--length",
            "2"
        ]),
        2
    );
    assert_eq!(run(&["chain-verify"]), 2);
    assert_eq!(run(&["chain-verify", "--section", "5"]), 2);
    assert_eq!(
        run(&[
            "lemma3-bound",
            "--l",
            "2",
            "--e-expr",
            "e",
            "--m",
            "0",
            "--s",
            "0",
            "--epsilon",
            "1/2"
        ]),
        2
    );
}

#[test]
fn section6_presets_all_pass() {
    for preset in ["thm2", "thm3", "thm4"] {
        assert_eq!(
            run(&["chain-verify", "--section", "6", "--preset", preset]),
            0,
            "{preset}"
        );
    }
}

#[test]
fn search_run_log_appends() {
    let dir = temp_dir();
    let log = dir.join("runs.jsonl");
    let _ = std::fs::remove_file(&log);
    for l in ["6", "8"] {
        assert_eq!(
            run(&[
                "search",
                "--target",
                "e",
                "--dmax",
                "1",
                "--lmax",
                l,
                "--precision",
                "1e-6",
                "--log",
                log.to_str().unwrap(),
            ]),
            0
        );
    }
    let text = std::fs::read_to_string(&log).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["target"], "e");
        assert!(v["witness"].is_string());
        assert_eq!(v["pass"], Value::Bool(true));
    }
}

#[test]
fn lemma4_grid_via_cli() {
    assert_eq!(
        run(&[
            "lemma4-verify",
            "--x",
            "1",
            "--n",
            "3",
            "--h",
            "2",
            "--sigma",
            "2",
            "--grid",
            "4,3,3,5"
        ]),
        0
    );
}

#[test]
fn vanishing_order_via_cli() {
    assert_eq!(
        run(&[
            "vanishing-order",
            "--exponents",
            "0,1,2",
            "--orders",
            "0,0,0",
            "--points",
            "1,2,3"
        ]),
        0
    );
    assert_eq!(
        run(&[
            "vanishing-order",
            "--exponents",
            "0,1",
            "--orders",
            "1,1",
            "--points",
            "1,2"
        ]),
        0
    );
}

#[test]
fn liouville_via_cli() {
    // f = x^2 - 2 at 3/2 over Q: bound = -2 log 3
    assert_eq!(
        run(&[
            "liouville",
            "--length-f",
            "3",
            "--degrees",
            "2",
            "--heights",
            "1.0986122886681099",
            "--field-degree",
            "1",
            "--real"
        ]),
        0
    );
}
