use std::process::{Command, Output};

use gradlab::runner::RunReport;

fn gradlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradlab"))
        .args(args)
        .env_remove("GRADLAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn reports(out: &Output) -> Vec<RunReport> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| RunReport::from_json(l).expect("report parses"))
        .collect()
}

#[test]
fn good_grading_agrees() {
    let out = gradlab(&["check", "--mode", "both", "--catalog", "m2-gf2-good-grading", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &reports(&out)[0];
    assert_eq!(r.verdict["verdict"]["agreement"], true);
    assert!(!r.falsification);
}

#[test]
fn failed_cancellativity_is_exit_3_with_hypotheses() {
    let out = gradlab(&["check", "--mode", "criterion", "--catalog", "gf2-left-zero-grading", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let r = &reports(&out)[0];
    let h = r.error.as_ref().unwrap().hypotheses.as_ref().unwrap();
    assert!(!h.cancellative_at_e && !h.all_met);
}

#[test]
fn swap_action_all_assertions_hold() {
    let out = gradlab(&["theorem34", "--catalog", "c2-swap-global", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = &reports(&out)[0].verdict;
    for key in ["assertion_i", "assertion_ii", "assertion_iii"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn invalid_input_is_exit_2() {
    let dir = std::env::temp_dir().join(format!("gradlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"kind":"semigroup","semigroup":{"n":2,"table":[[0,1],[0,0]]}}"#).unwrap();
    let out = gradlab(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("associative"));
    let out = gradlab(&["validate", "--catalog", "no-such-entry"]);
    assert_eq!(out.status.code(), Some(2));
    // a semigroup cannot be checked for simplicity
    let out = gradlab(&["check", "--catalog", "left-zero-2", "--json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exceeding_the_budget_is_exit_4() {
    let out = gradlab(&["check", "--mode", "both", "--catalog", "gf2-d4-group-algebra", "--budget", "3", "--json"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(reports(&out)[0].verdict, serde_json::Value::Null);
    let env = Command::new(env!("CARGO_BIN_EXE_gradlab"))
        .args(["lemma33", "--catalog", "d4-square-global"])
        .env("GRADLAB_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(4));
}

#[test]
fn input_files_round_trip_through_the_cli() {
    let listing = gradlab(&["corpus", "--seed", "3", "--count", "6"]);
    assert_eq!(listing.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("gradlab-rt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.jsonl");
    std::fs::write(&path, &listing.stdout).unwrap();
    let from_file = gradlab(&["check", "--input", path.to_str().unwrap(), "--json"]);
    let generated = gradlab(&["check", "--corpus", "3", "--count", "6", "--json"]);
    assert_eq!(from_file.stdout, generated.stdout);
    for r in reports(&from_file) {
        assert_eq!(RunReport::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn corpus_output_is_deterministic() {
    let a = gradlab(&["corpus", "--seed", "11", "--count", "15", "--partial"]);
    let b = gradlab(&["corpus", "--seed", "11", "--count", "15", "--partial"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(String::from_utf8_lossy(&a.stdout).lines().count(), 15);
}

#[test]
fn timing_only_when_requested() {
    let plain = reports(&gradlab(&["validate", "--catalog", "gf4", "--json"]));
    assert!(plain[0].timing_us.is_none());
    let timed = reports(&gradlab(&["validate", "--catalog", "gf4", "--json", "--timing"]));
    assert!(timed[0].timing_us.is_some());
}

#[test]
fn every_subcommand_runs_on_the_catalog() {
    let names = gradlab(&["catalog"]);
    let names: Vec<String> = String::from_utf8_lossy(&names.stdout).lines().map(String::from).collect();
    assert!(names.iter().any(|n| n == "c2-partial-corner"));
    for cmd in ["lemma33", "theorem34", "pskew-build"] {
        for name in ["c2-swap-global", "c2-partial-corner", "d4-square-global", "gf9-galois-c2"] {
            let out = gradlab(&[cmd, "--catalog", name, "--json"]);
            assert_eq!(out.status.code(), Some(0), "{cmd} {name}");
        }
    }
    for cmd in ["lemma21-witness", "chain23", "graded-report", "group-report", "semigroup-report"] {
        let out = gradlab(&[cmd, "--catalog", "m2-gf3-good-grading-q8", "--json"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
    }
}

#[test]
fn goldens_from_the_catalog() {
    let out = gradlab(&["check", "--mode", "both", "--catalog", "gf2-c2-group-algebra", "--json"]);
    let v = &reports(&out)[0].verdict["verdict"];
    assert_eq!(v["graded_simple"], true);
    assert_eq!(v["brute_simple"], false);
    assert_eq!(v["corner_center_is_field"], false);
    let out = gradlab(&["lemma33", "--catalog", "c2-partial-corner", "--json"]);
    let v = &reports(&out)[0].verdict;
    assert_eq!(v["g_simple"], false);
    assert_eq!(v["witness"]["ideal"]["basis"], serde_json::json!([[0, 1]]));
}
