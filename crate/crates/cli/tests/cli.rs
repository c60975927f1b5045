use std::fs;
use std::process::{Command, Output};

fn burge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burge")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_exponent_coefficient_pairs() {
    for (args, want) in [
        (vec!["eval", "qbin", "4", "2"], "0:1 1:1 2:2 3:1 4:1"),
        (vec!["eval", "G", "1", "1", "1", "3/2", "2"], "0:1 1:1"),
        (vec!["eval", "F", "2", "1", "--L", "1", "--M", "1"], "0:1 1:2 2:1"),
        (vec!["eval", "B", "1", "1", "0", "0"], "0:1 1:2 2:1"),
        (
            vec!["eval", "D", "4", "2", "3", "3", "1", "1"],
            "0:1 1:1 3:1 4:1 5:1 6:1 8:1 9:1",
        ),
        (
            vec!["eval", "series", "2", "1", "--order", "8"],
            "0:1 1:1 2:1 3:1 4:2 5:2 6:3 7:3 8:4",
        ),
    ] {
        let o = burge(&args);
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim_end(), want, "{args:?}");
    }
}

#[test]
fn malformed_parameters_are_usage_errors() {
    for args in [
        vec!["eval", "qbin", "4"],
        vec!["eval", "qbin", "x", "2"],
        vec!["eval", "qbin", "4", "2", "--base", "0"],
        vec!["eval", "F", "4", "2", "--L", "1", "--M", "1"],
        vec!["eval", "G", "1", "1", "1/0", "1", "2"],
        vec!["eval", "nothing"],
        vec!["verify", "--suite", "nope"],
        vec!["verify"],
        vec!["verify", "--suite", "comp", "--a-max", "-1"],
        vec!["list-identities", "--suite", "nope"],
    ] {
        assert_eq!(burge(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_reports_a_summary_and_exit_code() {
    let o = burge(&["verify", "--suite", "thmmain", "--a-max", "4", "--lm-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let err = stderr(&o);
    assert!(err.contains("PASS thmmain 180/180"), "{err}");
    assert!(err.ends_with("PASS 360/360\n"), "{err}");
}

#[test]
fn json_report_is_stable_across_runs_and_threads() {
    let args = |t: &'static str| {
        vec![
            "verify",
            "--suite",
            "comp",
            "--suite",
            "hookp",
            "--lm-max",
            "4",
            "--n-max",
            "5",
            "--hook-max",
            "4",
            "--format",
            "json",
            "--threads",
            t,
        ]
    };
    let a = burge(&args("1"));
    let b = burge(&args("4"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let first = &v.as_array().unwrap()[0];
    assert_eq!(first["status"], "pass");
    assert!(first["params"].is_object());
    assert!(first.get("elapsed_ms").is_none());
}

#[test]
fn timing_is_opt_in() {
    let o = burge(&[
        "verify", "--suite", "comp", "--lm-max", "2", "--n-max", "2", "--format", "json", "--timing",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v[0]["elapsed_ms"].is_number());
}

#[test]
fn csv_report_has_a_header_row() {
    let o = burge(&["verify", "--suite", "section8", "--n-max", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "case,params,status,first_diff_exponent,lhs_coeff,rhs_coeff,error"
    );
    assert!(lines.all(|l| l.contains(",pass,")));
}

#[test]
fn positivity_suite_passes() {
    let o = burge(&["verify", "--suite", "positivity", "--n-max", "20", "--a-max", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn config_file_is_read_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    let out = dir.path().join("report.json");
    fs::write(
        &cfg,
        format!(
            "suite = [\"thmmain\"]\na_max = 3\nlm_max = 2\nformat = \"json\"\nout = {:?}\n",
            out.display().to_string()
        ),
    )
    .unwrap();
    let o = burge(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // (2,1), (3,1), (3,2) on a 3 x 3 grid, twice
    assert!(stdout(&o).ends_with("PASS 54/54\n"), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 54);

    let o = burge(&["verify", "--config", cfg.to_str().unwrap(), "--a-max", "2"]);
    assert!(stdout(&o).ends_with("PASS 18/18\n"), "{}", stdout(&o));
}

#[test]
fn bad_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "suite = [\"comp\"]\nunknown_key = 1\n").unwrap();
    assert_eq!(
        burge(&["verify", "--config", cfg.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn io_failures_exit_with_three() {
    let missing = burge(&["verify", "--config", "/nonexistent/run.toml"]);
    assert_eq!(missing.status.code(), Some(3));
    let unwritable = burge(&[
        "verify",
        "--suite",
        "comp",
        "--lm-max",
        "1",
        "--out",
        "/nonexistent/dir/r.json",
    ]);
    assert_eq!(unwritable.status.code(), Some(3));
}

#[test]
fn catalogue_listing_covers_every_suite() {
    let o = burge(&["list-identities"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for suite in [
        "thmmain",
        "thmmain2",
        "even",
        "corollaries",
        "series",
        "positivity",
        "section8",
        "comp",
        "hookp",
    ] {
        assert!(text.lines().any(|l| l.split('\t').nth(1) == Some(suite)), "{suite}");
    }
}
