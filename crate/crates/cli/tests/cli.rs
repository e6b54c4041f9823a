use std::process::{Command, Output};

use intseq_cli::bench::BenchReport;
use intseq_cli::report::Document;

fn intseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sequences_table() {
    let out = intseq(&["sequences", "--poly", "1,2,-1", "--steps", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "polynomial: x^2 + 2x - 1\n\
         seed: 1,0\n\
         j  S(1)  S(2)        S(1)/S(2)\n\
         0     1     0              inf\n\
         1    -2     1  -2.000000000000\n\
         2     5    -2  -2.500000000000\n\
         3   -12     5  -2.400000000000\n"
    );
}

#[test]
fn zero_steps_echo_the_seed() {
    let out = intseq(&[
        "sequences",
        "--poly",
        "1,2,-1",
        "--steps",
        "0",
        "--seed",
        "3,4",
        "--digits",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("seed: 3,4\n"));
    assert!(text.ends_with("0     3     4       0.75\n"), "{text}");
}

#[test]
fn cube_root_sequence_reaches_the_root() {
    let out = intseq(&[
        "sequences",
        "--poly",
        "1,0,0,-2",
        "--shift",
        "1,1",
        "--steps",
        "25",
        "--digits",
        "6",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::from_json(&stdout(&out)).unwrap();
    assert_eq!(doc.rows.len(), 26);
    let last = &doc.rows[25];
    assert_eq!(last.ratios[0], "1.259921");
    assert_eq!(last.ratios[1], "1.259921");
}

#[test]
fn root_of_the_quadratic() {
    let out = intseq(&["root", "--poly", "1,2,-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("-2.414213562373  Converged"));

    let out = intseq(&["root", "--poly", "1,2,-1", "--shift", "2,1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::from_json(&stdout(&out)).unwrap();
    assert_eq!(doc.estimates.len(), 1);
    assert_eq!(doc.estimates[0].value, "0.414213562373");
    assert_eq!(doc.estimates[0].status, "Converged");
}

#[test]
fn tie_exits_with_two() {
    let out = intseq(&["root", "--poly", "1,0,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("TieDetected"));
}

#[test]
fn roots_lists_every_real_root() {
    let out = intseq(&["roots", "--poly", "1,2,-1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = Document::from_json(&stdout(&out)).unwrap();
    let values: Vec<&str> = doc.estimates.iter().map(|e| e.value.as_str()).collect();
    assert_eq!(values, ["-2.414213562373", "0.414213562373"]);

    let out = intseq(&["roots", "--poly", "1,0,0,-2", "--digits", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1.25992105"));

    let out = intseq(&["roots", "--poly", "1,0,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("no real roots found\n"));
}

#[test]
fn bad_input_exits_with_usage_code() {
    for args in [
        &["root", "--poly", "2,1"][..],
        &["root", "--poly", "1,x"],
        &["root", "--poly", "1,2,-1", "--shift", "3,0"],
        &["sequences", "--poly", "1,2,-1", "--seed", "1,2,3"],
        &["root"],
        &["frobnicate"],
    ] {
        let out = intseq(args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let out = intseq(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sequences"));
}

#[test]
fn json_renders_back_to_the_same_table() {
    for args in [
        &[
            "sequences",
            "--poly",
            "1,0,0,-2",
            "--shift",
            "1,1",
            "--steps",
            "8",
        ][..],
        &["roots", "--poly", "1,-1,-6,2"],
    ] {
        let table = stdout(&intseq(args));
        let mut with_json = args.to_vec();
        with_json.push("--json");
        let doc = Document::from_json(&stdout(&intseq(&with_json))).unwrap();
        assert_eq!(doc.render_table(), table);
    }
}

#[test]
fn bench_on_the_worked_examples() {
    let out = intseq(&[
        "bench", "--corpus", "paper", "--digits", "1", "--runs", "1", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: BenchReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.rows.len(), 3);
    for row in &report.rows {
        assert_eq!(row.integer_status, "Converged");
        assert_eq!(row.integer_value, row.oracle_value);
    }
}

#[test]
fn bench_single_polynomial() {
    let out = intseq(&["bench", "--poly", "1,0,-2", "--runs", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.contains("1.414213562373"));
}
