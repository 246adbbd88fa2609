use std::process::{Command, Output};

use bgeom::{evaluate, ConstantId, ConstantRequest, NormedSpace, Strategy};

fn bgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bgeom")).args(args).output().expect("binary runs")
}

fn bgeom_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bgeom"))
        .args(args)
        .env("BG_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn compute_l1_exact() {
    let out = bgeom(&[
        "compute", "--space", "lp:q=1,dim=2", "--constant", "cinj_iso", "--alpha", "0.25", "--p", "2", "--strategy",
        "exact",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["value"].as_f64().unwrap(), 1.125);
    assert_eq!(v["exact"], true);
    assert_eq!(v["strategy"], "exact");
}

#[test]
fn compute_gamma_at_zero() {
    let out = bgeom(&["compute", "--space", "lp:q=2,dim=2", "--constant", "gamma_p", "--p", "2", "--t", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out)["value"].as_f64().unwrap();
    assert!((v - 1.0).abs() < 1e-9, "{v}");
}

#[test]
fn json_value_round_trips_bit_identical() {
    let out = bgeom(&[
        "compute", "--space", "lp:q=3,dim=2", "--constant", "cinj_iso", "--alpha", "0.1", "--p", "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let printed = json(&out)["value"].as_f64().unwrap();

    let space: NormedSpace = "lp:q=3,dim=2".parse().unwrap();
    let strategy = bgeom_cli::parse_strategy("auto", bgeom_cli::DEFAULT_SEED).unwrap();
    let req = ConstantRequest::new(ConstantId::CinjIso).alpha(0.1).p(2.0).strategy(strategy);
    let lib = evaluate(&space, &req).unwrap().value;
    assert_eq!(printed.to_bits(), lib.to_bits());
}

#[test]
fn sweep_csv_hilbert() {
    let out = bgeom(&[
        "sweep", "--space", "lp:q=2,dim=2", "--constant", "cinj_via_gamma", "--p", "2", "--alpha-grid", "0:0.5:0.05",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let mut rdr = csv::Reader::from_reader(&out.stdout[..]);
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["alpha", "value", "witness1", "witness2", "strategy", "exact"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 11);
    for row in &rows {
        let a: f64 = row[0].parse().unwrap();
        let v: f64 = row[1].parse().unwrap();
        // inner product space: (1-a)^2 + a^2
        let want = (1.0 - a).powi(2) + a * a;
        assert!((v - want).abs() < 1e-3, "alpha {a}: {v} vs {want}");
        assert!(row[2].starts_with('('));
    }
    assert_eq!(&rows[10][0], "0.5");
}

#[test]
fn sweep_over_t() {
    let out = bgeom(&[
        "sweep", "--space", "l1", "--constant", "gamma_p", "--p", "1", "--t-grid", "0:1:0.5", "--strategy", "exact",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,value,witness1,witness2,strategy,exact"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn unknown_tokens_exit_2_and_are_named() {
    let cases: [(&[&str], &str); 4] = [
        (&["compute", "--space", "lp:q=2,dim=2", "--constant", "nope", "--p", "2"], "nope"),
        (&["compute", "--space", "zz:q=2", "--constant", "james"], "zz:q=2"),
        (&["compute", "--space", "l2", "--constant", "james", "--strategy", "annealing"], "annealing"),
        (&["compute", "--space", "l2", "--constant", "james", "--frobnicate"], "--frobnicate"),
    ];
    for (args, token) in cases {
        let out = bgeom(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(token), "{args:?}: {}", stderr(&out));
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn parameters_must_match_constant() {
    let out = bgeom(&["compute", "--space", "l2", "--constant", "gamma_p", "--p", "2", "--t", "0.5", "--alpha", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("alpha"));
    let out = bgeom(&["compute", "--space", "l2", "--constant", "cinj_iso", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bgeom(&["compute", "--space", "l2", "--constant", "cinj_iso", "--p", "2", "--alpha", "0.7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("alpha"));
}

#[test]
fn exact_rejected_for_non_polyhedral() {
    let out = bgeom(&["compute", "--space", "l2", "--constant", "james", "--strategy", "exact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let out = bgeom(&[
        "compute", "--space", "linf", "--constant", "cnj_p", "--p", "2", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((v["value"].as_f64().unwrap() - 2.0).abs() < 1e-6);
}

#[test]
fn unwritable_out_is_an_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.json");
    let out = bgeom(&["compute", "--space", "l1", "--constant", "james", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn same_argv_same_bytes_any_thread_count() {
    let args = [
        "compute", "--space", "lp:q=3,dim=3", "--constant", "cinj_iso", "--alpha", "0.25", "--p", "2", "--strategy",
        "multistart:starts=8,steps=60", "--seed", "11",
    ];
    let a = bgeom_env(&args, "1");
    let b = bgeom_env(&args, "3");
    let c = bgeom(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).contains("seed=11"));
}

#[test]
fn bad_thread_count() {
    let out = bgeom_env(&["spaces", "list"], "many");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("many"));
}

#[test]
fn verify_exit_codes() {
    let pass = bgeom(&[
        "verify", "--check", "bounds_pp", "--space", "l1", "--alpha", "0.25", "--p", "2", "--profile", "fast",
    ]);
    assert_eq!(pass.status.code(), Some(0), "{}", stderr(&pass));
    let v = json(&pass);
    assert_eq!(v[0]["passed"], true);
    assert_eq!(v[0]["runtime_ms"], 0);

    // the printed upper bound is below the attained value here
    let fail = bgeom(&[
        "verify", "--check", "james_sandwich", "--space", "l1", "--alpha", "0.5", "--p", "1", "--profile", "fast",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert_eq!(json(&fail)[0]["passed"], false);

    let out = bgeom(&["verify", "--check", "no_such_check", "--space", "l1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no_such_check"));
}

#[test]
fn verify_suite_is_reproducible() {
    let args = ["verify", "--space", "l1", "--space", "hexagon", "--profile", "fast", "--format", "csv"];
    let a = bgeom(&args);
    let b = bgeom(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("check_id,space,params,passed,slack,slack_used,runtime_ms"));
}

#[test]
fn spaces_list_parses() {
    let out = bgeom(&["spaces", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for entry in v.as_array().unwrap() {
        let d = entry["descriptor"].as_str().unwrap();
        assert!(d.parse::<NormedSpace>().is_ok(), "{d}");
    }
}

#[test]
fn help_exits_zero() {
    let out = bgeom(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("compute"));
}

#[test]
fn strategy_seed_fill() {
    let s = bgeom_cli::parse_strategy("multistart:starts=4,steps=10", 99).unwrap();
    assert_eq!(s.to_string(), "multistart:starts=4,steps=10,seed=99");
    let s = bgeom_cli::parse_strategy("multistart:starts=4,steps=10,seed=3", 99).unwrap();
    assert_eq!(s.to_string(), "multistart:starts=4,steps=10,seed=3");
    assert_eq!(bgeom_cli::parse_strategy("exact", 1).unwrap(), Strategy::Exact);
}
