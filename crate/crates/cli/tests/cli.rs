use std::fs;
use std::process::{Command, Output};

use ca_forge_cli::run::{self, MethodChoice, EXIT_MISMATCH, EXIT_RESOURCE, EXIT_USAGE};
use ca_forge_cli::{Cache, CliError, Config, ReportRecord};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ca-forge"))
        .args(args)
        .env_remove("CA_FORGE_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_examples() {
    let cfg = Config::default();
    let r = run::verify(&cfg, 11, MethodChoice::Auto).unwrap();
    assert!(r.computed_answer && r.agrees());
    assert_eq!(r.method, "oracle");
    let r = run::verify(&cfg, 9, MethodChoice::Auto).unwrap();
    assert!(!r.computed_answer && r.agrees());
    assert_eq!(r.predicate_reason, "exponent-not-odd-prime");
    let r = run::verify(&cfg, 7, MethodChoice::MaximalClass).unwrap();
    assert_eq!(r.reason_code, "case-5-not-ca");
    let r = run::verify(&cfg, 8, MethodChoice::MaximalClass).unwrap();
    assert_eq!(r.reason_code, "psl-is-ca");
}

#[test]
fn auto_switches_at_the_oracle_bound() {
    let cfg = Config::default();
    // |PSL(2,13)| = 1092 <= 1200 < 2448 = |PSL(2,17)|.
    assert_eq!(run::verify(&cfg, 13, MethodChoice::Auto).unwrap().method, "oracle");
    assert_eq!(run::verify(&cfg, 16, MethodChoice::Auto).unwrap().method, "maximal-class");
}

#[test]
fn invalid_q_and_bounds() {
    let cfg = Config::default();
    let e = run::verify(&cfg, 6, MethodChoice::Auto).unwrap_err();
    assert_eq!(e.exit_code(), EXIT_USAGE);
    assert_eq!(run::verify(&cfg, 2, MethodChoice::Auto).unwrap_err().exit_code(), EXIT_USAGE);
    let e = run::verify(&cfg, 16, MethodChoice::Oracle).unwrap_err();
    assert_eq!(e.exit_code(), EXIT_RESOURCE);
    let tight = Config { field_bound: 100, ..Config::default() };
    assert_eq!(run::verify(&tight, 101, MethodChoice::Auto).unwrap_err().exit_code(), EXIT_RESOURCE);
    assert_eq!(CliError::Engine(ca_forge::Error::Internal("x".into())).exit_code(), EXIT_MISMATCH);
}

#[test]
fn sweep_range_and_order() {
    assert_eq!(run::sweep_range(4, 13).unwrap(), vec![4, 5, 7, 8, 9, 11, 13]);
    assert_eq!(run::sweep_range(1, 4).unwrap(), vec![4]);
    assert!(run::sweep_range(13, 4).is_err());
    assert!(run::sweep_range(14, 15).is_err());
    let cfg = Config::default();
    let one = run::sweep(&cfg, 4, 30, 1).unwrap();
    let four = run::sweep(&cfg, 4, 30, 4).unwrap();
    let qs: Vec<u64> = one.iter().map(|(q, _)| *q).collect();
    assert_eq!(qs, vec![4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    for ((_, a), (_, b)) in one.iter().zip(&four) {
        assert_eq!(a.as_ref().unwrap(), b.as_ref().unwrap());
    }
    let s = run::summarize(&one);
    assert_eq!((s.records, s.agree, s.failed, s.worst_exit), (14, 14, 0, 0));
    for (q, r) in &one {
        let want = if *q > 13 { "maximal-class" } else { "oracle" };
        assert_eq!(r.as_ref().unwrap().method, want);
    }
}

#[test]
fn record_keys_are_in_fixed_order() {
    let r = run::verify(&Config::default(), 7, MethodChoice::Auto).unwrap();
    let json = r.to_json();
    let keys = [
        "\"q\"", "\"p\"", "\"m\"", "\"status\"", "\"predicate_answer\"", "\"predicate_reason\"",
        "\"computed_answer\"", "\"method\"", "\"reason_code\"", "\"per_class\"", "\"engine_version\"",
    ];
    let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{json}");
    assert!(!json.contains("cache_hit") && !json.contains("wall_time_ms"));
    let back: ReportRecord = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let first = {
        let cfg = Config { cache: Some(Cache::open(&path).unwrap()), ..Config::default() };
        run::verify(&cfg, 11, MethodChoice::Auto).unwrap()
    };
    assert_eq!(first.cache_hit, Some(false));
    let cfg = Config { cache: Some(Cache::open(&path).unwrap()), ..Config::default() };
    assert_eq!(cfg.cache.as_ref().unwrap().len(), 1);
    let second = run::verify(&cfg, 11, MethodChoice::Auto).unwrap();
    assert_eq!(second.cache_hit, Some(true));
    let strip = |mut r: ReportRecord| {
        r.cache_hit = None;
        r
    };
    assert_eq!(strip(first).to_json(), strip(second).to_json());
    // A different method is a different key.
    let mc = run::verify(&cfg, 11, MethodChoice::MaximalClass).unwrap();
    assert_eq!(mc.cache_hit, Some(false));
}

#[test]
fn corrupt_cache_lines_are_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let out = bin(&["verify", "5", "--cache", path.to_str().unwrap()]);
    assert!(out.status.success());
    let mut text = fs::read_to_string(&path).unwrap();
    text.push_str("{\"key\": truncated\nnot json\n");
    fs::write(&path, text).unwrap();
    let out = bin(&["verify", "5", "--json", "--cache", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupt cache line"));
    assert!(stdout(&out).contains("\"cache_hit\":true"));
}

#[test]
fn cache_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env.jsonl");
    let run_env = || {
        Command::new(env!("CARGO_BIN_EXE_ca-forge"))
            .args(["verify", "7", "--json"])
            .env("CA_FORGE_CACHE", &path)
            .output()
            .unwrap()
    };
    assert!(stdout(&run_env()).contains("\"cache_hit\":false"));
    assert!(stdout(&run_env()).contains("\"cache_hit\":true"));
}

#[test]
fn binary_exit_codes() {
    assert_eq!(bin(&["verify", "11"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "6"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "16", "--method", "oracle"]).status.code(), Some(3));
    assert_eq!(bin(&["sweep", "13", "4"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    let out = bin(&["verify", "1024"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the bound"));
}

#[test]
fn sweep_output() {
    let out = bin(&["sweep", "4", "13", "--json", "--jobs", "2"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 7);
    let qs: Vec<u64> = lines
        .iter()
        .map(|l| serde_json::from_str::<ReportRecord>(l).unwrap().q)
        .collect();
    assert_eq!(qs, vec![4, 5, 7, 8, 9, 11, 13]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("7 records, 7 agree, 0 failed"));
    let timed = bin(&["sweep", "4", "5", "--json", "--timings"]);
    assert!(stdout(&timed).contains("wall_time_ms"));
}

#[test]
fn inspect_tables() {
    let cfg = Config::default();
    let i = run::inspect(&cfg, 7, None).unwrap();
    let rows: Vec<(u8, usize, bool)> = i.classes.iter().map(|r| (r.case_id, r.order, r.is_ca)).collect();
    assert_eq!(rows, vec![(1, 21, true), (5, 24, false)]);
    assert_eq!(i.classes[1].schmidt.as_deref(), Some("NotCA"));
    let i = run::inspect(&cfg, 11, None).unwrap();
    let ids: Vec<u8> = i.classes.iter().map(|r| r.case_id).collect();
    assert_eq!(ids, vec![1, 3, 4]);
    assert!(i.classes.iter().all(|r| r.is_ca));
    let i = run::inspect(&cfg, 27, Some(1)).unwrap();
    let c8 = i.classes.iter().find(|r| r.case_id == 8).unwrap();
    assert_eq!(c8.order, 12);
    assert!(c8.is_ca);
    assert!(c8.fingerprint.contains("|G|=12 |Z|=1 |G'|=4"));
    let s = i.suzuki.as_ref().unwrap();
    assert!(s.passed && s.order == 448);
    assert!(i.to_text().contains("Suzuki N for Sz(8)"));
    assert_eq!(run::inspect(&cfg, 10, None).unwrap_err().exit_code(), EXIT_USAGE);
}

#[test]
fn selftest_passes() {
    let checks = ca_forge_cli::selftest::run(&Config::default());
    assert!(checks.len() >= 8);
    for c in &checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    let out = bin(&["selftest"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("FAIL"));
}
