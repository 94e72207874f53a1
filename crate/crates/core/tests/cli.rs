use std::process::{Command, Output};

fn cassini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cassini"))
        .args(args)
        .env_remove("CASSINI_SEED")
        .output()
        .expect("run cassini")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ball_csv_round_trip() {
    let out = cassini(&["ball", "--r", "log3", "--n", "200"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("component_id,theta,t,x,y"));
    let c: f64 = 1.0;
    let mut max_theta: f64 = 0.0;
    for line in lines {
        let f: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(f[0], 0.0);
        let (x, y) = (f[3], f[4]);
        let t = x.hypot(y);
        assert!((t * t + 1.0 - 2.0 * x - c * t).abs() < 1e-9);
        max_theta = max_theta.max(f[1]);
    }
    assert!((max_theta - std::f64::consts::FRAC_PI_3).abs() < 1e-12);
    assert!(!text.contains('\r'));
}

#[test]
fn ball_annular_and_errors() {
    let out = cassini(&["ball", "--r", "log7", "--n", "64"]);
    let text = stdout(&out);
    let ids: std::collections::BTreeSet<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ids.len(), 2);
    let bad = cassini(&["ball", "--r", "-1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("out of range"));
    let svg = cassini(&["ball", "--r", "1.5", "--n", "64", "--format", "svg"]);
    assert!(stdout(&svg).contains(r#"viewBox="-4 -4 8 8""#));
}

#[test]
fn figure1_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        assert!(cassini(&["figure1", "--out", p.to_str().unwrap()]).status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn sharpness_exit_codes() {
    let ok = cassini(&["sharpness", "--theorem", "T_tauhat_u", "--endpoint", "zero"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("# claimed_limit,1.0"));
    let none = cassini(&["sharpness", "--theorem", "T_tauhat_j", "--endpoint", "zero"]);
    assert_eq!(none.status.code(), Some(2));
}

#[test]
fn verify_clean_suites_and_seed_env() {
    let dir = tempfile::tempdir().unwrap();
    let run = |out: &str, seed_env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_cassini"));
        cmd.args([
            "verify",
            "--suite",
            "theorems",
            "--suite",
            "inclusion",
            "--samples",
            "50",
            "--out",
            out,
        ]);
        match seed_env {
            Some(s) => cmd.env("CASSINI_SEED", s),
            None => cmd.env_remove("CASSINI_SEED"),
        };
        cmd.output().unwrap()
    };
    let a = dir.path().join("a");
    let out = run(a.to_str().unwrap(), None);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(a.join("reports.jsonl").exists() && a.join("summary.txt").exists());

    let b = dir.path().join("b");
    let c = dir.path().join("c");
    run(b.to_str().unwrap(), Some("7"));
    run(c.to_str().unwrap(), Some("8"));
    let read = |p: &std::path::Path| std::fs::read(p.join("reports.jsonl")).unwrap();
    assert_ne!(read(&b), read(&c));
    assert_ne!(read(&a), read(&b));
}

#[test]
fn verify_reports_known_failures() {
    let dir = tempfile::tempdir().unwrap();
    let out = cassini(&["verify", "--suite", "convexity", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("convexity"));
}

#[test]
fn verify_rejects_bad_config() {
    let bad = cassini(&["verify", "--samples", "0", "--out", "/tmp/never-written"]);
    assert_eq!(bad.status.code(), Some(2));
    let bad = cassini(&["verify", "--tol", "nope=1", "--out", "/tmp/never-written"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!cassini(&["verify", "--suite", "bogus"]).status.success());
}
