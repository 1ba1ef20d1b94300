use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_circlelab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn circlelab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("circlelab-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn r2_text() {
    let o = run(&["r2", "25"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "12 12 12 agree=true");
}

#[test]
fn sum_csv_at_zero() {
    let o = run(&["--format", "csv", "sum", "0"]);
    assert_eq!(stdout(&o), "x,count,pi_x,delta,normalized\n0,1,0,1,\n");
}

#[test]
fn sum_methods_agree() {
    let out: Vec<String> = ["enumerate", "floor_identity", "sieve"]
        .iter()
        .map(|m| stdout(&run(&["--format", "csv", "sum", "12345.6", "--method", m])))
        .collect();
    assert_eq!(out[0], out[1]);
    assert_eq!(out[1], out[2]);
}

#[test]
fn closed_form_columns() {
    let o = run(&["--format", "csv", "closed-form", "fresnel", "--a", "2", "--m", "100"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,m,lhs,rhs,residual"));
    let row: Vec<f64> = lines.next().unwrap().split(',').map(|c| c.parse().unwrap()).collect();
    assert!((row[2] - row[3] - row[4]).abs() < 1e-10);
}

#[test]
fn json_envelope() {
    let o = run(&["--format", "json", "delta", "10.5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["meta"]["command"], "delta");
    assert!(v["meta"]["version"].is_string());
    assert_eq!(v["rows"][0]["count"], 37);
}

#[test]
fn sweep_csv_round_trip() {
    let dir = scratch("sweep");
    let path = dir.join("s.csv");
    let o =
        run(&["--format", "csv", "--out", path.to_str().unwrap(), "sweep", "--from", "1", "--to", "20000"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,count,pi_x,delta,normalized\n"));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().count(), 20_001);

    let o = run(&["--format", "csv", "report", "sweep", "--input", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));

    let tampered = text.replacen("\n2,9,", "\n2,10,", 1);
    std::fs::write(&path, tampered).unwrap();
    let o = run(&["report", "sweep", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn config_defaults_yield_to_flags() {
    let dir = scratch("config");
    let cfg = dir.join("c.toml");
    std::fs::write(&cfg, "precision = 3\nformat = \"csv\"\n[sum]\nmethod = \"enumerate\"\n").unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(stdout(&run(&["--config", c, "sum", "10.5"])).lines().nth(1), Some("10.5,37,33,4.01,2.23"));
    let o = run(&["--config", c, "--precision", "6", "sum", "10.5"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("10.5,37,32.9867,4.01328,2.22947"));
    std::fs::write(&cfg, "precision = \"many\"\n").unwrap();
    assert_eq!(run(&["--config", c, "r2", "5"]).status.code(), Some(64));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cache_directory_is_used() {
    let dir = scratch("cache");
    let o = bin()
        .env("CIRCLELAB_CACHE_DIR", &dir)
        .args(["--format", "csv", "series", "s", "2.5", "--terms", "5000"])
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(dir.join("r2table.bin").exists());
    let again = bin()
        .env("CIRCLELAB_CACHE_DIR", &dir)
        .args(["--format", "csv", "series", "s", "2.5", "--terms", "5000"])
        .output()
        .unwrap();
    assert_eq!(o.stdout, again.stdout);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_passes() {
    let o = run(&["--format", "csv", "verify", "--limit", "2000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["sum", "--", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["sweep", "--from", "1", "--to", "1e11"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(64));
    assert_eq!(run(&["--precision", "0", "r2", "5"]).status.code(), Some(64));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
