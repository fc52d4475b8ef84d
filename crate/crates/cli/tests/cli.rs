use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfineq")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Column `name` of the first data row whose first column starts with `key`.
fn field(csv: &str, key: &str, name: &str) -> f64 {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = header.iter().position(|h| *h == name).unwrap_or_else(|| panic!("no column {name}"));
    let row = lines.find(|l| l.starts_with(key)).unwrap_or_else(|| panic!("no row {key}"));
    row.split(',').nth(col).unwrap().parse().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("surfineq-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn constants_table() {
    let o = run(&["constants", "--p", "1,2"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    assert!((field(&csv, "1.0", "c_p") - PI).abs() < 1e-10);
    assert!((field(&csv, "2.0", "c_p") - 0.6777700).abs() < 1e-6);
}

#[test]
fn unit_sphere_quantities() {
    let o = run(&["quantities", "--family", "sphere", "--R", "1"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    let area = field(&csv, "sphere", "area");
    assert!((area - 4.0 * PI).abs() < 1e-5 * 4.0 * PI);
    assert!((field(&csv, "sphere", "willmore") - 4.0 * PI).abs() < 1e-5 * 4.0 * PI);
    assert!((field(&csv, "sphere", "diameter") - 2.0).abs() < 1e-5 * 2.0);
}

#[test]
fn cigar_topping_passes() {
    let o = run(&["verify", "--family", "cigar", "--eps", "0.01", "--suite", "topping"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = stdout(&o);
    let lhs = field(&csv, "topping,", "lhs");
    assert!(field(&csv, "topping,", "deficit") > 0.0);
    // the cylinder contributes π, the two caps a sphere of radius ε
    let eps: f64 = 0.01;
    let m = PI + 4.0 * PI * eps;
    let d = 1.0 + 2.0 * eps;
    assert!((lhs - m / d).abs() < 1e-4, "{lhs}");
}

#[test]
fn malformed_spec_is_a_usage_error() {
    let dir = scratch("bad");
    let spec = dir.join("bad.json");
    fs::write(&spec, "{\"family\": \"cigar\",").unwrap();
    for cmd in ["sweep", "verify"] {
        let o = run(&[cmd, "--spec", spec.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{cmd}");
    }
    assert_eq!(run(&["quantities", "--family", "torus"]).status.code(), Some(2));
    assert_eq!(run(&["quantities", "--family", "gamma", "--h", "1", "--a", "0.5", "--A", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn precondition_failure_in_explicit_convex_suite() {
    let o = run(&["verify", "--family", "dumbbell", "--neck", "0.3", "--bulge", "1", "--n", "1024", "--suite", "convex"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn identical_runs_write_identical_files() {
    let spec_dir = scratch("det");
    let spec = spec_dir.join("sweep.json");
    fs::write(
        &spec,
        r#"{"family": "random_lipschitz", "params": {"k": 8.0}, "range": {"param": "seed", "start": 0, "stop": 5, "count": 6}, "n": 512, "suites": ["topping", "simon"]}"#,
    )
    .unwrap();
    let mut outputs = Vec::new();
    for k in 0..2 {
        let out = spec_dir.join(format!("run{k}"));
        let o = run(&["sweep", "--spec", spec.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let files: Vec<Vec<u8>> = ["sweep.csv", "sweep.json", "sweep_reports.csv"]
            .iter()
            .map(|f| fs::read(out.join(f)).unwrap())
            .collect();
        outputs.push((o.stdout, files));
    }
    assert_eq!(outputs[0], outputs[1]);
    let reports = String::from_utf8(outputs[0].1[2].clone()).unwrap();
    // seed column carries the generator seed
    assert!(reports.lines().skip(1).all(|l| !l.ends_with(',')));
}

#[test]
fn rearrange_writes_curve_files() {
    let out = scratch("rearrange");
    let o = run(&["rearrange", "--family", "random_lipschitz", "--seed", "7", "--K", "8", "--n", "1024", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = stdout(&o);
    let m0 = field(&csv, "original", "total_abs_h");
    let m1 = field(&csv, "sharp", "total_abs_h");
    let m2 = field(&csv, "star", "total_abs_h");
    assert!((m0 - m1).abs() <= 1e-6 * m0 && m2 <= m1 + 1e-8);
    for f in ["theta.txt", "theta_sharp.txt", "theta_star.txt"] {
        let text = fs::read_to_string(out.join(f)).unwrap();
        assert!(text.starts_with("L="));
        assert_eq!(text.lines().count(), 1026);
    }
    // the written curve reads back as a surface
    let back = run(&["quantities", "--curve", out.join("theta_star.txt").to_str().unwrap()]);
    assert!(back.status.success(), "{}", String::from_utf8_lossy(&back.stderr));
}

#[test]
fn cigar_flow_probe_increases() {
    let o = run(&["flow", "--family", "cigar", "--eps", "0.01", "--tau", "1e-6"]);
    assert!(o.status.success());
    let csv = stdout(&o);
    assert!(field(&csv, "cigar", "analytic_rate") > 0.0);
    assert!(field(&csv, "cigar", "fd_rate") > 0.0);
}
