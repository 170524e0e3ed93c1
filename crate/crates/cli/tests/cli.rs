use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const A2: f64 = 1.435_540_022_092_26;

fn elastica(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elastica")).current_dir(dir).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn num(v: &Value, path: &[&str]) -> f64 {
    path.iter().fold(v, |v, k| &v[k]).as_f64().unwrap_or_else(|| panic!("{path:?} in {v}"))
}

#[test]
fn omega_star_reports_energy_and_inradius() {
    let dir = tempfile::tempdir().unwrap();
    let out = elastica(dir.path(), &["omega-star", "--n", "4000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((num(&v, &["functionals", "E"]) - 2.8711).abs() < 1e-4);
    assert!((num(&v, &["functionals", "r"]) - 1.0).abs() < 1e-6);
    assert_eq!(v["inequalities"][4]["equality"], Value::Bool(true));
    assert_eq!(fs::read_to_string(dir.path().join("omega-star.csv")).unwrap().lines().count(), 4000);

    let stadium = json(&elastica(dir.path(), &["omega-star", "--n", "4000", "--h", "0.5", "--out", "s.csv"]));
    assert!((num(&stadium, &["functionals", "E"]) - num(&v, &["functionals", "E"])).abs() < 1e-6);
}

#[test]
fn svg_output_is_a_closed_path() {
    let dir = tempfile::tempdir().unwrap();
    let out = elastica(dir.path(), &["omega-star", "--n", "64", "--format", "svg"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(dir.path().join("omega-star.svg")).unwrap();
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert!(svg.trim_end().ends_with("</svg>"));
    let path = svg.lines().find(|l| l.contains("<path")).unwrap();
    assert!(path.contains("d=\"M") && path.contains(" Z\""));
    assert_eq!(path.matches('L').count(), 63);
}

#[test]
fn functionals_round_trip_the_optimal_domain() {
    let dir = tempfile::tempdir().unwrap();
    for (file, format) in [("o.csv", "csv"), ("o.json", "json")] {
        let built = elastica(dir.path(), &["omega-star", "--n", "1000", "--format", format, "--out", file]);
        let read = elastica(dir.path(), &["functionals", file]);
        assert_eq!(read.status.code(), Some(0));
        assert_eq!(String::from_utf8_lossy(&built.stdout), String::from_utf8_lossy(&read.stdout), "{file}");
    }
}

#[test]
fn functionals_of_a_disk() {
    let dir = tempfile::tempdir().unwrap();
    let n = 10_000;
    let text: String = (0..n)
        .map(|i| {
            let t = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            format!("{},{}\n", t.cos(), t.sin())
        })
        .collect();
    fs::write(dir.path().join("disk.csv"), text).unwrap();
    let v = json(&elastica(dir.path(), &["functionals", "disk.csv"]));
    let pi = std::f64::consts::PI;
    let want = [("EP", 2.0 * pi * pi), ("E2A", pi * pi * pi), ("ED", 2.0 * pi), ("ER", pi), ("Er", pi)];
    for (k, w) in want {
        assert!((num(&v, &["functionals", "products", k]) - w).abs() < 1e-3 * w, "{k}");
    }
    assert_eq!(v["all_pass"], Value::Bool(true));
}

#[test]
fn input_errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("nc.csv"), "0,0\n1,0\n0.5,0.2\n1,1\n0,1\n").unwrap();
    let out = elastica(dir.path(), &["functionals", "nc.csv"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 2"));

    fs::write(dir.path().join("bad.csv"), "0,0\n1,0\n1,oops\n").unwrap();
    let out = elastica(dir.path(), &["functionals", "bad.csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.csv:3:"));

    fs::write(dir.path().join("bad.json"), "{\"vertices\": [\n[0, 0],\n[1]\n]}").unwrap();
    let out = elastica(dir.path(), &["functionals", "bad.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.json:3:"));

    assert_eq!(elastica(dir.path(), &["functionals", "missing.csv"]).status.code(), Some(1));
    assert_eq!(elastica(dir.path(), &["omega-star", "--n", "10"]).status.code(), Some(2));
    assert_eq!(elastica(dir.path(), &["omega-star", "--h", "-1"]).status.code(), Some(2));
    assert_eq!(elastica(dir.path(), &["solve", "--alpha", "2"]).status.code(), Some(2));
    assert_eq!(elastica(dir.path(), &["solve", "--alpha", "1", "--mode", "shoot"]).status.code(), Some(2));
    assert_eq!(elastica(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(elastica(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn coarse_bodies_get_functionals_only() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("sq.csv"), "0,0\n1,0\n1,1\n0,1\n").unwrap();
    let out = elastica(dir.path(), &["functionals", "sq.csv"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["inequalities"], Value::Null);
    assert_eq!(num(&v, &["functionals", "A"]), 1.0);
}

#[test]
fn table_of_e_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let out = elastica(dir.path(), &["table-ealpha", "--grid", "100", "--out", "t.csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("min sub-additivity gap"));
    let text = fs::read_to_string(dir.path().join("t.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,E,Eprime_analytic,Eprime_fd,Esecond,h,R"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 100);
    let last = rows.last().unwrap();
    assert!((last[1] - A2).abs() < 1e-8);
    assert_eq!(last[2], 0.0);
    assert!(rows.iter().all(|r| r[4] < 0.0));
}

#[test]
fn solve_direct_matches_the_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&elastica(dir.path(), &["solve", "--alpha", "0.7854", "--mode", "direct"]));
    assert!(num(&v, &["relative_difference"]).abs() < 5e-4);
    assert!(num(&v, &["kkt_residual"]) < 1e-3);

    let on = json(&elastica(dir.path(), &["solve", "--alpha", "1.5708", "--mode", "direct"]));
    let off = json(&elastica(dir.path(), &["solve", "--alpha", "1.5708", "--mode", "direct", "--no-convexity"]));
    for v in [&on, &off] {
        assert!((num(v, &["energy"]) - A2).abs() < 5e-4 * A2);
    }
}

#[test]
fn solve_shoot_reaches_the_limit_energy() {
    let dir = tempfile::tempdir().unwrap();
    let out = elastica(dir.path(), &["solve", "--alpha", "1.5708", "--mode", "shoot", "--n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((num(&v, &["energy"]) - A2).abs() < 1e-3);
    assert_eq!(v["lengths"].as_array().unwrap().len(), 8);
    assert!((v["lengths"][0]["length"].as_f64().unwrap() - std::f64::consts::PI).abs() < 1e-8);
}

#[test]
fn verify_quick_passes_and_the_negative_control_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = elastica(dir.path(), &["verify", "--level", "quick", "--json", "v.json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("v.json")).unwrap()).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["criteria"].as_array().unwrap().len(), 13);

    let out = elastica(dir.path(), &["verify", "--corrupt-quadrature"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["criteria"][1]["pass"], Value::Bool(false));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2 (constant a)"));
}
