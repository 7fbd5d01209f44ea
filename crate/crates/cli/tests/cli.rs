use std::process::{Command, Output};

use beltrami::construct::reference::{cyclic_polynomials, varpi, varpi0, FIRST_HEAD_DENOMINATOR, SECOND_HEAD_DENOMINATOR};
use beltrami::exactnum::{rat, GoldenNumber, Scalar};
use beltrami::trigexpr::VectorFieldExpr;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beltrami"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn verify_single_field() {
    let o = run(&["verify", "I"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("curl(I) = I: pass"));
}

#[test]
fn verify_all_as_json() {
    let o = run(&["verify", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"] == "d_I(1) = 2" && c["status"] == "pass"));
    for k in 1..=12 {
        assert!(checks.iter().any(|c| c["criterion"] == k), "criterion {k} missing");
    }
}

#[test]
fn verify_unknown_field_is_a_usage_error() {
    let o = run(&["verify", "bogus-name"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("available: V, W, I"));
}

fn scaled_heads(polys: Vec<beltrami::trigexpr::Polynomial<GoldenNumber>>, den: i64) -> Value {
    let inv = GoldenNumber::rational(rat(1, den));
    Value::Array(polys.iter().map(|p| p.scale(&inv).to_json()).collect())
}

#[test]
fn taylor_of_v_at_six() {
    let o = run(&["taylor", "--field", "V", "--degree", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = scaled_heads(cyclic_polynomials(&varpi()), FIRST_HEAD_DENOMINATOR);
    assert_eq!(json(&o)["components"], expected);
}

#[test]
fn taylor_of_y_at_nine() {
    let o = run(&["taylor", "--field", "Y", "--degree", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let q = VectorFieldExpr::from_polynomials(cyclic_polynomials(&varpi0()))
        .unwrap()
        .curl()
        .unwrap()
        .as_polynomials()
        .unwrap();
    assert_eq!(json(&o)["components"], scaled_heads(q, SECOND_HEAD_DENOMINATOR));
}

#[test]
fn taylor_at_zero_is_empty() {
    let o = run(&["taylor", "--field", "I", "--degree", "0"]);
    let v = json(&o);
    for c in v["components"].as_array().unwrap() {
        assert!(c.as_object().unwrap().is_empty());
    }
}

#[test]
fn taylor_cap_is_enforced_and_configurable() {
    let o = run(&["taylor", "--field", "I", "--degree", "13"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap 12"));
    let o = Command::new(env!("CARGO_BIN_EXE_beltrami"))
        .args(["taylor", "--field", "I", "--degree", "6"])
        .env("BELTRAMI_TAYLOR_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap 4"));
}

#[test]
fn orbit_csv_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("beltrami-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.csv");
    let b = dir.join("b.csv");
    for p in [&a, &b] {
        let o = run(&["orbit", "--field", "I", "--x0", "5,6,7", "--t-end", "1.0", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let text = String::from_utf8(ta).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,x,y,z");
    assert_eq!(lines.len(), 1002);
    assert!(lines[1001].starts_with("1.0,"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn orbit_rejects_nonpositive_step() {
    assert_eq!(run(&["orbit", "--x0", "5,6,7", "--step", "0"]).status.code(), Some(2));
    assert_eq!(run(&["orbit", "--x0", "5,6,7", "--step", "-1e-3"]).status.code(), Some(2));
}

#[test]
fn orbit_at_a_line_zero_is_constant() {
    let z = json(&run(&["zeros", "--class", "F", "--s-max", "6"]));
    let s0 = z[0]["roots"][0].as_f64().unwrap();
    let phi = GoldenNumber::phi().to_f64();
    let x0 = format!("{},{},0", phi * s0, s0);
    let o = run(&["orbit", "--x0", &x0, "--t-end", "0.5"]);
    let text = stdout(&o);
    for row in text.lines().skip(1) {
        let vals: Vec<f64> = row.split(',').skip(1).map(|v| v.parse().unwrap()).collect();
        assert!((vals[0] - phi * s0).abs() < 1e-8 && (vals[1] - s0).abs() < 1e-8 && vals[2].abs() < 1e-8);
    }
}

#[test]
fn zeros_on_face_rays() {
    let o = run(&["zeros", "--class", "F", "--s-max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v.as_array().unwrap().len(), 12);
    assert!((v[0]["roots"][0].as_f64().unwrap() - 5.1625967944).abs() < 1e-9);
    assert_eq!(run(&["zeros", "--class", "X"]).status.code(), Some(2));
}

#[test]
fn all_line_reports() {
    let v = json(&run(&["zeros", "--s-max", "8"]));
    assert_eq!(v.as_array().unwrap().len(), 62);
}

#[test]
fn sixty_two_lines() {
    let v = json(&run(&["lines"]));
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 62);
    for (class, n) in [("F", 12), ("V", 20), ("E", 30)] {
        assert_eq!(list.iter().filter(|e| e["class"] == class).count(), n);
    }
}

#[test]
fn bracket_is_nonzero() {
    let v = json(&run(&["bracket"]));
    assert_eq!(v["nonzero"], true);
    assert!(v["witness"]["monomial"].is_string());
}

#[test]
fn catalog_listing_and_descriptor() {
    let v = json(&run(&["catalog"]));
    assert_eq!(v.as_array().unwrap().len(), 14);
    let d = json(&run(&["catalog", "--field", "D"]));
    assert_eq!(d["name"], "D");
    assert_eq!(d["dimension"], 2);
}

#[test]
fn search_reports_the_origin() {
    let o = run(&["search", "--half-width", "1", "--grid", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert!(v.as_array().unwrap().iter().any(|z| z["kind"] == "origin"));
}
