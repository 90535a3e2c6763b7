use std::process::{Command, Output};

use serde_json::Value;

fn cactus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cactus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn wp_nesting_relation_is_trivial() {
    let o = cactus(&["wp", "--group", "j4-23", "s12 s13 s23 s13"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "trivial");
    let o = cactus(&["wp", "--group", "j4-23", "s12*s13", "s13 s23"]);
    assert_eq!(stdout(&o).trim(), "equal");
    let o = cactus(&["wp", "--group", "j4", "s14 s12 s14", "s34"]);
    assert_eq!(stdout(&o).trim(), "equal");
}

#[test]
fn pi_of_a_pure_word() {
    let o = cactus(&["pi", "--degree", "3", "s12 s23 s12 s13"]);
    assert_eq!(stdout(&o), "(1,2,3)\npure\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cactus(&["wp", "s12 s5"]).status.code(), Some(2));
    assert_eq!(cactus(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cactus(&["ball", "--group", "j9-x"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_1_and_names_it() {
    // sizes (1, 5, 15) need three levels
    let o = cactus(&["ball", "--radius", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("check failed: ball: sphere sizes at levels 0-2"), "{err}");
}

#[test]
fn ball_report_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ball.json");
    let o = cactus(&["ball", "--radius", "5", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let m = &v["metrics"];
    assert_eq!(m["sphere_sizes"], serde_json::json!([1, 5, 15, 40, 105]));
    for k in ["radius", "vertex_count", "edge_count", "square_count"] {
        assert!(m[k].is_u64(), "{k}");
    }
}

#[test]
fn enumerate_finds_twenty() {
    let o = cactus(&["enumerate", "--radius", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["metrics"]["nontrivial_count"], 20);
}

#[test]
fn quotient_is_n5() {
    let o = cactus(&["quotient", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let m = &json(&o)["metrics"];
    assert_eq!(m["chi"], -3);
    assert_eq!(m["orientable"], false);
    assert_eq!(m["classification"], "N5");
}

#[test]
fn kb_prints_rules() {
    let o = cactus(&["kb", "--group", "j3-2", "--cap", "64"]);
    assert_eq!(stdout(&o), "s12 s12 -> e\ns23 s23 -> e\n# 2 rules, confluent\n");
}

#[test]
fn dirichlet_svg_and_angles() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("d.svg");
    let o = cactus(&["dirichlet", "--svg", svg.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["metrics"]["sides"].as_array().unwrap().len(), 20);
    let s = std::fs::read_to_string(&svg).unwrap();
    assert!(s.contains(r#"viewBox="0 0 1000 1000""#));
    let domain = s.lines().find(|l| l.contains(r#"class="domain""#)).unwrap();
    assert_eq!(domain.matches(" A ").count() + domain.matches(" L ").count(), 20);
}

#[test]
fn x5_and_x4() {
    let o = cactus(&["x5", "--verify-phi", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["metrics"]["printed_squares"]["matched"], 14);
    let o = cactus(&["x4", "--check-pj3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn all_is_deterministic() {
    let run = || {
        let o = cactus(&["all", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let mut v = json(&o);
        for r in v["reports"].as_object_mut().unwrap().values_mut() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
}
