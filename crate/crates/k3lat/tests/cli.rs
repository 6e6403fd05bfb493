use std::process::{Command, Output};

use serde_json::Value;

fn k3lat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3lat")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn verify_sb_dim_passes() {
    let out = k3lat(&["verify", "--only", "sb-dim", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["results"][0]["name"], "sb-dim");
    assert_eq!(v["results"][0]["status"], "PASS");
    assert_eq!(v["results"][0]["details"]["dimension"], 4);
}

#[test]
fn verify_branch_degree_reports_deg_h() {
    let v = json_of(&k3lat(&["verify", "--only", "branch-degree-11", "--json"]));
    assert_eq!(v["results"][0]["details"]["degH"], 11);
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = k3lat(&["verify", "--only", "unknown-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown-check"));
    assert_eq!(k3lat(&["no-such-group"]).status.code(), Some(2));
    assert_eq!(k3lat(&["gradedring", "branch-degree", "--orb", "-3"]).status.code(), Some(2));
}

#[test]
fn full_run_is_ordered_and_reproducible() {
    let a = k3lat(&["verify"]);
    let b = k3lat(&["verify"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let names: Vec<&str> = text.lines().filter_map(|l| l.split_whitespace().nth(1)).collect();
    let registry: Vec<&str> = k3lat::checks::REGISTRY.iter().map(|c| c.name).collect();
    assert_eq!(&names[..20], &registry[..]);
    assert!(text.ends_with("20 passed, 0 failed, 0 errors\n"));
}

#[test]
fn selection_order_does_not_matter() {
    let strip = |mut v: Value| {
        for r in v["results"].as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let a = strip(json_of(&k3lat(&["verify", "--json", "--only", "roots-e8,lattice-Q"])));
    let b = strip(json_of(&k3lat(&["verify", "--json", "--only", "lattice-Q,roots-e8"])));
    assert_eq!(a, b);
    assert_eq!(a["results"][0]["name"], "lattice-Q");
}

#[test]
fn sextic_commands() {
    let v = json_of(&k3lat(&["sextic", "sb-dim", "--points", "[[0,0,1],[0,1,0],[1,0,0],[1,1,1]]"]));
    assert_eq!(v["dimension"], 4);
    let v = json_of(&k3lat(&["sextic", "d4-check", "--poly", "x^2*z^4 + y^6", "--point", "[0,0,1]"]));
    assert_eq!(v["d4"], false);
    let v = json_of(&k3lat(&["sextic", "d4-check", "--poly", "x1^3*x2^3", "--point", "[0,0,1]"]));
    assert_eq!(v["d4"], true);
    assert_eq!(v["poly"], "1*x^3*y^3");
    assert_eq!(v["poly_indexed"], "1*x1^3*x2^3");
    let v = json_of(&k3lat(&["sextic", "general-position"]));
    assert_eq!(v["holds"], true);
    let v = json_of(&k3lat(&["sextic", "conic-product", "--q1", "1,-1,0", "--q2", "1,-1,0", "--q3", "1,-1,0"]));
    assert_eq!(v["coords"]["x^3*z^3"], "-1");
    assert_eq!(v["coords"]["permanent"], "0");
    assert_eq!(v["in_base_space"], true);
    assert_eq!(k3lat(&["sextic", "conic-product", "--q1", "1,1,1", "--q2", "1,-1,0", "--q3", "1,-1,0"]).status.code(), Some(2));
    assert_eq!(k3lat(&["sextic", "sb-dim", "--points", "[[0,0,0]]"]).status.code(), Some(2));
}

#[test]
fn modulimap_commands() {
    let v = json_of(&k3lat(&["modulimap", "eval", "--triple", "1,0;0,1;1,1"]));
    assert_eq!(v["u"], "[0:1:-1:0]");
    let v = json_of(&k3lat(&["modulimap", "eval", "--triple", "1,2;2,4;-3,-6"]));
    assert_eq!(v["u"], "INDETERMINATE");
    let v = json_of(&k3lat(&["modulimap", "verify"]));
    assert_eq!(v["holds"], true);
    assert_eq!(v["contractions"].as_array().unwrap().len(), 3);
}

#[test]
fn weierstrass_commands() {
    let v = json_of(&k3lat(&["weierstrass", "classify", "--t4", "2", "--t6", "-1/3", "--t10", "0", "--t12", "0"]));
    let fibers = v["fibers"].as_array().unwrap();
    assert!(fibers.iter().any(|f| f["place"] == "0" && f["type"] == "NON_RDP"));
    let v = json_of(&k3lat(&["weierstrass", "family-invariants"]));
    assert_eq!(v["holds"], true);
    assert_eq!(v["x_valuation"], 9);
    assert!(v.get("polynomials").is_none());
}

#[test]
fn gradedring_commands() {
    let v = json_of(&k3lat(&["gradedring", "hilbert", "--weights", "2,2,2,2,11", "--relations", "22", "--upto", "22"]));
    let c = v["coefficients"].as_array().unwrap();
    assert_eq!((c[2].as_str(), c[11].as_str(), c[22].as_str()), (Some("4"), Some("1"), Some("364")));
    let v = json_of(&k3lat(&["gradedring", "branch-degree", "--orb", "-3", "--coarse", "-32", "--scale", "-1"]));
    assert_eq!(v["degH"], 70);
    assert_eq!(k3lat(&["gradedring", "branch-degree", "--orb", "-3", "--coarse", "-4", "--scale", "-4"]).status.code(), Some(2));
}

#[test]
fn lattice_commands() {
    let v = json_of(&k3lat(&["lattice", "info", "I(2,3);scale=2"]));
    assert_eq!(v["nikulin"]["delta"], 1);
    assert_eq!(v["nikulin"]["ell"], 5);
    let v = json_of(&k3lat(&["lattice", "roots", "D4"]));
    assert_eq!(v["count"], 24);
    let v = json_of(&k3lat(&["lattice", "isometric", "sum=[span(2),E8,E8]", "sum=[U,E8,E7]"]));
    assert_eq!(v["isometric"], true);
    let v = json_of(&k3lat(&["lattice", "complement", "I(2,3);scale=2", "--vectors", "[0,0,1,0,0]"]));
    assert_eq!(v["complement"]["nikulin"]["ell"], 4);
    let gram = json_of(&k3lat(&["lattice", "gram", "U;scale=2"]));
    assert_eq!(gram, serde_json::json!([["0", "2"], ["2", "0"]]));
    assert_eq!(k3lat(&["lattice", "info", "E9"]).status.code(), Some(2));
}
