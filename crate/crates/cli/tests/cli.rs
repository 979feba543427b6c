use std::process::{Command, Output};

use serde_json::Value;

fn zdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdg"))
        .args(args)
        .env_remove("ZDG_DENSE_BUDGET")
        .output()
        .expect("zdg runs")
}

fn json(args: &[&str]) -> Value {
    let out = zdg(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn top_keys(v: &Value) -> Vec<String> {
    let mut keys: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
    keys.sort();
    keys
}

fn entries(v: &Value) -> Vec<(String, u64, String)> {
    v["spectrum"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["value"].as_str().unwrap().to_string(),
                e["multiplicity"].as_u64().unwrap(),
                e["kind"].as_str().unwrap().to_string(),
            )
        })
        .collect()
}

#[test]
fn structure_even_example() {
    let v = json(&["structure", "--p", "2", "--c", "6"]);
    let closed = &v["report"]["closed_form"];
    assert_eq!(closed["order"], 31);
    assert_eq!(closed["size"], 61);
    assert_eq!(closed["girth"], 3);
    assert_eq!(v["report"]["brute_force"]["girth"], 3);
    assert_eq!(v["report"]["consistent"], true);
    assert_eq!(v["report"]["levels"].as_array().unwrap().len(), 5);
    assert_eq!(v["report"]["levels"][2]["kind"], "clique");
    assert_eq!(v["method"], "both");
}

#[test]
fn structure_of_k2() {
    let v = json(&["structure", "--p", "3", "--c", "2"]);
    let closed = &v["report"]["closed_form"];
    assert_eq!(closed["order"], 2);
    assert_eq!(closed["size"], 1);
    assert_eq!(closed["diameter"], 1);
    assert_eq!(closed["girth"], "infinite");
    assert_eq!(closed["clique_number"], 2);
}

#[test]
fn non_prime_is_a_usage_error() {
    for cmd in ["structure", "verify", "spectrum", "export"] {
        let out = zdg(&[cmd, "--p", "4", "--c", "3"]);
        assert_eq!(out.status.code(), Some(2), "{cmd}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("p must be prime"));
    }
}

#[test]
fn laplacian_closed() {
    let v = json(&[
        "spectrum",
        "--p",
        "2",
        "--c",
        "5",
        "--matrix",
        "laplacian",
        "--method",
        "closed",
    ]);
    let got = entries(&v);
    let want: Vec<(String, u64, String)> = [("15", 1), ("7", 2), ("3", 3), ("1", 8), ("0", 1)]
        .into_iter()
        .map(|(a, m)| (a.to_string(), m, "exact".to_string()))
        .collect();
    assert_eq!(got, want);
    assert_eq!(v["residual_bound"], Value::Null);
}

#[test]
fn a_alpha_at_one_half() {
    let v = json(&[
        "spectrum", "--p", "2", "--c", "6", "--matrix", "a-alpha", "--alpha", "1/2",
    ]);
    let affine: Vec<(String, u64)> = v["spectrum"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["kind"] == "affine")
        .map(|e| {
            (
                e["at_alpha"].as_str().unwrap().to_string(),
                e["multiplicity"].as_u64().unwrap(),
            )
        })
        .collect();
    for want in [("1/2", 15), ("3/2", 7), ("5/2", 3), ("13/2", 1)] {
        assert!(
            affine.contains(&(want.0.to_string(), want.1)),
            "{want:?} not in {affine:?}"
        );
    }
    let numeric = entries(&v).iter().filter(|e| e.2 == "numeric").count();
    assert_eq!(numeric, 5);
    assert_eq!(v["spectrum"]["total_multiplicity"], 31);
    assert!(v["residual_bound"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn a_alpha_requires_alpha() {
    let out = zdg(&["spectrum", "--p", "2", "--c", "5", "--matrix", "a-alpha"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zdg(&[
        "spectrum", "--p", "2", "--c", "5", "--matrix", "a-alpha", "--alpha", "3/2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decimal_alpha_warns() {
    let out = zdg(&[
        "spectrum", "--p", "2", "--c", "5", "--matrix", "a-alpha", "--alpha", "0.25",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["spectrum"]["alpha"], "1/4");
}

#[test]
fn distance_laplacian_both() {
    let v = json(&[
        "spectrum",
        "--p",
        "2",
        "--c",
        "5",
        "--matrix",
        "distance-laplacian",
        "--method",
        "both",
        "--tol",
        "1e-8",
    ]);
    let check = &v["checks"][0];
    assert_eq!(check["name"], "closed-vs-dense-distance-laplacian");
    assert_eq!(check["status"], "pass");
    assert!(check["comparison"]["max_deviation"].as_f64().unwrap() < 1e-8);
    assert_eq!(entries(&v)[0], ("29".to_string(), 8, "exact".to_string()));
}

#[test]
fn dense_method_clusters() {
    let v = json(&["spectrum", "--p", "2", "--c", "5", "--method", "dense"]);
    let mults: Vec<u64> = entries(&v).iter().map(|e| e.1).collect();
    assert_eq!(mults, [1, 2, 3, 8, 1]);
    assert!(entries(&v).iter().all(|e| e.2 == "numeric"));
    assert!(v["residual_bound"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn dense_over_budget_exits_3_with_closed_form() {
    let out = Command::new(env!("CARGO_BIN_EXE_zdg"))
        .args(["spectrum", "--p", "2", "--c", "5", "--method", "dense"])
        .env("ZDG_DENSE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(entries(&v)[0], ("15".to_string(), 1, "exact".to_string()));
    assert_eq!(v["checks"][0]["status"], "skipped");
}

#[test]
fn csv_spectrum() {
    let out = zdg(&["spectrum", "--p", "2", "--c", "5", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "eigenvalue,multiplicity,kind\n15,1,exact\n7,2,exact\n3,3,exact\n1,8,exact\n0,1,exact\n"
    );
    let out = zdg(&[
        "spectrum", "--p", "2", "--c", "5", "--matrix", "a-alpha", "--alpha", "1/3", "--format", "csv",
    ]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "7*alpha-1,1,affine"), "{text}");
    assert!(text.lines().any(|l| l.ends_with(",1,numeric")));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--p", "2", "--c", "5", "--tol", "1e-8"][..],
        &["verify", "--p", "3", "--c", "4"][..],
    ] {
        let v = json(args);
        assert_eq!(v["report"]["passed"], true, "{args:?}");
        assert_eq!(v["report"]["fail"], 0);
        let names: Vec<&str> = v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["name"].as_str().unwrap())
            .collect();
        for needed in [
            "graph-oracle-equivalence",
            "equitability",
            "closed-vs-dense-laplacian",
            "closed-vs-dense-signless",
            "closed-vs-dense-adjacency",
            "closed-vs-dense-distance-laplacian",
            "laplacian-eigenvectors-exact",
            "trace-identities",
            "structure-independence-number",
        ] {
            assert!(names.contains(&needed), "{needed}");
        }
    }
}

#[test]
fn verify_usage_errors() {
    assert_eq!(zdg(&["verify", "--p", "4", "--c", "3"]).status.code(), Some(2));
    assert_eq!(zdg(&["verify", "--p", "2", "--c", "1"]).status.code(), Some(2));
    assert_eq!(
        zdg(&["verify", "--p", "2", "--c", "4", "--tol", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn corrupted_quotient_fails_verification() {
    let out = zdg(&["verify", "--p", "2", "--c", "5", "--corrupt-quotient", "1,2,-1"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("check failed: equitability"), "{stderr}");
}

#[test]
fn export_edgelists() {
    let out = zdg(&["export", "--p", "2", "--c", "2", "--format", "edgelist"]);
    assert_eq!(stdout(&out), "# vertex 0 level 1 label [0,1]\n");

    let out = zdg(&["export", "--p", "3", "--c", "2", "--format", "edgelist"]);
    let edges: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(String::from)
        .collect();
    assert_eq!(edges, ["0 1"]);

    let out = zdg(&["export", "--p", "2", "--c", "5"]);
    let text = stdout(&out);
    let edges: Vec<(usize, usize)> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let (u, v) = l.split_once(' ').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(edges.len(), 23);
    assert_eq!(text.lines().filter(|l| l.starts_with("# vertex ")).count(), 15);
    assert!(edges.iter().all(|(u, v)| u < v));
    assert!(edges.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn export_dot_and_bad_formats() {
    let out = zdg(&["export", "--p", "3", "--c", "2", "--format", "dot"]);
    assert!(stdout(&out).contains("0 -- 1;"));
    assert_eq!(
        zdg(&["export", "--p", "3", "--c", "2", "--format", "json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        zdg(&["export", "--p", "3", "--c", "2", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        zdg(&["spectrum", "--p", "3", "--c", "2", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_schema_is_stable() {
    let expect = |body: &str| {
        let mut k = vec!["checks", "method", "params", "residual_bound", body];
        k.sort();
        k.into_iter().map(String::from).collect::<Vec<_>>()
    };
    assert_eq!(
        top_keys(&json(&["structure", "--p", "2", "--c", "4"])),
        expect("report")
    );
    assert_eq!(
        top_keys(&json(&["spectrum", "--p", "2", "--c", "4"])),
        expect("spectrum")
    );
    assert_eq!(top_keys(&json(&["verify", "--p", "2", "--c", "4"])), expect("report"));
    let params = &json(&["spectrum", "--p", "2", "--c", "4", "--method", "both"])["params"];
    assert_eq!(
        (params["p"].as_u64(), params["c"].as_u64(), params["order"].as_u64()),
        (Some(2), Some(4), Some(7))
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "spectrum", "--p", "3", "--c", "4", "--matrix", "signless", "--method", "both",
        ][..],
        &["verify", "--p", "2", "--c", "6"][..],
        &["structure", "--p", "5", "--c", "3", "--format", "text"][..],
    ] {
        assert_eq!(zdg(args).stdout, zdg(args).stdout, "{args:?}");
    }
}

#[test]
fn writes_to_out_file() {
    let dir = std::env::temp_dir().join(format!("zdg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("edges.txt");
    let out = zdg(&["export", "--p", "3", "--c", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().ends_with("0 1\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn large_closed_form_needs_no_graph() {
    let v = json(&["spectrum", "--p", "65521", "--c", "4", "--matrix", "signless"]);
    assert_eq!(v["spectrum"]["total_multiplicity"], 65521u64.pow(3) - 1);
    let s = json(&["structure", "--p", "101", "--c", "5"]);
    assert_eq!(s["method"], "closed");
    assert_eq!(s["report"]["brute_force"], Value::Null);
}
