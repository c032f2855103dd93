use std::process::Command;

use nilcx::cli::{run_args, EXIT_DATA, EXIT_FALSE, EXIT_OK, EXIT_USAGE};

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> nilcx::cli::Output {
    run_args(std::iter::once("nilcx").chain(args.iter().copied()))
}

#[test]
fn classify_n63_admits_and_prints_witness() {
    let out = run(&["classify", "--catalog", "n6_3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verdict: admits"));
    assert!(out.stdout.contains("θ1 = w0 + i w1"));
    assert!(out.stdout.contains("θ2 = w3 + i w5"));
    assert!(out.stdout.contains("θ3 = w2 + i w4"));
}

#[test]
fn classify_dim6_minus_one_certificate() {
    let out = run(&["classify", "--catalog", "dim6", "--delta", "-1"]);
    assert_eq!(out.code, EXIT_FALSE);
    assert!(out.stdout.contains("polynomial t^2 - 1, 2 distinct real root(s)"));

    let out = run(&["classify", "--catalog", "dim6", "--delta", "-1", "--format", "json"]);
    assert_eq!(out.code, EXIT_FALSE);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    let c = &v["verdict"]["profiles"][0]["certificate"]["conclusion"];
    assert_eq!(c["polynomial"], "t^2 - 1");
    assert_eq!(c["real_roots"], 2);
    assert_eq!(c["kind"], "real-roots-only");
}

#[test]
fn broken_file_names_the_jacobi_triple() {
    let out = run(&["validate", &data("broken.alg")]);
    assert_eq!(out.code, EXIT_DATA);
    assert!(out.stderr.contains("Jacobi identity fails on (X0, X1, X2)"));
}

#[test]
fn data_file_equals_catalog() {
    let text = std::fs::read_to_string(data("n6_3.alg")).unwrap();
    let g = nilcx::liealg::parse_algebra(&text).unwrap();
    assert_eq!(g, nilcx::liealg::catalog::n6_3());
    assert_eq!(run(&["validate", &data("n6_3.alg")]).code, EXIT_OK);
}

#[test]
fn parse_errors_cite_line_and_column() {
    let dir = std::env::temp_dir().join(format!("nilcx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("bad.alg");
    std::fs::write(&p, "dim 3\nbracket X1 X1 = 1 X2\n").unwrap();
    let out = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_DATA);
    assert!(out.stderr.contains("line 2, column 9: i < j required"), "{}", out.stderr);
    std::fs::write(&p, "dim 3\nbracket X0 X1 = 1/0 X2\n").unwrap();
    let out = run(&["validate", p.to_str().unwrap()]);
    assert!(out.stderr.contains("line 2, column 17: malformed rational"), "{}", out.stderr);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["classify", "--bogus"]).code, EXIT_USAGE);
    assert_eq!(run(&["classify"]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["classify", "--catalog", "dim6"]).code, EXIT_USAGE);
    assert_eq!(run(&["classify", "--catalog", "nope"]).code, EXIT_USAGE);
    assert_eq!(run(&["catalog"]).code, EXIT_USAGE);
    assert_eq!(run(&["witness", "--catalog", "n6_3"]).code, EXIT_USAGE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
}

#[test]
fn catalog_list_covers_every_name() {
    let out = run(&["catalog", "--list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let names: Vec<String> = v["catalog"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap().to_string())
        .collect();
    let params: &[(&str, &[&str])] = &[
        ("l_plus_r", &["--n", "2"]),
        ("l_2n_r", &["--n", "3", "--r", "3"]),
        ("t_2n", &["--n", "3"]),
        ("n6_3", &[]),
        ("n6_3_salamon", &[]),
        ("dim6", &["--delta", "0"]),
        ("t3", &["--a", "1", "--b", "1"]),
        ("filiform", &["--n", "4"]),
        ("abelian", &["--n", "2"]),
    ];
    assert_eq!(names.len(), params.len());
    for (name, extra) in params {
        assert!(names.iter().any(|n| n == name));
        let mut args = vec!["validate", "--catalog", name];
        args.extend_from_slice(extra);
        assert_eq!(run(&args).code, EXIT_OK, "{name}");
    }
}

#[test]
fn witness_and_spinor_verbs() {
    let ok = ["--catalog", "l_plus_r", "--n", "2", "--theta", "w0 + i w1", "--theta", "w2 + i w3"];
    let out = run(&[&["witness"], &ok[..]].concat());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("witness verified"));
    let out = run(&[&["spinor"], &ok[..]].concat());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("annihilator dim: 4 (pure: true)"));

    let out = run(&["witness", "--catalog", "dim6", "--delta", "0", "--theta", "w0 + i w1", "--theta", "w3 + i w5", "--theta", "w2 + i w4"]);
    assert_eq!(out.code, EXIT_FALSE);
    assert!(out.stdout.contains("rejected at stage `closed`"));

    let out = run(&["spinor", "--catalog", "abelian", "--n", "4", "--omega", "w0^w1 + w2^w3"]);
    assert_eq!(out.code, EXIT_OK);
    let out = run(&["spinor", "--catalog", "n6_3", "--theta", "w0 + i w1", "--max-dim", "4"]);
    assert_eq!(out.code, EXIT_DATA);
    let out = run(&["spinor", "--catalog", "n6_3", "--theta", "w0 +"]);
    assert_eq!(out.code, EXIT_DATA);
}

#[test]
fn courant_verb() {
    let out = run(&[
        "courant", "--catalog", "l_plus_r", "--n", "2", "--omega", "w0^w3 + w1^w2", "--theta", "w0 + i w1",
        "--theta", "w2 + i w3", "--format", "json",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["signature"], serde_json::json!([4, 4]));
    assert_eq!(v["symplectic"]["report"]["type"], 0);
    assert_eq!(v["complex"]["report"]["type"], 2);
}

#[test]
fn remaining_verbs() {
    let out = run(&["filtration", "--catalog", "n6_3"]);
    assert!(out.stdout.contains("quotient dims: [2, 1, 2, 1]"));
    assert!(out.stdout.contains("j: 3"));
    let out = run(&["bound", "--catalog", "filiform", "--n", "6"]);
    assert!(out.stdout.contains("k_max: 1"));
    assert_eq!(run(&["bound", "--catalog", "abelian", "--n", "4"]).code, EXIT_DATA);
    let out = run(&["series", "--catalog", "n6_3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let dims: Vec<u64> = v["series"].as_array().unwrap().iter().map(|l| l["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [6, 4, 3, 1, 0]);
    let out = run(&["grade", "--catalog", "n6_3"]);
    assert_eq!(nilcx::liealg::parse_algebra(&out.stdout).unwrap(), nilcx::liealg::catalog::n6_3());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "--catalog", "t_2n", "--n", "4", "--format", "json"][..],
        &["classify", "--catalog", "n6_3_salamon"][..],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_nilcx");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["classify", "--catalog", "n6_3"]), Some(0));
    assert_eq!(code(&["classify", "--catalog", "dim6", "--delta", "-1"]), Some(1));
    assert_eq!(code(&["classify", "--catalog", "dim6", "--delta", "2"]), Some(2));
    assert_eq!(code(&["validate", &data("broken.alg")]), Some(65));
    assert_eq!(code(&["nope"]), Some(64));
}
