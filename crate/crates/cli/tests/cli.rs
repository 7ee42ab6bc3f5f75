use std::path::{Path, PathBuf};
use std::process::Command;

use z3real_cli::{run, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("z3real").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_outputs_and_exit_codes() {
    let (code, out, _) = call(&["classify", "(3^6)"]);
    assert_eq!(code, EXIT_NEGATIVE);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tag"], "ExceptionN3");
    assert_eq!(v["graphic"], true);
    assert!(v["route"].is_null());

    let (code, out, _) = call(&["classify", "(5^2,3^6)"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["tag"], "Covered");
    assert_eq!(v["route"], "T14");
    assert_eq!(v["sequence"], "(5^2,3^6)");

    let (code, out, _) = call(&["classify", "(5,1)"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("\"graphic\":false"));

    let (code, _, err) = call(&["classify", "(3^"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("malformed"));
}

#[test]
fn verify_k4() {
    let k4 = scratch("k4.edges", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let (code, out, _) = call(&["verify", path_str(&k4)]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(out, "z3_connected=false\nthree_flowable=false\n");

    let (code, _, err) = call(&["verify", "/nonexistent/graph.edges"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot read"));
}

#[test]
fn realized_graphs_verify() {
    for s in [
        "(4,3^4)",
        "(7,4,3^7)",
        "(6,4^5,3^4)",
        "(7,4^5,3^5)",
        "(8,7,3^9)",
        "(6,5,4,3^5)",
    ] {
        let (code, out, err) = call(&["realize", s]);
        assert_eq!(code, EXIT_OK, "{s}: {err}");
        assert!(out.starts_with(&format!("# sequence: {s}\n")));
        assert!(out.contains("# proof: "));
        let file = scratch("realized.edges", &out);
        let (code, out, _) = call(&["verify", path_str(&file)]);
        assert_eq!(code, EXIT_OK, "{s}");
        assert!(out.starts_with("z3_connected=true\n"), "{s}");
    }
}

#[test]
fn realize_formats() {
    let (code, out, _) = call(&["realize", "(4,3^4)", "--format", "json", "--certify"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 8);
    assert_eq!(v["proof"], "certificate");
    assert!(v["certificate"].as_array().unwrap().last().unwrap() != "");

    let (code, out, _) = call(&["realize", "(4,3^4)", "--format", "dot"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l.starts_with("graph ")));
    assert!(out.lines().filter(|l| l.contains("--")).count() == 8);

    assert_eq!(call(&["realize", "(3^4)"]).0, EXIT_NEGATIVE);
    assert_eq!(call(&["realize", "(5,1)"]).0, EXIT_NEGATIVE);
    assert_eq!(call(&["realize", "(4^2,2^3)"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["realize", "(4,3^4)", "--format", "png"]).0,
        EXIT_USAGE
    );
}

#[test]
fn enumerate_streams() {
    let (code, out, _) = call(&["enumerate", "(3^6)", "--dedup"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.split("\n\n").count(), 2);
    let (_, out, _) = call(&["enumerate", "(3^6)", "--limit", "4"]);
    assert_eq!(out.split("\n\n").count(), 4);
    assert_eq!(call(&["enumerate", "(3^13)"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "(5,1)"]).0, EXIT_NEGATIVE);
}

#[test]
fn certify_and_replay() {
    let (_, graph, _) = call(&["realize", "(6,4,3^6)"]);
    let g = scratch("fig1c.edges", &graph);
    let (code, cert, _) = call(&["certify", path_str(&g)]);
    assert_eq!(code, EXIT_OK);
    assert!(cert.trim_end().ends_with("done") || cert.contains("triangular"));
    let c = scratch("fig1c.cert", &cert);
    let (code, out, _) = call(&["certify", path_str(&g), "--replay", path_str(&c)]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "valid\n"));

    let k4 = scratch("k4-cert.edges", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let (code, out, _) = call(&["certify", path_str(&k4)]);
    assert_eq!((code, out.as_str()), (EXIT_NEGATIVE, "unknown\n"));
    let (code, out, _) = call(&["certify", path_str(&k4), "--replay", path_str(&c)]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.starts_with("invalid: "));

    let junk = scratch("junk.cert", "contract everything\n");
    assert_eq!(
        call(&["certify", path_str(&g), "--replay", path_str(&junk)]).0,
        EXIT_USAGE
    );
}

#[test]
fn sweep_table() {
    let (code, out, _) = call(&["sweep", "--n-min", "5", "--n-max", "7"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[1..].iter().all(|r| r.ends_with("pass")));
    assert_eq!(call(&["sweep", "--n-max", "20"]).0, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&[]).0, EXIT_USAGE);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("realize"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_z3real");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["classify", "(4,3^4)"]), Some(0));
    assert_eq!(status(&["classify", "(3^6)"]), Some(1));
    assert_eq!(status(&["bogus"]), Some(2));
}
