use std::process::{Command, Output};

fn prook(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prook")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    for (n, c, expected) in [("2", "1", "6\n"), ("0", "3", "1\n"), ("1", "4", "5\n"), ("3", "2", "93\n")] {
        let out = prook(&["count", "-n", n, "-c", c]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), expected);
    }
    let out = prook(&["count", "-n", "2", "-c", "1", "--breakdown"]);
    assert_eq!(stdout(&out), "6\n(2,0) 1\n(1,1) 4\n(0,2) 1\n");
}

#[test]
fn enumerate_lists_in_order() {
    let out = prook(&["enumerate", "-n", "1", "-c", "2"]);
    assert_eq!(stdout(&out), "n=1 c=2 []\nn=1 c=2 [1-1:1]\nn=1 c=2 [1-1:2]\n");
    let out = prook(&["enumerate", "-n", "2", "-c", "1"]);
    assert_eq!(stdout(&out).lines().count(), 6);
}

#[test]
fn mul_worked_example() {
    let d1 = "n=3 c=2 [1-1:1, 2-3:1, 3-2:1]";
    let d2 = "n=3 c=2 [1-2:1, 3-1:2]";
    assert_eq!(stdout(&prook(&["mul", d1, d2])), "n=3 c=2 [1-2:1]\n");
    assert_eq!(stdout(&prook(&["mul", "--as-matrix", d1, d2])), "0 u1 0\n0 0 0\n0 0 0\n");
    assert_eq!(stdout(&prook(&["mul", d2, "n=3 c=2 []"])), "n=3 c=2 []\n");
}

#[test]
fn mul_elements_and_errors() {
    let out = prook(&["mul", "1 * n=1 c=1 [1-1:1]", "2 * n=1 c=1 [] + 1 * n=1 c=1 [1-1:1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 * n=1 c=1 [] + 1 * n=1 c=1 [1-1:1]\n");

    let out = prook(&["mul", "n=2 c=1 [1-1:1]", "n=3 c=1 []"]);
    assert_eq!(out.status.code(), Some(2));
    let out = prook(&["mul", "n=2 c=1 [1-1:1", "n=2 c=1 []"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn associativity_spot_check() {
    let out = prook(&["mul", "--check-assoc", "-n", "3", "-c", "2", "--seed", "11", "--samples", "500"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("ok: 500 triples"));
}

#[test]
fn xbasis_expansion() {
    let out = prook(&["xbasis", "n=1 c=1 [1-1:1]"]);
    assert_eq!(stdout(&out), "-1 * n=1 c=1 [] + 1 * n=1 c=1 [1-1:1]\n");
    let out = prook(&["xbasis", "--coords", "1 * n=1 c=1 [1-1:1]"]);
    assert_eq!(stdout(&out), "1 * x[n=1 c=1 []] + 1 * x[n=1 c=1 [1-1:1]]\n");
}

#[test]
fn chartable_small() {
    let out = prook(&["chartable", "-n", "2", "-c", "1", "--verify"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "l1,2|0,1|1,0|2\n0,1,0,0\n1,1,1,0\n2,1,2,1\n");
    let csv = stdout(&prook(&["chartable", "-n", "3", "-c", "2"]));
    // First label column is the trivial module: constant 1.
    assert!(csv.lines().skip(1).all(|row| row.split(',').nth(1) == Some("1")));
}

#[test]
fn bratteli_formats() {
    let dot = stdout(&prook(&["bratteli", "-c", "2", "-n", "2", "--format", "dot"]));
    assert!(dot.starts_with("digraph bratteli {"));
    assert_eq!(dot.matches(" -> ").count(), 12);

    let json = stdout(&prook(&["bratteli", "-c", "1", "-n", "4", "--format", "json"]));
    let graph = planar_rook::bratteli::BratteliGraph::from_json(&json).unwrap();
    let sizes: Vec<usize> = graph.levels().iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 2, 3, 4, 5]);

    let out = prook(&["bratteli", "-c", "2", "-n", "2", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_default_passes() {
    let out = prook(&["verify"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("\"status\": \"pass\""));
}

#[test]
fn verify_level_zero() {
    let out = prook(&["verify", "--n-cap", "0"]);
    assert!(out.status.success());
}

#[test]
fn verify_mutant_fails_with_witness() {
    let out = prook(&["verify", "--n-cap", "2", "--c-cap", "1", "--inject-mutant", "flip-x-sign"]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains("\"status\": \"fail\""));
    assert!(report.contains("\"witness\""));
}

#[test]
fn caps_and_env_overrides() {
    let out = prook(&["verify", "--n-cap", "2", "--c-cap", "1", "--cap", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the cap"));

    let out = Command::new(env!("CARGO_BIN_EXE_prook"))
        .args(["enumerate", "-n", "2", "-c", "1"])
        .env("PROOK_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_prook"))
        .args(["verify"])
        .env("PROOK_N_CAP", "1")
        .env("PROOK_C_CAP", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"n_cap\": 1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(prook(&["count", "-n", "2"]).status.code(), Some(2));
    assert_eq!(prook(&["count", "-n", "2", "-c", "0"]).status.code(), Some(2));
    assert_eq!(prook(&["frobnicate"]).status.code(), Some(2));
}
