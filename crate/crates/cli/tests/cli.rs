use std::fs;
use std::process::{Command, Output};

use ikverify_core::catalog::Catalog;
use ikverify_core::io::{parse_graph6, write_edge_list};
use serde_json::Value;

fn ikverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ikverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalog_graph(name: &str) -> ikverify_core::Graph {
    Catalog::builtin().graph(name).unwrap()
}

#[test]
fn catalog_list_names_every_entry() {
    let o = ikverify(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for e in Catalog::builtin().entries() {
        assert!(text.lines().any(|l| l.starts_with(e.name)), "{}", e.name);
    }
}

#[test]
fn catalog_show_graph6_decodes_to_the_entry() {
    let o = ikverify(&["catalog", "show", "G10_26", "--format", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(g, catalog_graph("G10_26"));
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(ikverify(&["catalog", "show", "NOPE"]).status.code(), Some(2));
    assert_eq!(ikverify(&["check", "planar", "@file:/nonexistent/g.txt"]).status.code(), Some(2));
    assert_eq!(ikverify(&["check", "frobnicate"]).status.code(), Some(2));
    assert_eq!(ikverify(&["verify-paper", "--only", "no-such-group"]).status.code(), Some(2));
    assert_eq!(ikverify(&["verify-paper", "--override", "G11_35"]).status.code(), Some(2));
}

#[test]
fn planarity_check_reports_kuratowski_witness() {
    let o = ikverify(&["check", "planar", "@catalog:K33"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("non-planar"));
    assert!(text.contains("K3,3 minor"));
    let o = ikverify(&["check", "planar", "@catalog:Hprime"]);
    assert!(stdout(&o).starts_with("planar"));
}

#[test]
fn m_is_certified_nil() {
    let o = ikverify(&["check", "nil", "@catalog:M"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("nIL"));
    assert_eq!(text.matches("no minor").count(), 7);
}

#[test]
fn k6_is_not_nil() {
    let o = ikverify(&["check", "nil", "@graph6:E~~w"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("not nIL"));
}

#[test]
fn deleting_4_5_from_g10_26_is_not_2_apex() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let g = catalog_graph("G10_26").delete_edge(4, 5).unwrap();
    fs::write(&path, write_edge_list(&g)).unwrap();
    let arg = format!("@file:{}", path.display());
    let o = ikverify(&["check", "apex", "--k", "2", &arg]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not 2-apex (56 subsets covered"), "{}", stdout(&o));
}

#[test]
fn minor_check_finds_k6_in_g11_35() {
    let o = ikverify(&["check", "minor", "--pattern", "K6", "@catalog:G11_35"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("minor found"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn exhausted_budget_exits_3() {
    let o = ikverify(&["check", "minor", "--pattern", "K6", "@catalog:M", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let o = ikverify(&["verify-paper", "--only", "nil.m", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("ERROR"));
}

#[test]
fn table_group_has_22_passing_claims() {
    let o = ikverify(&["verify-paper", "--only", "table1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 22);
    assert_eq!(claims.iter().filter(|c| c["id"].as_str().unwrap().ends_with(".delete")).count(), 11);
    assert!(claims.iter().all(|c| c["verdict"] == "pass"));
    assert_eq!(v["overall"], "pass");
}

#[test]
fn only_mu_selects_mu_claims() {
    let o = ikverify(&["verify-paper", "--only", "mu", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert!(!claims.is_empty());
    assert!(claims.iter().all(|c| c["group"] == "mu"));
}

#[test]
fn reports_are_sorted_and_reproducible() {
    let args = ["verify-paper", "--only", "structure", "--no-timings"];
    let a = ikverify(&args);
    let b = ikverify(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json = ["verify-paper", "--only", "orbits", "--json", "--no-timings"];
    let (a, b) = (ikverify(&json), ikverify(&json));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let ids: Vec<&str> = v["claims"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn corrupted_catalog_entry_fails_its_claim() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.edges");
    let broken = catalog_graph("G11_35").delete_edge(2, 11).unwrap();
    fs::write(&path, write_edge_list(&broken)).unwrap();
    let arg = format!("G11_35=@file:{}", path.display());
    let o = ikverify(&["verify-paper", "--only", "catalog", "--override", &arg, "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let failed: Vec<&str> = v["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] != "pass")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"catalog.g11_35.m-plus-edge"), "{failed:?}");
    assert!(failed.contains(&"catalog.g11_35.size"), "{failed:?}");
}

#[test]
fn k6_family_emits_seven_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.g6");
    let o = ikverify(&["family", "@catalog:K6", "--emit", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("members: 7"));
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    for l in lines {
        assert_eq!(parse_graph6(l).unwrap().size(), 15);
    }
}

#[test]
fn mu_with_known_bounds_closes_g10_26() {
    let o = ikverify(&["mu", "@catalog:G10_26", "--known", "G11_35"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("mu in [5,5]"));
    assert!(text.contains("known-minor"));
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = ikverify_cli::run(["ikverify", "check", "apex", "--k", "1", "@catalog:K6"], &mut out, &mut err);
    assert_eq!(code, 0);
    let bin = ikverify(&["check", "apex", "--k", "1", "@catalog:K6"]);
    assert_eq!(out, bin.stdout);
}
