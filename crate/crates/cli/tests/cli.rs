use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cycloribbon")).args(args).env_remove("CYCLORIBBON_GUARD").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_lists_labels_and_a_count() {
    let o = run(&["enumerate", "2", "2", "cycloribbons"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2|11\n1.1|11\n2|12\n1.1|21\n2|22\n1.1|22\n# 6 cycloribbons\n");
    let o = run(&["enumerate", "simples", "--n", "3", "--r", "3"]);
    assert_eq!(stdout(&o).lines().count(), 49);
    let o = run(&["enumerate", "1", "1", "cycloribbons"]);
    assert_eq!(stdout(&o), "1|1\n# 1 cycloribbons\n");
}

#[test]
fn bad_input_exits_with_three() {
    for args in [
        &["enumerate", "2", "2", "ribbons"][..],
        &["enumerate", "cycloribbons"],
        &["compute", "cartan", "--n", "2", "--r", "2", "--block", "3,1"],
        &["compute", "cartan", "--n", "2", "--r", "0"],
        &["compute", "induct", "2|21", "1|1"],
        &["compute", "decomp", "--n", "2", "--r", "2", "--format", "xml"],
    ] {
        assert_eq!(run(args).status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn guard_refusal_exits_with_two() {
    let o = run(&["compute", "cartan", "--n", "3", "--r", "3", "--guard", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn environment_overrides_the_guard_flag() {
    let bin = env!("CARGO_BIN_EXE_cycloribbon");
    let args = ["compute", "cartan", "--n", "3", "--r", "2", "--guard", "1000"];
    let o = Command::new(bin).args(args).env("CYCLORIBBON_GUARD", "5").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(bin)
        .args(["compute", "cartan", "--n", "3", "--r", "2", "--guard", "5"])
        .env("CYCLORIBBON_GUARD", "1000")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = Command::new(bin)
        .args(["compute", "cartan", "--n", "2", "--r", "2"])
        .env("CYCLORIBBON_GUARD", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn cartan_of_aks_2_2() {
    let o = run(&["compute", "cartan", "--n", "2", "--r", "2", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "# block (0,2)\nlabel,2|22,1.1|22\n2|22,1,0\n1.1|22,0,1\n\
         # block (1,1)\nlabel,2|12,1.1|21\n2|12,1,q\n1.1|21,q,1\n\
         # block (2,0)\nlabel,2|11,1.1|11\n2|11,1,0\n1.1|11,0,1\n"
    );
}

#[test]
fn decomposition_block_of_aks_3_3() {
    let o = run(&["compute", "decomp", "--n", "3", "--r", "3", "--block", "2,1", "--format", "csv"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.split(',').count() == 6));
}

#[test]
fn quiver_edge_list() {
    let o = run(&["compute", "quiver", "--n", "4", "--r", "2", "--block", "1,3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let block = &v["blocks"][0];
    assert_eq!(block["vertices"].as_array().unwrap().len(), 12);
    assert!(!block["edges"].as_array().unwrap().is_empty());
}

#[test]
fn induction_and_restriction() {
    let o = run(&["compute", "induct", "1.1|32", "1.1|31", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.contains(",2.2|3231\n"));
    let o = run(&["compute", "restrict", "3.1.1.2.2|122211323", "--at", "5", "--format", "csv"]);
    assert_eq!(stdout(&o), "k,left,right\n5,3.1.1|12221,2.2|1323\n");
}

#[test]
fn out_directory_gets_json_and_the_requested_format() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = run(&["compute", "cartan", "--n", "2", "--r", "2", "--format", "latex", "--out", d]);
    assert!(o.status.success());
    let json = std::fs::read_to_string(dir.path().join("cartan-n2-r2.json")).unwrap();
    let tex = std::fs::read_to_string(dir.path().join("cartan-n2-r2.tex")).unwrap();
    assert!(json.contains("\"kind\": \"cartan\""));
    assert!(tex.contains("% block (1,1)"));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn width_does_not_change_the_bytes() {
    let wide = run(&["compute", "cartan", "--n", "4", "--r", "2", "--jobs", "4"]);
    let narrow = run(&["compute", "cartan", "--n", "4", "--r", "2", "--jobs", "1"]);
    assert!(wide.status.success());
    assert_eq!(wide.stdout, narrow.stdout);
}

#[test]
fn verify_reports_each_item() {
    let o = run(&["verify", "fixtures", "--n", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("PASS ") || l.starts_with("# ")));
    assert!(text.contains("PASS qcartan aks-2-2-qcartan-block-1-1\n"));
    assert!(text.ends_with("# 6 passed, 0 failed, 0 refused\n"));
}

#[test]
fn empty_scope_passes_with_a_warning() {
    let o = run(&["verify", "fixtures", "--n", "7"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert!(stdout(&o).starts_with("PASS "));
}

#[test]
fn verify_under_a_tight_guard_refuses() {
    let o = run(&["verify", "fixtures", "--n", "4", "--guard", "30"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("REFUSED qcartan aks-4-4"));
}
