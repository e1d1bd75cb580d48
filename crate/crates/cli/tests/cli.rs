use std::process::Command;

fn vpoly(args: &[&str]) -> (String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_vpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    (String::from_utf8_lossy(&out.stdout).into_owned(), out.status.code())
}

#[test]
fn mixed_volume_of_square_and_triangle() {
    let (stdout, code) = vpoly(&[
        "mixed-volume",
        "--json",
        r#"{"bodies":[{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1","1"]]},
                     {"dim":2,"vertices":[["0","0"],["1","0"],["0","1"]]}]}"#,
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["mv"], "1");
}

#[test]
fn invert_check_on_segment() {
    let (stdout, code) = vpoly(&[
        "invert-check",
        "--json",
        r#"{"dim":1,"vertices":[["0"],["1"]]}"#,
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["ok"], true);
}

#[test]
fn malformed_input_is_a_machine_readable_error() {
    let (stdout, code) = vpoly(&["hull", "--json", "{not json"]);
    assert_eq!(code, Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["error"]["message"].is_string());
}

#[test]
fn emitted_polytope_json_round_trips() {
    let input = r#"{"dim":2,"vertices":[["0","0"],["2","0"],["1","1"],["1","1/2"]]}"#;
    let (stdout, code) = vpoly(&["hull", "--json", input]);
    assert_eq!(code, Some(0));
    let (stdout2, code2) = vpoly(&["hull", "--json", &stdout]);
    assert_eq!(code2, Some(0));
    assert_eq!(stdout, stdout2);
}

#[test]
fn wedge_check_reports_betti_and_regions() {
    let (stdout, code) = vpoly(&[
        "wedge-check",
        "--json",
        r#"{"ambient":2,"subspaces":[
            {"point":["0","0"],"dirs":[["1","0"]]},
            {"point":["0","0"],"dirs":[["0","1"]]},
            {"point":["3","0"],"dirs":[["1","-1"]]},
            {"point":["1","0"],"dirs":[["1","5"]]}]}"#,
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["b1"], 3);
    assert_eq!(v["bounded"], 3);
    assert_eq!(v["ok"], true);
}

#[test]
fn falsified_verdict_exits_2() {
    // an absurd clustering tolerance merges every numeric root and
    // falsifies the count
    let (stdout, code) = vpoly(&[
        "harness",
        "--tol-cluster",
        "10",
        "--json",
        r#"{"a":{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1","1"]]},
            "b":{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1","1"]]}}"#,
    ]);
    assert_eq!(code, Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["matched"], false);
}
