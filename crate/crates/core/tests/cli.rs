use std::process::{Command, Output};

fn domgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = domgraph(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn complete_stats_table() {
    let out = stdout(&["reconfig", "--family", "complete", "--n", "3", "--stats"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "order       7");
    assert_eq!(lines[1], "size        9");
    assert_eq!(lines[2], "parts       4/3");
    assert_eq!(lines[3], "δ           2");
    assert_eq!(lines[4], "Δ           3");
}

#[test]
fn stats_json() {
    let out = stdout(&[
        "reconfig", "--family", "complete", "--n", "3", "--stats", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 7);
    assert_eq!(v["parts"], serde_json::json!([4, 3]));
    assert_eq!(v["euler"], "neither");
}

#[test]
fn path_orders() {
    assert_eq!(
        stdout(&["count", "--family", "path", "--n-max", "6", "--sums"]),
        "1,3,5,9,17,31\n"
    );
    assert_eq!(
        stdout(&["count", "--family", "cycle", "--n-max", "5", "--sums"]),
        "1,3,7,11,21\n"
    );
    assert_eq!(
        stdout(&["count", "--family", "ladder", "--n-max", "4", "--sums"]),
        "3,11,41,149\n"
    );
    let csv = stdout(&[
        "count", "--family", "path", "--n-max", "3", "--sums", "--format", "csv",
    ]);
    assert_eq!(csv, "family,n,order\npath,1,1\npath,2,3\npath,3,5\n");
}

#[test]
fn triangle_and_single_graph_counts() {
    let csv = stdout(&[
        "count", "--family", "cycle", "--n-max", "3", "--format", "csv",
    ]);
    assert_eq!(
        csv,
        "family,n,j,count\ncycle,3,1,3\ncycle,3,2,3\ncycle,3,3,1\n"
    );
    let csv = stdout(&["count", "--family", "path", "--n", "4", "--format", "csv"]);
    assert_eq!(csv, "n,j,count\n4,2,4\n4,3,4\n4,4,1\n");
}

#[test]
fn dominating_sets() {
    let json = stdout(&[
        "dominating",
        "--family",
        "path",
        "--n",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(json, "[[2],[1,2],[1,3],[2,3],[1,2,3]]\n");
    let json = stdout(&[
        "dominating",
        "--family",
        "path",
        "--n",
        "3",
        "--k",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(json, "[[2],[1,2],[1,3],[2,3]]\n");
}

#[test]
fn products_on_the_command_line() {
    let out = stdout(&[
        "family",
        "--product",
        "join:complete:2,complete:2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    let out = stdout(&["family", "--product", "ladder:3"]);
    assert!(out.starts_with("vertices   6\nedges      7\n"));
    let out = stdout(&[
        "count",
        "--product",
        "corona:path:2,complete:1",
        "--format",
        "json",
    ]);
    let counts: Vec<String> = serde_json::from_str(&out).unwrap();
    let total: u64 = counts.iter().map(|c| c.parse::<u64>().unwrap()).sum();
    // (2^1 + 1)^2
    assert_eq!(total, 9);
}

#[test]
fn input_and_output_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.json");
    std::fs::write(&input, r#"{"n": 3, "edges": [[1, 2], [2, 3]]}"#).unwrap();
    let output = dir.path().join("d.dot");
    let out = domgraph(&[
        "export",
        "--input",
        input.to_str().unwrap(),
        "--k",
        "3",
        "--format",
        "dot",
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let dot = std::fs::read_to_string(&output).unwrap();
    assert!(dot.starts_with("graph D3 {\n"));
    assert_eq!(dot.matches(" -- ").count(), 5);

    std::fs::write(&input, r#"{"n": 2, "edges": [[1, 1]]}"#).unwrap();
    assert_eq!(
        domgraph(&["family", "--input", input.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn reruns_are_byte_identical() {
    let invocations: [&[&str]; 4] = [
        &[
            "verify", "--suite", "parity", "--max-n", "9", "--seed", "11", "--format", "json",
        ],
        &[
            "reconfig", "--family", "cycle", "--n", "6", "--format", "dot",
        ],
        &[
            "export",
            "--product",
            "cartesian:path:2,cycle:3",
            "--k",
            "4",
        ],
        &["count", "--family", "path", "--n-max", "12"],
    ];
    for args in invocations {
        let a = domgraph(args);
        let b = domgraph(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_report() {
    let out = domgraph(&[
        "verify", "--suite", "cycles", "--max-n", "10", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let records = v["records"].as_array().unwrap();
    let seed = records
        .iter()
        .find(|r| r["id"] == "cycle.order_seed")
        .unwrap();
    assert_eq!(seed["status"], "erratum");
    assert_eq!(seed["comparisons"][0]["formula"], "5");
    assert_eq!(seed["comparisons"][0]["oracle"], "7");
    assert!(records.iter().all(|r| r["status"] != "fail"));
    for r in records {
        for c in r["comparisons"].as_array().unwrap() {
            assert!(c["formula"].is_string() && c["oracle"].is_string());
        }
    }
}

#[test]
fn exit_statuses() {
    assert_eq!(domgraph(&["--version"]).status.code(), Some(0));
    assert_eq!(domgraph(&[]).status.code(), Some(2));
    assert_eq!(
        domgraph(&["reconfig", "--family", "path"]).status.code(),
        Some(2)
    );
    assert_eq!(
        domgraph(&["reconfig", "--family", "star", "--n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        domgraph(&[
            "family",
            "--family",
            "path",
            "--n",
            "3",
            "--product",
            "ladder:2"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        domgraph(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );

    let out = domgraph(&["family", "--family", "cycle", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    assert_eq!(
        domgraph(&["dominating", "--family", "complete", "--n", "30"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        domgraph(&["count", "--family", "path", "--n-max", "0"])
            .status
            .code(),
        Some(1)
    );
}
