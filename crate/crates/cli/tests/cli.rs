use std::process::{Command, Output};

fn salient(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_salient"))
        .args(args)
        .env_remove("SALIENT_LIMIT_MB")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = salient(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&["count", "--n", "7", "--method", "formula"]),
        "1824"
    );
    assert_eq!(stdout(&["class", "--word", "321", "--size-only"]), "3");
    assert_eq!(
        stdout(&["enumerate", "--by", "rank", "--max", "4"]),
        "1 2 6 21"
    );
}

#[test]
fn counting_methods_agree() {
    for method in ["bfs", "formula", "series", "salient"] {
        assert_eq!(
            stdout(&["count", "--n", "6", "--method", method]),
            "258",
            "{method}"
        );
    }
    assert_eq!(
        stdout(&[
            "count",
            "--n",
            "6",
            "--relation",
            "geq:3",
            "--method",
            "bfs"
        ]),
        "162"
    );
    assert_eq!(stdout(&["count", "--n", "6", "--relation", "geq:3"]), "162");
    assert_eq!(
        stdout(&["singletons", "--n", "7"]),
        stdout(&["singletons", "--n", "7", "--method", "series"])
    );
    let spec = ["multiset", "--spec", "1:2,2:1,3:2", "--count-only"];
    let mut series = spec.to_vec();
    series.extend(["--method", "series"]);
    assert_eq!(stdout(&spec), stdout(&series));
}

#[test]
fn classes_json_schema() {
    let v = json(&["classes", "--n", "3"]);
    assert_eq!(v["n"], 3);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 2);
    assert_eq!(classes[1]["representative"], "231");
    assert_eq!(classes[1]["size"], "3");
    assert_eq!(
        classes[1]["members"],
        serde_json::json!(["231", "312", "321"])
    );

    let v = json(&["classes", "--n", "4", "--members-up-to", "2"]);
    for c in v["classes"].as_array().unwrap() {
        let size: usize = c["size"].as_str().unwrap().parse().unwrap();
        assert_eq!(c.get("members").is_some(), size <= 2);
    }
}

#[test]
fn words() {
    assert_eq!(stdout(&["salient", "--word", "4312"]), "3412");
    assert_eq!(stdout(&["salient", "--word", "3412", "--check"]), "true");
    assert_eq!(stdout(&["class", "--word", "21354", "--product"]), "8");
    assert_eq!(stdout(&["class", "--word", "21354", "--size-only"]), "8");
    assert_eq!(stdout(&["descents", "--word", "3142"]), "{1,3}");
    assert_eq!(stdout(&["moves", "--word", "2143"]), "1243\n2134");
    assert_eq!(stdout(&["sparse", "--n", "5", "--count-only"]), "8");
}

#[test]
fn series() {
    assert_eq!(
        stdout(&["cf", "--n", "3", "--caps", "1,1,1", "--at", "1,1,1"]),
        "2"
    );
    let records = json(&["cf", "--n", "2", "--caps", "1,1"]);
    assert_eq!(records.as_array().unwrap().len(), 4);
    assert!(records[0]["coefficient"].is_string());
    assert_eq!(
        stdout(&["f4", "--exps", "2,1,1,2"]),
        stdout(&["f4", "--exps", "2,1,1,2", "--series"])
    );
    assert_eq!(
        stdout(&["f4", "--exps", "1,2,1,1", "--t", "3"]),
        stdout(&["f4", "--exps", "1,2,1,1", "--t", "3", "--series"])
    );
    assert_eq!(
        stdout(&["umbral", "--k", "2", "--upto", "4"]),
        "1 1 1 6 216"
    );
    assert_eq!(
        json(&["umbral", "--k", "1", "--upto", "3"]),
        serde_json::json!(["1", "1", "1", "2"])
    );
    assert_eq!(stdout(&["phi", "--coeffs", "0,0,1/2,-1"]), "-5");
    assert_eq!(
        stdout(&["expand", "--num", "1,-2", "--den", "1,-1", "--den", "1,-2,-1", "--order", "7"]),
        "1 1 2 4 9 21 50 120"
    );
}

#[test]
fn posets() {
    assert_eq!(
        stdout(&["poset", "beta", "--gamma", "0101", "--set", "1,3"]),
        "1"
    );
    let fv = json(&["poset", "beta", "--gamma", "0101"]);
    assert_eq!(fv.as_array().unwrap().len(), 16);
    assert_eq!(
        stdout(&["poset", "extensions", "--gamma", "01011", "--count-only"]),
        "11"
    );
    assert_eq!(
        stdout(&["poset", "extensions", "--qn", "4"])
            .lines()
            .count(),
        5
    );
    assert_eq!(stdout(&["poset", "mf", "--gamma", "01101"]), "true");
    assert_eq!(stdout(&["poset", "mf", "--boolean", "3"]), "false");
    let dot = stdout(&["--format", "dot", "poset", "show", "--gamma", "010"]);
    assert!(dot.starts_with("digraph poset {") && dot.contains("\"3.b\" -> \"top\";"));
    assert_eq!(
        stdout(&["enumerate", "--by", "elements", "--max", "6"]),
        "1 1 2 3 7"
    );
    assert_eq!(
        stdout(&["enumerate", "--by", "rank", "--max", "5", "--exhaustive"]),
        "1 2 6 21 78"
    );
}

#[test]
fn poset_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("salient-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let lattice = dir.join("l.json");
    std::fs::write(
        &lattice,
        stdout(&["--format", "json", "poset", "show", "--gamma", "0110"]),
    )
    .unwrap();
    let path = lattice.to_str().unwrap();
    assert_eq!(
        stdout(&["poset", "beta", "--file", path]),
        stdout(&["poset", "beta", "--gamma", "0110"])
    );
    let q = dir.join("q.json");
    std::fs::write(
        &q,
        stdout(&[
            "--format",
            "json",
            "poset",
            "show",
            "--natural",
            "--gamma",
            "0110",
        ]),
    )
    .unwrap();
    let qpath = q.to_str().unwrap();
    assert_eq!(
        stdout(&["poset", "beta", "--file", qpath]),
        stdout(&["poset", "beta", "--gamma", "0110"])
    );
    assert_eq!(stdout(&["poset", "iso", path, path]), "true");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_runs_a_named_suite() {
    let out = stdout(&["verify", "--suite", "fibonacci"]);
    assert!(out.starts_with("[PASS]"), "{out}");
    assert!(out.ends_with("1 passed, 0 failed"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        salient(&["count", "--n", "12", "--method", "bfs"])
            .status
            .code(),
        Some(2)
    );
    let out = salient(&[
        "count",
        "--n",
        "7",
        "--method",
        "bfs",
        "--limit",
        "brute_n=5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit 5"));
    assert_eq!(
        salient(&[
            "count",
            "--n",
            "7",
            "--method",
            "bfs",
            "--limit",
            "brute_n=7"
        ])
        .status
        .code(),
        Some(0)
    );
    assert_eq!(
        salient(&["salient", "--word", "1224"]).status.code(),
        Some(1)
    );
    let out = salient(&["--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    assert_eq!(salient(&["--help"]).status.code(), Some(0));
    assert_eq!(
        salient(&["verify", "--suite", "nonsense"]).status.code(),
        Some(1)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "multiset", "--spec", "1:2,2:2,3:1"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn sequences() {
    assert_eq!(
        stdout(&["count", "--n", "8", "--method", "series", "--sequence"]),
        "1 1 1 2 8 42 258 1824 14664"
    );
    assert_eq!(
        stdout(&["count", "--n", "6", "--method", "bfs", "--sequence"]),
        "1 1 1 2 8 42 258"
    );
    assert_eq!(
        stdout(&["singletons", "--n", "8", "--method", "series", "--sequence"]),
        "1 1 0 0 2 14 90 646 5242"
    );
    assert_eq!(
        stdout(&["singletons", "--n", "6", "--sequence"]),
        "1 1 0 0 2 14 90"
    );
}

#[test]
fn poset_specs() {
    assert_eq!(
        stdout(&["poset", "alpha", "--qn", "3", "--set", "1,2"]),
        "3"
    );
    assert_eq!(
        stdout(&["poset", "alpha", "--chain", "3", "--set", ""]),
        "1"
    );
    assert_eq!(stdout(&["poset", "iso", "gamma:01", "qn:3"]), "true");
    assert_eq!(stdout(&["poset", "iso", "boolean:2", "chain:3"]), "false");
    assert_eq!(
        stdout(&["poset", "iso", "--natural", "gamma:0101", "qn:5"]),
        "true"
    );
    assert_eq!(
        stdout(&["poset", "iso", "--natural", "relations:3:1<3", "qn:3"]),
        "true"
    );
    let classify = stdout(&["poset", "classify", "--relations", "4:1<2,3<4"]);
    assert!(classify.contains("two_plus_two_free: false"), "{classify}");
    let sum = json(&["poset", "sum", "--natural", "chain:2", "chain:3"]);
    assert_eq!(
        sum["relations"],
        serde_json::json!([[1, 2], [2, 3], [3, 4], [4, 5]])
    );
    assert!(
        salient(&["poset", "show", "--relations", "2:1<2,2<1"])
            .status
            .code()
            == Some(1)
    );
}
