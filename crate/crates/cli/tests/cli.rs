use std::path::PathBuf;
use std::process::{Command, Output};

fn foldlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foldlift")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn liftings_row_for_r1r2() {
    let o = foldlift(&["liftings", "--folding", "A4H2", "--u", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 | R1R2 | s1s2, s3s2, s3s4"), "{}", stdout(&o));
}

#[test]
fn liftings_accept_generator_names() {
    let a = foldlift(&["liftings", "--folding", "A4H2", "--u", "R1R2"]);
    let b = foldlift(&["liftings", "--folding", "A4H2", "--u", "1,2"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn schubert_table_for_s2s1() {
    let o = foldlift(&["schubert", "--type", "A2", "--w", "21", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().filter(|l| !l.ends_with("\t0")).map(String::from).collect();
    assert_eq!(rows, ["21\ta1*a2 + a2^2", "121\ta1*a2 + a2^2"]);
}

#[test]
fn moment_graph_dot_has_three_nodes() {
    let o = foldlift(&["moment-graph", "--type", "A2", "--parabolic", "1", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph moment_graph {"));
    assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with("\";")).count(), 3);
    assert_eq!(dot.matches("->").count(), 3);
}

#[test]
fn moment_graph_json_schema() {
    let o = foldlift(&["moment-graph", "--type", "H2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
    let e = &v["edges"][0];
    assert!(e["from"].is_string() && e["to"].is_string() && e["label_coords"].is_array());
}

#[test]
fn liftings_json_schema() {
    let o = foldlift(&["liftings", "--folding", "A4H2", "--u", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["folding"], "A4H2");
    assert_eq!(v["u_word"], serde_json::json!([1]));
    assert_eq!(v["liftable"], true);
    assert_eq!(v["liftings"], serde_json::json!([{ "word": [1], "exponent_m": 0 }, { "word": [3], "exponent_m": 1 }]));
}

#[test]
fn oracle_flag_agrees() {
    let a = foldlift(&["liftings", "--folding", "A3C2"]);
    let b = foldlift(&["liftings", "--folding", "A3C2", "--oracle"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn sweep_reports_witness_and_holds() {
    let o = foldlift(&["sweep", "--folding", "A4H2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for r in rows {
        let empty = r["parabolic"].as_array().unwrap().is_empty();
        assert_eq!(r["verdict"], if empty { "witness" } else { "holds" });
    }
    assert_eq!(rows[0]["witness"], serde_json::json!([1, 2, 1, 2, 1]));
}

#[test]
fn sweep_length_cap_is_reported() {
    let o = foldlift(&["sweep", "--folding", "A4H2", "--parabolic", "1,3", "--length-cap", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds up to length 2"), "{}", stdout(&o));
}

#[test]
fn fold_expands_to_scaled_schubert_class() {
    let o = foldlift(&["fold", "--folding", "A4H2", "--w", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let expansion: Vec<&str> = text.lines().skip_while(|l| *l != "expansion").skip(1).collect();
    assert_eq!(expansion, ["Y[1]\tt"]);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["bogus"][..],
        &["liftings", "--folding", "X9Y2", "--u", "1"],
        &["schubert", "--type", "Q7", "--w", "1"],
        &["liftings", "--folding", "A4H2", "--u", "19"],
        &["schubert", "--type", "A2", "--w", "1", "--format", "dot"],
    ] {
        let o = foldlift(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(stderr(&o).starts_with("error[usage]: "), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn computation_errors_exit_two() {
    let o = foldlift(&["liftings", "--folding", "A4H2", "--u", "11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[not-reduced]: "));
    let o = foldlift(&["liftings", "--folding", "A4H2", "--parabolic", "1", "--u", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[parabolic]: "));
    let o = foldlift(&["liftings", "--folding", "A4H2", "--u", "1212", "--length-cap", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[length-cap]: "));
}

#[test]
fn verify_tables_is_clean_and_deterministic() {
    let a = foldlift(&["verify-tables"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).ends_with(" 0 mismatches\n"));
    let b = foldlift(&["verify-tables"]);
    assert_eq!(a.stdout, b.stdout);
}

fn golden_copy(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("foldlift-golden-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    for f in ["table1.json", "table2.json", "lifting_property.json"] {
        std::fs::copy(data.join(f), dir.join(f)).unwrap();
    }
    dir
}

#[test]
fn perturbed_golden_exits_three() {
    let dir = golden_copy("perturbed");
    let path = dir.join("table1.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let perturbed = text.replace(r#"["12", "32", "34"]"#, r#"["12", "32"]"#);
    assert_ne!(text, perturbed);
    std::fs::write(&path, perturbed).unwrap();
    let o = foldlift(&["verify-tables", "--golden", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("MISMATCH\ttable1 A4H2 u=R1R2"), "{}", stdout(&o));
    assert!(stderr(&o).starts_with("error[mismatch]: "));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn golden_override_matches_embedded() {
    let dir = golden_copy("clean");
    let o = foldlift(&["verify-tables", "--golden", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, foldlift(&["verify-tables"]).stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |n: &str| {
        Command::new(env!("CARGO_BIN_EXE_foldlift"))
            .args(["liftings", "--folding", "D6H3"])
            .env("FOLDLIFT_THREADS", n)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn catalog_lists_eight_foldings() {
    let o = foldlift(&["catalog", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 8);
    for e in entries {
        assert!(e["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    }
}
