mod common;

use common::{assert_valid, run, run_with_env};
use serde_json::{json, Value};
use tempfile::TempDir;

fn path_str(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn generate(dir: &TempDir, spec: &str, name: &str) -> String {
    let out = path_str(dir, name);
    let run = run(&["generate", "--gen", spec, "--out", &out]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    out
}

fn header(path: &str) -> (usize, usize) {
    let text = std::fs::read_to_string(path).unwrap();
    let line = text.lines().find(|l| l.starts_with("p ")).unwrap();
    let fields: Vec<&str> = line.split_whitespace().collect();
    (fields[2].parse().unwrap(), fields[3].parse().unwrap())
}

fn usize_of(value: &Value) -> usize {
    value.as_u64().unwrap() as usize
}

#[test]
fn generate_subdivided_k5_with_sidecar() {
    let dir = TempDir::new().unwrap();
    let out = generate(&dir, "subdivide:complete:5:1", "k5.col");
    assert_eq!(header(&out), (15, 20));
    let meta: Value = serde_json::from_str(&std::fs::read_to_string(format!("{out}.meta.json")).unwrap()).unwrap();
    assert_valid("meta", &meta);
    assert_eq!(meta["family"], "subdivision");
    assert_eq!(meta["times"], 1);
}

#[test]
fn generate_single_vertex_path() {
    let run = run(&["generate", "--gen", "path:1", "--format", "json"]);
    assert_eq!(run.code, 0);
    let graph = run.json();
    assert_valid("graph", &graph);
    assert_eq!(graph, json!({"n": 1, "edges": []}));
}

#[test]
fn generate_layered_product() {
    let dir = TempDir::new().unwrap();
    let out = generate(&dir, "product:ktree:2:6:7:4", "prod.col");
    assert_eq!(header(&out).0, 24);
    let meta: Value = serde_json::from_str(&std::fs::read_to_string(format!("{out}.meta.json")).unwrap()).unwrap();
    assert_valid("meta", &meta);
    assert_eq!(meta["layers"], 4);
    assert_eq!(meta["base"]["n"], 6);
}

#[test]
fn generate_is_deterministic() {
    let a = run(&["generate", "--gen", "ktree:3:12:_", "--seed", "5"]);
    let b = run(&["generate", "--gen", "ktree:3:12:_", "--seed", "5"]);
    let c = run(&["generate", "--gen", "ktree:3:12:5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn generate_rejects_bad_specs() {
    for spec in ["", "complete", "complete:x", "blob:3", "product:cycle:5:2", "subdivide:path:3:0", "gnp:4:1.5:0"] {
        let run = run(&["generate", "--gen", spec]);
        assert_eq!(run.code, 2, "{spec} gave {}", run.code);
        assert!(!run.stderr.is_empty());
    }
}

#[test]
fn order_subdivision_strategy_from_sidecar() {
    let dir = TempDir::new().unwrap();
    let out = generate(&dir, "subdivide:complete:5:1", "k5.col");
    let run = run(&["order", "--input", &out, "--strategy", "subdivision", "--t", "1"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = run.json();
    assert_valid("order-report", &report);
    assert_eq!(report["width"], 3);
    assert_eq!(report["width_2"], 5);
    assert_eq!(report["col"]["method"], "upper-bound-only");
}

#[test]
fn order_reverse_peo_on_ktrees() {
    for (k, seed) in [(1, 3), (2, 4), (3, 9)] {
        let spec = format!("ktree:{k}:12:{seed}");
        for t in ["1", "2", "3", "12"] {
            let run = run(&["order", "--gen", &spec, "--strategy", "reverse-peo", "--t", t]);
            assert_eq!(run.code, 0, "{}", run.stderr);
            let report = run.json();
            assert_valid("order-report", &report);
            assert!(usize_of(&report["width"]) <= k + 1, "{spec} t={t}: {report}");
        }
    }
}

#[test]
fn order_exact_dp_on_cycle() {
    let run = run(&["order", "--gen", "cycle:5", "--strategy", "exact-dp", "--t", "2"]);
    assert_eq!(run.code, 0);
    let report = run.json();
    assert_valid("order-report", &report);
    assert_eq!(report["width"], 3);
    assert_eq!(report["col"]["value"], 3);
    assert_eq!(report["col"]["method"], "exact-dp");

    let brute = common::run(&["order", "--gen", "cycle:5", "--strategy", "exact-brute", "--t", "2"]).json();
    assert_eq!(brute["col"]["value"], 3);
    assert_eq!(brute["col"]["method"], "exact-bruteforce");
}

#[test]
fn order_product_strategy() {
    let run = run(&["order", "--gen", "product:ktree:1:5:2:3", "--strategy", "product", "--t", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = run.json();
    assert_valid("order-report", &report);
    assert!(usize_of(&report["width"]) <= 5 * 2);
}

#[test]
fn order_structural_strategy_without_metadata_is_usage_error() {
    let dir = TempDir::new().unwrap();
    let out = path_str(&dir, "c5.col");
    assert_eq!(run(&["generate", "--gen", "cycle:5", "--out", &out]).code, 0);
    assert!(!std::path::Path::new(&format!("{out}.meta.json")).exists());
    for strategy in ["reverse-peo", "product", "subdivision"] {
        let run = run(&["order", "--input", &out, "--strategy", strategy]);
        assert_eq!(run.code, 2, "{strategy}");
        assert!(run.stderr.contains("structure"));
    }
}

#[test]
fn order_cap_exceeded_exits_3() {
    let run = run(&["order", "--gen", "path:12", "--strategy", "exact-dp", "--cap", "10"]);
    assert_eq!(run.code, 3);
    let run = common::run(&["order", "--gen", "path:12", "--strategy", "exact-brute"]);
    assert_eq!(run.code, 3);
}

#[test]
fn order_file_feeds_color() {
    let dir = TempDir::new().unwrap();
    let graph = generate(&dir, "subdivide:complete:5:1", "k5.col");
    let order = path_str(&dir, "order.json");
    assert_eq!(run(&["order", "--input", &graph, "--strategy", "subdivision", "--out", &order]).code, 0);
    let run = run(&["color", "--input", &graph, "--order", &order, "--r", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = run.json();
    assert_valid("color-report", &report);
    assert_eq!(report["width_2"], 5);
    assert_eq!(report["bound"], 9);
    assert!(usize_of(&report["palette"]) <= 9);
    assert_eq!(report["verification"]["ok"], true);
}

#[test]
fn color_subdivided_k5() {
    let run = run(&["color", "--gen", "subdivide:complete:5:1", "--strategy", "subdivision", "--r", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = run.json();
    assert_valid("color-report", &report);
    assert!(usize_of(&report["palette"]) <= 9);
    assert_eq!(report["verification"]["ok"], true);
}

#[test]
fn color_path_natural_order() {
    let run = run(&["color", "--gen", "path:6", "--strategy", "natural", "--r", "2"]);
    assert_eq!(run.code, 0);
    let report = run.json();
    assert_eq!(report["width_2"], 2);
    assert!(usize_of(&report["palette"]) <= 3);
}

#[test]
fn color_single_vertex() {
    for strategy in ["natural", "min-backreach", "exact-dp", "reverse-peo"] {
        let run = run(&["color", "--gen", "path:1", "--strategy", strategy, "--r", "7"]);
        assert_eq!(run.code, 0, "{strategy}: {}", run.stderr);
        assert_eq!(run.json()["palette"], 1);
    }
}

#[test]
fn color_rejects_mismatched_order() {
    let dir = TempDir::new().unwrap();
    let order = path_str(&dir, "order.json");
    std::fs::write(&order, "[0, 1, 2]").unwrap();
    let run = run(&["color", "--gen", "path:4", "--order", &order]);
    assert_eq!(run.code, 2);
    std::fs::write(&order, "[0, 0, 1, 2]").unwrap();
    assert_eq!(common::run(&["color", "--gen", "path:4", "--order", &order]).code, 2);
}

#[test]
fn exact_values() {
    for (spec, r, value) in [
        ("subdivide:complete:5:1", "2", 5),
        ("cycle:5", "2", 5),
        ("universal:subdivide:complete:5:1:1", "2", 3),
        ("subdivide:complete:4:1", "2", 4),
    ] {
        let run = run(&["exact", "--gen", spec, "--r", r]);
        assert_eq!(run.code, 0, "{spec}: {}", run.stderr);
        let report = run.json();
        assert_valid("exact-report", &report);
        assert_eq!(report["status"], "exact");
        assert_eq!(report["value"], value, "{spec}");
        assert_eq!(report["coloring"]["palette"], value);
    }
}

#[test]
fn exact_budget_exhaustion_exits_3() {
    let run = run(&["exact", "--gen", "subdivide:complete:5:1", "--budget", "5"]);
    assert_eq!(run.code, 3);
    let report = run.json();
    assert_valid("exact-report", &report);
    assert_eq!(report["status"], "unknown");
    assert!(report["lower"].as_u64() <= report["upper"].as_u64());

    let run = run_with_env(&["exact", "--gen", "subdivide:complete:5:1"], &[("DYNCHROMA_BUDGET", "5")]);
    assert_eq!(run.code, 3);
    assert_eq!(run.json()["status"], "unknown");
}

#[test]
fn exact_color_cap_exits_3() {
    let run = run(&["exact", "--gen", "subdivide:complete:5:1", "--cap", "4"]);
    assert_eq!(run.code, 3);
    let report = run.json();
    assert_valid("exact-report", &report);
    assert_eq!(report["status"], "lower-bound-only");
    assert_eq!(report["lower"], 5);
}

fn k5_coloring(dir: &TempDir) -> (String, String) {
    let graph = generate(dir, "subdivide:complete:5:1", "k5.col");
    let coloring = path_str(dir, "coloring.json");
    let run = run(&["color", "--input", &graph, "--strategy", "subdivision", "--r", "2", "--out", &coloring]);
    assert_eq!(run.code, 0);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&coloring).unwrap()).unwrap();
    assert_valid("coloring", &written);
    assert_eq!(written["palette"], 5);
    (graph, coloring)
}

#[test]
fn check_valid_coloring() {
    let dir = TempDir::new().unwrap();
    let (graph, coloring) = k5_coloring(&dir);
    let run = run(&["check", "--input", &graph, "--coloring", &coloring, "--r", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let report = run.json();
    assert_valid("report", &report);
    assert_eq!(report["ok"], true);
}

#[test]
fn check_reports_requirement_lines() {
    let dir = TempDir::new().unwrap();
    let (graph, coloring) = k5_coloring(&dir);
    let run = run(&["check", "--input", &graph, "--coloring", &coloring, "--r", "3", "--format", "text"]);
    assert_eq!(run.code, 1);
    let lines: Vec<&str> = run.stdout.lines().filter(|l| l.contains("requires 3")).collect();
    assert!(!lines.is_empty(), "{}", run.stdout);
    assert!(lines.iter().all(|l| l.starts_with("vertex ")));

    let json = common::run(&["check", "--input", &graph, "--coloring", &coloring, "--r", "3"]).json();
    assert_valid("report", &json);
    assert_eq!(json["dynamic_violations"].as_array().unwrap().len(), lines.len());
    assert!(json["proper_violations"].as_array().unwrap().is_empty());
}

#[test]
fn check_improper_coloring_exits_1() {
    let dir = TempDir::new().unwrap();
    let coloring = path_str(&dir, "bad.json");
    std::fs::write(&coloring, r#"{"colors": [1, 1, 2], "palette": 2}"#).unwrap();
    let run = run(&["check", "--gen", "path:3", "--coloring", &coloring, "--r", "0", "--format", "text"]);
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains("edge 0-1"), "{}", run.stdout);
    let report = common::run(&["check", "--gen", "path:3", "--coloring", &coloring, "--r", "0"]).json();
    assert_eq!(report["proper_violations"], json!([[0, 1]]));
}

#[test]
fn check_rejects_malformed_colorings() {
    let dir = TempDir::new().unwrap();
    let coloring = path_str(&dir, "bad.json");
    for text in [r#"{"colors": [1, 0, 2], "palette": 2}"#, r#"{"colors": [1, 2], "palette": 2}"#, "not json"] {
        std::fs::write(&coloring, text).unwrap();
        assert_eq!(run(&["check", "--gen", "path:3", "--coloring", &coloring]).code, 2, "{text}");
    }
}

#[test]
fn input_formats_agree() {
    let dir = TempDir::new().unwrap();
    let dimacs = generate(&dir, "ktree:2:9:1", "g.col");
    let json_path = path_str(&dir, "g.json");
    assert_eq!(run(&["generate", "--gen", "ktree:2:9:1", "--format", "json", "--out", &json_path]).code, 0);
    let graph: Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_valid("graph", &graph);
    let edges_path = path_str(&dir, "g.txt");
    let mut edges = String::from("# edge list\n");
    for e in graph["edges"].as_array().unwrap() {
        edges.push_str(&format!("{} {}\n", e[0], e[1]));
    }
    std::fs::write(&edges_path, edges).unwrap();
    let sniffed = path_str(&dir, "g.graph");
    std::fs::copy(&dimacs, &sniffed).unwrap();

    let reports: Vec<Value> = [&dimacs, &json_path, &edges_path, &sniffed]
        .iter()
        .map(|p| {
            let run = run(&["order", "--input", p, "--strategy", "exact-dp", "--t", "2"]);
            assert_eq!(run.code, 0, "{p}: {}", run.stderr);
            run.json()
        })
        .collect();
    assert!(reports.windows(2).all(|w| w[0]["col"] == w[1]["col"]));
    assert_eq!(reports[0]["col"]["value"], 3);
}

#[test]
fn dimacs_round_trip_through_cli() {
    let dir = TempDir::new().unwrap();
    let json_path = path_str(&dir, "g.json");
    std::fs::write(&json_path, r#"{"n": 4, "edges": [[2, 3], [0, 1], [1, 2]]}"#).unwrap();
    let run = run(&["generate", "--gen", "path:4"]);
    let direct = run.stdout;
    let parsed = dynchroma::parse_dimacs(&direct).unwrap();
    assert_eq!(dynchroma::write_dimacs(&parsed), direct);
    let order = common::run(&["order", "--input", &json_path, "--strategy", "natural"]).json();
    assert_eq!(order["width"], 2);
}

#[test]
fn bad_inputs_are_usage_errors() {
    let dir = TempDir::new().unwrap();
    let bad = path_str(&dir, "bad.col");
    std::fs::write(&bad, "p edge 3 1\ne 1 4\n").unwrap();
    let run = run(&["order", "--input", &bad]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 2"), "{}", run.stderr);
    assert_eq!(common::run(&["order", "--input", &path_str(&dir, "missing.col")]).code, 2);
    assert_eq!(common::run(&["order"]).code, 2);
    assert_eq!(common::run(&["order", "--gen", "path:3", "--input", &bad]).code, 2);
    assert_eq!(common::run(&["order", "--gen", "path:3", "--strategy", "nope"]).code, 2);
}

#[test]
fn text_format_is_available_everywhere() {
    for args in [
        vec!["order", "--gen", "cycle:5", "--format", "text"],
        vec!["color", "--gen", "cycle:5", "--format", "text"],
        vec!["exact", "--gen", "cycle:5", "--format", "text"],
    ] {
        let run = run(&args);
        assert_eq!(run.code, 0);
        assert!(serde_json::from_str::<Value>(&run.stdout).is_err());
        assert!(!run.stdout.trim().is_empty());
    }
}
