use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use rainbowk_core::extremal::gen_example1;
use rainbowk_core::load_graph;
use serde_json::Value;
use tempfile::TempDir;

fn rainbowk(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbowk")).args(args).current_dir(dir).output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

#[test]
fn sigma_of_p4() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "p4.el", "p 4 3\n0 1\n1 2\n2 3\n");
    let out = rainbowk(&["sigma", "-k", "2", "p4.el"], dir.path());
    assert!(out.status.success());
    let report = json_of(&out);
    assert_eq!(report["sigma"]["value"], 2);
    assert_eq!(report["sigma"]["witness"], serde_json::json!([0, 3]));
    assert_eq!(report["schema"], 1);
}

#[test]
fn example2_diameter_through_files() {
    let dir = TempDir::new().unwrap();
    let out = rainbowk(&["gen", "example2", "-k", "2", "--sigma", "10", "-t", "3", "--out", "g.el"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let spec: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("g.json")).unwrap()).unwrap();
    assert_eq!(spec["family"], "example2");
    assert_eq!(spec["expected"]["diameter"], 14);
    let out = rainbowk(&["verify", "--diam", "g.el"], dir.path());
    assert!(out.status.success());
    assert_eq!(json_of(&out)["diameter"], 14);
}

#[test]
fn example1_bench_separates_the_bounds() {
    let dir = TempDir::new().unwrap();
    let args = ["bench", "--family", "example1", "-k", "3", "--sizes", "30,58,86", "--out", "bench.csv"];
    let out = rainbowk(&args, dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(dir.path().join("bench.csv")).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    let value = |row: &Vec<&str>, name: &str| row[col(name)].parse::<f64>().unwrap();
    for row in &rows {
        assert!(value(row, "rc-sigma") < 23.0);
        assert!(value(row, "rc_achieved") <= value(row, "rc-sigma-loose"));
        assert_eq!(row[col("rc_verified")], "true");
    }
    // With delta = 1 the minimum-degree bound is 3n/2 + 3.
    for row in &rows {
        assert!((value(row, "rc-three") - (1.5 * value(row, "n") + 3.0)).abs() < 1e-6);
    }
}

#[test]
fn seeded_outputs_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    rainbowk(&["gen", "example2", "-k", "2", "--sigma", "16", "-t", "1", "--out", "g.el"], dir.path());
    let run = |args: &[&str]| {
        let out = rainbowk(args, dir.path());
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let rvc = ["color-rvc", "-k", "2", "--seed", "11", "g.el"];
    assert_eq!(run(&rvc), run(&rvc));
    let bench = ["bench", "--family", "gnp", "-k", "2", "--sizes", "20,30", "--count", "3", "--seed", "4", "--format", "json"];
    assert_eq!(run(&bench), run(&bench));
    let rc = ["color-rc", "-k", "2", "g.el"];
    assert_eq!(run(&rc), run(&rc));
}

#[test]
fn generated_graph_round_trips() {
    let dir = TempDir::new().unwrap();
    let out = rainbowk(&["gen", "example1", "-k", "3", "-n", "30", "--out", "e1.el"], dir.path());
    assert!(out.status.success());
    let loaded = load_graph(&fs::read_to_string(dir.path().join("e1.el")).unwrap()).unwrap();
    assert_eq!(loaded, gen_example1(3, 30).unwrap().0);
}

#[test]
fn stored_colorings_are_rechecked() {
    let dir = TempDir::new().unwrap();
    rainbowk(&["gen", "kstar", "-a", "3", "-b", "4", "--out", "ks.el"], dir.path());
    let out = rainbowk(&["color-rc", "-k", "2", "ks.el", "--coloring", "c.json"], dir.path());
    assert!(out.status.success());
    assert_eq!(json_of(&out)["passed"], true);
    let out = rainbowk(&["verify", "ks.el", "--edge-coloring", "c.json"], dir.path());
    assert!(out.status.success());
    assert_eq!(json_of(&out)["rainbow_connected"], true);

    let out = rainbowk(&["color-rvc", "-k", "2", "--seed", "3", "ks.el", "--coloring", "v.json"], dir.path());
    assert!(out.status.success());
    let out = rainbowk(&["verify", "ks.el", "--vertex-coloring", "v.json"], dir.path());
    assert!(out.status.success());

    write(dir.path(), "p4.el", "p 4 3\n0 1\n1 2\n2 3\n");
    write(dir.path(), "mono.json", r#"{"schema": 1, "colors": {"0-1": 0, "1-2": 0, "2-3": 1}}"#);
    let out = rainbowk(&["verify", "p4.el", "--edge-coloring", "mono.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let report = json_of(&out);
    assert_eq!(report["rainbow_connected"], false);
    assert_eq!(report["failures"], serde_json::json!([[0, 2], [0, 3]]));
}

#[test]
fn exact_values_on_p4() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "p4.el", "p 4 3\n0 1\n1 2\n2 3\n");
    let report = json_of(&rainbowk(&["exact", "p4.el"], dir.path()));
    assert_eq!(report["rc"]["value"], 3);
    assert_eq!(report["rvc"]["value"], 2);
    let out = rainbowk(&["exact", "p4.el", "--limits", "n=3,m=14"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the limits"));
}

#[test]
fn dominate_and_sparsify_pass_their_checks() {
    let dir = TempDir::new().unwrap();
    rainbowk(&["gen", "example2", "-k", "2", "--sigma", "16", "-t", "2", "--out", "g.el"], dir.path());
    for flavor in ["two-step", "two-way", "strong"] {
        let out = rainbowk(&["dominate", "-k", "2", "g.el", "--flavor", flavor], dir.path());
        assert!(out.status.success(), "{flavor}: {}", String::from_utf8_lossy(&out.stdout));
    }
    let out = rainbowk(&["sparsify", "-k", "2", "g.el", "--out", "s.el"], dir.path());
    assert!(out.status.success());
    let report = json_of(&out);
    assert_eq!(report["report"]["sigma_before"], report["report"]["sigma_after"]);
    let s = load_graph(&fs::read_to_string(dir.path().join("s.el")).unwrap()).unwrap();
    assert_eq!(s.m(), report["report"]["output_edges"].as_u64().unwrap() as usize);
}

#[test]
fn usage_and_domain_errors_exit_nonzero() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "split.el", "p 4 2\n0 1\n2 3\n");
    let out = rainbowk(&["frobnicate"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert!(!rainbowk(&["color-rvc", "-k", "2", "split.el"], dir.path()).status.success());
    assert!(!rainbowk(&["bench", "--family", "gnp", "-k", "2", "--sizes", "20"], dir.path()).status.success());
    let out = rainbowk(&["color-rc", "-k", "1", "split.el"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));
    let out = rainbowk(&["sigma", "-k", "2", "missing.el"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}
