use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const FIX6: &str = "6 14
0 1 0 0
0 2 0 0
1 2 0 0
0 3 0 0
1 3 0 0
2 3 0 0
0 4 2 0
1 4 2 0
2 4 2 0
0 5 0 2
1 5 0 2
3 5 0 2
3 4 2 2
4 5 2 2
";

const K3: &str = "3 3\n0 1 0 0\n0 2 0 0\n1 2 0 0\n";
const CYCLE4: &str = "4 4\n0 1 0 0\n1 2 0 0\n2 3 0 0\n0 3 0 0\n";

fn fdom(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdom")).args(args).current_dir(dir).output().expect("spawn fdom")
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Data rows of a CSV report (comment lines dropped), as header-keyed maps.
fn csv_rows(report: &str) -> Vec<std::collections::HashMap<String, String>> {
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(report.as_bytes());
    let headers = reader.headers().unwrap().clone();
    reader
        .records()
        .map(|r| headers.iter().map(String::from).zip(r.unwrap().iter().map(String::from)).collect())
        .collect()
}

fn edge_lines(path: &Path) -> Vec<String> {
    fs::read_to_string(path).unwrap().lines().skip(1).map(String::from).collect()
}

#[test]
fn collapse_fix6_full_removes_ab() {
    let dir = TempDir::new().unwrap();
    write(&dir, "fix6.txt", FIX6);
    let out = fdom(
        &["collapse", "--edges", "fix6.txt", "--mode", "full", "--order", "lex", "--output", "out.txt"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let kept = edge_lines(&dir.path().join("out.txt"));
    assert!(!kept.iter().any(|l| l.starts_with("0 1 ")), "edge (a,b) should be removed: {kept:?}");
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["edges_before"], "14");
    assert_eq!(rows[0]["edges_after"], kept.len().to_string());
}

#[test]
fn collapse_single_edge_keeps_it() {
    let dir = TempDir::new().unwrap();
    write(&dir, "e.txt", "2 1\n0 1 0.5 1.5\n");
    let out = fdom(&["collapse", "--edges", "e.txt", "--output", "out.txt"], dir.path());
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[0]["edges_before"], "1");
    assert_eq!(rows[0]["edges_after"], "1");
    assert_eq!(edge_lines(&dir.path().join("out.txt")), vec!["0 1 0.5 1.5"]);
}

#[test]
fn collapse_uniform_removes_most_edges() {
    let dir = TempDir::new().unwrap();
    let out = fdom(
        &["collapse", "--dataset", "uniform", "--n", "400", "--seed", "1", "--mode", "strong", "--order", "revlex"],
        dir.path(),
    );
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[0]["edges_before"], "79800");
    let removed: f64 = rows[0]["removed_pct"].parse().unwrap();
    assert!(removed >= 90.0, "removed {removed}%");
}

#[test]
fn report_embeds_version_seed_and_config() {
    let dir = TempDir::new().unwrap();
    write(&dir, "k3.txt", K3);
    let out = fdom(&["collapse", "--edges", "k3.txt", "--seed", "17", "--report", "r.csv"], dir.path());
    assert!(out.status.success());
    let report = fs::read_to_string(dir.path().join("r.csv")).unwrap();
    assert!(report.starts_with(&format!("# fdom {}", env!("CARGO_PKG_VERSION"))));
    assert!(report.contains("# seed: 17"));
    let config = report.lines().find_map(|l| l.strip_prefix("# config: ")).unwrap();
    let json: serde_json::Value = serde_json::from_str(config).unwrap();
    assert_eq!(json["command"]["collapse"]["options"]["seed"], 17);
    assert_eq!(json["command"]["collapse"]["options"]["order"], "revlex");

    let md = fdom(&["collapse", "--edges", "k3.txt", "--format", "markdown"], dir.path());
    let md = stdout(&md);
    assert!(md.contains("| input | order |"));
    assert!(md.contains("peak RSS (approximate)"));
}

#[test]
fn iterations_produce_one_row_per_pass() {
    let dir = TempDir::new().unwrap();
    let out = fdom(&["collapse", "--dataset", "circle", "--n", "60", "--seed", "2", "--iterations", "3"], dir.path());
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    assert!((1..=3).contains(&rows.len()));
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row["iteration"], (i + 1).to_string());
    }
}

#[test]
fn invalid_flags_exit_64() {
    let dir = TempDir::new().unwrap();
    write(&dir, "k3.txt", K3);
    for args in [
        &["collapse", "--edges", "k3.txt", "--order", "sideways"][..],
        &["collapse", "--edges", "k3.txt", "--points", "k3.txt"],
        &["collapse", "--dataset", "uniform"],
        &["collapse"],
        &["frobnicate"],
        &["expand", "--edges", "k3.txt", "--max-dim", "3", "--output", "x"],
    ] {
        assert_eq!(fdom(args, dir.path()).status.code(), Some(64), "{args:?}");
    }
    assert_eq!(fdom(&["--help"], dir.path()).status.code(), Some(0));
    assert_eq!(fdom(&["--version"], dir.path()).status.code(), Some(0));
}

#[test]
fn unreadable_input_exits_2() {
    let dir = TempDir::new().unwrap();
    write(&dir, "bad.txt", "3 1\n0 7 0 0\n");
    assert_eq!(fdom(&["collapse", "--edges", "missing.txt"], dir.path()).status.code(), Some(2));
    assert_eq!(fdom(&["collapse", "--edges", "bad.txt"], dir.path()).status.code(), Some(2));
    assert_eq!(fdom(&["collapse", "--points", "missing.txt"], dir.path()).status.code(), Some(2));
}

#[test]
fn point_and_distance_inputs_agree() {
    let dir = TempDir::new().unwrap();
    write(&dir, "p.txt", "0 0\n1 0\n0 1\n3 3\n");
    let dist = format!("\n1\n1 {}\n{} {} {}\n", 2f64.sqrt(), 18f64.sqrt(), 13f64.sqrt(), 13f64.sqrt());
    write(&dir, "d.txt", &dist);
    let a = fdom(&["collapse", "--points", "p.txt", "--output", "a.txt"], dir.path());
    let b = fdom(&["collapse", "--distances", "d.txt", "--output", "b.txt"], dir.path());
    assert!(a.status.success() && b.status.success());
    assert_eq!(edge_lines(&dir.path().join("a.txt")).len(), edge_lines(&dir.path().join("b.txt")).len());
}

#[test]
fn bench_orders_has_five_rows() {
    let dir = TempDir::new().unwrap();
    write(&dir, "fix6.txt", FIX6);
    let out = fdom(&["bench-orders", "--edges", "fix6.txt", "--mode", "full"], dir.path());
    assert!(out.status.success());
    let rows = csv_rows(&stdout(&out));
    let orders: Vec<&str> = rows.iter().map(|r| r["order"].as_str()).collect();
    assert_eq!(orders, ["random", "colex", "lex", "revcolex", "revlex"]);

    let out =
        fdom(&["bench-orders", "--dataset", "torus", "--n", "100", "--seed", "3", "--output", "t.csv"], dir.path());
    assert!(out.status.success());
    let rows = csv_rows(&fs::read_to_string(dir.path().join("t.csv")).unwrap());
    assert_eq!(rows.len(), 5);
    for row in rows {
        let p: f64 = row["removed_pct"].parse().unwrap();
        assert!((0.0..=100.0).contains(&p));
    }
}

#[test]
fn expand_k3_writes_one_triangle() {
    let dir = TempDir::new().unwrap();
    write(&dir, "k3.txt", K3);
    let out = fdom(
        &["expand", "--edges", "k3.txt", "--no-collapse", "--format", "scc2020", "--output", "k3.scc"],
        dir.path(),
    );
    assert!(out.status.success());
    let scc = fs::read_to_string(dir.path().join("k3.scc")).unwrap();
    let mut lines = scc.lines();
    assert_eq!(lines.next(), Some("scc2020"));
    assert_eq!(lines.next(), Some("2"));
    assert_eq!(lines.next(), Some("1 3 3"));
    let rows = csv_rows(&stdout(&out));
    assert_eq!(rows[0]["triangles_before"], "1");
    assert_eq!(rows[0]["triangles_after"], "1");
}

#[test]
fn expand_shrinks_uniform_and_respects_budget() {
    let dir = TempDir::new().unwrap();
    let base = ["expand", "--dataset", "uniform", "--n", "200", "--seed", "1", "--output", "u.scc"];
    let out = fdom(&base, dir.path());
    assert!(out.status.success());
    let row = &csv_rows(&stdout(&out))[0];
    let before: f64 = row["triangles_before"].parse().unwrap();
    let after: f64 = row["triangles_after"].parse().unwrap();
    assert!(after <= 0.1 * before, "{after} of {before}");

    let raw = fdom(&[&base[..], &["--no-collapse"]].concat(), dir.path());
    let row = &csv_rows(&stdout(&raw))[0];
    assert_eq!(row["triangles_after"], row["triangles_before"]);
    assert_eq!(row["edges_after"], row["edges_before"]);

    let capped = fdom(&[&base[..], &["--no-collapse", "--max-simplices", "10"]].concat(), dir.path());
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn verify_suites_pass() {
    let dir = TempDir::new().unwrap();
    let out = fdom(&["verify", "--oracle", "domination", "--instances", "200", "--seed", "9"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["passed"], true);
    assert_eq!(summary["instances"], 200);

    let out = fdom(&["verify", "--oracle", "homology", "--instances", "50", "--seed", "9"], dir.path());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_flags_removed_cycle_edge() {
    let dir = TempDir::new().unwrap();
    write(&dir, "c4.txt", CYCLE4);
    write(&dir, "c4-cut.txt", "4 3\n0 1 0 0\n1 2 0 0\n2 3 0 0\n");
    let out = fdom(
        &[
            "verify",
            "--oracle",
            "homology",
            "--edges",
            "c4.txt",
            "--reduced",
            "c4-cut.txt",
            "--counterexample",
            "cex.txt",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    let summary: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(summary["passed"], false);
    assert_eq!(edge_lines(&dir.path().join("cex.txt")).len(), 3);

    // a genuine collapse of the same cycle passes
    let ok = fdom(&["verify", "--oracle", "homology", "--edges", "c4.txt"], dir.path());
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn generate_is_deterministic() {
    let dir = TempDir::new().unwrap();
    for name in ["a.txt", "b.txt"] {
        assert!(fdom(
            &["generate", "--dataset", "swiss-roll", "--n", "40", "--seed", "5", "--output", name],
            dir.path()
        )
        .status
        .success());
    }
    let a = fs::read(dir.path().join("a.txt")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.txt")).unwrap());
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 40);

    assert!(fdom(
        &["generate", "--dataset", "sphere", "--n", "20", "--emit", "edges", "--output", "e.txt"],
        dir.path()
    )
    .status
    .success());
    let edges = fs::read_to_string(dir.path().join("e.txt")).unwrap();
    assert_eq!(edges.lines().next(), Some("20 190"));
}

#[test]
fn replayed_config_reproduces_counts() {
    let dir = TempDir::new().unwrap();
    let args =
        ["collapse", "--dataset", "torus", "--n", "80", "--seed", "4", "--order", "random", "--grade-mode", "random"];
    let strip = |out: Output| {
        csv_rows(&stdout(&out))
            .into_iter()
            .map(|mut r| {
                r.remove("time_ms");
                r
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(fdom(&args, dir.path())), strip(fdom(&args, dir.path())));
}
