use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewspec"))
        .args(args)
        .env_remove("SKEWSPEC_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn field(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(|v| v.trim().to_string()))
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{text}"))
}

fn energy(text: &str) -> f64 {
    field(text, "energy ").parse().unwrap()
}

#[test]
fn spectrum_of_seed() {
    let o = run(&["spectrum", "c4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!((energy(&out) - 4.0 * 2f64.sqrt()).abs() < 1e-8);
    assert_eq!(field(&out, "certified "), "true");
    assert_eq!(field(&out, "regular "), "2");
}

#[test]
fn spectrum_of_directed_cycle_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("cycle.txt");
    fs::write(&path, "# directed 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = run(&["spectrum", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!((energy(&out) - 4.0).abs() < 1e-8);
    assert_eq!(field(&out, "certified "), "false");
}

#[test]
fn spectrum_json() {
    let o = run(&["--output", "json", "spectrum", "k4"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["order"], 4);
    assert_eq!(doc["certified"], true);
    assert_eq!(doc["values"].as_array().unwrap().len(), 4);
}

#[test]
fn malformed_file_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3 2\n0 1\n1 x\n").unwrap();
    let o = run(&["spectrum", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn unknown_input_is_an_input_error() {
    let o = run(&["spectrum", "no-such-graph"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn products_of_seeds() {
    let cases = [
        ("kronecker", 16, "6", 16.0 * 6f64.sqrt()),
        ("cartesian", 16, "5", 16.0 * 5f64.sqrt()),
        ("strong", 16, "11", 16.0 * 11f64.sqrt()),
    ];
    let dir = TempDir::new().unwrap();
    for (kind, order, degree, e) in cases {
        let out = dir.path().join(format!("{kind}.txt"));
        let o = run(&[
            "product",
            "c4",
            "k4",
            "--kind",
            kind,
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{kind}: {}", stderr(&o));
        let text = stdout(&o);
        assert_eq!(field(&text, "order "), order.to_string());
        assert_eq!(field(&text, "regular "), degree);
        assert!((energy(&text) - e).abs() < 1e-8, "{kind}");
        assert_eq!(field(&text, "certified "), "true");
        assert!(fs::read_to_string(&out)
            .unwrap()
            .starts_with(&format!("{order} ")));
    }
}

#[test]
fn lexicographic_product_needs_kn() {
    let o = run(&["product", "p2", "c4", "--kind", "lex"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = TempDir::new().unwrap();
    let kn = dir.path().join("kn.txt");
    let found = run(&["export", "k4"]);
    fs::write(&kn, stdout(&found)).unwrap();
    // the K4 seed need not commute with C4, so only the shape is checked here
    let o = run(&[
        "product",
        "p2",
        "c4",
        "--kind",
        "lex",
        "--kn",
        kn.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(field(&stderr(&o), "order "), "8");
    assert_eq!(field(&stderr(&o), "regular "), "6");
}

#[test]
fn product_json_round_trips() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("kron.json");
    let o = run(&[
        "--output",
        "json",
        "product",
        "c4",
        "k4",
        "--kind",
        "kronecker",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let summary: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(summary["certified"], true);

    let o = run(&["spectrum", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!((energy(&stdout(&o)) - 16.0 * 6f64.sqrt()).abs() < 1e-8);
    assert_eq!(field(&stdout(&o), "certified "), "true");
}

#[test]
fn csv_export_is_skew_symmetric() {
    let o = run(&["--output", "csv", "export", "c4"]);
    assert!(o.status.success());
    let rows: Vec<Vec<i64>> = stdout(&o)
        .lines()
        .map(|l| l.split(',').map(|v| v.trim().parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            assert_eq!(v, -rows[j][i]);
        }
    }
}

#[test]
fn verify_random_instances() {
    for theorem in ["kron", "strong"] {
        let o = run(&[
            "verify",
            "--random",
            "--seed",
            "42",
            "--trials",
            "20",
            "--theorem",
            theorem,
        ]);
        assert!(o.status.success(), "{theorem}: {}", stderr(&o));
        let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
        assert_eq!(lines.len(), 20);
        for l in lines {
            let report: serde_json::Value = serde_json::from_str(&l).unwrap();
            assert_eq!(report["pass"], true);
        }
    }
}

#[test]
fn verify_seed_pair() {
    let o = run(&["verify", "c4", "k4", "--theorem", "strong"]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn corrupted_prediction_fails_verification() {
    let o = run(&[
        "verify",
        "--random",
        "--seed",
        "42",
        "--theorem",
        "kron",
        "--corrupt",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn families() {
    let o = run(&["family", "--name", "kron_c4_iter", "--r", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("order 64 (expected 64)"));
    assert!(out.contains("degree 12 (expected 12)"));
    assert_eq!(field(&out, "certified "), "true");

    let o = run(&[
        "--output",
        "json",
        "family",
        "--name",
        "cartesian_c4k4",
        "--r",
        "1",
    ]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(doc["pass"], true);
    // 4^2 √(2·1 + 3)
    assert!((doc["energy"].as_f64().unwrap() - 16.0 * 5f64.sqrt()).abs() < 1e-8);
}

#[test]
fn family_above_limit_exits_3() {
    let o = run(&["family", "--name", "kron_c4_iter", "--r", "6"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    let o = run(&["--limit", "8", "spectrum", "q4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_c4() {
    let o = run(&["search", "c4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 8);
    for l in &lines {
        let rec: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(rec["certified"], true);
    }

    let o = run(&["search", "c4", "--histogram"]);
    assert!(o.status.success());
    let first: serde_json::Value =
        serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(first["count"], 8);
}

#[test]
fn undirected_input() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("c4.txt");
    fs::write(&path, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = run(&["search", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 8);
}
