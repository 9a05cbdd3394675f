use std::path::Path;
use std::process::{Command, Output};

fn unfriend(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unfriend"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn selected_rows_and_thread_independence() {
    let dir = tempfile::tempdir().unwrap();
    let common = [
        "replicate-table1",
        "--rows",
        "1,3,15",
        "--reps",
        "3",
        "--n",
        "150",
        "--seed",
        "9",
        "--quiet",
    ];
    let a = unfriend(
        &[&common[..], &["--threads", "1", "--out", "a.csv"]].concat(),
        dir.path(),
    );
    assert!(a.status.success(), "{}", stderr(&a));
    let b = unfriend(
        &[&common[..], &["--threads", "3", "--out", "b.csv"]].concat(),
        dir.path(),
    );
    assert!(b.status.success(), "{}", stderr(&b));
    let a = std::fs::read(dir.path().join("a.csv")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.csv")).unwrap());
    let text = String::from_utf8(a).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(rows, ["1", "3", "15"]);
}

#[test]
fn tiny_runs_are_flagged() {
    let dir = tempfile::tempdir().unwrap();
    let out = unfriend(
        &[
            "replicate-table1",
            "--rows",
            "1",
            "--reps",
            "1",
            "--n",
            "150",
            "--out",
            "t.csv",
            "--plot-data",
            "p.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let meta = std::fs::read_to_string(dir.path().join("t.csv.meta")).unwrap();
    assert!(meta.contains("replications below recommended minimum"));
    assert!(meta.contains("seed=42\n") && meta.contains("wall_time_secs="));
    assert!(stderr(&out).contains("replications below recommended minimum"));
    let plot = std::fs::read_to_string(dir.path().join("p.csv")).unwrap();
    assert!(plot.starts_with("row,retention_eta0,formation_eta1,retention_eta1,b1,statistic,value\n"));
    assert!(plot.contains(",bias,") && plot.contains(",coverage,"));
    // the table goes to stdout
    assert!(String::from_utf8_lossy(&out.stdout).contains("bias"));
}

#[test]
fn rows_out_of_range_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = unfriend(&["replicate-table1", "--rows", "61"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("rows"));
}

#[test]
fn config_runs() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("grid.toml"),
        "[population]\nn = 150\n[retention]\neta1 = 0.025\n[execution]\nreplications = 50\n",
    )
    .unwrap();
    let out = unfriend(
        &["run", "grid.toml", "--reps", "1", "--out", "g.csv", "--quiet"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.path().join("g.csv")).unwrap();
    assert_eq!(csv.lines().count(), 21);
    assert!(csv.lines().skip(1).all(|l| l.contains(",0.025,") && l.ends_with(",ok")));
    // --reps overrides the file
    assert!(std::fs::read_to_string(dir.path().join("g.csv.meta"))
        .unwrap()
        .contains("replications=1\n"));
}

#[test]
fn config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("empty.toml", "", "no cells defined"),
        ("syntax.toml", "[retention]\neta1 = 0\n[population\n", "line 3"),
        (
            "field.toml",
            "[population]\ntrait_sd = -1\n[retention]\neta1 = 0\n",
            "trait_sd",
        ),
    ];
    for (name, body, needle) in cases {
        std::fs::write(dir.path().join(name), body).unwrap();
        let out = unfriend(&["run", name], dir.path());
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(stderr(&out).contains(needle), "{name}: {}", stderr(&out));
    }
    let out = unfriend(&["run", "missing.toml"], dir.path());
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unwritable_output_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = unfriend(
        &[
            "replicate-table1",
            "--rows",
            "1",
            "--reps",
            "1",
            "--out",
            "no/such/dir/t.csv",
        ],
        dir.path(),
    );
    assert!(!out.status.success());
    assert!(stderr(&out).contains("no/such/dir/t.csv"));
}

#[test]
fn sample_network_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for prefix in ["a", "b"] {
        let out = unfriend(
            &["sample-network", "--n", "120", "--seed", "7", "--out", prefix],
            dir.path(),
        );
        assert!(out.status.success(), "{}", stderr(&out));
    }
    for suffix in [".nodes.csv", ".edges.csv"] {
        let a = std::fs::read(dir.path().join(format!("a{suffix}"))).unwrap();
        let b = std::fs::read(dir.path().join(format!("b{suffix}"))).unwrap();
        assert_eq!(a, b, "{suffix}");
    }
    let nodes = std::fs::read_to_string(dir.path().join("a.nodes.csv")).unwrap();
    assert_eq!(nodes.lines().count(), 121);
    let out = unfriend(
        &["sample-network", "--seed", "7", "--format", "dot", "--out", "a"],
        dir.path(),
    );
    assert!(out.status.success());
    let dot = std::fs::read_to_string(dir.path().join("a.dot")).unwrap();
    let edges = std::fs::read_to_string(dir.path().join("a.edges.csv")).unwrap();
    assert_eq!(dot.matches(" -> ").count(), edges.lines().count() - 1);
}
