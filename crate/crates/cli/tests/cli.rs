use std::process::{Command, Output};

fn distspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distspec"))
        .args(args)
        .env_remove("DISTSPEC_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = distspec(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn rho_of_family_specs() {
    let o = distspec(&["rho", "pnc:9,2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rho = 9.578205"));
    let o = distspec(&["rho", "complete:5"]);
    assert!(stdout(&o).contains("rho = 4.000000"));
    assert!(stdout(&o).contains("transmission regular = true"));
}

#[test]
fn graph6_and_edge_list_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.json");
    let edges: Vec<[usize; 2]> = (0..5).flat_map(|u| (u + 1..5).map(move |v| [u, v])).collect();
    std::fs::write(&path, serde_json::json!({ "n": 5, "edges": edges }).to_string()).unwrap();
    let a = json(&["rho", "D~{"]);
    let b = json(&["rho", path.to_str().unwrap()]);
    assert_eq!(a["rho"], b["rho"]);
    assert_eq!(a["graph6"], "D~{");
    assert_eq!(b["graph6"], "D~{");
}

#[test]
fn bad_inputs_exit_with_one() {
    for args in [
        &["rho", "not a graph"][..],
        &["rho", "complement(complete:4)"],
        &["rho", "pnc:3,9"],
        &["verify", "max", "m=4"],
        &["verify", "forests", "q=3"],
        &["verify", "min-identity", "n=9", "s=1"],
        &["--tol", "-1", "rho", "k:3"],
        &["--workers", "0", "rho", "k:3"],
        &["--limit-size-m", "11", "verify", "max", "m=5"],
        &["enumerate", "by-order-size", "n=11", "m=20"],
        &["--bogus", "tables"],
    ] {
        let o = distspec(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn tables_report_four_decimals() {
    let o = distspec(&["tables"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("9.5782  P_{9,2}"));
    assert!(text.contains("10.6235  complement(2C3 ∪ 2K2)"));
    assert!(text.contains("10.6203  P_{10,2}"));
}

#[test]
fn verify_commands_hold() {
    for args in [
        &["verify", "max", "m=5..7"][..],
        &["verify", "forests", "n=6..8", "c=2..4"],
        &["verify", "charpoly", "n=5..12"],
        &["verify", "min-identity", "n=3..7"],
        &["verify", "min-structure", "m=10..15"],
        &["verify", "lemmas", "pairs=40", "corpus=60", "shift-n=6"],
        &["conjecture", "n=12", "s=1"],
    ] {
        let o = distspec(args);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(stdout(&o).contains("holds"), "{args:?}");
    }
}

#[test]
fn json_reports_record_tolerance() {
    let v = json(&["verify", "forests", "n=7", "c=3"]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["tolerance_overridden"], false);
    assert_eq!(
        v["results"][0]["ranking"][0]["family"],
        "complement(union(star:5,complete:1,complete:1))"
    );
    let v = json(&["--tol", "1e-7", "verify", "forests", "n=7", "c=3"]);
    assert_eq!(v["tolerance_overridden"], true);
    assert_eq!(v["results"][0]["solver_tolerance"], 1e-7);
}

#[test]
fn csv_reports_have_one_header() {
    let o = distspec(&["verify", "max", "m=5..6", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("graph6,family,rho,residual"));
    assert_eq!(text.matches("graph6,family").count(), 1);
    assert_eq!(text.lines().count(), 1 + 12 + 30);
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, workers: &str| {
        let path = dir.path().join(name);
        let o = distspec(&[
            "verify",
            "min-identity",
            "n=7..8",
            "--workers",
            workers,
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
        std::fs::read(path).unwrap()
    };
    let a = run("a.json", "1");
    assert_eq!(a, run("b.json", "1"));
    assert_eq!(a, run("c.json", "3"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_distspec"))
            .args(["enumerate", "forests", "n=7", "c=2"])
            .env("DISTSPEC_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert_eq!(stdout(&first).lines().count(), 6 + 3 + 2);
    let cached: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(cached.len(), 1);
    assert_eq!(stdout(&run()), stdout(&first));
}

#[test]
fn canon_is_labeling_invariant() {
    // Two labelings of the path on four vertices.
    let a = json(&["canon", "CR"]);
    let b = json(&["canon", "Ch"]);
    assert_eq!(a["canonical_graph6"], b["canonical_graph6"]);
    assert_eq!(a["orbits"], serde_json::json!([[0, 1], [2, 3]]));
    assert_eq!(b["orbits"], serde_json::json!([[0, 3], [1, 2]]));
}
