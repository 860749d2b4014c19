use std::path::PathBuf;
use std::process::{Command, Output};

use chaindd_bench::BenchReport;

fn ddbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ddbench")).args(args).output().unwrap()
}

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(rel)
        .display()
        .to_string()
}

fn reports(out: &Output) -> Vec<BenchReport> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn queens_report() {
    let out = ddbench(&["queens", "--n", "8", "--kind", "czdd", "--encoding", "one-hot", "--order", "top-down"]);
    assert!(out.status.success());
    let r = reports(&out);
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].solutions.as_deref(), Some("92"));
    assert_eq!((r[0].kind.as_str(), r[0].encoding.as_str(), r[0].ordering.as_str()), ("czdd", "one-hot", "top-down"));
}

#[test]
fn worstcase_report() {
    let out = ddbench(&["worstcase", "--family", "zdd-vs-cbdd", "--k", "3", "--kind", "cbdd"]);
    assert!(out.status.success());
    assert_eq!(reports(&out)[0].final_nodes, 20);
    let out = ddbench(&["worstcase", "--family", "bdd-vs-czdd", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn all_kinds_print_a_table() {
    let out = ddbench(&["--kind", "all", "circuit", "--input", &data("circuits/c17.bench")]);
    assert!(out.status.success());
    assert_eq!(reports(&out).len(), 4);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("BDD:CBDD") && err.contains("ZDD:CZDD"), "{err}");
}

#[test]
fn exit_codes() {
    let out = ddbench(&["dict", "--input", "missing.txt"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.txt"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.bench");
    std::fs::write(&bad, "INPUT(a)\nOUTPUT(z)\nz = AND(a, q)\n").unwrap();
    let out = ddbench(&["circuit", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`q`"));

    let out = ddbench(&["--max-nodes", "50", "--kind", "zdd", "queens", "--n", "6"]);
    assert_eq!(out.status.code(), Some(5));

    let out = ddbench(&["queens", "--n", "4", "--kind", "tdd"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ddbench(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let words = dir.path().join("w.txt");
    std::fs::write(&words, "alpha\nbeta\ngamma\ndelta\nepsilon\nbet\nbeat\n").unwrap();
    let run = || {
        let out = ddbench(&["--kind", "all", "--cache-size", "64", "dict", "--input", words.to_str().unwrap()]);
        assert!(out.status.success());
        reports(&out)
            .into_iter()
            .map(|mut r| {
                r.wall_seconds = 0.0;
                r
            })
            .collect::<Vec<_>>()
    };
    let a = run();
    assert_eq!(a, run());
    assert!(a.iter().all(|r| r.solutions.as_deref() == Some("7")));
}

#[test]
fn csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = ddbench(&[
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
        "--kind",
        "bdd",
        "queens",
        "--n",
        "5",
        "--encoding",
        "binary",
        "--order",
        "center-first",
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("benchmark,kind,encoding,ordering,final_nodes"));
    assert!(lines.next().unwrap().starts_with("queens5,bdd,binary,center-first,"));
}

#[test]
fn selftest_passes() {
    let out = ddbench(&["--kind", "all", "selftest", "--count", "40"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0 mismatches"));
}
