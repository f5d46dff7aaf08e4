use std::process::{Command, Output};

use m0nr_cli::{CharRecord, EulerRecord, IndexTerm};
use m0nr_core::BigInt;
use proptest::prelude::*;

fn m0nr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_m0nr"))
        .args(args)
        .env_remove("M0NR_PBOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn char_plain_and_json() {
    let o = m0nr(&["char", "--n", "4", "--cycle-type", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[4]: 1 + t\n");

    let o = m0nr(&["char", "--n", "5", "--format", "json"]);
    let r: CharRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r.cycle_type, vec![1, 1, 1, 1, 1]);
    assert_eq!(r.traces[&1], BigInt::from(4));
    assert!(stdout(&o).contains("\"traces\":{\"0\":1,\"1\":4}"));
}

#[test]
fn json_and_csv_agree() {
    let json = stdout(&m0nr(&["char", "--n", "8", "--all", "--format", "json"]));
    let csv = stdout(&m0nr(&["char", "--n", "8", "--all", "--format", "csv"]));
    let records: Vec<CharRecord> = json.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let mut rows = csv::Reader::from_reader(csv.as_bytes());
    let header = rows.headers().unwrap().clone();
    assert_eq!(&header[0], "n");
    let rows: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), records.len());
    assert_eq!(records.len(), 22);
    for (r, row) in records.iter().zip(&rows) {
        assert_eq!(row[0], r.n.to_string());
        let parts: Vec<String> = r.cycle_type.iter().map(u32::to_string).collect();
        assert_eq!(row[1], parts.join(","));
        for k in 0..header.len() - 2 {
            let v = r.traces.get(&k).cloned().unwrap_or_default();
            assert_eq!(row[k + 2], v.to_string(), "{:?} degree {k}", r.cycle_type);
        }
    }
}

#[test]
fn euler_values() {
    let e = |args: &[&str]| {
        let o = m0nr(&[&["euler", "--format", "json"], args].concat());
        assert!(o.status.success());
        let r: EulerRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
        r.euler
    };
    assert_eq!(e(&["--n", "5"]), BigInt::from(-3));
    assert_eq!(e(&["--n", "4"]), BigInt::from(0));
    assert_eq!(e(&["--n", "4", "--cycle-type", "4"]), BigInt::from(2));
    assert_eq!(e(&["--n", "7"]), BigInt::from(45));
}

#[test]
fn cycle_index_dumps() {
    let o = m0nr(&["cycle-index", "extended", "--pbound", "0"]);
    assert_eq!(stdout(&o), "# pbound = 0 (from --pbound)\n1: 1/(1 - t)\n");

    let o = m0nr(&["cycle-index", "lambda-prime", "--pbound", "0", "--format", "json"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("{\"metadata\""));
    let t: IndexTerm = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(t, IndexTerm { partition: vec![], coefficient: "1".into() });

    let o = m0nr(&["cycle-index", "chr", "--pbound", "1"]);
    assert!(stdout(&o).lines().any(|l| l == "p1: 1"));
}

#[test]
fn pbound_from_environment_is_echoed() {
    let o = Command::new(env!("CARGO_BIN_EXE_m0nr"))
        .args(["cycle-index", "complex"])
        .env("M0NR_PBOUND", "3")
        .output()
        .unwrap();
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("# pbound = 3 (from M0NR_PBOUND)\n"), "{out}");
    assert!(out.contains("p1^3: "));
    assert!(!out.contains("p1^4"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "oracle", "--max-n", "5"][..],
        &["verify", "poset", "--max-n", "5"],
        &["verify", "euler", "--max-n", "8"],
        &["verify", "cycleindex", "--pbound", "6"],
        &["verify", "recurrence", "--max-n", "6"],
    ] {
        let o = m0nr(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("checks passed"));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(m0nr(&["char", "--n", "4", "--cycle-type", "3"]).status.code(), Some(1));
    assert_eq!(m0nr(&["char", "--n", "4", "--cycle-type", "a,b"]).status.code(), Some(1));
    assert_eq!(m0nr(&["char", "--bogus"]).status.code(), Some(1));
    assert_eq!(m0nr(&["cycle-index", "chr", "--pbound", "99"]).status.code(), Some(1));
    let capped = m0nr(&["verify", "oracle", "--max-n", "6", "--max-ambient", "10"]);
    assert_eq!(capped.status.code(), Some(3));
    assert_eq!(m0nr(&["--help"]).status.code(), Some(0));
}

#[test]
fn cache_dir_is_populated() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    for _ in 0..2 {
        let o = m0nr(&["verify", "oracle", "--max-n", "4", "--cache-dir", path]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

proptest! {
    #[test]
    fn char_record_json_round_trip(
        n in 1u32..40,
        cycle_type in proptest::collection::vec(1u32..10, 0..6),
        traces in proptest::collection::btree_map(0usize..20, any::<i128>(), 0..8),
        signed_polynomial in ".*",
    ) {
        let r = CharRecord {
            n,
            cycle_type,
            traces: traces.into_iter().map(|(k, v)| (k, BigInt::from(v) * BigInt::from(v))).collect(),
            signed_polynomial,
        };
        let back: CharRecord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn euler_record_json_round_trip(n in 1u32..40, v in any::<i128>()) {
        let r = EulerRecord { n, cycle_type: vec![n], euler: BigInt::from(v) * 1000 - 7 };
        let back: EulerRecord = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }
}
