use std::path::PathBuf;
use std::process::{Command, Output};

use semidec_cli::report::{BenchOutcome, ErrorReport, Report};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn semidec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semidec"))
        .args(args)
        .env_remove("SEMIDEC_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Report, String) {
    let mut all = args.to_vec();
    all.extend(["--json", "--no-timings"]);
    let out = semidec(&all);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    (
        serde_json::from_str(&stdout).expect("report parses"),
        stdout,
    )
}

fn strs(v: &[semidec_cli::report::Dec]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Every command over the corpus, as `(args, expected exit code)`.
fn corpus() -> Vec<(Vec<String>, i32)> {
    let mut out = Vec::new();
    let torsion_free = [
        "worked_example.mat",
        "bpg_bin.mat",
        "numerical_2_3.mat",
        "three_equal.mat",
        "twisted_cubic.mat",
        "free3.mat",
        "direct_counterexample.mat",
    ];
    for f in torsion_free {
        for cmd in [
            &["decompose"][..],
            &["decompose", "--mode", "direct"],
            &["markov"],
            &["markov", "--whole"],
            &["check"],
            &["reparam"],
        ] {
            let mut a: Vec<String> = cmd.iter().map(ToString::to_string).collect();
            a.push(data(f));
            out.push((a, 0));
        }
    }
    let torsion = [
        data("torsion.mat"),
        "--moduli".into(),
        data("torsion.moduli"),
    ];
    for cmd in ["decompose", "markov", "check"] {
        let mut a = vec![cmd.to_string()];
        a.extend(torsion.iter().cloned());
        out.push((a, 0));
    }
    let mut a = vec!["fiber".to_string()];
    a.extend(torsion.iter().cloned());
    a.extend(["--degree".into(), "2 0".into()]);
    out.push((a, 0));
    for (f, deg) in [
        ("numerical_2_3.mat", "6"),
        ("twisted_cubic.mat", "2 2"),
        ("worked_example.mat", "-2 -8 14 14 -2"),
    ] {
        for complex in ["nabla", "delta"] {
            out.push((
                vec![
                    "fiber".into(),
                    data(f),
                    "--degree".into(),
                    deg.into(),
                    "--complex".into(),
                    complex.into(),
                ],
                0,
            ));
        }
    }
    out.push((vec!["decompose".into(), data("not_pointed.mat")], 0));
    out.push((vec!["markov".into(), data("not_pointed.mat")], 1));
    out.push((vec!["check".into(), data("not_pointed.mat")], 1));
    out
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    for (args, code) in corpus() {
        let mut a: Vec<&str> = args.iter().map(String::as_str).collect();
        a.extend(["--json", "--no-timings"]);
        let first = semidec(&a);
        let second = semidec(&a);
        assert_eq!(first.status.code(), Some(code), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?} is not deterministic");
        let text = String::from_utf8(first.stdout).unwrap();
        if code == 0 {
            let r: Report = serde_json::from_str(&text).unwrap();
            assert!(r.timings.is_none());
            let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
            assert_eq!(again, r, "{args:?}");
            assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", text);
        } else {
            let e: ErrorReport = serde_json::from_str(&text).unwrap();
            assert_eq!(e.error.exit_code.to_string(), code.to_string());
        }
    }
}

#[test]
fn json_never_contains_bare_numbers() {
    let (_, text) = json(&["decompose", &data("bpg_bin.mat")]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    fn walk(v: &serde_json::Value) {
        match v {
            serde_json::Value::Number(n) => panic!("bare number {n}"),
            serde_json::Value::Array(a) => a.iter().for_each(walk),
            serde_json::Value::Object(o) => o.values().for_each(walk),
            _ => {}
        }
    }
    walk(&v);
}

#[test]
fn bpg_direct_mode_has_eight_blocks() {
    let (r, _) = json(&["decompose", &data("bpg_bin.mat"), "--mode", "direct"]);
    let d = r.decomposition.unwrap();
    assert_eq!(d.blocks.len(), 8);
    for (k, b) in d.blocks.iter().enumerate() {
        let want: Vec<String> = (0..4).map(|i| (k + 1 + 8 * i).to_string()).collect();
        assert_eq!(strs(&b.generators), want);
        assert_eq!(b.matrix.len(), 3);
    }
    assert!(d.cross_check.unwrap().agree);
}

#[test]
fn bpg_is_unique_and_a_complete_intersection() {
    let (r, _) = json(&["check", &data("bpg_bin.mat"), "--unique", "--ci"]);
    let v = r.verdicts.unwrap();
    assert_eq!(v.unique, Some(true));
    assert_eq!(v.complete_intersection, Some(true));
    assert_eq!(v.gluing, None);
    assert_eq!(v.blocks.len(), 8);
}

#[test]
fn free_generators_and_direct_mode_disagreement() {
    let (r, _) = json(&["decompose", &data("free3.mat")]);
    let d = r.decomposition.unwrap();
    assert!(d.decomposable);
    assert_eq!(strs(&d.free_generators), ["1", "2", "3"]);
    assert!(d.blocks.is_empty());

    let (r, _) = json(&["markov", &data("free3.mat")]);
    assert!(r.markov.unwrap().elements.is_empty());

    let (r, _) = json(&["decompose", &data("direct_counterexample.mat")]);
    let c = r.decomposition.unwrap().cross_check.unwrap();
    assert!(c.kernel_decomposable && !c.direct_decomposable && !c.agree);
    assert!(r.notes.iter().any(|n| n.contains("disagree")));
}

#[test]
fn markov_strategies_agree() {
    let (a, _) = json(&["markov", &data("worked_example.mat")]);
    let (b, _) = json(&["markov", &data("worked_example.mat"), "--whole"]);
    let set = |r: Report| {
        let mut v: Vec<String> = r
            .markov
            .unwrap()
            .elements
            .into_iter()
            .map(|e| e.text)
            .collect();
        v.sort();
        v
    };
    assert_eq!(set(a), set(b));
}

#[test]
fn fiber_and_complexes() {
    let (r, _) = json(&[
        "fiber",
        &data("numerical_2_3.mat"),
        "--degree",
        "6",
        "--complex",
        "delta",
    ]);
    let f = r.fiber.unwrap();
    assert_eq!(f.elements.len(), 2);
    assert!(!f.connected);
    assert_eq!(f.facets.unwrap().len(), 2);

    let (r, _) = json(&["fiber", &data("three_equal.mat"), "--degree", "2"]);
    let f = r.fiber.unwrap();
    assert_eq!(f.elements.len(), 6);
    assert!(f.connected);
}

#[test]
fn exit_codes() {
    let out = semidec(&["decompose", "/nonexistent/file.mat"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("semidec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.mat");
    std::fs::write(&bad, "2 2\n1 2\nx 4\n").unwrap();
    let out = semidec(&["decompose", bad.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let e: ErrorReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(e.error.kind, "parse");
    assert!(
        e.error.message.contains("line 3, column 1"),
        "{}",
        e.error.message
    );

    let zero = dir.join("zero.mat");
    std::fs::write(&zero, "1 2\n1 0\n").unwrap();
    assert_eq!(
        semidec(&["decompose", zero.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let out = semidec(&["fiber", &data("numerical_2_3.mat"), "--degree", "1 2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = semidec(&[
        "reparam",
        &data("torsion.mat"),
        "--moduli",
        &data("torsion.moduli"),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = semidec(&["markov", &data("not_pointed.mat"), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let e: ErrorReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(e.error.kind, "not_pointed");
    assert!(e.error.message.contains("(1, 1, 0)"));

    let report = dir.join("report.json");
    let out = semidec(&[
        "decompose",
        &data("free3.mat"),
        "--json",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("free generators"));
    let r: Report = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert!(r.timings.is_some());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_count_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_semidec"))
            .args(["markov", &data("bpg_bin.mat"), "--json", "--no-timings"])
            .env("SEMIDEC_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn bench_reports_both_paths() {
    let (r, _) = json(&["bench", &data("worked_example.mat"), "--repeat", "1"]);
    let b = r.bench.unwrap();
    assert!(matches!(b.decomposed, BenchOutcome::Completed { .. }));
    assert!(matches!(b.whole, BenchOutcome::Completed { .. }));
    assert_eq!(b.bases_agree, Some(true));
    assert_eq!(
        semidec(&["bench", &data("worked_example.mat"), "--timeout", "0"])
            .status
            .code(),
        Some(2)
    );
}
