//! End-to-end runs of the `hfft` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn hfft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfft"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn parse_json(text: &str) -> Vec<(f64, f64)> {
    serde_json::from_str::<Vec<[f64; 2]>>(text)
        .unwrap()
        .into_iter()
        .map(|[re, im]| (re, im))
        .collect()
}

#[test]
fn dft_of_a_ramp() {
    let input = scratch("ramp.json", "[[1,0],[2,0],[3,0],[4,0]]");
    for algo in ["naive", "recursive", "bitpass", "heuristic"] {
        let out = hfft(&["dft", "-i", input.to_str().unwrap(), "--algo", algo]);
        assert!(out.status.success(), "{algo}");
        let got = parse_json(&stdout(&out));
        let want = [(10.0, 0.0), (-2.0, -2.0), (-2.0, 0.0), (-2.0, 2.0)];
        for (g, w) in got.iter().zip(&want) {
            assert!(
                (g.0 - w.0).abs() < 1e-12 && (g.1 - w.1).abs() < 1e-12,
                "{algo}: {got:?}"
            );
        }
    }
}

#[test]
fn conjugate_flag_flips_the_sign_convention() {
    let input = scratch("ramp_conj.csv", "re,im\n1,0\n2,0\n3,0\n4,0\n");
    let out = hfft(&["--conjugate", "dft", "-i", input.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<_> = text.lines().skip(1).collect();
    assert_eq!(rows[1], "-2.0,2.0");
    assert_eq!(rows[3], "-2.0,-2.0");
}

#[test]
fn csv_round_trip_through_files() {
    let input = scratch(
        "rt.csv",
        "re,im\n0.5,-1\n2,0.25\n-3,1e-3\n4,4\n0,0\n1,1\n-1,2\n7,-7\n",
    );
    let spec = input.with_file_name("rt_spec.csv");
    let back = input.with_file_name("rt_back.csv");
    let s = |p: &PathBuf| p.to_str().unwrap().to_string();
    assert!(hfft(&["dft", "-i", &s(&input), "-o", &s(&spec)])
        .status
        .success());
    let out = hfft(&[
        "dft",
        "-i",
        &s(&spec),
        "-o",
        &s(&back),
        "--direction",
        "inverse",
        "--algo",
        "bitpass",
    ]);
    assert!(out.status.success());
    let parse = |p: &PathBuf| -> Vec<f64> {
        fs::read_to_string(p)
            .unwrap()
            .lines()
            .skip(1)
            .flat_map(|l| {
                l.split(',')
                    .map(|x| x.parse::<f64>().unwrap())
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    for (a, b) in parse(&input).iter().zip(parse(&back)) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn exit_codes() {
    let bad = scratch("bad.json", "[[1,0],[2");
    assert_eq!(
        hfft(&["dft", "-i", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let nan = scratch("nan.csv", "re,im\nNaN,0\n");
    assert_eq!(
        hfft(&["dft", "-i", nan.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let three = scratch("three.json", "[[1,0],[2,0],[3,0]]");
    let out = hfft(&["dft", "-i", three.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("power-of-two"));
    // the oracle takes any length
    assert!(
        hfft(&["dft", "-i", three.to_str().unwrap(), "--algo", "naive"])
            .status
            .success()
    );

    assert_eq!(hfft(&["trace", "--n", "128"]).status.code(), Some(3));
    assert!(hfft(&["trace", "--n", "128", "--force"]).status.success());
    assert_eq!(
        hfft(&["trace", "--n", "8", "--algo", "naive"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(hfft(&["bench", "--sizes", "12"]).status.code(), Some(3));
}

#[test]
fn compare_passes_and_catches_corruption() {
    let ok = hfft(&["compare", "--random", "1024"]);
    assert!(ok.status.success());
    assert!(stdout(&ok).trim_end().ends_with("PASS"));

    let broken = hfft(&["compare", "--random", "256", "--corrupt", "bitpass"]);
    assert_eq!(broken.status.code(), Some(1));
    let text = stdout(&broken);
    assert!(text.contains("FAIL"));
    assert!(text
        .lines()
        .any(|l| l.contains("recursive vs heuristic") && l.ends_with("ok")));
}

#[test]
fn trace_of_basis_vectors() {
    let out = hfft(&["trace", "--n", "8", "--basis", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let pass1: Vec<_> = text
        .lines()
        .skip_while(|l| !l.starts_with("pass 1"))
        .skip(1)
        .take(8)
        .collect();
    assert_eq!(pass1[0], "  000: +1");
    assert_eq!(pass1[4], "  100: +1");
    assert!(text.contains("pass 1 (additions 8, multiplications 8)"));
    assert!(text.contains("flat 1 -> spectrum 4: +1"));
    assert!(text.contains("total additions 24, multiplications 24"));

    let heur = stdout(&hfft(&[
        "trace",
        "--n",
        "8",
        "--algo",
        "heuristic",
        "--basis",
        "4",
    ]));
    assert!(heur.contains("pass 1 (additions 8, multiplications 4)"));
    assert!(heur.contains("  100: -1"));
}

#[test]
fn trace_of_size_two_heuristic() {
    let text = stdout(&hfft(&["trace", "--n", "2", "--algo", "heuristic"]));
    let expected = "\
# heuristic n = 2
pass 0 (load)
  0: 1 +0i
  1: 0 +0i
pass 1 (additions 2, multiplications 1)
  0: 1 +0i
  1: 1 +0i
reversal
  flat 0 -> spectrum 0: 1 +0i
  flat 1 -> spectrum 1: 1 +0i
total additions 2, multiplications 1
";
    assert_eq!(text, expected);
}

#[test]
fn trace_records_are_json() {
    let out = hfft(&["trace", "--n", "4", "--algo", "recursive", "--records"]);
    assert!(out.status.success());
    let records: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records.len(), 3 * 4);
    assert_eq!(records[4]["pass"], 1);
    assert_eq!(records[4]["slot_label"], "0/0");
}

#[test]
fn bench_reports_matching_counts() {
    let out = hfft(&["bench", "--sizes", "8,64", "--repetitions", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<_> = text.lines().filter(|l| l.ends_with(" ok")).collect();
    assert_eq!(rows.len(), 8);
    let heuristic_64 = rows
        .iter()
        .find(|l| l.trim_start().starts_with("heuristic") && l.contains(" 64 "))
        .unwrap();
    assert!(heuristic_64.contains(" 384 "));
}
