use std::path::PathBuf;
use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;
use uep_core::bounds::{uep_cube_bound, SplitRule, TwoLevelParams};

fn uep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uep"))
        .args(args)
        .output()
        .expect("run uep")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = uep(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

fn guaranteed(args: &[&str]) -> String {
    let v = json(args);
    v[0]["guaranteed"].as_str().unwrap().to_string()
}

#[test]
fn bound_examples() {
    let point = [
        "bound", "--n", "8", "--log2B", "2", "--dA", "3", "--dB", "2",
    ];
    let with = |which: &str| {
        let mut a = point.to_vec();
        a.extend(["--which", which]);
        guaranteed(&a)
    };
    assert_eq!(with("union"), "2");
    // floor radius ⌊(d_B−1)/2⌋ = 0 gives 2⁸/4
    assert_eq!(with("hamming"), "64");
    assert_eq!(
        guaranteed(&[
            "bound", "--n", "7", "--log2B", "0", "--dA", "3", "--dB", "1", "--which", "classic"
        ]),
        "5"
    );
}

#[test]
fn exact_values_round_trip() {
    let v = json(&[
        "bound", "--n", "20", "--log2B", "4", "--dA", "5", "--dB", "3", "--which", "cube",
    ]);
    let exact = &v[0]["exact"];
    let num: BigInt = exact["num"].as_str().unwrap().parse().unwrap();
    let den: BigInt = exact["den"].as_str().unwrap().parse().unwrap();
    let p = TwoLevelParams::with_log2_b(20, 4, 5, 3).unwrap();
    let direct = uep_cube_bound(&p, SplitRule::Strict).unwrap();
    assert_eq!(BigRational::new(num, den), direct.exact_value);
    assert_eq!(
        v[0]["guaranteed"].as_str().unwrap(),
        direct.guaranteed_size.to_string()
    );
}

#[test]
fn invalid_params_exit_2() {
    let out = uep(&[
        "bound", "--n", "8", "--log2B", "2", "--dA", "2", "--dB", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(uep(&["bound", "--n", "8"]).status.code(), Some(2));
}

#[test]
fn sweep_rows_and_empty_cells() {
    let out = uep(&[
        "sweep", "--vary", "dB", "--start", "2", "--stop", "4", "--step", "1", "--n", "40",
        "--log2B", "6", "--dA", "9",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers[0], "value");
    assert_eq!(headers.len(), 8);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    for r in &rows {
        let (uep, ts) = (&r[4], &r[5]);
        if !uep.is_empty() && !ts.is_empty() {
            assert!(uep.parse::<f64>().unwrap() >= ts.parse::<f64>().unwrap());
        }
    }

    let one = uep(&[
        "sweep", "--vary", "n", "--start", "12", "--stop", "12", "--step", "1", "--log2B", "2",
        "--dA", "3", "--dB", "2",
    ]);
    assert_eq!(stdout(&one).lines().count(), 2);

    // no split of n = 3 carries 8 class-B words: the row stays with empty cube and TS cells
    let short = uep(&[
        "sweep", "--vary", "n", "--start", "3", "--stop", "3", "--step", "1", "--log2B", "3",
        "--dA", "5", "--dB", "2",
    ]);
    assert!(short.status.success());
    let line = stdout(&short).lines().nth(1).unwrap().to_string();
    let cells: Vec<&str> = line.split(',').collect();
    assert_eq!(cells[0], "3");
    assert!(cells[1].is_empty() && cells[5].is_empty());
    assert!(!cells[7].is_empty());
}

#[test]
fn csv_file_written() {
    let path = scratch("table1.csv");
    let out = uep(&["minlen", "--table1", "--csv", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("log2A,log2B,dA,dB,n_ts_gv,n_uep"));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn minlen_rows() {
    let row = |a: &str, b: &str, da: &str, db: &str| {
        let v = json(&["minlen", "--log2A", a, "--log2B", b, "--dA", da, "--dB", db]);
        (
            v[0]["n_ts_gv"].as_u64().unwrap(),
            v[0]["n_uep"].as_u64().unwrap(),
        )
    };
    assert_eq!(row("2", "4", "5", "4"), (24, 18));
    // the published table lists 20 for n_uep here; see the README
    assert_eq!(row("2", "4", "7", "4"), (28, 23));
    assert_eq!(row("2", "3", "6", "4").0, 24);
}

#[test]
fn table1_labels_external_columns() {
    let v = json(&["minlen", "--table1"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    let ts: Vec<u64> = rows
        .iter()
        .map(|r| r["n_ts_gv"].as_u64().unwrap())
        .collect();
    assert_eq!(ts, [22, 24, 24, 19, 23, 28, 24, 22]);
    assert!(rows.iter().all(|r| r["ext_n_luep_opt"].is_u64()));
    assert!(stdout(&uep(&["minlen", "--table1"])).contains("external"));
}

#[test]
fn greedy_construct_then_verify() {
    let path = scratch("greedy.uep");
    let file = path.to_str().unwrap();
    let out = uep(&[
        "construct",
        "--mode",
        "greedy",
        "--n",
        "8",
        "--shape",
        "2,4",
        "--profile",
        "3,2",
        "--seed",
        "7",
        "--out",
        file,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json(&["verify", "--file", file, "--require", "3,2"]);
    let verified: Vec<u64> = v["verified"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert!(verified[0] >= 3 && verified[1] >= 2);
    assert_eq!(v["ok"], true);

    assert_eq!(
        uep(&["verify", "--file", file, "--require", "4,2"])
            .status
            .code(),
        Some(4)
    );

    let again = scratch("greedy2.uep");
    uep(&[
        "construct",
        "--mode",
        "greedy",
        "--n",
        "8",
        "--shape",
        "2,4",
        "--profile",
        "3,2",
        "--seed",
        "7",
        "--out",
        again.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read(&path).unwrap(),
        std::fs::read(&again).unwrap()
    );
}

#[test]
fn luep_construct() {
    let path = scratch("luep.uep");
    let file = path.to_str().unwrap();
    let out = uep(&[
        "construct",
        "--mode",
        "luep",
        "--n",
        "8",
        "--kA",
        "1",
        "--kB",
        "2",
        "--dA",
        "3",
        "--dB",
        "2",
        "--seed",
        "1",
        "--out",
        file,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("generator found"));
    assert!(uep(&["verify", "--file", file, "--require", "3,2"])
        .status
        .success());

    let unseeded = uep(&[
        "construct",
        "--mode",
        "luep",
        "--n",
        "8",
        "--kA",
        "1",
        "--kB",
        "2",
        "--dA",
        "3",
        "--dB",
        "2",
    ]);
    assert_eq!(unseeded.status.code(), Some(2));
}

#[test]
fn region_constructions_verify() {
    for mode in ["cube", "ball"] {
        let path = scratch(&format!("{mode}.uep"));
        let file = path.to_str().unwrap();
        let out = uep(&[
            "construct",
            "--mode",
            mode,
            "--n",
            "12",
            "--B",
            "4",
            "--dA",
            "4",
            "--dB",
            "2",
            "--out",
            file,
        ]);
        assert!(
            out.status.success(),
            "{mode}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(
            uep(&["verify", "--file", file, "--require", "4,2"])
                .status
                .success(),
            "{mode}"
        );
    }
}

#[test]
fn hand_made_repetition_pair() {
    let path = scratch("rep.uep");
    std::fs::write(&path, "uep v1 n=3 shape=2 profile=3\n0\t000\n1\t111\n").unwrap();
    let v = json(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(v["verified"], serde_json::json!([3]));
}

#[test]
fn overstated_or_malformed_files() {
    let over = scratch("over.uep");
    std::fs::write(&over, "uep v1 n=3 shape=2 profile=3\n0\t000\n1\t011\n").unwrap();
    assert_eq!(
        uep(&["verify", "--file", over.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );

    let bad = scratch("bad.uep");
    std::fs::write(&bad, "uep v1 n=3 shape=2 profile=3\n0\t000\n1\t0111\n").unwrap();
    assert_eq!(
        uep(&["verify", "--file", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let missing = scratch("does-not-exist.uep");
    assert_eq!(
        uep(&["verify", "--file", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn infeasible_construct_exit_3() {
    // six words pairwise at distance 3 do not fit in F₂⁴
    let out = uep(&[
        "construct",
        "--mode",
        "greedy",
        "--n",
        "4",
        "--shape",
        "6",
        "--profile",
        "3",
        "--out",
        scratch("x.uep").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn asym_examples() {
    let v = json(&[
        "asym", "--betaB", "0.001", "--RB", "0.7", "--betaA", "0.052",
    ]);
    assert_eq!(v["condition_rate_improve"], true);
    let v = json(&["asym", "--betaB", "0.01", "--RB", "0.5", "--betaA", "0.1"]);
    assert_eq!(v["condition_rate_improve"], true);
    let out = uep(&["asym", "--betaB", "0.3", "--RB", "0.9", "--betaA", "0.31"]);
    assert!(out.status.success());
    assert!(!stdout(&out).is_empty());
    assert_eq!(
        uep(&["asym", "--betaB", "1.3", "--RB", "0.5", "--betaA", "0.1"])
            .status
            .code(),
        Some(2)
    );
}
