use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use weylorbit::io::{PointsFile, SampleFile, SpectrumFile, Values};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylorbit")).args(args).output().unwrap()
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylorbit")).current_dir(dir).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn count_with_closed_form() {
    let o = run(&["count", "--algebra", "C2", "--M", "4", "--type", "E-", "--closed-form"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["enumerated"], 8);
    assert_eq!(v["closedForm"], 8);
}

#[test]
fn validation_errors_exit_with_one() {
    assert_eq!(code(&run(&["count", "--algebra", "X9", "--M", "4", "--type", "C"])), 1);
    assert_eq!(code(&run(&["count", "--algebra", "A2", "--M", "4", "--type", "Ss"])), 1);
    assert_eq!(code(&run(&["points", "--algebra", "C2", "--M", "0", "--type", "C"])), 1);
    assert_eq!(code(&run(&["raster", "--algebra", "C2", "--type", "C", "--label", "1,1", "--resolution", "0"])), 1);
    assert_eq!(code(&run(&["raster", "--algebra", "B3", "--type", "C", "--label", "1,1,1"])), 1);
    assert_eq!(code(&run(&["count", "--algebra", "A2", "--M", "3", "--type", "E+", "--closed-form"])), 1);
    assert_eq!(code(&run(&["bogus"])), 1);
}

#[test]
fn verify_passes() {
    let o = run(&["verify", "--algebra", "G2", "--M", "5", "--type", "El+", "--kernel", "hartley"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    let o = run(&["verify", "--algebra", "C2", "--M", "6", "--type", "Es+", "--budget", "10"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn points_file_is_exact() {
    let o = run(&["points", "--algebra", "C2", "--M", "4", "--type", "El-"]);
    assert_eq!(code(&o), 0);
    let f: PointsFile = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(f.header.m, 4);
    assert_eq!(f.points.len(), 5);
    let refl: Vec<_> = f.points.iter().filter(|p| p.reflected).collect();
    assert_eq!(refl.len(), 1);
    assert_eq!(refl[0].coords, vec!["1/2", "-1/4"]);
    let again = serde_json::to_string_pretty(&f).unwrap() + "\n";
    assert_eq!(again.as_bytes(), &o.stdout[..]);
}

#[test]
fn csv_outputs() {
    let o = run(&["labels", "--algebra", "G2", "--M", "3", "--type", "Es+", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("t1,t2,x1,x2,weight,reflected"));
    let o = run(&["raster", "--algebra", "G2", "--type", "Es+", "--label", "1,1", "--resolution", "10"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 101);
}

#[test]
fn analyze_synthesize_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for kernel in ["complex", "hartley"] {
        let common = ["--algebra", "C2", "--M", "5", "--type", "E-", "--label", "3,1", "--kernel", kernel];
        let mut args = vec!["sample"];
        args.extend(common);
        args.extend(["--output", "s.json"]);
        assert_eq!(code(&run_in(dir.path(), &args)), 0);
        assert_eq!(code(&run_in(dir.path(), &["analyze", "--input", "s.json", "--output", "k.json"])), 0);
        assert_eq!(code(&run_in(dir.path(), &["synthesize", "--input", "k.json", "--output", "s2.json"])), 0);
        let read = |p: &str| fs::read_to_string(dir.path().join(p)).unwrap();
        let s: SampleFile = serde_json::from_str(&read("s.json")).unwrap();
        let s2: SampleFile = serde_json::from_str(&read("s2.json")).unwrap();
        assert_eq!(s.points, s2.points);
        let (a, b) = (s.values.as_complex(), s2.values.as_complex());
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-9);
        }
        // A single orbit function has exactly one nonzero coefficient.
        let k: SpectrumFile = serde_json::from_str(&read("k.json")).unwrap();
        let nonzero = k.coeffs.as_complex().iter().filter(|c| c.norm() > 1e-9).count();
        assert_eq!(nonzero, 1);
    }
}

#[test]
fn synthesize_at_points() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["sample", "--algebra", "G2", "--M", "4", "--type", "C", "--label", "1,0", "--output", "s.json"];
    assert_eq!(code(&run_in(dir.path(), &args)), 0);
    assert_eq!(code(&run_in(dir.path(), &["analyze", "--input", "s.json", "--output", "k.json"])), 0);
    fs::write(dir.path().join("at.json"), r#"[["1/7","2/9"],["0","0"]]"#).unwrap();
    let o = run_in(dir.path(), &["synthesize", "--input", "k.json", "--at", "at.json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let vals: Values = serde_json::from_value(v["values"].clone()).unwrap();
    let sys = weylorbit::System::from_name("G2").unwrap();
    let ft = "C".parse().unwrap();
    let want = sys
        .eval_psi(ft, &[1, 0], &[weylorbit::rootdata::Rat::new(1, 7), weylorbit::rootdata::Rat::new(2, 9)])
        .unwrap();
    assert!((vals.as_complex()[0] - want).norm() < 1e-9);
    assert!((vals.as_complex()[1].re - 12.0).abs() < 1e-9);
}

#[test]
fn analyze_rejects_misaligned_samples() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["sample", "--algebra", "C2", "--M", "4", "--type", "Es+", "--label", "1,1", "--output", "s.json"];
    assert_eq!(code(&run_in(dir.path(), &args)), 0);
    let path = dir.path().join("s.json");
    let mut s: SampleFile = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    s.points.swap(0, 1);
    fs::write(&path, serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(code(&run_in(dir.path(), &["analyze", "--input", "s.json"])), 1);
    s.points.swap(0, 1);
    s.header.m = 5;
    fs::write(&path, serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(code(&run_in(dir.path(), &["analyze", "--input", "s.json"])), 1);
}

#[test]
fn outputs_are_deterministic() {
    let jobs: [&[&str]; 3] = [
        &["points", "--algebra", "B3", "--M", "4", "--type", "Es-"],
        &["labels", "--algebra", "F4", "--M", "3", "--type", "E+"],
        &["raster", "--algebra", "C2", "--type", "El+", "--label", "2,1", "--kernel", "complex", "--resolution", "12"],
    ];
    for job in jobs {
        let (a, b) = (run(job), run(job));
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn rootinfo_reports_marks() {
    let o = run(&["rootinfo", "--algebra", "F4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["marks"], serde_json::json!([2, 3, 4, 2]));
    assert_eq!(v["coxeterNumber"], 12);
}
