use std::f64::consts::FRAC_1_SQRT_2;
use std::fs;
use std::process::Command;

use horizon_cli::parse_args;
use horizon_core::measures::RoofConfig;
use horizon_core::sweep::{Axis, FigurePreset, Grid, OutputFormat};
use horizon_core::ScenarioId;

fn horizon(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_horizon")).args(args).output().unwrap()
}

#[test]
fn preset_fig2a() {
    let spec = parse_args(["--preset", "fig2a"]).unwrap();
    assert_eq!(spec.scenario, ScenarioId::ABC);
    assert_eq!((spec.omega, spec.t_hawking), (Some(1.0), Some(0.01)));
    assert_eq!(spec.sweeps.len(), 1);
    assert_eq!(spec.sweeps[0].axis, Axis::Alpha);
    assert_eq!(spec.sweeps[0].grid, Grid::linear(0.0, 1.0, 201));
}

#[test]
#[allow(clippy::approx_constant)]
fn explicit_flags_reproduce_fig6a() {
    let spec =
        parse_args(["--scenario", "Abc", "--sweep", "th:0.01:100:200:log", "--alpha", "0.70710678", "--omega", "1"])
            .unwrap();
    let mut expected = "fig6a".parse::<FigurePreset>().unwrap().spec();
    expected.preset = None;
    expected.alpha = Some(0.70710678);
    expected.measures = spec.measures;
    assert_eq!(spec, expected);
    assert!((spec.alpha.unwrap() - FRAC_1_SQRT_2).abs() < 1e-8);
}

#[test]
fn usage_errors() {
    let cases: &[&[&str]] = &[
        &["--sweep", "alpha:0:1:3", "--sweep", "th:0.1:1:3", "--sweep", "omega:0.1:1:3"],
        &["--sweep", "alpha:0:1:3", "--sweep", "alpha:0:1:5", "--omega", "1", "--th", "1"],
        &["--sweep", "alpha:0:1", "--omega", "1", "--th", "1"],
        &["--sweep", "th:0:1:3:log", "--omega", "1", "--alpha", "0.5"],
        &["--sweep", "alpha:0:1:3", "--omega", "1"],
        &["--preset", "fig3c"],
        &["--preset", "fig2a", "--measures", "cf,entropy"],
        &["--preset", "fig2a", "--restarts", "0"],
        &["--preset", "fig2a", "--format", "xml"],
        &["--preset", "fig2a", "--bogus"],
        &["--scenario", "AbBcC", "--sweep", "alpha:0:1:3", "--omega", "1", "--th", "1"],
    ];
    for args in cases {
        assert!(parse_args(args.iter().copied()).is_err(), "{args:?}");
        let out = horizon(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn budget_flags() {
    let spec = parse_args(["--preset", "fig3b", "--fast", "--iters", "77", "--seed", "4", "--threads", "3"]).unwrap();
    assert_eq!(spec.roof, RoofConfig { restarts: 8, max_iters: 77, rng_seed: 4, ..RoofConfig::default() });
    assert_eq!(spec.threads, Some(3));
    let spec = parse_args(["--preset", "fig3b", "--format", "json", "--out", "x.json"]).unwrap();
    assert_eq!(spec.output.format, OutputFormat::Json);
    assert_eq!(spec.output.path.unwrap().to_str(), Some("x.json"));
}

#[test]
fn writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig4a.csv");
    let out = horizon(&["--preset", "fig4a", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&path).unwrap();
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "alpha,I_AB,I_AC");
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 202);
}

#[test]
fn json_to_stdout() {
    let out =
        horizon(&["--scenario", "ABC", "--sweep", "alpha:0:0:1", "--omega", "1", "--th", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 1);
    let cols: Vec<&str> = doc["columns"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let row = doc["rows"][0].as_array().unwrap();
    let get = |name: &str| row[cols.iter().position(|c| *c == name).unwrap()].as_f64().unwrap();
    assert_eq!(get("cf"), 0.0);
    assert_eq!(get("foc"), 1.0);
}

#[test]
fn unwritable_output_exits_with_io_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("no").join("such").join("dir.csv");
    let out = horizon(&["--preset", "fig2a", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn help_exits_cleanly() {
    let out = horizon(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("--preset"));
}
