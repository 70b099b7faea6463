// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn lanerep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lanerep")).args(args).env_remove("LANEREP_OUT_DIR").output().expect("binary runs")
}

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const SHORT: &str = "
[path]
kappa_max = 0.0
s_period = 250.0

[timing]
control_period = 0.05
perception_period = 0.15
duration = 5.0
prediction = false

[init]
eps = 0.1
";

#[test]
fn path_writes_header_and_closes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sub/path.csv");
    let k = 4.0 * std::f64::consts::PI / (4.0 * 250.0);
    let o = lanerep(&["path", "--kappa-max", &k.to_string(), "--s-period", "250", "--corners", "4", "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,x,y,alpha,kappa"));
    assert_eq!(text.lines().count(), 100_002);
    let last: Vec<f64> = text.lines().last().unwrap().split(',').map(|v| v.parse().unwrap()).collect();
    assert!((last[0] - 1000.0).abs() < 1e-9);
    assert!(last[1].hypot(last[2]) < 1e-3);
    assert!((last[3] - 2.0 * std::f64::consts::PI).abs() < 1e-9);
}

#[test]
fn path_rejects_open_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("path.csv");
    let o = lanerep(&["path", "--kappa-max", "0.01", "--s-period", "250", "--corners", "4", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn simulate_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("short.toml");
    fs::write(&cfg, SHORT).unwrap();
    let out = dir.path().join("run");
    let o = lanerep(&["simulate", "--config", s(&cfg), "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["telemetry.csv", "metrics.toml", "track.svg", "deviation.svg", "phihat0.svg"] {
        assert!(out.join(f).is_file(), "{f}");
    }
    let header = fs::read_to_string(out.join("telemetry.csv")).unwrap();
    assert!(header.starts_with("t,s_omega,eps_omega,theta_omega,gamma_des,x_q,y_q,psi,"));
    assert_eq!(header.lines().count(), 102);
}

#[test]
fn env_var_overrides_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("short.toml");
    fs::write(&cfg, SHORT).unwrap();
    let env_out = dir.path().join("from_env");
    let o = Command::new(env!("CARGO_BIN_EXE_lanerep"))
        .args(["simulate", "--config", s(&cfg), "--out", s(&dir.path().join("flag")), "--no-plots"])
        .env("LANEREP_OUT_DIR", &env_out)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(env_out.join("telemetry.csv").is_file());
    assert!(!dir.path().join("flag").exists());
}

#[test]
fn divergence_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("weak.toml");
    fs::write(
        &cfg,
        "[vehicle]\nsteering_limit_deg = 0.5\n\n[path]\nkappa_max_over_pi = 0.004\ns_period = 250.0\ncorners = 4\n\n\
         [timing]\nduration = 60.0\n",
    )
    .unwrap();
    let out = dir.path().join("run");
    let o = lanerep(&["simulate", "--config", s(&cfg), "--out", s(&out), "--no-plots"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let metrics = fs::read_to_string(out.join("metrics.toml")).unwrap();
    assert!(metrics.contains("completed = false"));
    assert!(metrics.contains("abort_reason"));
}

#[test]
fn bad_config_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    fs::write(&cfg, "[timing]\ncontrol_period = 0.05\nperception_period = 0.12\n").unwrap();
    let o = lanerep(&["simulate", "--config", s(&cfg), "--out", s(dir.path())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compare_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp.csv");
    let cfgs = [config("predict_50ms.toml"), config("predict_20ms.toml")];
    let o = lanerep(&["compare", "--configs", s(&cfgs[0]), s(&cfgs[1]), "--out", s(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "control_period,perception_period,prediction,completed,steady_offset,max_abs_eps,drift_onset");
    assert!(lines[1].starts_with("0.05,") && lines[2].starts_with("0.02,"));

    let cfg = dir.path().join("short.toml");
    fs::write(&cfg, SHORT).unwrap();
    let run = dir.path().join("run");
    assert!(lanerep(&["simulate", "--config", s(&cfg), "--out", s(&run), "--no-plots"]).status.success());
    let plots = dir.path().join("plots");
    let o = lanerep(&["plot", "--in", s(&run.join("telemetry.csv")), "--out", s(&plots)]);
    assert!(o.status.success());
    let svg = fs::read_to_string(plots.join("track.svg")).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
}

#[test]
fn compare_needs_two_configs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp.csv");
    let o = lanerep(&["compare", "--configs", s(&config("predict_50ms.toml")), "--out", s(&out)]);
    assert!(!o.status.success());
}
