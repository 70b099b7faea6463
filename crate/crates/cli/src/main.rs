// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! `lanerep` command-line front end.
//!
//! Exit status: 0 when every run completes, 1 when a run diverges, 2 on bad
//! input or I/O failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lanerep::path::{closure_check, cosine_profile, integrate_path, PathState, DEFAULT_STEP};
use lanerep::sim::{
    compare_scenarios, emit_plots, read_telemetry, run_scenario, write_comparison, write_run, ScenarioConfig,
};

/// Overrides the output directory of `simulate` and `plot`.
const OUT_DIR_ENV: &str = "LANEREP_OUT_DIR";

#[derive(Parser)]
#[command(name = "lanerep", version, about = "Vision-based path following with local lane representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario and write telemetry, metrics and plots.
    Simulate {
        #[arg(long)]
        config: PathBuf,
        /// Defaults to `[output] dir` of the config.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the SVG plots.
        #[arg(long)]
        no_plots: bool,
    },
    /// Tabulate the closed cosine-curvature path as CSV.
    Path {
        #[arg(long, allow_hyphen_values = true)]
        kappa_max: f64,
        #[arg(long)]
        s_period: f64,
        #[arg(long)]
        corners: u32,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run scenarios that differ only in control period and tabulate the offsets.
    Compare {
        #[arg(long, num_args = 2.., required = true)]
        configs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render SVG charts from a telemetry CSV.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Diverged(String),
    Input(String),
}

impl From<lanerep::Error> for Failure {
    fn from(e: lanerep::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Diverged(msg)) => {
            eprintln!("lanerep: diverged: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("lanerep: {msg}");
            ExitCode::from(2)
        }
    }
}

fn out_dir(given: Option<PathBuf>) -> Option<PathBuf> {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
        _ => given,
    }
}

fn create_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))
}

fn create_parent(file: &Path) -> Result<(), Failure> {
    match file.parent() {
        Some(p) if !p.as_os_str().is_empty() => create_dir(p),
        _ => Ok(()),
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Simulate { config, out, no_plots } => simulate(&config, out, no_plots),
        Command::Path { kappa_max, s_period, corners, step, out } => path(kappa_max, s_period, corners, step, &out),
        Command::Compare { configs, out } => compare(&configs, &out),
        Command::Plot { input, out } => plot(&input, out),
    }
}

fn simulate(config: &Path, out: Option<PathBuf>, no_plots: bool) -> Result<(), Failure> {
    let cfg = ScenarioConfig::from_file(config)?;
    let dir = out_dir(out.or_else(|| cfg.output_dir.clone()))
        .ok_or_else(|| Failure::Input("no output directory: pass --out or set [output] dir".into()))?;
    create_dir(&dir)?;
    let run = run_scenario(&cfg)?;
    let mut written = write_run(&run, &dir, cfg.write_coefficients)?;
    if !no_plots && !run.rows.is_empty() {
        written.extend(emit_plots(&run.rows, &dir)?);
    }
    for f in &written {
        println!("{}", f.display());
    }
    let m = &run.metrics;
    match &m.abort_reason {
        Some(reason) if !m.completed => Err(Failure::Diverged(reason.clone())),
        _ => {
            eprintln!(
                "completed {:.1} s, {:.0} m, steady offset {} m",
                m.end_time,
                m.distance,
                m.steady_offset.map_or("n/a".into(), |v| format!("{v:.4}"))
            );
            Ok(())
        }
    }
}

fn path(kappa_max: f64, s_period: f64, corners: u32, step: f64, out: &Path) -> Result<(), Failure> {
    if !closure_check(kappa_max, s_period, corners)? {
        return Err(Failure::Input(format!(
            "path does not close: κ_max·s_T = {} but {corners} corners need {}",
            kappa_max * s_period,
            4.0 * std::f64::consts::PI / corners as f64
        )));
    }
    let profile = cosine_profile(kappa_max, s_period)?;
    let table = integrate_path(&profile, PathState::origin(), corners as f64 * s_period, step)?;
    create_parent(out)?;
    let io = |e: std::io::Error| Failure::Input(format!("{}: {e}", out.display()));
    let mut w = std::io::BufWriter::new(fs::File::create(out).map_err(io)?);
    writeln!(w, "s,x,y,alpha,kappa").map_err(io)?;
    for p in table.samples() {
        let st = p.state;
        writeln!(w, "{:?},{:?},{:?},{:?},{:?}", st.s, st.x, st.y, st.alpha, p.kappa).map_err(io)?;
    }
    w.flush().map_err(io)?;
    let end = table.last();
    eprintln!("closure gap {:.3e} m over {} samples", end.x.hypot(end.y), table.samples().len());
    Ok(())
}

fn compare(configs: &[PathBuf], out: &Path) -> Result<(), Failure> {
    let cfgs = configs.iter().map(ScenarioConfig::from_file).collect::<Result<Vec<_>, _>>()?;
    let rows = compare_scenarios(&cfgs)?;
    create_parent(out)?;
    write_comparison(&rows, out)?;
    println!("{}", out.display());
    let failed: Vec<String> =
        rows.iter().filter(|r| !r.completed).map(|r| format!("T = {}", r.control_period)).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Diverged(failed.join(", ")))
    }
}

fn plot(input: &Path, out: PathBuf) -> Result<(), Failure> {
    let rows = read_telemetry(input)?;
    let dir = out_dir(Some(out)).expect("directory given");
    create_dir(&dir)?;
    for f in emit_plots(&rows, &dir)? {
        println!("{}", f.display());
    }
    Ok(())
}
