// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::{Path, PathBuf};

use crate::curve::NCOEFFS;
use crate::sim::{CoeffSource, CoefficientRow, ComparisonRow, RunMetrics, ScenarioRun, TelemetryRow};
use crate::{Error, Result};

pub const TELEMETRY_FILE: &str = "telemetry.csv";
pub const COEFFICIENTS_FILE: &str = "coefficients.csv";
pub const METRICS_FILE: &str = "metrics.toml";

fn create(path: &Path) -> Result<csv::Writer<std::fs::File>> {
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    Ok(csv::Writer::from_writer(file))
}

fn finish<W: std::io::Write>(mut w: csv::Writer<W>, path: &Path) -> Result<()> {
    w.flush().map_err(|e| Error::io(path, e))
}

fn write_serialized<T: serde::Serialize>(rows: &[T], path: &Path) -> Result<()> {
    let mut w = create(path)?;
    for r in rows {
        w.serialize(r)?;
    }
    finish(w, path)
}

pub fn write_telemetry(rows: &[TelemetryRow], path: impl AsRef<Path>) -> Result<()> {
    write_serialized(rows, path.as_ref())
}

pub fn read_telemetry(path: impl AsRef<Path>) -> Result<Vec<TelemetryRow>> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let rows = csv::Reader::from_reader(file).deserialize().collect::<csv::Result<Vec<TelemetryRow>>>()?;
    Ok(rows)
}

/// Header `t,src,phibar0..phibar5,phihat0..phihat5`.
pub fn coefficient_header() -> Vec<String> {
    let mut h = vec!["t".to_string(), "src".to_string()];
    h.extend((0..NCOEFFS).map(|n| format!("phibar{n}")));
    h.extend((0..NCOEFFS).map(|n| format!("phihat{n}")));
    h
}

pub fn write_coefficients(rows: &[CoefficientRow], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut w = create(path)?;
    w.write_record(coefficient_header())?;
    let num = |v: f64| format!("{v:?}");
    for r in rows {
        let src = match r.src {
            CoeffSource::Measure => "measure",
            CoeffSource::Predict => "predict",
            CoeffSource::Truth => "truth",
        };
        let mut rec = vec![num(r.t), src.to_string()];
        rec.extend(r.phibar.iter().chain(&r.phihat).map(|v| num(*v)));
        w.write_record(rec)?;
    }
    finish(w, path)
}

pub fn write_comparison(rows: &[ComparisonRow], path: impl AsRef<Path>) -> Result<()> {
    write_serialized(rows, path.as_ref())
}

pub fn write_metrics(metrics: &RunMetrics, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = toml::to_string(metrics).map_err(|e| Error::Config(e.to_string()))?;
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Writes telemetry, metrics and optionally the coefficient dump into `dir`,
/// creating it if needed. Returns the files written.
pub fn write_run(run: &ScenarioRun, dir: impl AsRef<Path>, coefficients: bool) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut out = vec![dir.join(TELEMETRY_FILE), dir.join(METRICS_FILE)];
    write_telemetry(&run.rows, &out[0])?;
    write_metrics(&run.metrics, &out[1])?;
    if coefficients {
        let p = dir.join(COEFFICIENTS_FILE);
        write_coefficients(&run.coefficients, &p)?;
        out.push(p);
    }
    Ok(out)
}
