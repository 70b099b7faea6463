// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Closed-loop scenarios: configuration, the simulation loop, CSV telemetry
//! and SVG plots.

mod config;
pub mod plot;
mod run;
mod telemetry;

pub use config::{NoiseSpec, PathSpec, ScenarioConfig};
pub use plot::emit_plots;
pub use run::{
    compare_scenarios, run_scenario, CoeffSource, CoefficientRow, ComparisonRow, RunMetrics, ScenarioRun, TelemetryRow,
    DRIFT_THRESHOLD, MAX_DEVIATION, MAX_TRUTH_STEP, TRANSIENT_END,
};
pub use telemetry::{
    coefficient_header, read_telemetry, write_coefficients, write_comparison, write_metrics, write_run,
    write_telemetry, COEFFICIENTS_FILE, METRICS_FILE, TELEMETRY_FILE,
};
