// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use crate::curve::{func_to_param, ParametricRepr, NCOEFFS};
use crate::estimator::{
    estimate_state_changes, extract_control_inputs, perceive, ControlInputs, LaneEstimator, PerceptionNoise,
};
use crate::path::{integrate_path, CurvatureProfile, PathState, PathTable, DEFAULT_STEP};
use crate::sim::ScenarioConfig;
use crate::vehicle::{absolute_from_relative, advance_relative, controller, RelativeState};
use crate::{Error, Result};

/// Steady-state figures use samples with `t` at or after this time (s).
pub const TRANSIENT_END: f64 = 10.0;

/// Upper bound on the truth integration step (s).
pub const MAX_TRUTH_STEP: f64 = 1e-3;

/// A run is abandoned once `|ε_Ω|` exceeds this (m).
pub const MAX_DEVIATION: f64 = 5.0;

/// Lateral coefficient error treated as noticeable drift (m).
pub const DRIFT_THRESHOLD: f64 = 0.01;

/// One control step.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TelemetryRow {
    pub t: f64,
    pub s_omega: f64,
    pub eps_omega: f64,
    pub theta_omega: f64,
    pub gamma_des: f64,
    pub x_q: f64,
    pub y_q: f64,
    pub psi: f64,
    /// Earth position of Ω, the path point seen by the camera.
    pub x_omega: f64,
    pub y_omega: f64,
    pub phihat0_true: f64,
    pub phihat1_true: f64,
    pub phihat2_true: f64,
    pub phihat0_est: f64,
    pub phihat1_est: f64,
    pub phihat2_est: f64,
    pub perception_event: bool,
}

/// Where a coefficient row came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffSource {
    Measure,
    Predict,
    Truth,
}

/// Full lane coefficients at one step.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientRow {
    pub t: f64,
    pub src: CoeffSource,
    pub phibar: [f64; NCOEFFS],
    pub phihat: [f64; NCOEFFS],
}

impl CoefficientRow {
    fn new(t: f64, src: CoeffSource, phi: &ParametricRepr) -> Self {
        CoefficientRow { t, src, phibar: *phi.xcoeffs(), phihat: *phi.ycoeffs() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunMetrics {
    pub completed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abort_reason: Option<String>,
    /// Time of the last recorded row (s).
    pub end_time: f64,
    /// Arc length covered by Ω (m).
    pub distance: f64,
    /// Max `|ε_Ω|` for `t ≥ TRANSIENT_END`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_abs_eps: Option<f64>,
    /// Mean `|ε_Ω|` for `t ≥ TRANSIENT_END`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steady_offset: Option<f64>,
    /// Max `|estimate − truth|` per coefficient over the run.
    pub max_error_phibar: [f64; NCOEFFS],
    pub max_error_phihat: [f64; NCOEFFS],
    /// Shortest time after a camera frame at which the `φ̂₀` error first
    /// exceeded `DRIFT_THRESHOLD` (s).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub drift_onset: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct ScenarioRun {
    pub rows: Vec<TelemetryRow>,
    /// Truth every step, plus each measurement and prediction.
    pub coefficients: Vec<CoefficientRow>,
    pub metrics: RunMetrics,
}

/// Ground-truth road for pose reconstruction.
fn build_path(cfg: &ScenarioConfig, profile: &CurvatureProfile) -> Result<PathTable> {
    match profile.closed_perimeter() {
        Some(p) => integrate_path(profile, PathState::origin(), p, DEFAULT_STEP),
        None => {
            let s0 = cfg.init.s_omega;
            let reach = 2.0 * cfg.vehicle.v * cfg.duration + 100.0;
            integrate_path(profile, PathState::new(s0, s0, 0.0, 0.0), s0 + reach, DEFAULT_STEP)
        }
    }
}

struct Accumulator {
    steady_sum: f64,
    steady_count: usize,
    max_abs_eps: Option<f64>,
    err_bar: [f64; NCOEFFS],
    err_hat: [f64; NCOEFFS],
    last_event: f64,
    drifted: bool,
    drift_onset: Option<f64>,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            steady_sum: 0.0,
            steady_count: 0,
            max_abs_eps: None,
            err_bar: [0.0; NCOEFFS],
            err_hat: [0.0; NCOEFFS],
            last_event: 0.0,
            drifted: false,
            drift_onset: None,
        }
    }

    fn record(&mut self, t: f64, eps: f64, event: bool, truth: &ParametricRepr, est: &ParametricRepr) {
        if t >= TRANSIENT_END - 1e-9 {
            self.steady_sum += eps.abs();
            self.steady_count += 1;
            self.max_abs_eps = Some(self.max_abs_eps.map_or(eps.abs(), |m| m.max(eps.abs())));
        }
        for n in 0..NCOEFFS {
            self.err_bar[n] = self.err_bar[n].max((est.xcoeffs()[n] - truth.xcoeffs()[n]).abs());
            self.err_hat[n] = self.err_hat[n].max((est.ycoeffs()[n] - truth.ycoeffs()[n]).abs());
        }
        if event {
            self.last_event = t;
            self.drifted = false;
        }
        if !self.drifted && (est.ycoeffs()[0] - truth.ycoeffs()[0]).abs() > DRIFT_THRESHOLD {
            self.drifted = true;
            let age = t - self.last_event;
            self.drift_onset = Some(self.drift_onset.map_or(age, |d| d.min(age)));
        }
    }
}

/// Closed-loop perception, estimation and control on the scenario's road.
///
/// Time advances in whole control steps; the camera fires on every
/// `T_p / T`-th step. Errors inside the loop (including leaving the field of
/// view) end the run with `completed = false` and the telemetry so far.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<ScenarioRun> {
    cfg.validate()?;
    let p = cfg.vehicle;
    let profile = cfg.path.profile()?;
    let table = build_path(cfg, &profile)?;
    let ratio = cfg.perception_ratio()?;
    let steps = cfg.steps();
    let t_ctrl = cfg.control_period;
    let substeps = (t_ctrl / MAX_TRUTH_STEP - 1e-9).ceil().max(1.0) as usize;
    let mut noise = match &cfg.noise {
        Some(n) => Some(PerceptionNoise::new(n.std_dev, n.seed)?),
        None => None,
    };

    let mut rel = cfg.init;
    let mut est = LaneEstimator::new();
    let mut prev: Option<(ControlInputs, f64)> = None;
    let mut rows = Vec::with_capacity(steps + 1);
    let mut coefficients = Vec::with_capacity(2 * (steps + 1));
    let mut acc = Accumulator::new();
    let mut abort: Option<String> = None;

    for k in 0..=steps {
        let t = k as f64 * t_ctrl;
        let mut step = || -> Result<f64> {
            let truth = func_to_param(&perceive(&rel, &profile, p.delta, t)?.coeffs);
            coefficients.push(CoefficientRow::new(t, CoeffSource::Truth, &truth));
            let event = k % ratio == 0;
            if event {
                let mut frame = perceive(&rel, &profile, p.delta, t)?;
                if let Some(n) = noise.as_mut() {
                    frame = n.perturb(&frame)?;
                }
                let lane = est.measure(&frame);
                coefficients.push(CoefficientRow::new(t, CoeffSource::Measure, lane));
            } else if cfg.prediction_enabled {
                let (ci, omega) = prev.expect("a measurement precedes every prediction");
                let ch = estimate_state_changes(p.v, omega, t_ctrl, ci.eps_d, ci.theta_d, &p, None)?;
                let lane = est.predict(&ch)?;
                coefficients.push(CoefficientRow::new(t, CoeffSource::Predict, lane));
            }
            let lane = est.lane().expect("measured on the first step");
            let ci = extract_control_inputs(lane)?;
            let gamma = controller(ci.kappa_d, ci.theta_d, ci.eps_d, &p)?;
            let pose = absolute_from_relative(&rel, &table, p.delta)?;
            let omega_pt = table.state_at(rel.s_omega)?;
            let (th, eh) = (truth.ycoeffs(), lane.ycoeffs());
            rows.push(TelemetryRow {
                t,
                s_omega: rel.s_omega,
                eps_omega: rel.eps_omega,
                theta_omega: rel.theta_omega,
                gamma_des: gamma,
                x_q: pose.x_q,
                y_q: pose.y_q,
                psi: pose.psi,
                x_omega: omega_pt.x,
                y_omega: omega_pt.y,
                phihat0_true: th[0],
                phihat1_true: th[1],
                phihat2_true: th[2],
                phihat0_est: eh[0],
                phihat1_est: eh[1],
                phihat2_est: eh[2],
                perception_event: event,
            });
            acc.record(t, rel.eps_omega, event, &truth, lane);
            prev = Some((ci, p.yaw_rate(gamma)));
            Ok(gamma)
        };
        let gamma = match step() {
            Ok(g) => g,
            Err(e) => {
                abort = Some(format!("t = {t}: {e}"));
                break;
            }
        };
        if k == steps {
            break;
        }
        match advance_relative(&rel, gamma, &profile, &p, t_ctrl, substeps) {
            Ok(next) => rel = next,
            Err(e) => {
                abort = Some(format!("t = {t}: {e}"));
                break;
            }
        }
        if let Some(reason) = divergence(&rel, p.delta) {
            abort = Some(format!("t = {}: {reason}", (k + 1) as f64 * t_ctrl));
            break;
        }
    }

    let last = rows.last();
    let metrics = RunMetrics {
        completed: abort.is_none(),
        abort_reason: abort,
        end_time: last.map_or(0.0, |r| r.t),
        distance: last.map_or(0.0, |r| r.s_omega - cfg.init.s_omega),
        max_abs_eps: acc.max_abs_eps,
        steady_offset: (acc.steady_count > 0).then(|| acc.steady_sum / acc.steady_count as f64),
        max_error_phibar: acc.err_bar,
        max_error_phihat: acc.err_hat,
        drift_onset: acc.drift_onset,
    };
    Ok(ScenarioRun { rows, coefficients, metrics })
}

fn divergence(rel: &RelativeState, delta: f64) -> Option<String> {
    let [s, e, th] = rel.to_array();
    if !(s.is_finite() && e.is_finite() && th.is_finite()) {
        Some("state is not finite".into())
    } else if th.abs() >= delta {
        Some(format!("|θ_Ω| = {} reached the field-of-view half angle", th.abs()))
    } else if e.abs() > MAX_DEVIATION {
        Some(format!("|ε_Ω| = {} exceeds {MAX_DEVIATION} m", e.abs()))
    } else {
        None
    }
}

/// One line of a control-period comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub control_period: f64,
    pub perception_period: f64,
    pub prediction: bool,
    pub completed: bool,
    pub steady_offset: Option<f64>,
    pub max_abs_eps: Option<f64>,
    pub drift_onset: Option<f64>,
}

/// Runs scenarios that differ only in the control period, one thread each,
/// and returns their steady-state figures ordered by decreasing period.
pub fn compare_scenarios(cfgs: &[ScenarioConfig]) -> Result<Vec<ComparisonRow>> {
    if cfgs.len() < 2 {
        return Err(Error::InvalidArgument(format!("comparison needs at least 2 scenarios, got {}", cfgs.len())));
    }
    if let Some(i) = cfgs.iter().position(|c| !cfgs[0].same_except_control_period(c)) {
        return Err(Error::InvalidArgument(format!(
            "scenario {i} differs from scenario 0 in more than the control period"
        )));
    }
    let runs: Vec<Result<ScenarioRun>> = std::thread::scope(|scope| {
        let handles: Vec<_> = cfgs.iter().map(|c| scope.spawn(move || run_scenario(c))).collect();
        handles.into_iter().map(|h| h.join().expect("scenario thread panicked")).collect()
    });
    let mut rows = cfgs
        .iter()
        .zip(runs)
        .map(|(c, r)| {
            let m = r?.metrics;
            Ok(ComparisonRow {
                control_period: c.control_period,
                perception_period: c.perception_period,
                prediction: c.prediction_enabled,
                completed: m.completed,
                steady_offset: m.steady_offset,
                max_abs_eps: m.max_abs_eps,
                drift_onset: m.drift_onset,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| b.control_period.total_cmp(&a.control_period));
    Ok(rows)
}
