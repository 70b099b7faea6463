// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Browser bindings for the demo page in `www/`.
//!
//! Three operations: tabulate the closed reference road, show what the camera
//! sees from a chosen pose as a truncated Taylor lane, and run a closed-loop
//! scenario. Point lists come back as flat `[x0, y0, x1, y1, ...]` arrays.

use lanerep::curve::FunctionRepr;
use lanerep::estimator::perceive;
use lanerep::path::{closure_check, cosine_profile, integrate_path, PathState, PathTable, DEFAULT_STEP};
use lanerep::sim::{run_scenario, PathSpec, ScenarioConfig, ScenarioRun};
use lanerep::vehicle::{absolute_from_relative, RelativeState, VehicleParams};
use lanerep::{Error, Result};
use wasm_bindgen::prelude::*;

/// Points drawn per metre of road.
const DRAW_STEP: f64 = 0.5;

fn road(kappa_max: f64, s_period: f64, corners: u32) -> Result<PathTable> {
    if !closure_check(kappa_max, s_period, corners)? {
        return Err(Error::InvalidArgument(format!("{corners} corners need κ_max·s_T = 4π/{corners}")));
    }
    let profile = cosine_profile(kappa_max, s_period)?;
    integrate_path(&profile, PathState::origin(), corners as f64 * s_period, DEFAULT_STEP)
}

fn reference_kappa(s_period: f64, corners: u32) -> f64 {
    4.0 * std::f64::consts::PI / (corners as f64 * s_period)
}

/// Road outline sampled every `DRAW_STEP` metres.
pub fn road_points(s_period: f64, corners: u32) -> Result<Vec<f64>> {
    let table = road(reference_kappa(s_period, corners), s_period, corners)?;
    let every = (DRAW_STEP / table.step()).round().max(1.0) as usize;
    let samples = table.samples();
    let mut out = Vec::with_capacity(2 * samples.len() / every + 4);
    for p in samples.iter().step_by(every).chain(samples.last()) {
        out.extend([p.state.x, p.state.y]);
    }
    Ok(out)
}

/// Camera view from the relative state `(s, ε, θ)` on the road.
#[wasm_bindgen]
#[derive(Clone, Debug)]
pub struct LaneView {
    pose: [f64; 3],
    coeffs: Vec<f64>,
    lane: Vec<f64>,
    truth: Vec<f64>,
    tau_omega: f64,
}

#[wasm_bindgen]
impl LaneView {
    /// `[x_Q, y_Q, ψ]`.
    pub fn pose(&self) -> Vec<f64> {
        self.pose.to_vec()
    }

    /// Body-frame graph coefficients, truncated to the requested order.
    pub fn coeffs(&self) -> Vec<f64> {
        self.coeffs.clone()
    }

    /// Earth-frame points of the truncated graph over the look-ahead.
    pub fn lane(&self) -> Vec<f64> {
        self.lane.clone()
    }

    /// Earth-frame road points over the same stretch.
    pub fn truth(&self) -> Vec<f64> {
        self.truth.clone()
    }

    /// Largest gap between the lane and the road over the look-ahead (m).
    pub fn max_gap(&self) -> f64 {
        self.lane.chunks(2).zip(self.truth.chunks(2)).map(|(a, b)| (a[0] - b[0]).hypot(a[1] - b[1])).fold(0.0, f64::max)
    }

    pub fn tau_omega(&self) -> f64 {
        self.tau_omega
    }
}

/// Perceive the road from `(s, ε, θ)` and draw the lane of the given order
/// `look_ahead` metres ahead of Q.
pub fn lane_view_at(
    s_period: f64,
    corners: u32,
    rel: RelativeState,
    order: usize,
    look_ahead: f64,
) -> Result<LaneView> {
    let table = road(reference_kappa(s_period, corners), s_period, corners)?;
    let params = VehicleParams::reference();
    let frame = perceive(&rel, table.profile(), params.delta, 0.0)?;
    let order = order.min(frame.coeffs.order());
    let coeffs = frame.coeffs.coeffs()[..=order].to_vec();
    let lane_fn = FunctionRepr::new(&coeffs, 0.0)?;
    let pose = absolute_from_relative(&rel, &table, params.delta)?;
    let (sn, cs) = pose.psi.sin_cos();
    let to_earth = |tau: f64, y: f64| [pose.x_q + tau * cs - y * sn, pose.y_q + tau * sn + y * cs];

    let n = (look_ahead / DRAW_STEP).ceil().max(1.0) as usize;
    let mut lane = Vec::with_capacity(2 * (n + 1));
    let mut truth = Vec::with_capacity(2 * (n + 1));
    let mut s = rel.s_omega;
    for i in 0..=n {
        let tau = frame.tau_omega + look_ahead * i as f64 / n as f64;
        lane.extend(to_earth(tau, lane_fn.eval(tau)));
        // Road point with the same body abscissa; Newton along the road.
        for _ in 0..20 {
            let p = table.state_at(s)?;
            let along = (p.x - pose.x_q) * cs + (p.y - pose.y_q) * sn - tau;
            let rate = (p.alpha - pose.psi).cos();
            s -= along / rate;
            if along.abs() < 1e-12 {
                break;
            }
        }
        let p = table.state_at(s)?;
        truth.extend([p.x, p.y]);
    }
    Ok(LaneView { pose: [pose.x_q, pose.y_q, pose.psi], coeffs, lane, truth, tau_omega: frame.tau_omega })
}

/// Closed-loop run summary and traces.
#[wasm_bindgen]
#[derive(Clone, Debug)]
pub struct Drive {
    run: ScenarioRun,
}

#[wasm_bindgen]
impl Drive {
    pub fn completed(&self) -> bool {
        self.run.metrics.completed
    }

    pub fn abort_reason(&self) -> Option<String> {
        self.run.metrics.abort_reason.clone()
    }

    pub fn steady_offset(&self) -> Option<f64> {
        self.run.metrics.steady_offset
    }

    pub fn max_abs_eps(&self) -> Option<f64> {
        self.run.metrics.max_abs_eps
    }

    pub fn time(&self) -> Vec<f64> {
        self.run.rows.iter().map(|r| r.t).collect()
    }

    pub fn eps(&self) -> Vec<f64> {
        self.run.rows.iter().map(|r| r.eps_omega).collect()
    }

    pub fn gamma(&self) -> Vec<f64> {
        self.run.rows.iter().map(|r| r.gamma_des).collect()
    }

    /// Estimated and true φ̂₀ interleaved.
    pub fn phihat0(&self) -> Vec<f64> {
        self.run.rows.iter().flat_map(|r| [r.phihat0_est, r.phihat0_true]).collect()
    }

    /// Earth track of Q.
    pub fn track(&self) -> Vec<f64> {
        self.run.rows.iter().flat_map(|r| [r.x_q, r.y_q]).collect()
    }

    pub fn perception_events(&self) -> Vec<u8> {
        self.run.rows.iter().map(|r| r.perception_event as u8).collect()
    }
}

/// Run the reference scenario with the given timing and initial offset.
pub fn drive_with(
    control_period: f64,
    perception_period: f64,
    prediction: bool,
    duration: f64,
    eps0: f64,
) -> Result<Drive> {
    let cfg = ScenarioConfig {
        path: PathSpec::reference(),
        control_period,
        perception_period,
        prediction_enabled: prediction,
        duration,
        init: RelativeState::new(0.0, eps0, 0.0),
        ..ScenarioConfig::default()
    };
    Ok(Drive { run: run_scenario(&cfg)? })
}

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = roadPoints)]
pub fn road_points_js(s_period: f64, corners: u32) -> Result<Vec<f64>, JsError> {
    road_points(s_period, corners).map_err(js)
}

#[wasm_bindgen(js_name = laneView)]
pub fn lane_view_js(
    s_period: f64,
    corners: u32,
    s: f64,
    eps: f64,
    theta_deg: f64,
    order: usize,
    look_ahead: f64,
) -> Result<LaneView, JsError> {
    lane_view_at(s_period, corners, RelativeState::new(s, eps, theta_deg.to_radians()), order, look_ahead).map_err(js)
}

#[wasm_bindgen]
pub fn drive(
    control_period: f64,
    perception_period: f64,
    prediction: bool,
    duration: f64,
    eps0: f64,
) -> Result<Drive, JsError> {
    drive_with(control_period, perception_period, prediction, duration, eps0).map_err(js)
}
