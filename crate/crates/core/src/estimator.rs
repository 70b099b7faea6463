// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Lane estimation in the body frame.
//!
//! Perception reports the lane as a graph `η(τ)` about the camera point; it is
//! converted once to an arc-length representation about the η-intercept D.
//! Between camera frames that representation is propagated with the vehicle's
//! estimated motion: rotate and translate into the new body frame, then
//! re-expand about the new intercept. The propagation is linear in the
//! coefficients, `vec(φₖ₊₁) = A·vec(φₖ) + B` with `A = T(s̃) ⊗ Rᵀ`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::curve::{
    func_to_param, shift_function, shift_matrix, shift_parametric, transform_parametric, FunctionRepr, ParametricRepr,
    RigidMotion2D, ShiftMatrix, NCOEFFS,
};
use crate::path::CurvatureProfile;
use crate::vehicle::{RelativeState, VehicleParams};
use crate::{Error, Result};

/// One camera measurement of the lane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PerceptionFrame {
    /// Body-frame graph about τ = 0.
    pub coeffs: FunctionRepr,
    /// Capture time (s).
    pub timestamp: f64,
    /// Abscissa of the closest visible path point Ω, `|ε_Ω|·cos δ` (m).
    pub tau_omega: f64,
}

/// Simulated camera output for the vehicle at `rel`.
///
/// The lane is expanded as a graph about Ω, where it has height `−ε_Ω sin δ`
/// and slope angle `−θ_Ω`, then re-expanded about τ = 0.
pub fn perceive(
    rel: &RelativeState,
    profile: &CurvatureProfile,
    delta: f64,
    timestamp: f64,
) -> Result<PerceptionFrame> {
    let theta = rel.theta_omega;
    if !(theta.abs() < std::f64::consts::FRAC_PI_2) || theta.cos().abs() < 1e-6 {
        return Err(Error::PerceptionFailure(theta.abs()));
    }
    let tau_omega = rel.eps_omega.abs() * delta.cos();
    let row = crate::path::local::graph_coeffs(-rel.eps_omega * delta.sin(), -theta, profile.derivatives(rel.s_omega))?;
    let at_omega = FunctionRepr::new(&row, tau_omega)?;
    let coeffs = shift_function(&at_omega, -tau_omega);
    Ok(PerceptionFrame { coeffs, timestamp, tau_omega })
}

/// Additive Gaussian perturbation of perceived graph coefficients.
#[derive(Clone, Debug)]
pub struct PerceptionNoise {
    std_dev: [f64; NCOEFFS],
    rng: ChaCha8Rng,
}

impl PerceptionNoise {
    pub fn new(std_dev: [f64; NCOEFFS], seed: u64) -> Result<Self> {
        if std_dev.iter().any(|s| !(*s >= 0.0) || !s.is_finite()) {
            return Err(Error::InvalidArgument(format!("noise standard deviations must be ≥ 0, got {std_dev:?}")));
        }
        Ok(PerceptionNoise { std_dev, rng: ChaCha8Rng::seed_from_u64(seed) })
    }

    pub fn perturb(&mut self, frame: &PerceptionFrame) -> Result<PerceptionFrame> {
        let mut row = *frame.coeffs.coeffs();
        for (c, sd) in row.iter_mut().zip(self.std_dev) {
            if sd > 0.0 {
                *c += Normal::new(0.0, sd).expect("validated deviation").sample(&mut self.rng);
            }
        }
        Ok(PerceptionFrame { coeffs: FunctionRepr::new(&row[..=frame.coeffs.order()], frame.coeffs.x0())?, ..*frame })
    }
}

/// Vehicle motion over one step.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct StateChanges {
    /// Earth-frame displacement of Q (m); zero unless `earth_populated`.
    pub x_t: f64,
    pub y_t: f64,
    /// Heading change (rad).
    pub psi_t: f64,
    /// Displacement of Q in the body frame at the start of the step (m).
    pub tau_t: f64,
    pub eta_t: f64,
    /// Arc-length advance of the intercept D along the lane (m).
    pub s_t: f64,
    pub earth_populated: bool,
}

/// Euler estimate of the step's motion from measured speed and yaw rate.
///
/// `psi_k` is the heading at the start of the step; when given, the
/// earth-frame displacement is filled in as well.
pub fn estimate_state_changes(
    v_k: f64,
    omega_k: f64,
    t_step: f64,
    eps_d: f64,
    theta_d: f64,
    params: &VehicleParams,
    psi_k: Option<f64>,
) -> Result<StateChanges> {
    if !(t_step > 0.0) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {t_step}")));
    }
    let ct = theta_d.cos();
    if !(ct.abs() >= 1e-9) || !(theta_d.abs() < std::f64::consts::FRAC_PI_2) {
        return Err(Error::DegenerateHeading(ct));
    }
    let tau_t = v_k * t_step;
    let eta_t = params.d * omega_k * t_step;
    let (x_t, y_t) = match psi_k {
        Some(psi) => {
            let (s, c) = psi.sin_cos();
            ((v_k * c - params.d * omega_k * s) * t_step, (v_k * s + params.d * omega_k * c) * t_step)
        }
        None => (0.0, 0.0),
    };
    Ok(StateChanges {
        x_t,
        y_t,
        psi_t: omega_k * t_step,
        tau_t,
        eta_t,
        s_t: (v_k + omega_k * eps_d) * t_step / ct,
        earth_populated: psi_k.is_some(),
    })
}

fn require_origin(phi: &ParametricRepr) -> Result<()> {
    if phi.s0() != 0.0 {
        return Err(Error::InvalidArgument(format!(
            "lane representation must be expanded about s = 0, got s0 = {}",
            phi.s0()
        )));
    }
    Ok(())
}

/// Lane coefficients in the next body frame about the next intercept:
/// `φₖ₊₁ = Rᵀ(φₖ − D)·Tᵀ(s̃)`.
pub fn evolve_coeffs(phi: &ParametricRepr, ch: &StateChanges) -> Result<ParametricRepr> {
    require_origin(phi)?;
    let moved = transform_parametric(phi, &RigidMotion2D::new(ch.psi_t, [ch.tau_t, ch.eta_t]));
    Ok(shift_parametric(&moved, ch.s_t).relabeled(0.0))
}

/// Affine form of [`evolve_coeffs`] on column-stacked coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct EvolutionModel {
    /// `[[cos ψ̃, −sin ψ̃], [sin ψ̃, cos ψ̃]]`.
    pub rotation: [[f64; 2]; 2],
    /// Translation column `d` of `D = [d, 0, …, 0]`.
    pub translation: [f64; 2],
    pub shift: ShiftMatrix,
    /// `T ⊗ Rᵀ`, row-major, dimension `2(N+1)`.
    pub a: Vec<f64>,
    /// `−(T ⊗ Rᵀ)·vec(D)`.
    pub b: Vec<f64>,
}

impl EvolutionModel {
    pub fn dim(&self) -> usize {
        self.b.len()
    }

    /// `A·v + B`.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        assert_eq!(v.len(), n, "state vector length does not match the model");
        (0..n).map(|i| self.b[i] + (0..n).map(|j| self.a[i * n + j] * v[j]).sum::<f64>()).collect()
    }
}

pub fn linearize(ch: &StateChanges, order: usize) -> Result<EvolutionModel> {
    if order < 1 {
        return Err(Error::InvalidArgument("evolution model needs order ≥ 1".into()));
    }
    let rotation = RigidMotion2D::new(ch.psi_t, [0.0, 0.0]).rotation();
    let rt = [[rotation[0][0], rotation[1][0]], [rotation[0][1], rotation[1][1]]];
    let shift = shift_matrix(ch.s_t, order);
    let dim = 2 * (order + 1);
    let mut a = vec![0.0; dim * dim];
    for i in 0..=order {
        for j in i..=order {
            let t = shift.get(i, j);
            for p in 0..2 {
                for q in 0..2 {
                    a[(2 * i + p) * dim + 2 * j + q] = t * rt[p][q];
                }
            }
        }
    }
    let translation = [ch.tau_t, ch.eta_t];
    // vec(D) is non-zero only in its first two entries.
    let b = (0..dim).map(|r| -(a[r * dim] * translation[0] + a[r * dim + 1] * translation[1])).collect();
    Ok(EvolutionModel { rotation, translation, shift, a, b })
}

/// Controller inputs at the lane intercept D.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ControlInputs {
    pub eps_d: f64,
    pub theta_d: f64,
    pub kappa_d: f64,
}

pub fn extract_control_inputs(phi: &ParametricRepr) -> Result<ControlInputs> {
    require_origin(phi)?;
    let (b, h) = (phi.xcoeffs(), phi.ycoeffs());
    let speed2 = h[1] * h[1] + b[1] * b[1];
    if speed2 < 1e-12 {
        return Err(Error::SingularCurve(speed2));
    }
    Ok(ControlInputs {
        eps_d: -h[0],
        theta_d: -h[1].atan2(b[1]),
        kappa_d: (2.0 * h[2] * b[1] - 2.0 * h[1] * b[2]) / speed2,
    })
}

/// Body-frame lane state held between camera frames.
///
/// A camera frame replaces the state outright; [`predict`](Self::predict)
/// propagates it one step. Fusing the two (a Kalman measurement update) would
/// slot into [`measure`](Self::measure).
#[derive(Clone, Debug, Default)]
pub struct LaneEstimator {
    lane: Option<ParametricRepr>,
    since_measurement: usize,
}

impl LaneEstimator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn measure(&mut self, frame: &PerceptionFrame) -> &ParametricRepr {
        self.since_measurement = 0;
        self.lane.insert(func_to_param(&frame.coeffs))
    }

    pub fn predict(&mut self, ch: &StateChanges) -> Result<&ParametricRepr> {
        let lane = self
            .lane
            .as_mut()
            .ok_or_else(|| Error::InvalidArgument("prediction before the first measurement".into()))?;
        *lane = evolve_coeffs(lane, ch)?;
        self.since_measurement += 1;
        Ok(lane)
    }

    pub fn lane(&self) -> Option<&ParametricRepr> {
        self.lane.as_ref()
    }

    /// Prediction steps applied since the last measurement.
    pub fn steps_since_measurement(&self) -> usize {
        self.since_measurement
    }
}
