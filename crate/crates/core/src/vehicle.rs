// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Kinematic vehicle at the camera point Q, its dynamics relative to the
//! path as seen through the camera, and the path-following steering law.
//!
//! The relative state uses the closest visible path point Ω, which sits on
//! the edge of the camera's field of view (half-angle δ) when Q is off the
//! path: `ε_Ω` is the signed length of ΩQ (positive with Q left of the path)
//! and `θ_Ω = ψ − α_Ω`.

use std::f64::consts::FRAC_PI_2;

use crate::ode::try_rk4_step;
use crate::path::{CurvatureProfile, PathTable};
use crate::{Error, Result};

/// Geometry, speed and controller gains.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VehicleParams {
    /// Wheelbase (m).
    pub l: f64,
    /// Distance from Q to the rear axle (m).
    pub d: f64,
    /// Camera half field of view (rad).
    pub delta: f64,
    /// Constant longitudinal speed (m/s).
    pub v: f64,
    /// Steering saturation (rad).
    pub gamma_sat: f64,
    /// Heading-error gain, dimensionless.
    pub k1: f64,
    /// Lateral-deviation gain (1/m).
    pub k2: f64,
}

impl VehicleParams {
    /// Passenger-car parameters used for the reference experiments:
    /// l = 2.57 m, d = 2 m, δ = 60°, V = 20 m/s, γ_sat = 30°, k₁ = −l/d,
    /// k₂ = 0.02 1/m.
    pub fn reference() -> Self {
        let l = 2.57;
        let d = 2.0;
        VehicleParams { l, d, delta: 60f64.to_radians(), v: 20.0, gamma_sat: 30f64.to_radians(), k1: -l / d, k2: 0.02 }
    }

    pub fn validate(&self) -> Result<()> {
        let finite =
            [self.l, self.d, self.delta, self.v, self.gamma_sat, self.k1, self.k2].iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidArgument(format!("non-finite vehicle parameter in {self:?}")));
        }
        if !(self.l > 0.0) {
            return Err(Error::InvalidArgument(format!("wheelbase must be positive, got {}", self.l)));
        }
        if !(self.delta > 0.0 && self.delta <= FRAC_PI_2) {
            return Err(Error::InvalidArgument(format!("camera half-angle must lie in (0, π/2], got {}", self.delta)));
        }
        if !(self.gamma_sat > 0.0 && self.gamma_sat < FRAC_PI_2) {
            return Err(Error::InvalidArgument(format!(
                "steering saturation must lie in (0, π/2), got {}",
                self.gamma_sat
            )));
        }
        if !(self.v > 0.0) {
            return Err(Error::InvalidArgument(format!("speed must be positive, got {}", self.v)));
        }
        Ok(())
    }

    /// Yaw rate `(V/l)·tan γ`.
    pub fn yaw_rate(&self, gamma: f64) -> f64 {
        self.v / self.l * gamma.tan()
    }
}

/// Absolute pose of the camera point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Pose2D {
    pub x_q: f64,
    pub y_q: f64,
    pub psi: f64,
}

/// Path-relative state `(s_Ω, ε_Ω, θ_Ω)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelativeState {
    pub s_omega: f64,
    pub eps_omega: f64,
    pub theta_omega: f64,
}

impl RelativeState {
    pub fn new(s_omega: f64, eps_omega: f64, theta_omega: f64) -> Self {
        RelativeState { s_omega, eps_omega, theta_omega }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.s_omega, self.eps_omega, self.theta_omega]
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        RelativeState::new(a[0], a[1], a[2])
    }
}

/// `sign` with `sign(0) = +1`.
fn sign(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// `(ẋ_Q, ẏ_Q, ψ̇)` of the kinematic model at Q for steering angle `gamma`.
pub fn absolute_dynamics(pose: &Pose2D, gamma: f64, params: &VehicleParams) -> [f64; 3] {
    let (sp, cp) = pose.psi.sin_cos();
    let w = params.yaw_rate(gamma);
    [params.v * cp - params.d * w * sp, params.v * sp + params.d * w * cp, w]
}

/// `(ṡ_Ω, ε̇_Ω, θ̇_Ω)` for steering `gamma` and path curvature `kappa_omega`
/// at Ω.
///
/// Ω lies on the field-of-view boundary ray at heading `ψ − sgn(ε)·δ`, the
/// right-hand ray when Q is left of the path. Both sides share one form with
/// `σ = sgn(ε)`:
///
/// ```text
/// ṡ = (V sin δ + σ d ω cos δ + ε ω) / sin(δ − σθ)
/// ε̇ = (V sin θ + d ω cos θ + |ε| ω cos(δ − σθ)) / sin(δ − σθ)
/// θ̇ = ω − κ ṡ
/// ```
pub fn relative_dynamics(
    rel: &RelativeState,
    gamma: f64,
    kappa_omega: f64,
    params: &VehicleParams,
) -> Result<[f64; 3]> {
    dynamics_on_side(rel, sign(rel.eps_omega), gamma, kappa_omega, params)
}

/// Relative dynamics with the observed side fixed to `sgn` (±1).
fn dynamics_on_side(
    rel: &RelativeState,
    sgn: f64,
    gamma: f64,
    kappa_omega: f64,
    params: &VehicleParams,
) -> Result<[f64; 3]> {
    let delta = params.delta;
    let theta = rel.theta_omega;
    let eps = rel.eps_omega;
    let denom = (delta - sgn * theta).sin();
    if !(denom > 1e-9) {
        return Err(Error::ObservationLost(denom));
    }
    let w = params.yaw_rate(gamma);
    let v = params.v;
    let d = params.d;

    let s_dot = (v * delta.sin() + sgn * d * w * delta.cos() + eps * w) / denom;
    let eps_dot = (v * theta.sin() + d * w * theta.cos() + eps.abs() * w * (delta - sgn * theta).cos()) / denom;
    let theta_dot = w - kappa_omega * s_dot;
    Ok([s_dot, eps_dot, theta_dot])
}

/// Side of the path Q moves into from `rel`; on the path it is the side the
/// lateral rate points to.
fn side_ahead(rel: &RelativeState, gamma: f64, kappa: f64, params: &VehicleParams) -> Result<f64> {
    if rel.eps_omega != 0.0 {
        return Ok(sign(rel.eps_omega));
    }
    if dynamics_on_side(rel, 1.0, gamma, kappa, params)?[1] >= 0.0 {
        Ok(1.0)
    } else {
        Ok(-1.0)
    }
}

/// RK4 integration of the relative dynamics over `span` with `substeps`
/// steps and steering held at `gamma`.
///
/// The right-hand side switches form when Q crosses the path; a step that
/// changes the sign of ε is cut at the crossing, located by bisection, and
/// resumed on the new side.
pub fn advance_relative(
    rel: &RelativeState,
    gamma: f64,
    profile: &CurvatureProfile,
    params: &VehicleParams,
    span: f64,
    substeps: usize,
) -> Result<RelativeState> {
    let h = span / substeps as f64;
    let mut y = rel.to_array();
    for _ in 0..substeps {
        let mut left = h;
        while left > 0.0 {
            let side = side_ahead(&RelativeState::from_array(y), gamma, profile.kappa(y[0]), params)?;
            let mut rhs = |_t: f64, z: &[f64; 3]| {
                dynamics_on_side(&RelativeState::from_array(*z), side, gamma, profile.kappa(z[0]), params)
            };
            let full = try_rk4_step(&mut rhs, 0.0, &y, left)?;
            if full[1] * side >= 0.0 {
                y = full;
                break;
            }
            let (mut lo, mut hi) = (0.0, left);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if try_rk4_step(&mut rhs, 0.0, &y, mid)?[1] * side > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            if hi <= 0.0 {
                y[1] = 0.0;
                continue;
            }
            y = try_rk4_step(&mut rhs, 0.0, &y, hi)?;
            y[1] = 0.0;
            left -= hi;
        }
    }
    Ok(RelativeState::from_array(y))
}

/// Pose of Q from the relative state and the path point at `s_Ω`.
pub fn absolute_from_relative(rel: &RelativeState, path: &PathTable, delta: f64) -> Result<Pose2D> {
    let omega = path.state_at(rel.s_omega)?;
    let heading = omega.alpha + rel.theta_omega;
    let ang = heading - sign(rel.eps_omega) * delta;
    let r = rel.eps_omega.abs();
    Ok(Pose2D { x_q: omega.x - r * ang.cos(), y_q: omega.y - r * ang.sin(), psi: heading })
}

/// Smooth saturation `(2/π)·atan((π/2)·x)`, odd with `|g| < 1`.
pub fn wrapper_g(x: f64) -> f64 {
    std::f64::consts::FRAC_2_PI * (FRAC_PI_2 * x).atan()
}

/// Split of a steering command.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Steering {
    pub feedforward: f64,
    pub feedback: f64,
    /// `feedforward + feedback`, clamped to `±γ_sat`.
    pub gamma: f64,
}

/// Feedforward curvature term plus saturated feedback on heading error and
/// lateral deviation at the lane intercept D.
pub fn steering_terms(kappa_d: f64, theta_d: f64, eps_d: f64, params: &VehicleParams) -> Result<Steering> {
    let dk = params.d * kappa_d;
    if !(dk.abs() < 1.0) {
        return Err(Error::InfeasibleCurvature(dk.abs()));
    }
    let feedforward = (params.l * kappa_d / (1.0 - dk * dk).sqrt()).atan();
    let theta0 = -dk.asin();
    let arg = theta_d - theta0 + (params.k2 * eps_d).atan();
    let feedback = params.gamma_sat * wrapper_g(params.k1 / params.gamma_sat * arg);
    let gamma = (feedforward + feedback).clamp(-params.gamma_sat, params.gamma_sat);
    Ok(Steering { feedforward, feedback, gamma })
}

/// Desired steering angle for lane attributes `(κ_D, θ_D, ε_D)`.
pub fn controller(kappa_d: f64, theta_d: f64, eps_d: f64, params: &VehicleParams) -> Result<f64> {
    steering_terms(kappa_d, theta_d, eps_d, params).map(|s| s.gamma)
}

/// Steady path-following point for constant curvature `κ*`: returns
/// `(θ*, ṡ*)` with `ε* = 0`.
pub fn equilibrium(kappa_star: f64, params: &VehicleParams) -> Result<(f64, f64)> {
    let dk = params.d * kappa_star;
    if !(dk.abs() < 1.0) {
        return Err(Error::InfeasibleCurvature(dk.abs()));
    }
    Ok((-dk.asin(), params.v / (1.0 - dk * dk).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{integrate_path, CurvatureProfile, PathState};
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn crossing_the_path_keeps_fourth_order() {
        let p = VehicleParams::reference();
        let profile = CurvatureProfile::Zero;
        let rel = RelativeState::new(0.0, 0.05, -0.02);
        let gamma = -0.01;
        let coarse = advance_relative(&rel, gamma, &profile, &p, 0.2, 4).unwrap();
        let fine = advance_relative(&rel, gamma, &profile, &p, 0.2, 4000).unwrap();
        assert!(fine.eps_omega < 0.0);
        let err = (coarse.to_array().iter().zip(fine.to_array()).map(|(a, b)| (a - b).abs())).fold(0.0, f64::max);
        assert!(err < 1e-7, "{err:e}");
    }

    #[test]
    fn straight_driving() {
        let p = VehicleParams::reference();
        let a = absolute_dynamics(&Pose2D { x_q: 0.0, y_q: 0.0, psi: 0.0 }, 0.0, &p);
        assert_eq!(a, [20.0, 0.0, 0.0]);
        let b = absolute_dynamics(&Pose2D { x_q: 0.0, y_q: 0.0, psi: PI / 2.0 }, 0.0, &p);
        assert!((b[0]).abs() < 1e-14 && (b[1] - 20.0).abs() < 1e-14 && b[2] == 0.0);
    }

    #[test]
    fn on_path_relative_motion() {
        let p = VehicleParams::reference();
        let r = relative_dynamics(&RelativeState::new(0.0, 0.0, 0.0), 0.0, 0.0, &p).unwrap();
        assert!((r[0] - 20.0).abs() < 1e-12 && r[1] == 0.0 && r[2] == 0.0);
    }

    #[test]
    fn losing_the_field_of_view_is_an_error() {
        let p = VehicleParams::reference();
        let r = RelativeState::new(0.0, 0.1, p.delta);
        assert!(matches!(relative_dynamics(&r, 0.0, 0.0, &p), Err(Error::ObservationLost(_))));
    }

    #[test]
    fn controller_reference_values() {
        let p = VehicleParams::reference();
        assert_eq!(controller(0.0, 0.0, 0.0, &p).unwrap(), 0.0);

        let k = 0.004 * PI;
        let (theta_star, _) = equilibrium(k, &p).unwrap();
        let s = steering_terms(k, theta_star, 0.0, &p).unwrap();
        assert_eq!(s.feedback, 0.0);
        assert!((s.gamma - 0.032294545386785896).abs() < 1e-15);

        // γ_sat·g((k₁/γ_sat)·atan(k₂·0.1)) evaluated independently.
        let fb = steering_terms(0.0, 0.0, 0.1, &p).unwrap().feedback;
        assert!((fb - -0.0025699456515824335).abs() < 1e-15);
    }

    #[test]
    fn controller_rejects_infeasible_curvature() {
        let p = VehicleParams::reference();
        assert!(matches!(controller(0.5, 0.0, 0.0, &p), Err(Error::InfeasibleCurvature(_))));
        assert!(equilibrium(-0.5, &p).is_err());
    }

    #[test]
    fn command_is_clamped() {
        let p = VehicleParams::reference();
        let g = controller(0.4, 1.0, -50.0, &p).unwrap();
        assert_eq!(g, p.gamma_sat);
    }

    #[test]
    fn equilibrium_reference_values() {
        let p = VehicleParams::reference();
        assert_eq!(equilibrium(0.0, &p).unwrap(), (0.0, 20.0));
        let (th, sd) = equilibrium(0.004 * PI, &p).unwrap();
        assert!((th - -(2.0 * 0.004 * PI).asin()).abs() < 1e-16);
        assert!((sd - 20.006319540799986).abs() < 1e-12);
    }

    #[test]
    fn wrapper_limits() {
        assert_eq!(wrapper_g(0.0), 0.0);
        let big = wrapper_g(1e6);
        assert!(big > 0.999 && big < 1.0);
    }

    #[test]
    fn pose_from_relative_state() {
        let t = integrate_path(&CurvatureProfile::Zero, PathState::origin(), 50.0, 0.01).unwrap();
        let pose = absolute_from_relative(&RelativeState::new(10.0, 0.0, 0.2), &t, 1.0).unwrap();
        assert!((pose.x_q - 10.0).abs() < 1e-12 && pose.y_q == 0.0 && pose.psi == 0.2);
        let left = absolute_from_relative(&RelativeState::new(10.0, 0.1, 0.0), &t, PI / 2.0).unwrap();
        assert!((left.y_q - 0.1).abs() < 1e-15 && (left.x_q - 10.0).abs() < 1e-12);
    }

    fn sample_rel() -> impl Strategy<Value = (f64, f64, f64)> {
        (0.0f64..1000.0, -2.0f64..2.0, -0.6f64..0.6)
    }

    proptest! {
        #[test]
        fn wrapper_is_odd_and_bounded(x in -1e6f64..1e6) {
            prop_assert_eq!(wrapper_g(-x), -wrapper_g(x));
            prop_assert!(wrapper_g(x).abs() < 1.0);
        }

        #[test]
        fn feedback_is_bounded(k in -0.4f64..0.4, th in -10.0f64..10.0, e in -1e3f64..1e3) {
            let p = VehicleParams::reference();
            let s = steering_terms(k, th, e, &p).unwrap();
            prop_assert!(s.feedback.abs() < p.gamma_sat);
            prop_assert!(s.gamma.abs() <= p.gamma_sat);
        }

        #[test]
        fn speed_of_q(psi in -PI..PI, gamma in -1.2f64..1.2) {
            let p = VehicleParams::reference();
            let a = absolute_dynamics(&Pose2D { x_q: 1.0, y_q: 2.0, psi }, gamma, &p);
            prop_assert!((a[2] - p.v / p.l * gamma.tan()).abs() < 1e-12 * (1.0 + a[2].abs()));
            let speed = (a[0] * a[0] + a[1] * a[1]).sqrt();
            let expected = p.v * (1.0 + (p.d / p.l * gamma.tan()).powi(2)).sqrt();
            prop_assert!((speed - expected).abs() < 1e-12 * expected);
        }

        #[test]
        fn equilibrium_is_a_fixed_point(k in -0.4f64..0.4) {
            let p = VehicleParams::reference();
            let (th, sd) = equilibrium(k, &p).unwrap();
            let gamma = steering_terms(k, th, 0.0, &p).unwrap().feedforward;
            let r = relative_dynamics(&RelativeState::new(0.0, 0.0, th), gamma, k, &p).unwrap();
            prop_assert!(r[1].abs() < 1e-10 && r[2].abs() < 1e-10, "{r:?}");
            prop_assert!((r[0] - sd).abs() < 1e-10 * sd);
        }

        #[test]
        fn pose_satisfies_projection_relations((s, e, th) in sample_rel()) {
            let p = VehicleParams::reference();
            let profile = crate::path::cosine_profile(0.004 * PI, 250.0).unwrap();
            let t = path_table(&profile);
            let rel = RelativeState::new(s, e, th);
            let pose = absolute_from_relative(&rel, t, p.delta).unwrap();
            let om = t.state_at(s).unwrap();
            let (sp, cp) = pose.psi.sin_cos();
            let (dx, dy) = (pose.x_q - om.x, pose.y_q - om.y);
            prop_assert!((dx * cp + dy * sp + e.abs() * p.delta.cos()).abs() < 1e-9);
            prop_assert!((-dx * sp + dy * cp - e * p.delta.sin()).abs() < 1e-9);
            prop_assert!((pose.psi - om.alpha - th).abs() < 1e-12);
        }
    }

    #[test]
    fn delta_independence_on_path() {
        for delta_deg in [30.0f64, 60.0, 90.0] {
            let mut p = VehicleParams::reference();
            p.delta = delta_deg.to_radians();
            let reference = {
                let mut q = p;
                q.delta = 90f64.to_radians();
                relative_dynamics(&RelativeState::new(0.0, 0.0, 0.0), 0.0, 0.01, &q).unwrap()
            };
            let r = relative_dynamics(&RelativeState::new(0.0, 0.0, 0.0), 0.0, 0.01, &p).unwrap();
            assert!((r[0] - reference[0]).abs() < 1e-12, "{delta_deg}: {r:?} vs {reference:?}");
            assert!((r[2] - reference[2]).abs() < 1e-12);
        }
    }

    fn path_table(profile: &CurvatureProfile) -> &'static PathTable {
        use std::sync::OnceLock;
        static TABLE: OnceLock<PathTable> = OnceLock::new();
        TABLE.get_or_init(|| integrate_path(profile, PathState::origin(), 1000.0, 0.01).unwrap())
    }
}
