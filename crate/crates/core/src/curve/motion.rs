// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use super::{ParametricRepr, NCOEFFS};

/// Planar rigid motion `r = R(ψ)·r̂ + d` taking coordinates in a target frame
/// to the source frame; `d` is the target origin seen from the source.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RigidMotion2D {
    pub psi: f64,
    pub d: [f64; 2],
}

impl RigidMotion2D {
    pub fn new(psi: f64, d: [f64; 2]) -> Self {
        RigidMotion2D { psi, d }
    }

    pub fn identity() -> Self {
        RigidMotion2D { psi: 0.0, d: [0.0, 0.0] }
    }

    /// `[[cos ψ, −sin ψ], [sin ψ, cos ψ]]`.
    pub fn rotation(&self) -> [[f64; 2]; 2] {
        let (s, c) = self.psi.sin_cos();
        [[c, -s], [s, c]]
    }

    /// Target-frame coordinates of a source-frame point: `Rᵀ(r − d)`.
    pub fn to_target(&self, r: [f64; 2]) -> [f64; 2] {
        let (s, c) = self.psi.sin_cos();
        let (dx, dy) = (r[0] - self.d[0], r[1] - self.d[1]);
        [c * dx + s * dy, -s * dx + c * dy]
    }

    /// Source-frame coordinates of a target-frame point: `R·r̂ + d`.
    pub fn to_source(&self, r_hat: [f64; 2]) -> [f64; 2] {
        let (s, c) = self.psi.sin_cos();
        [c * r_hat[0] - s * r_hat[1] + self.d[0], s * r_hat[0] + c * r_hat[1] + self.d[1]]
    }

    /// The motion mapping source coordinates back to target coordinates.
    pub fn inverse(&self) -> Self {
        let (s, c) = self.psi.sin_cos();
        let [dx, dy] = self.d;
        RigidMotion2D { psi: -self.psi, d: [-(c * dx + s * dy), -(-s * dx + c * dy)] }
    }
}

/// Expresses a parametric curve in the target frame of `motion`:
/// `φ̂ = Rᵀ(φ − D)` with `D = [d, 0, …, 0]`. Only the constant column feels
/// the translation; every column is rotated.
pub fn transform_parametric(repr: &ParametricRepr, motion: &RigidMotion2D) -> ParametricRepr {
    let (s, c) = motion.psi.sin_cos();
    let mut xr = [0.0; NCOEFFS];
    let mut yr = [0.0; NCOEFFS];
    for n in 0..=repr.order() {
        let (mut bx, mut hy) = (repr.xcoeffs()[n], repr.ycoeffs()[n]);
        if n == 0 {
            bx -= motion.d[0];
            hy -= motion.d[1];
        }
        xr[n] = c * bx + s * hy;
        yr[n] = -s * bx + c * hy;
    }
    ParametricRepr::from_rows(repr.order(), xr, yr, repr.s0(), repr.is_arclength_normalized())
        .expect("rigid motion of finite coefficients stays finite")
}
