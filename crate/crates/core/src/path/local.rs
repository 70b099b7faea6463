// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use super::{CurvatureProfile, PathState};
use crate::curve::{FunctionRepr, ParametricRepr, MAX_ORDER};
use crate::{Error, Result};

/// Fifth-order arc-length expansion of the path about `state`, from the
/// slope angle and `κ, κ′, κ″, κ‴` there.
pub fn param_repr_at(profile: &CurvatureProfile, state: &PathState) -> ParametricRepr {
    let [k, k1, k2, k3] = profile.derivatives(state.s);
    let (sa, ca) = state.alpha.sin_cos();
    let c4 = k2 - k * k * k;
    let c5a = k * k * k * k - 3.0 * k1 * k1 - 4.0 * k * k2;
    let c5b = 6.0 * k * k * k1 - k3;
    let xb = [
        state.x,
        ca,
        -0.5 * k * sa,
        -(k * k * ca + k1 * sa) / 6.0,
        -c4 * sa / 24.0 - k * k1 * ca / 8.0,
        (c5a * ca + c5b * sa) / 120.0,
    ];
    let yh = [
        state.y,
        sa,
        0.5 * k * ca,
        (-k * k * sa + k1 * ca) / 6.0,
        c4 * ca / 24.0 - k * k1 * sa / 8.0,
        (c5a * sa - c5b * ca) / 120.0,
    ];
    ParametricRepr::from_rows(MAX_ORDER, xb, yh, state.s, true).expect("finite path state")
}

/// Fifth-order graph expansion `y(x)` of the path about `x₀ = state.x`.
pub fn func_repr_at(profile: &CurvatureProfile, state: &PathState) -> Result<FunctionRepr> {
    let derivs = profile.derivatives(state.s);
    let row = graph_coeffs(state.y, state.alpha, derivs)?;
    FunctionRepr::from_row(MAX_ORDER, row, state.x)
}

/// Graph coefficients of a curve through height `y0` with slope angle `alpha`
/// and curvature derivatives `[κ, κ′, κ″, κ‴]`.
pub(crate) fn graph_coeffs(y0: f64, alpha: f64, [k, k1, k2, k3]: [f64; 4]) -> Result<[f64; 6]> {
    let c = alpha.cos();
    if c.abs() < 1e-6 {
        return Err(Error::VerticalTangent(c.abs()));
    }
    let t = alpha.tan();
    let c3 = c * c * c;
    let c4 = c3 * c;
    let c5 = c4 * c;
    let c6 = c5 * c;
    let c7 = c6 * c;
    let c8 = c7 * c;
    let k_2 = k * k;
    let k_3 = k_2 * k;
    Ok([
        y0,
        t,
        k / (2.0 * c3),
        (k1 + 3.0 * k_2 * t) / (6.0 * c4),
        5.0 * k_3 / (8.0 * c7) + (k2 - 12.0 * k_3 + 10.0 * k * k1 * t) / (24.0 * c5),
        7.0 * k_2 * (k1 + k_2 * t) / (8.0 * c8)
            + (k3 - 86.0 * k_2 * k1) / (120.0 * c6)
            + (3.0 * k * k2 + 2.0 * k1 * k1 - 12.0 * k_2 * k_2) * t / (24.0 * c6),
    ])
}
