// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use super::{eval_parametric, ParametricRepr};
use crate::{Error, Result};

/// Lane attributes seen from the body frame at a preview arc length.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Preview {
    /// η-deviation `−η(s_p)` (m).
    pub epsilon: f64,
    /// Relative heading `−atan2(η′, τ′)` (rad).
    pub theta: f64,
    /// Curvature (1/m).
    pub kappa: f64,
}

/// Lane deviation, relative heading and curvature at arc length `s_p` of a
/// body-frame lane representation.
///
/// The curvature is `(η″τ′ − η′τ″)/((η′)² + (τ′)²)`. The denominator carries no
/// `3/2` power; on an arc-length parametrised curve the speed is one, and the
/// two forms coincide.
pub fn extract_preview(repr: &ParametricRepr, s_p: f64) -> Result<Preview> {
    let d = eval_parametric(repr, s_p, 2.min(repr.order()))?;
    let eta = d[0][1];
    let [dtau, deta] = d[1];
    let [ddtau, ddeta] = d.get(2).copied().unwrap_or([0.0, 0.0]);
    let speed2 = dtau * dtau + deta * deta;
    if speed2 <= 1e-12 {
        return Err(Error::SingularCurve(speed2));
    }
    Ok(Preview { epsilon: -eta, theta: -deta.atan2(dtau), kappa: (ddeta * dtau - deta * ddtau) / speed2 })
}
