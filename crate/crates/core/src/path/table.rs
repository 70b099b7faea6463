// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use super::CurvatureProfile;
use crate::ode::rk4_step;
use crate::{Error, Result};

/// Default integration step along the path (m).
pub const DEFAULT_STEP: f64 = 0.01;

/// Position and slope angle at arc length `s`. `alpha` is continuous along the
/// path (not wrapped to (−π, π]).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathState {
    pub s: f64,
    pub x: f64,
    pub y: f64,
    pub alpha: f64,
}

impl PathState {
    pub fn new(s: f64, x: f64, y: f64, alpha: f64) -> Self {
        PathState { s, x, y, alpha }
    }

    pub fn origin() -> Self {
        PathState::new(0.0, 0.0, 0.0, 0.0)
    }
}

/// One tabulated record.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathSample {
    pub state: PathState,
    pub kappa: f64,
}

/// Uniformly sampled solution of the path equations.
///
/// Samples are spaced exactly `h` apart except possibly the last interval,
/// which ends at the requested `s_end`.
#[derive(Clone, Debug)]
pub struct PathTable {
    samples: Vec<PathSample>,
    step: f64,
    profile: CurvatureProfile,
    period: Option<f64>,
}

/// RK4 integration of `x′ = cos α, y′ = sin α, α′ = κ(s)` from `init` to
/// `s_end` with step `h`.
///
/// When the profile describes a closed path and the table covers at least
/// one perimeter, lookups wrap around modulo the perimeter.
pub fn integrate_path(profile: &CurvatureProfile, init: PathState, s_end: f64, h: f64) -> Result<PathTable> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidArgument(format!("path step must be positive, got {h}")));
    }
    if !(s_end > init.s) || !s_end.is_finite() {
        return Err(Error::InvalidArgument(format!("path end {s_end} must exceed the initial arc length {}", init.s)));
    }
    let span = s_end - init.s;
    let full = (span / h).floor() as usize;
    let mut samples = Vec::with_capacity(full + 2);
    let mut rhs = |s: f64, y: &[f64; 3]| {
        let (sn, cs) = y[2].sin_cos();
        [cs, sn, profile.kappa(s)]
    };
    let mut y = [init.x, init.y, init.alpha];
    let sample =
        |s: f64, y: &[f64; 3]| PathSample { state: PathState::new(s, y[0], y[1], y[2]), kappa: profile.kappa(s) };
    samples.push(sample(init.s, &y));
    for i in 0..full {
        let s = init.s + i as f64 * h;
        y = rk4_step(&mut rhs, s, &y, h);
        samples.push(sample(init.s + (i + 1) as f64 * h, &y));
    }
    let last_s = init.s + full as f64 * h;
    let rest = s_end - last_s;
    if rest > 1e-9 * h {
        y = rk4_step(&mut rhs, last_s, &y, rest);
        samples.push(sample(s_end, &y));
    }
    let period = profile.closed_perimeter().filter(|p| span >= p - 1e-9);
    Ok(PathTable { samples, step: h, profile: *profile, period })
}

impl PathTable {
    pub fn samples(&self) -> &[PathSample] {
        &self.samples
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn profile(&self) -> &CurvatureProfile {
        &self.profile
    }

    /// Perimeter used for wrap-around lookups, if the path is closed.
    pub fn period(&self) -> Option<f64> {
        self.period
    }

    pub fn start(&self) -> f64 {
        self.samples[0].state.s
    }

    pub fn end(&self) -> f64 {
        self.samples[self.samples.len() - 1].state.s
    }

    pub fn last(&self) -> &PathState {
        &self.samples[self.samples.len() - 1].state
    }

    /// Cubic Hermite interpolation of the tabulated state at `s`.
    ///
    /// Position uses the exact tangents `(cos α, sin α)` at the nodes and α
    /// uses `κ`, so the interpolant is fourth-order accurate. The returned `s`
    /// is the queried one, also for wrapped lookups on closed paths.
    pub fn state_at(&self, s: f64) -> Result<PathState> {
        let (start, end) = (self.start(), self.end());
        let local = match self.period {
            Some(p) if s < start || s > end => start + (s - start).rem_euclid(p),
            _ => s,
        };
        if !(start..=end).contains(&local) {
            return Err(Error::OutOfRange { s, start, end });
        }
        let last = self.samples.len() - 1;
        let mut i = (((local - start) / self.step).floor() as usize).min(last.saturating_sub(1));
        while i > 0 && local < self.samples[i].state.s {
            i -= 1;
        }
        while i + 1 < last && local >= self.samples[i + 1].state.s {
            i += 1;
        }
        let (a, b) = (&self.samples[i], &self.samples[i + 1]);
        if local == a.state.s {
            return Ok(PathState { s, ..a.state });
        }
        if local == b.state.s {
            return Ok(PathState { s, ..b.state });
        }
        let h = b.state.s - a.state.s;
        let u = (local - a.state.s) / h;
        let (u2, u3) = (u * u, u * u * u);
        let h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
        let h10 = u3 - 2.0 * u2 + u;
        let h01 = -2.0 * u3 + 3.0 * u2;
        let h11 = u3 - u2;
        let herm = |p0: f64, m0: f64, p1: f64, m1: f64| h00 * p0 + h10 * h * m0 + h01 * p1 + h11 * h * m1;
        let (sa, ca) = a.state.alpha.sin_cos();
        let (sb, cb) = b.state.alpha.sin_cos();
        Ok(PathState {
            s,
            x: herm(a.state.x, ca, b.state.x, cb),
            y: herm(a.state.y, sa, b.state.y, sb),
            alpha: herm(a.state.alpha, a.kappa, b.state.alpha, b.kappa),
        })
    }
}
