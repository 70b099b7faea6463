// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::{Error, Result};

/// Curvature as an analytic function of arc length.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CurvatureProfile {
    /// Straight line.
    Zero,
    /// Circle of curvature κ.
    Constant(f64),
    /// `κ(s) = (κ_max/2)(1 − cos(2πs/s_T))`.
    Cosine { kappa_max: f64, s_period: f64 },
}

/// Cosine profile with peak `kappa_max` every `s_period` metres.
pub fn cosine_profile(kappa_max: f64, s_period: f64) -> Result<CurvatureProfile> {
    if !(s_period > 0.0) || !s_period.is_finite() || !kappa_max.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "cosine profile needs finite κ_max and s_T > 0, got κ_max = {kappa_max}, s_T = {s_period}"
        )));
    }
    Ok(CurvatureProfile::Cosine { kappa_max, s_period })
}

/// True iff the cosine path with these parameters closes with `corners`
/// corners, `κ_max·s_T = 4π/corners`.
pub fn closure_check(kappa_max: f64, s_period: f64, corners: u32) -> Result<bool> {
    if corners < 2 {
        return Err(Error::InvalidArgument(format!("closed path needs at least 2 corners, got {corners}")));
    }
    Ok((kappa_max * s_period - 4.0 * PI / corners as f64).abs() < 1e-9)
}

impl CurvatureProfile {
    pub fn kappa(&self, s: f64) -> f64 {
        self.derivatives(s)[0]
    }

    pub fn dkappa(&self, s: f64) -> f64 {
        self.derivatives(s)[1]
    }

    pub fn d2kappa(&self, s: f64) -> f64 {
        self.derivatives(s)[2]
    }

    pub fn d3kappa(&self, s: f64) -> f64 {
        self.derivatives(s)[3]
    }

    /// `[κ, κ′, κ″, κ‴]` at `s`.
    pub fn derivatives(&self, s: f64) -> [f64; 4] {
        match *self {
            CurvatureProfile::Zero => [0.0; 4],
            CurvatureProfile::Constant(k) => [k, 0.0, 0.0, 0.0],
            CurvatureProfile::Cosine { kappa_max, s_period } => {
                let w = TAU / s_period;
                let a = 0.5 * kappa_max;
                let (sn, cs) = (w * s).sin_cos();
                [a * (1.0 - cs), a * w * sn, a * w * w * cs, -a * w * w * w * sn]
            }
        }
    }

    /// Number of corners when the cosine profile closes on itself.
    pub fn corners(&self) -> Option<u32> {
        match *self {
            CurvatureProfile::Cosine { kappa_max, s_period } if kappa_max != 0.0 => {
                let n = (4.0 * PI / (kappa_max * s_period)).round();
                if n >= 2.0 && n < u32::MAX as f64 && closure_check(kappa_max, s_period, n as u32).unwrap_or(false) {
                    Some(n as u32)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Perimeter `N·s_T` of a closed cosine path.
    pub fn closed_perimeter(&self) -> Option<f64> {
        match *self {
            CurvatureProfile::Cosine { s_period, .. } => self.corners().map(|n| n as f64 * s_period),
            _ => None,
        }
    }
}

impl fmt::Display for CurvatureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvatureProfile::Zero => write!(f, "zero"),
            CurvatureProfile::Constant(k) => write!(f, "constant(kappa={k})"),
            CurvatureProfile::Cosine { kappa_max, s_period } => {
                write!(f, "cosine(kappa_max={kappa_max}, s_period={s_period})")
            }
        }
    }
}
