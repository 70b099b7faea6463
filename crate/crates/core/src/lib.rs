// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Lane representations for camera-based path following.
//!
//! * [`curve`]: polynomial and arc-length parametric curve representations and
//!   the exact maps between them.
//! * [`path`]: ground-truth paths generated from a curvature profile, plus
//!   their local Taylor representations.
//! * [`vehicle`]: kinematic model at the camera point, relative path-frame
//!   dynamics and the feedforward/feedback steering law.
//! * [`estimator`]: simulated perception, vehicle state changes and the linear
//!   evolution of lane coefficients between camera frames.
//! * [`sim`]: scenario configuration, the closed-loop harness, telemetry and
//!   SVG plots.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
mod error;
pub mod estimator;
pub mod ode;
pub mod path;
pub mod sim;
pub mod vehicle;

pub use error::{Error, Result};
