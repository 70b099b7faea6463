// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Ground-truth paths defined by a curvature profile κ(s).
//!
//! A path is the solution of `x′ = cos α`, `y′ = sin α`, `α′ = κ(s)`; it is
//! tabulated once with RK4 and then interpolated. Local Taylor representations
//! about any point follow in closed form from κ and its first three
//! derivatives.

pub(crate) mod local;
mod profile;
mod table;

pub use local::{func_repr_at, param_repr_at};
pub use profile::{closure_check, cosine_profile, CurvatureProfile};
pub use table::{integrate_path, PathSample, PathState, PathTable, DEFAULT_STEP};
