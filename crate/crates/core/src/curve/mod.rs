// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Truncated Taylor representations of planar curves.
//!
//! Two forms are supported, both of fixed order `N ≤ 5`:
//!
//! * [`FunctionRepr`]: `y(x) = Σ φₙ (x − x₀)ⁿ`, a polynomial graph about an
//!   expansion abscissa.
//! * [`ParametricRepr`]: `x(s) = Σ φ̄ₙ (s − s₀)ⁿ`, `y(s) = Σ φ̂ₙ (s − s₀)ⁿ`,
//!   expanded in arc length.
//!
//! The parametric form keeps its shape under a shift of the expansion point
//! ([`shift_parametric`]) and under rigid motions of the frame
//! ([`transform_parametric`]); both maps are linear in the coefficients.
//! [`func_to_param`] and [`param_to_func`] convert between the two forms about
//! the y-intercept.

mod convert;
mod motion;
mod preview;
mod repr;
mod shift;
mod text;

pub use convert::{func_to_param, param_to_func, param_to_func_with_threshold, VERTICAL_TANGENT_THRESHOLD};
pub use motion::{transform_parametric, RigidMotion2D};
pub use preview::{extract_preview, Preview};
pub use repr::{eval_function, eval_parametric, FunctionRepr, ParametricRepr};
pub use shift::{shift_function, shift_matrix, shift_parametric, ShiftMatrix};

/// Highest supported expansion order.
pub const MAX_ORDER: usize = 5;

/// Storage length of a coefficient row.
pub const NCOEFFS: usize = MAX_ORDER + 1;

/// A dense coefficient row, zero-padded above the representation's order.
pub type CoeffRow = [f64; NCOEFFS];
