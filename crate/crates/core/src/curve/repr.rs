// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use super::{CoeffRow, MAX_ORDER, NCOEFFS};
use crate::{Error, Result};

/// Tolerance on the first two orders of `(x′)² + (y′)² = 1` accepted when a
/// representation is marked as arc-length normalised.
pub const NORMALIZATION_TOL: f64 = 1e-9;

/// Polynomial graph `y(x) = Σ φₙ (x − x₀)ⁿ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FunctionRepr {
    order: usize,
    coeffs: CoeffRow,
    x0: f64,
}

impl FunctionRepr {
    /// Builds a representation of order `coeffs.len() − 1`.
    pub fn new(coeffs: &[f64], x0: f64) -> Result<Self> {
        let order = check_order(coeffs.len())?;
        let mut row = [0.0; NCOEFFS];
        row[..coeffs.len()].copy_from_slice(coeffs);
        Self::from_row(order, row, x0)
    }

    pub(crate) fn from_row(order: usize, coeffs: CoeffRow, x0: f64) -> Result<Self> {
        if !coeffs.iter().all(|c| c.is_finite()) || !x0.is_finite() {
            return Err(Error::InvalidArgument(format!("non-finite function coefficients {coeffs:?} about x0 = {x0}")));
        }
        Ok(FunctionRepr { order, coeffs, x0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient row, zero above [`order`](Self::order).
    pub fn coeffs(&self) -> &CoeffRow {
        &self.coeffs
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn eval(&self, x: f64) -> f64 {
        horner(&self.coeffs[..=self.order], x - self.x0)
    }

    /// Slope dy/dx at `x`.
    pub fn slope(&self, x: f64) -> f64 {
        let u = x - self.x0;
        let mut acc = 0.0;
        for n in (1..=self.order).rev() {
            acc = acc * u + n as f64 * self.coeffs[n];
        }
        acc
    }
}

/// Arc-length parametric curve `(x(s), y(s))` about `s₀`.
///
/// Coefficients are stored as the two rows of the 2×(N+1) matrix φ:
/// `xcoeffs` = (φ̄₀ … φ̄_N), `ycoeffs` = (φ̂₀ … φ̂_N).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParametricRepr {
    order: usize,
    xcoeffs: CoeffRow,
    ycoeffs: CoeffRow,
    s0: f64,
    arclength_normalized: bool,
}

impl ParametricRepr {
    /// Builds an unnormalised representation; both rows must have the same
    /// length `N + 1` with `1 ≤ N ≤ 5`.
    pub fn new(xcoeffs: &[f64], ycoeffs: &[f64], s0: f64) -> Result<Self> {
        if xcoeffs.len() != ycoeffs.len() {
            return Err(Error::InvalidArgument(format!(
                "coefficient rows differ in length ({} vs {})",
                xcoeffs.len(),
                ycoeffs.len()
            )));
        }
        let order = check_order(xcoeffs.len())?;
        let mut xr = [0.0; NCOEFFS];
        let mut yr = [0.0; NCOEFFS];
        xr[..xcoeffs.len()].copy_from_slice(xcoeffs);
        yr[..ycoeffs.len()].copy_from_slice(ycoeffs);
        Self::from_rows(order, xr, yr, s0, false)
    }

    pub(crate) fn from_rows(
        order: usize,
        xcoeffs: CoeffRow,
        ycoeffs: CoeffRow,
        s0: f64,
        arclength_normalized: bool,
    ) -> Result<Self> {
        let finite = xcoeffs.iter().chain(ycoeffs.iter()).all(|c| c.is_finite());
        if !finite || !s0.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "non-finite parametric coefficients {xcoeffs:?} / {ycoeffs:?} about s0 = {s0}"
            )));
        }
        Ok(ParametricRepr { order, xcoeffs, ycoeffs, s0, arclength_normalized })
    }

    /// Marks the representation as arc-length normalised after checking the
    /// order-0 and order-1 terms of `(x′)² + (y′)² − 1`.
    pub fn into_arclength_normalized(mut self) -> Result<Self> {
        let (speed, accel) = self.speed_residuals();
        if speed.abs() > NORMALIZATION_TOL || accel.abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidArgument(format!(
                "not arc-length normalised: |r′|² − 1 = {speed:e}, r′·r″/2 = {accel:e}"
            )));
        }
        self.arclength_normalized = true;
        Ok(self)
    }

    fn speed_residuals(&self) -> (f64, f64) {
        let (b, h) = (&self.xcoeffs, &self.ycoeffs);
        let speed = b[1] * b[1] + h[1] * h[1] - 1.0;
        let accel = if self.order >= 2 { b[1] * b[2] + h[1] * h[2] } else { 0.0 };
        (speed, accel)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// φ̄ row.
    pub fn xcoeffs(&self) -> &CoeffRow {
        &self.xcoeffs
    }

    /// φ̂ row.
    pub fn ycoeffs(&self) -> &CoeffRow {
        &self.ycoeffs
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    pub fn is_arclength_normalized(&self) -> bool {
        self.arclength_normalized
    }

    pub fn position(&self, s: f64) -> [f64; 2] {
        let u = s - self.s0;
        let n = self.order;
        [horner(&self.xcoeffs[..=n], u), horner(&self.ycoeffs[..=n], u)]
    }

    /// Same coefficients with the arc-length label of the expansion point
    /// replaced; the curve is not re-expanded.
    pub fn relabeled(mut self, s0: f64) -> Self {
        self.s0 = s0;
        self
    }

    /// Column-stacked coefficients: (φ̄₀, φ̂₀, φ̄₁, φ̂₁, …, φ̄_N, φ̂_N).
    pub fn vec(&self) -> Vec<f64> {
        (0..=self.order).flat_map(|n| [self.xcoeffs[n], self.ycoeffs[n]]).collect()
    }

    /// Inverse of [`vec`](Self::vec), keeping `s0` and the normalisation flag.
    pub fn with_vec(&self, v: &[f64]) -> Result<Self> {
        if v.len() != 2 * (self.order + 1) {
            return Err(Error::InvalidArgument(format!("vec length {} does not match order {}", v.len(), self.order)));
        }
        let mut xr = [0.0; NCOEFFS];
        let mut yr = [0.0; NCOEFFS];
        for n in 0..=self.order {
            xr[n] = v[2 * n];
            yr[n] = v[2 * n + 1];
        }
        Self::from_rows(self.order, xr, yr, self.s0, self.arclength_normalized)
    }
}

fn check_order(len: usize) -> Result<usize> {
    if !(2..=MAX_ORDER + 1).contains(&len) {
        return Err(Error::InvalidArgument(format!(
            "coefficient row of length {len}; order must be within 1..={MAX_ORDER}"
        )));
    }
    Ok(len - 1)
}

fn horner(coeffs: &[f64], u: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * u + c)
}

/// Value of the k-th derivative of `Σ cₙ uⁿ` at `u`.
fn horner_deriv(coeffs: &[f64], u: f64, k: usize) -> f64 {
    let mut acc = 0.0;
    for n in (k..coeffs.len()).rev() {
        let falling: f64 = ((n - k + 1)..=n).map(|m| m as f64).product();
        acc = acc * u + falling * coeffs[n];
    }
    acc
}

/// `Σ φₙ (x − x₀)ⁿ`.
pub fn eval_function(repr: &FunctionRepr, x: f64) -> f64 {
    repr.eval(x)
}

/// Position and derivatives with respect to arc length at `s`.
///
/// Entry `k` of the result holds `(dᵏx/dsᵏ, dᵏy/dsᵏ)` for `k = 0..=deriv_order`.
pub fn eval_parametric(repr: &ParametricRepr, s: f64, deriv_order: usize) -> Result<Vec<[f64; 2]>> {
    if deriv_order > repr.order {
        return Err(Error::InvalidArgument(format!(
            "derivative order {deriv_order} exceeds representation order {}",
            repr.order
        )));
    }
    let u = s - repr.s0;
    let n = repr.order;
    Ok((0..=deriv_order)
        .map(|k| [horner_deriv(&repr.xcoeffs[..=n], u, k), horner_deriv(&repr.ycoeffs[..=n], u, k)])
        .collect())
}
