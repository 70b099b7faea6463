// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Classical fixed-step fourth-order Runge–Kutta for small dense systems.

/// One RK4 step of `ẏ = f(t, y)` from `(t, y)` with step `h`.
pub fn rk4_step<const N: usize, F>(f: &mut F, t: f64, y: &[f64; N], h: f64) -> [f64; N]
where
    F: FnMut(f64, &[f64; N]) -> [f64; N],
{
    let axpy = |a: &[f64; N], k: &[f64; N], s: f64| -> [f64; N] { std::array::from_fn(|i| a[i] + s * k[i]) };
    let k1 = f(t, y);
    let k2 = f(t + 0.5 * h, &axpy(y, &k1, 0.5 * h));
    let k3 = f(t + 0.5 * h, &axpy(y, &k2, 0.5 * h));
    let k4 = f(t + h, &axpy(y, &k3, h));
    std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Fallible variant: the first error from `f` aborts the step.
pub fn try_rk4_step<const N: usize, E, F>(f: &mut F, t: f64, y: &[f64; N], h: f64) -> Result<[f64; N], E>
where
    F: FnMut(f64, &[f64; N]) -> Result<[f64; N], E>,
{
    let axpy = |a: &[f64; N], k: &[f64; N], s: f64| -> [f64; N] { std::array::from_fn(|i| a[i] + s * k[i]) };
    let k1 = f(t, y)?;
    let k2 = f(t + 0.5 * h, &axpy(y, &k1, 0.5 * h))?;
    let k3 = f(t + 0.5 * h, &axpy(y, &k2, 0.5 * h))?;
    let k4 = f(t + h, &axpy(y, &k3, h))?;
    Ok(std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])))
}

/// Integrates over `[t0, t0 + span]` with `n` equal steps.
pub fn try_rk4_span<const N: usize, E, F>(f: &mut F, t0: f64, y0: &[f64; N], span: f64, n: usize) -> Result<[f64; N], E>
where
    F: FnMut(f64, &[f64; N]) -> Result<[f64; N], E>,
{
    let h = span / n as f64;
    let mut y = *y0;
    for i in 0..n {
        y = try_rk4_step(f, t0 + i as f64 * h, &y, h)?;
    }
    Ok(y)
}
