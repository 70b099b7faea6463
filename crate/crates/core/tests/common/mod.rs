// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Independent numerical oracles for the integration tests.

#![allow(dead_code)]

use lanerep::curve::{RigidMotion2D, NCOEFFS};
use lanerep::path::PathTable;
use lanerep::vehicle::Pose2D;

/// Adaptive Simpson quadrature of `f` on `[a, b]`.
pub fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
        }
    }
    if a == b {
        return 0.0;
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    rec(f, a, b, fa, fm, fb, whole, tol, 40)
}

/// Polynomial `Σ c[n] x^n`.
pub fn poly(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, v| acc * x + v)
}

pub fn poly_slope(c: &[f64], x: f64) -> f64 {
    c.iter().enumerate().skip(1).rev().fold(0.0, |acc, (n, v)| acc * x + n as f64 * v)
}

/// Arc length along the graph of `c` from 0 to `x` (negative for `x < 0`).
pub fn graph_arclength(c: &[f64], x: f64) -> f64 {
    let speed = |t: f64| (1.0 + poly_slope(c, t).powi(2)).sqrt();
    if x >= 0.0 {
        simpson(&speed, 0.0, x, 1e-15)
    } else {
        -simpson(&speed, x, 0.0, 1e-15)
    }
}

/// Abscissa at signed arc length `s` along the graph of `c`, by bisection.
pub fn graph_abscissa(c: &[f64], s: f64) -> f64 {
    // |dx/ds| ≤ 1, so the root lies in [-|s|, |s|].
    let (mut lo, mut hi) = (-s.abs(), s.abs());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if graph_arclength(c, mid) < s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// First and second derivative by five-point central differences.
pub fn five_point<F: Fn(f64) -> f64>(f: F, h: f64) -> (f64, f64) {
    let (m2, m1, z, p1, p2) = (f(-2.0 * h), f(-h), f(0.0), f(h), f(2.0 * h));
    let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d2 = (-m2 + 16.0 * m1 - 30.0 * z + 16.0 * p1 - p2) / (12.0 * h * h);
    (d1, d2)
}

/// Arc-length Taylor coefficients of orders 1 and 2 of the graph of `c`
/// about x = 0, as `[[x1, y1], [x2, y2]]`.
pub fn arclength_taylor_oracle(c: &[f64], h: f64) -> [[f64; 2]; 2] {
    let (x1, x2) = five_point(|s| graph_abscissa(c, s), h);
    let (y1, y2) = five_point(|s| poly(c, graph_abscissa(c, s)), h);
    [[x1, y1], [0.5 * x2, 0.5 * y2]]
}

/// True path points with `s ∈ [s_from, s_to]`, expressed in the body frame
/// of `pose`.
pub fn body_frame_points(table: &PathTable, pose: &Pose2D, s_from: f64, s_to: f64, count: usize) -> Vec<[f64; 2]> {
    let frame = RigidMotion2D::new(pose.psi, [pose.x_q, pose.y_q]);
    (0..count)
        .map(|i| {
            let s = s_from + (s_to - s_from) * i as f64 / (count - 1) as f64;
            let p = table.state_at(s).expect("inside the table");
            frame.to_target([p.x, p.y])
        })
        .collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn row(v: &[f64]) -> [f64; NCOEFFS] {
    let mut r = [0.0; NCOEFFS];
    r[..v.len()].copy_from_slice(v);
    r
}
