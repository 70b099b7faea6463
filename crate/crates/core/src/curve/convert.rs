// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Fifth-order maps between a graph `y(x)` expanded about its y-intercept and
//! the arc-length parametrisation starting at that intercept.
//!
//! Both maps assume the arc length increases with `x` (φ̄₁ > 0). Inputs of
//! lower order are zero-padded; outputs are always of order 5.

use super::{FunctionRepr, ParametricRepr, MAX_ORDER, NCOEFFS};
use crate::{Error, Result};

/// Default bound on `|φ̄₁|` below which [`param_to_func`] reports a vertical
/// tangent.
pub const VERTICAL_TANGENT_THRESHOLD: f64 = 1e-6;

/// Arc-length parametrisation of `y(x)` about the intercept, `s = 0` at
/// `x = x₀`. The result has `φ̄₀ = 0`, `s₀ = 0` and is arc-length normalised;
/// add `x₀` to φ̄₀ to place it in absolute coordinates.
pub fn func_to_param(repr: &FunctionRepr) -> ParametricRepr {
    let p = repr.coeffs();
    let (p0, p1, p2, p3, p4, p5) = (p[0], p[1], p[2], p[3], p[4], p[5]);
    let lam = (1.0 + p1 * p1).sqrt();
    // l[k] = λ^k
    let mut l = [1.0; 14];
    for k in 1..l.len() {
        l[k] = l[k - 1] * lam;
    }
    let (p2_2, p2_3, p2_4) = (p2 * p2, p2 * p2 * p2, p2 * p2 * p2 * p2);

    let xb = [
        0.0,
        1.0 / l[1],
        -p1 * p2 / l[4],
        (2.0 * p2_2 - p1 * p3) / l[5] - 8.0 * p2_2 / (3.0 * l[7]),
        (5.0 * p2 * p3 - p1 * p4) / l[6] - (10.0 * p1 * p2_3 + 13.0 * p2 * p3) / (2.0 * l[8])
            + 28.0 * p1 * p2_3 / (3.0 * l[10]),
        (3.0 * p3 * p3 + 6.0 * p2 * p4 - p1 * p5) / l[7]
            - (39.0 * p3 * p3 + 210.0 * p1 * p2_2 * p3 + 76.0 * p2 * p4 - 140.0 * p2_4) / (10.0 * l[9])
            + (188.0 * p1 * p2_2 * p3 - 248.0 * p2_4) / (5.0 * l[11])
            + 112.0 * p2_4 / (3.0 * l[13]),
    ];
    let yh = [
        p0,
        p1 / l[1],
        p2 / l[4],
        p3 / l[5] - 8.0 * p1 * p2_2 / (3.0 * l[7]),
        p4 / l[6] + (16.0 * p2_3 - 13.0 * p1 * p2 * p3) / (2.0 * l[8]) - 28.0 * p2_3 / (3.0 * l[10]),
        p5 / l[7] + (326.0 * p2_2 * p3 - 76.0 * p1 * p2 * p4 - 39.0 * p1 * p3 * p3) / (10.0 * l[9])
            - (128.0 * p1 * p2_4 + 188.0 * p2_2 * p3) / (5.0 * l[11])
            + 112.0 * p1 * p2_4 / (3.0 * l[13]),
    ];
    ParametricRepr::from_rows(MAX_ORDER, xb, yh, 0.0, true).expect("λ ≥ 1 keeps the coefficients finite")
}

/// Graph `y(x)` about `x₀ = φ̄₀` of a parametric curve, using the default
/// vertical-tangent threshold.
pub fn param_to_func(repr: &ParametricRepr) -> Result<FunctionRepr> {
    param_to_func_with_threshold(repr, VERTICAL_TANGENT_THRESHOLD)
}

pub fn param_to_func_with_threshold(repr: &ParametricRepr, threshold: f64) -> Result<FunctionRepr> {
    let b = repr.xcoeffs();
    let h = repr.ycoeffs();
    let b1 = b[1];
    if b1.abs() < threshold {
        return Err(Error::VerticalTangent(b1.abs()));
    }
    // q[k] = φ̄₁^k
    let mut q = [1.0; 10];
    for k in 1..q.len() {
        q[k] = q[k - 1] * b1;
    }
    let (b2, b3, b4, b5) = (b[2], b[3], b[4], b[5]);
    let (h0, h1, h2, h3, h4, h5) = (h[0], h[1], h[2], h[3], h[4], h[5]);

    let phi: [f64; NCOEFFS] = [
        h0,
        h1 / b1,
        (h2 * b1 - h1 * b2) / q[3],
        h3 / q[3] - (h1 * b3 + 2.0 * h2 * b2) / q[4] + 2.0 * h1 * b2 * b2 / q[5],
        h4 / q[4] - (h1 * b4 + 2.0 * h2 * b3 + 3.0 * h3 * b2) / q[5] + 5.0 * b2 * (h1 * b3 + h2 * b2) / q[6]
            - 5.0 * h1 * b2 * b2 * b2 / q[7],
        h5 / q[5] - (h1 * b5 + 2.0 * h2 * b4 + 3.0 * h3 * b3 + 4.0 * h4 * b2) / q[6]
            + (3.0 * h1 * (b3 * b3 + 2.0 * b2 * b4) + 3.0 * b2 * (3.0 * h3 * b2 + 4.0 * h2 * b3)) / q[7]
            - 7.0 * b2 * b2 * (3.0 * h1 * b3 + 2.0 * h2 * b2) / q[8]
            + 14.0 * h1 * b2 * b2 * b2 * b2 / q[9],
    ];
    FunctionRepr::from_row(MAX_ORDER, phi, b[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol * (1.0 + y.abs()))
    }

    #[test]
    fn horizontal_line() {
        let c = 1.7;
        let p = func_to_param(&FunctionRepr::new(&[c, 0.0, 0.0, 0.0, 0.0, 0.0], 0.0).unwrap());
        assert_eq!(p.xcoeffs(), &[0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(p.ycoeffs(), &[c, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert!(p.is_arclength_normalized());
        assert_eq!(p.s0(), 0.0);

        let back = param_to_func(&p).unwrap();
        assert_eq!(back.coeffs(), &[c, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn diagonal_line() {
        let p = func_to_param(&FunctionRepr::new(&[0.0, 1.0], 0.0).unwrap());
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((p.xcoeffs()[1] - r).abs() < 1e-15);
        assert!((p.ycoeffs()[1] - r).abs() < 1e-15);
        assert!(p.xcoeffs()[2..].iter().chain(&p.ycoeffs()[2..]).all(|c| *c == 0.0));
    }

    #[test]
    fn circle_arc_matches_curvature_expansion() {
        // y(x) of a circle of curvature κ tangent to the x-axis, and its
        // arc-length expansion x = sin(κs)/κ, y = (1 − cos κs)/κ.
        let k: f64 = 0.1;
        let p = func_to_param(&FunctionRepr::new(&[0.0, 0.0, k / 2.0, 0.0, k.powi(3) / 8.0, 0.0], 0.0).unwrap());
        let xb = [0.0, 1.0, 0.0, -k * k / 6.0, 0.0, k.powi(4) / 120.0];
        let yh = [0.0, 0.0, k / 2.0, 0.0, -k.powi(3) / 24.0, 0.0];
        assert!(close(p.xcoeffs(), &xb, 1e-12), "{:?}", p.xcoeffs());
        assert!(close(p.ycoeffs(), &yh, 1e-12), "{:?}", p.ycoeffs());
        assert!((p.ycoeffs()[2] - 0.05).abs() < 1e-12);
    }

    #[test]
    fn vertical_tangent_is_reported() {
        let p = ParametricRepr::new(&[0.0, 0.0, 0.1], &[0.0, 1.0, 0.0], 0.0).unwrap();
        assert!(matches!(param_to_func(&p), Err(Error::VerticalTangent(_))));
        let q = ParametricRepr::new(&[0.0, 1e-7, 0.1], &[0.0, 1.0, 0.0], 0.0).unwrap();
        assert!(param_to_func(&q).is_err());
        assert!(param_to_func_with_threshold(&q, 1e-8).is_ok());
    }

    #[test]
    fn inverse_uses_phibar0_as_abscissa() {
        let p = ParametricRepr::new(&[2.5, 1.0, 0.0], &[0.3, 0.0, 0.1], 0.0).unwrap();
        let f = param_to_func(&p).unwrap();
        assert_eq!(f.x0(), 2.5);
        assert!((f.eval(2.5) - 0.3).abs() < 1e-15);
    }

    /// Taylor coefficients of `(x′)² + (y′)² − 1` up to order 3.
    fn speed_defect(p: &ParametricRepr) -> [f64; 4] {
        let d = |row: &[f64; 6]| -> [f64; 5] { std::array::from_fn(|n| (n + 1) as f64 * row[n + 1]) };
        let (dx, dy) = (d(p.xcoeffs()), d(p.ycoeffs()));
        let mut out = [0.0; 4];
        for (k, o) in out.iter_mut().enumerate() {
            for i in 0..=k {
                *o += dx[i] * dx[k - i] + dy[i] * dy[k - i];
            }
        }
        out[0] -= 1.0;
        out
    }

    fn function_strategy() -> impl Strategy<Value = [f64; 6]> {
        (prop::array::uniform6(-1.0f64..1.0), -2.0f64..2.0).prop_map(|(mut c, p1)| {
            c[1] = p1;
            c
        })
    }

    proptest! {
        #[test]
        fn round_trip_function(c in function_strategy()) {
            let f = FunctionRepr::new(&c, 0.0).unwrap();
            let back = param_to_func(&func_to_param(&f)).unwrap();
            prop_assert!(close(back.coeffs(), &c, 1e-9), "{:?} vs {:?}", back.coeffs(), c);
        }

        #[test]
        fn round_trip_lower_order_pads_with_zeros(c in prop::array::uniform4(-1.0f64..1.0)) {
            let f = FunctionRepr::new(&c, 0.0).unwrap();
            let back = param_to_func(&func_to_param(&f)).unwrap();
            prop_assert!(close(&back.coeffs()[..4], &c, 1e-9));
            prop_assert!(back.coeffs()[4].abs() < 1e-9 && back.coeffs()[5].abs() < 1e-9);
        }

        #[test]
        fn output_is_arc_length_parametrised(c in function_strategy()) {
            let p = func_to_param(&FunctionRepr::new(&c, 0.0).unwrap());
            for v in speed_defect(&p) {
                prop_assert!(v.abs() < 1e-9, "{:?}", speed_defect(&p));
            }
        }

        #[test]
        fn round_trip_parametric(
            angle in -1.2f64..1.2,
            k in -0.5f64..0.5,
            k1 in -0.5f64..0.5,
            k2 in -0.5f64..0.5,
            k3 in -0.5f64..0.5,
        ) {
            // A normalised parametric repr with φ̄₀ = 0 and φ̄₁ > 0, built from
            // the curvature expansion so that it is exactly arc-length based.
            let (s, co) = angle.sin_cos();
            let xb = [0.0, co, -k * s / 2.0, -(k * k * co + k1 * s) / 6.0,
                -(k2 - k * k * k) * s / 24.0 - k * k1 * co / 8.0,
                ((k.powi(4) - 3.0 * k1 * k1 - 4.0 * k * k2) * co + (6.0 * k * k * k1 - k3) * s) / 120.0];
            let yh = [0.2, s, k * co / 2.0, (-k * k * s + k1 * co) / 6.0,
                (k2 - k * k * k) * co / 24.0 - k * k1 * s / 8.0,
                ((k.powi(4) - 3.0 * k1 * k1 - 4.0 * k * k2) * s - (6.0 * k * k * k1 - k3) * co) / 120.0];
            let p = ParametricRepr::new(&xb, &yh, 0.0).unwrap().into_arclength_normalized().unwrap();
            let back = func_to_param(&param_to_func(&p).unwrap());
            prop_assert!(close(back.xcoeffs(), &xb, 1e-6));
            prop_assert!(close(back.ycoeffs(), &yh, 1e-6));
        }
    }
}
