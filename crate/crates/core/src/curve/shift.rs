// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use super::{CoeffRow, FunctionRepr, ParametricRepr, NCOEFFS};

/// Upper-triangular binomial matrix re-expanding a polynomial about a shifted
/// parameter: entry `(m, n) = C(n, m)·s̃^(n−m)` for `n ≥ m`.
///
/// Acting on a coefficient column about `s₀` it yields the coefficients about
/// `s₀ + s̃`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftMatrix {
    dim: usize,
    s_tilde: f64,
    entries: Vec<f64>,
}

impl ShiftMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn s_tilde(&self) -> f64 {
        self.s_tilde
    }

    pub fn get(&self, m: usize, n: usize) -> f64 {
        self.entries[m * self.dim + n]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// `T·v` for a column `v` of length [`dim`](Self::dim).
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim, "shift matrix applied to a vector of the wrong length");
        (0..self.dim).map(|m| (m..self.dim).map(|n| self.get(m, n) * v[n]).sum()).collect()
    }

    fn apply_row(&self, row: &CoeffRow) -> CoeffRow {
        let mut out = [0.0; NCOEFFS];
        for (m, o) in out.iter_mut().enumerate().take(self.dim) {
            *o = (m..self.dim).map(|n| self.get(m, n) * row[n]).sum();
        }
        out
    }
}

/// Builds `T(s̃)` of dimension `order + 1`. Binomial coefficients come from
/// Pascal's recurrence, so they are exact integers in `f64`.
pub fn shift_matrix(s_tilde: f64, order: usize) -> ShiftMatrix {
    let dim = order + 1;
    let mut binom = vec![vec![0.0f64; dim]; dim];
    for n in 0..dim {
        binom[n][0] = 1.0;
        for m in 1..=n {
            binom[n][m] = binom[n - 1][m - 1] + if m < n { binom[n - 1][m] } else { 0.0 };
        }
    }
    let mut powers = vec![1.0; dim];
    for k in 1..dim {
        powers[k] = powers[k - 1] * s_tilde;
    }
    let mut entries = vec![0.0; dim * dim];
    for m in 0..dim {
        for n in m..dim {
            entries[m * dim + n] = binom[n][m] * powers[n - m];
        }
    }
    ShiftMatrix { dim, s_tilde, entries }
}

/// Re-expands a parametric curve about `s₀ + s̃`; the curve itself is unchanged.
pub fn shift_parametric(repr: &ParametricRepr, s_tilde: f64) -> ParametricRepr {
    let t = shift_matrix(s_tilde, repr.order());
    ParametricRepr::from_rows(
        repr.order(),
        t.apply_row(repr.xcoeffs()),
        t.apply_row(repr.ycoeffs()),
        repr.s0() + s_tilde,
        repr.is_arclength_normalized(),
    )
    .expect("shifting finite coefficients by a finite distance stays finite")
}

/// Re-expands a polynomial graph about `x₀ + x̃`.
pub fn shift_function(repr: &FunctionRepr, x_tilde: f64) -> FunctionRepr {
    let t = shift_matrix(x_tilde, repr.order());
    FunctionRepr::from_row(repr.order(), t.apply_row(repr.coeffs()), repr.x0() + x_tilde)
        .expect("shifting finite coefficients by a finite distance stays finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::eval_parametric;
    use proptest::prelude::*;

    fn dense_product(a: &ShiftMatrix, b: &ShiftMatrix) -> (Vec<f64>, Vec<f64>) {
        let d = a.dim();
        let mut p = vec![0.0; d * d];
        let mut mag = vec![0.0; d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    p[i * d + j] += a.get(i, k) * b.get(k, j);
                    mag[i * d + j] += (a.get(i, k) * b.get(k, j)).abs();
                }
            }
        }
        (p, mag)
    }

    #[test]
    fn zero_shift_is_identity() {
        let t = shift_matrix(0.0, 5);
        for m in 0..6 {
            for n in 0..6 {
                assert_eq!(t.get(m, n), if m == n { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn unit_shift_order_two() {
        let t = shift_matrix(1.0, 2);
        assert_eq!(t.entries(), &[1.0, 1.0, 1.0, 0.0, 1.0, 2.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn order_zero_is_scalar_one() {
        assert_eq!(shift_matrix(3.0, 0).entries(), &[1.0]);
    }

    #[test]
    fn shift_square_about_one() {
        let r = FunctionRepr::new(&[0.0, 0.0, 1.0], 0.0).unwrap();
        let s = shift_function(&r, 1.0);
        assert_eq!(&s.coeffs()[..3], &[1.0, 2.0, 1.0]);
        assert_eq!(s.x0(), 1.0);
        assert_eq!(shift_function(&r, 0.0), r);
    }

    #[test]
    fn line_shift_moves_origin_only() {
        let c = -0.4;
        let r = ParametricRepr::new(&[0.0, 1.0, 0.0, 0.0, 0.0, 0.0], &[c, 0.0, 0.0, 0.0, 0.0, 0.0], 0.0).unwrap();
        let s = shift_parametric(&r, 2.0);
        assert_eq!(s.xcoeffs(), &[2.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(s.ycoeffs(), r.ycoeffs());
        assert_eq!(s.s0(), 2.0);
        assert_eq!(shift_parametric(&r, 0.0), r);
    }

    proptest! {
        #[test]
        fn group_law(a in -10.0f64..10.0, b in -10.0f64..10.0, order in 0usize..=5) {
            let (p, mag) = dense_product(&shift_matrix(a, order), &shift_matrix(b, order));
            let t = shift_matrix(a + b, order);
            for (i, (pv, m)) in p.iter().zip(&mag).enumerate() {
                prop_assert!((pv - t.entries()[i]).abs() <= 1e-12 * m.max(1.0));
            }
        }

        #[test]
        fn shift_preserves_the_curve(
            xc in prop::array::uniform6(-1.0f64..1.0),
            yc in prop::array::uniform6(-1.0f64..1.0),
            s_tilde in -2.0f64..2.0,
        ) {
            let r = ParametricRepr::new(&xc, &yc, 0.3).unwrap();
            let shifted = shift_parametric(&r, s_tilde);
            for i in 0..20 {
                let s = -2.0 + 0.2 * i as f64;
                let a = eval_parametric(&r, s, 0).unwrap()[0];
                let b = eval_parametric(&shifted, s, 0).unwrap()[0];
                prop_assert!((a[0] - b[0]).abs() < 1e-9 && (a[1] - b[1]).abs() < 1e-9);
            }
        }

        #[test]
        fn function_shift_preserves_values(
            c in prop::array::uniform6(-1.0f64..1.0),
            x_tilde in -2.0f64..2.0,
        ) {
            let r = FunctionRepr::new(&c, -0.5).unwrap();
            let shifted = shift_function(&r, x_tilde);
            for i in 0..20 {
                let x = -2.5 + 0.2 * i as f64;
                prop_assert!((r.eval(x) - shifted.eval(x)).abs() < 1e-9);
            }
        }
    }
}
