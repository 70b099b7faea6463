// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Plain-text fixture format: a header line, then one coefficient row per
//! line. Numbers are written with Rust's shortest round-trip formatting, so
//! parsing a printed value yields the same bits.
//!
//! ```text
//! function order=5 x0=0
//! 0.1 0 0.05 0 0.000125 0
//! ```
//!
//! ```text
//! parametric order=5 s0=0 normalized=true
//! 0 1 0 -0.0016666666666666668 0 8.333333333333334e-7
//! 0 0 0.05 0 -4.1666666666666665e-5 0
//! ```

use std::fmt;
use std::str::FromStr;

use super::{FunctionRepr, ParametricRepr};
use crate::Error;

fn write_row(f: &mut fmt::Formatter<'_>, row: &[f64]) -> fmt::Result {
    for (i, c) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{c:?}")?;
    }
    Ok(())
}

impl fmt::Display for FunctionRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "function order={} x0={:?}", self.order(), self.x0())?;
        write_row(f, &self.coeffs()[..=self.order()])
    }
}

impl fmt::Display for ParametricRepr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "parametric order={} s0={:?} normalized={}",
            self.order(),
            self.s0(),
            self.is_arclength_normalized()
        )?;
        write_row(f, &self.xcoeffs()[..=self.order()])?;
        f.write_str("\n")?;
        write_row(f, &self.ycoeffs()[..=self.order()])
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(format!("fixture: {}", msg.into()))
}

fn header<'a>(line: &'a str, kind: &str) -> Result<Vec<(&'a str, &'a str)>, Error> {
    let mut words = line.split_whitespace();
    if words.next() != Some(kind) {
        return Err(bad(format!("expected `{kind}` header, got {line:?}")));
    }
    words.map(|w| w.split_once('=').ok_or_else(|| bad(format!("malformed field {w:?}")))).collect()
}

fn field<'a>(fields: &[(&'a str, &'a str)], key: &str) -> Result<&'a str, Error> {
    fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn parse_row(line: Option<&str>, order: usize) -> Result<Vec<f64>, Error> {
    let line = line.ok_or_else(|| bad("missing coefficient row"))?;
    let row = line
        .split_whitespace()
        .map(|t| t.parse::<f64>().map_err(|e| bad(format!("{t:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if row.len() != order + 1 {
        return Err(bad(format!("expected {} coefficients, got {}", order + 1, row.len())));
    }
    Ok(row)
}

fn num<T: FromStr>(v: &str) -> Result<T, Error>
where
    T::Err: fmt::Display,
{
    v.parse().map_err(|e| bad(format!("{v:?}: {e}")))
}

impl FromStr for FunctionRepr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let fields = header(lines.next().ok_or_else(|| bad("empty input"))?, "function")?;
        let order: usize = num(field(&fields, "order")?)?;
        let x0: f64 = num(field(&fields, "x0")?)?;
        FunctionRepr::new(&parse_row(lines.next(), order)?, x0)
    }
}

impl FromStr for ParametricRepr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let fields = header(lines.next().ok_or_else(|| bad("empty input"))?, "parametric")?;
        let order: usize = num(field(&fields, "order")?)?;
        let s0: f64 = num(field(&fields, "s0")?)?;
        let normalized: bool = num(field(&fields, "normalized")?)?;
        let x = parse_row(lines.next(), order)?;
        let y = parse_row(lines.next(), order)?;
        let repr = ParametricRepr::new(&x, &y, s0)?;
        if normalized {
            repr.into_arclength_normalized()
        } else {
            Ok(repr)
        }
    }
}
