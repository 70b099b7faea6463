// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The curve is not locally a graph y(x); dx/ds (or cos α) is too small.
    #[error("vertical tangent: |dx/ds| = {0:e} is below the threshold")]
    VerticalTangent(f64),

    #[error("singular curve: tangent magnitude {0:e} is degenerate")]
    SingularCurve(f64),

    #[error("arc length {s} outside path table range [{start}, {end}]")]
    OutOfRange { s: f64, start: f64, end: f64 },

    #[error("infeasible curvature: |d·κ| = {0} must be below 1")]
    InfeasibleCurvature(f64),

    #[error("observation lost: sin(δ − sgn(ε_Ω)·θ_Ω) = {0:e}")]
    ObservationLost(f64),

    #[error("perception failure: |θ_Ω| = {0} rad reaches π/2")]
    PerceptionFailure(f64),

    #[error("degenerate heading: cos θ_D = {0:e}")]
    DegenerateHeading(f64),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}
