// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Scenario files.
//!
//! A scenario is a TOML document. Every key is optional except the path
//! curvature; missing keys take the reference values.
//!
//! ```toml
//! [vehicle]
//! wheelbase = 2.57            # m
//! rear_offset = 2.0           # m, camera point Q ahead of the rear axle
//! fov_half_angle_deg = 60.0
//! speed = 20.0                # m/s
//! steering_limit_deg = 30.0
//! k1 = -1.285                 # default -wheelbase/rear_offset
//! k2 = 0.02                   # 1/m
//!
//! [path]
//! kappa_max_over_pi = 0.004   # or kappa_max = <1/m>; 0 gives a straight road
//! s_period = 250.0            # m
//! corners = 4
//!
//! [timing]
//! control_period = 0.05       # s
//! perception_period = 0.15    # s, an integer multiple of control_period
//! duration = 150.0            # s
//! prediction = false
//!
//! [init]
//! s = 0.0
//! eps = 0.1
//! theta_deg = 0.0
//!
//! [noise]                     # optional; perception is exact without it
//! std = [0.01, 0.001, 0.0, 0.0, 0.0, 0.0]
//! seed = 1
//!
//! [output]
//! dir = "out"
//! coefficients = true         # also write coefficients.csv
//! ```

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::curve::NCOEFFS;
use crate::path::{closure_check, cosine_profile, CurvatureProfile};
use crate::vehicle::{RelativeState, VehicleParams};
use crate::{Error, Result};

/// Perception noise settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseSpec {
    pub std_dev: [f64; NCOEFFS],
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathSpec {
    pub kappa_max: f64,
    pub s_period: f64,
    /// `None` for a straight road.
    pub corners: Option<u32>,
}

impl PathSpec {
    pub fn reference() -> Self {
        PathSpec { kappa_max: 0.004 * PI, s_period: 250.0, corners: Some(4) }
    }

    pub fn straight() -> Self {
        PathSpec { kappa_max: 0.0, s_period: 250.0, corners: None }
    }

    pub fn profile(&self) -> Result<CurvatureProfile> {
        if self.kappa_max == 0.0 {
            Ok(CurvatureProfile::Zero)
        } else {
            cosine_profile(self.kappa_max, self.s_period)
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.profile()?;
        match (self.kappa_max == 0.0, self.corners) {
            (true, None) => Ok(()),
            (true, Some(_)) => Err(Error::Config("a straight road has no corners".into())),
            (false, None) => Err(Error::Config("a curved road needs `corners`".into())),
            (false, Some(n)) => {
                if closure_check(self.kappa_max, self.s_period, n)? {
                    Ok(())
                } else {
                    Err(Error::Config(format!(
                        "path does not close: kappa_max * s_period = {} but 4π/{n} = {}",
                        self.kappa_max * self.s_period,
                        4.0 * PI / n as f64
                    )))
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub vehicle: VehicleParams,
    pub path: PathSpec,
    /// Control period T (s).
    pub control_period: f64,
    /// Perception period T_p (s).
    pub perception_period: f64,
    pub prediction_enabled: bool,
    pub duration: f64,
    pub init: RelativeState,
    pub noise: Option<NoiseSpec>,
    pub output_dir: Option<PathBuf>,
    pub write_coefficients: bool,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            vehicle: VehicleParams::reference(),
            path: PathSpec::reference(),
            control_period: 0.05,
            perception_period: 0.15,
            prediction_enabled: false,
            duration: 150.0,
            init: RelativeState::new(0.0, 0.1, 0.0),
            noise: None,
            output_dir: None,
            write_coefficients: false,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        self.vehicle.validate()?;
        self.path.validate()?;
        let t = self.control_period;
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Config(format!("control_period must be positive, got {t}")));
        }
        self.perception_ratio()?;
        if !(self.duration >= t) || !self.duration.is_finite() {
            return Err(Error::Config(format!("duration must be at least one control period, got {}", self.duration)));
        }
        let th = self.init.theta_omega;
        if !(th.abs() < self.vehicle.delta) || !self.init.eps_omega.is_finite() || !self.init.s_omega.is_finite() {
            return Err(Error::Config(format!("initial state {:?} is outside the camera view", self.init)));
        }
        if let Some(n) = &self.noise {
            if n.std_dev.iter().any(|s| !(*s >= 0.0) || !s.is_finite()) {
                return Err(Error::Config(format!("noise std must be ≥ 0, got {:?}", n.std_dev)));
            }
        }
        Ok(())
    }

    /// `T_p / T` as an integer.
    pub fn perception_ratio(&self) -> Result<usize> {
        let ratio = self.perception_period / self.control_period;
        let n = ratio.round();
        if !(n >= 1.0) || (ratio - n).abs() > 1e-9 * n {
            return Err(Error::Config(format!(
                "perception_period {} must be a positive integer multiple of control_period {}",
                self.perception_period, self.control_period
            )));
        }
        Ok(n as usize)
    }

    /// Number of control steps, `duration / T` rounded to the nearest integer.
    pub fn steps(&self) -> usize {
        (self.duration / self.control_period).round() as usize
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let cfg = raw.resolve()?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml_str(&text).map_err(|e| match e {
            Error::Config(m) => Error::Config(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// Equal apart from the control period.
    pub fn same_except_control_period(&self, other: &Self) -> bool {
        let mut o = other.clone();
        o.control_period = self.control_period;
        o.output_dir.clone_from(&self.output_dir);
        o == *self
    }
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    vehicle: RawVehicle,
    path: RawPath,
    #[serde(default)]
    timing: RawTiming,
    #[serde(default)]
    init: RawInit,
    noise: Option<RawNoise>,
    #[serde(default)]
    output: RawOutput,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawVehicle {
    wheelbase: Option<f64>,
    rear_offset: Option<f64>,
    fov_half_angle_deg: Option<f64>,
    speed: Option<f64>,
    steering_limit_deg: Option<f64>,
    k1: Option<f64>,
    k2: Option<f64>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawPath {
    kappa_max: Option<f64>,
    kappa_max_over_pi: Option<f64>,
    s_period: Option<f64>,
    corners: Option<u32>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawTiming {
    control_period: Option<f64>,
    perception_period: Option<f64>,
    duration: Option<f64>,
    prediction: Option<bool>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawInit {
    s: Option<f64>,
    eps: Option<f64>,
    theta_deg: Option<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNoise {
    std: Vec<f64>,
    seed: u64,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    dir: Option<PathBuf>,
    coefficients: Option<bool>,
}

impl RawConfig {
    fn resolve(self) -> Result<ScenarioConfig> {
        let d = ScenarioConfig::default();
        let rv = self.vehicle;
        let mut vehicle = d.vehicle;
        vehicle.l = rv.wheelbase.unwrap_or(vehicle.l);
        vehicle.d = rv.rear_offset.unwrap_or(vehicle.d);
        vehicle.delta = rv.fov_half_angle_deg.map_or(vehicle.delta, f64::to_radians);
        vehicle.v = rv.speed.unwrap_or(vehicle.v);
        vehicle.gamma_sat = rv.steering_limit_deg.map_or(vehicle.gamma_sat, f64::to_radians);
        vehicle.k1 = rv.k1.unwrap_or(-vehicle.l / vehicle.d);
        vehicle.k2 = rv.k2.unwrap_or(vehicle.k2);

        let rp = self.path;
        let kappa_max = match (rp.kappa_max, rp.kappa_max_over_pi) {
            (Some(k), None) => k,
            (None, Some(k)) => k * PI,
            _ => return Err(Error::Config("[path] needs exactly one of kappa_max, kappa_max_over_pi".into())),
        };
        let path = PathSpec { kappa_max, s_period: rp.s_period.unwrap_or(d.path.s_period), corners: rp.corners };

        let noise = match self.noise {
            None => None,
            Some(n) => {
                if n.std.len() > NCOEFFS {
                    return Err(Error::Config(format!("[noise] std has at most {NCOEFFS} entries")));
                }
                let mut std_dev = [0.0; NCOEFFS];
                std_dev[..n.std.len()].copy_from_slice(&n.std);
                Some(NoiseSpec { std_dev, seed: n.seed })
            }
        };

        Ok(ScenarioConfig {
            vehicle,
            path,
            control_period: self.timing.control_period.unwrap_or(d.control_period),
            perception_period: self.timing.perception_period.unwrap_or(d.perception_period),
            prediction_enabled: self.timing.prediction.unwrap_or(d.prediction_enabled),
            duration: self.timing.duration.unwrap_or(d.duration),
            init: RelativeState::new(
                self.init.s.unwrap_or(d.init.s_omega),
                self.init.eps.unwrap_or(d.init.eps_omega),
                self.init.theta_deg.map_or(d.init.theta_omega, f64::to_radians),
            ),
            noise,
            output_dir: self.output.dir,
            write_coefficients: self.output.coefficients.unwrap_or(false),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file_is_the_reference_scenario() {
        let cfg = ScenarioConfig::from_toml_str("[path]\nkappa_max_over_pi = 0.004\ncorners = 4\n").unwrap();
        assert_eq!(cfg, ScenarioConfig::default());
        assert_eq!(cfg.perception_ratio().unwrap(), 3);
        assert_eq!(cfg.steps(), 3000);
    }

    #[test]
    fn degrees_are_converted() {
        let cfg = ScenarioConfig::from_toml_str(
            "[vehicle]\nfov_half_angle_deg = 45\n[path]\nkappa_max = 0\n[init]\ntheta_deg = 10\n",
        )
        .unwrap();
        assert!((cfg.vehicle.delta - PI / 4.0).abs() < 1e-15);
        assert!((cfg.init.theta_omega - 10f64.to_radians()).abs() < 1e-15);
        assert_eq!(cfg.path.profile().unwrap(), CurvatureProfile::Zero);
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            "[path]\ncorners = 4\n",
            "[path]\nkappa_max = 0.01\nkappa_max_over_pi = 0.004\ncorners = 4\n",
            "[path]\nkappa_max_over_pi = 0.004\ncorners = 3\n",
            "[path]\nkappa_max_over_pi = 0.004\n",
            "[path]\nkappa_max = 0\ncorners = 4\n",
            "[path]\nkappa_max = 0\n[timing]\nperception_period = 0.12\n",
            "[path]\nkappa_max = 0\n[timing]\ncontrol_period = 0.0\n",
            "[path]\nkappa_max = 0\n[timing]\nspeed = 3\n",
            "[path]\nkappa_max = 0\n[init]\ntheta_deg = 70\n",
            "[path]\nkappa_max = 0\n[noise]\nstd = [1, 1, 1, 1, 1, 1, 1]\nseed = 0\n",
            "[path]\nkappa_max = 0\n[noise]\nstd = [-1]\nseed = 0\n",
            "not toml",
        ];
        for text in bad {
            assert!(ScenarioConfig::from_toml_str(text).is_err(), "{text}");
        }
    }

    #[test]
    fn ratios_from_decimal_periods() {
        for (t, tp, n) in [(0.05, 2.0, 40), (0.02, 2.0, 100), (0.01, 2.0, 200), (0.05, 0.15, 3), (0.05, 0.25, 5)] {
            let cfg = ScenarioConfig { control_period: t, perception_period: tp, ..Default::default() };
            assert_eq!(cfg.perception_ratio().unwrap(), n);
        }
    }

    #[test]
    fn noise_is_padded() {
        let cfg = ScenarioConfig::from_toml_str("[path]\nkappa_max = 0\n[noise]\nstd = [0.1]\nseed = 9\n").unwrap();
        assert_eq!(cfg.noise.unwrap().std_dev, [0.1, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }
}
