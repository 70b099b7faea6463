// Copyright 2026 the lanerep Authors
// SPDX-License-Identifier: Apache-2.0

//! Minimal SVG line charts for telemetry.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::sim::TelemetryRow;
use crate::{Error, Result};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 80.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Line,
    Dashed,
    Dots,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Left,
    Right,
}

#[derive(Clone, Debug)]
pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub style: Style,
    pub axis: Axis,
    pub points: Vec<(f64, f64)>,
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub y2_label: Option<String>,
    /// Same scale on both axes (for x-y tracks).
    pub equal_aspect: bool,
    pub series: Vec<Series>,
}

#[derive(Clone, Copy, Debug)]
struct Range {
    lo: f64,
    hi: f64,
}

impl Range {
    fn of<'a>(values: impl Iterator<Item = &'a f64>) -> Self {
        let (lo, hi) = values
            .filter(|v| v.is_finite())
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
        if !lo.is_finite() {
            return Range { lo: -1.0, hi: 1.0 };
        }
        if hi - lo <= 1e-12 * (1.0 + lo.abs()) {
            let pad = if lo == 0.0 { 1.0 } else { 0.1 * lo.abs() };
            return Range { lo: lo - pad, hi: hi + pad };
        }
        Range { lo, hi }
    }

    fn span(&self) -> f64 {
        self.hi - self.lo
    }

    fn grow(self, span: f64) -> Self {
        let mid = 0.5 * (self.lo + self.hi);
        Range { lo: mid - 0.5 * span, hi: mid + 0.5 * span }
    }
}

/// Tick positions at 1, 2 or 5 times a power of ten.
fn ticks(r: Range) -> Vec<f64> {
    let raw = r.span() / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0].into_iter().map(|m| m * mag).find(|s| *s >= raw).unwrap_or(10.0 * mag);
    let first = (r.lo / step).ceil() as i64;
    let last = (r.hi / step).floor() as i64;
    (first..=last).map(|i| i as f64 * step).collect()
}

fn fmt_tick(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(chart: &Chart) -> String {
    let pw = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let ph = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let on = |axis| chart.series.iter().filter(move |s| s.axis == axis);
    let mut xr = Range::of(chart.series.iter().flat_map(|s| s.points.iter().map(|p| &p.0)));
    let mut yr = Range::of(on(Axis::Left).flat_map(|s| s.points.iter().map(|p| &p.1)));
    let y2r = Range::of(on(Axis::Right).flat_map(|s| s.points.iter().map(|p| &p.1)));
    if chart.equal_aspect {
        let scale = (xr.span() / pw).max(yr.span() / ph);
        xr = xr.grow(scale * pw);
        yr = yr.grow(scale * ph);
    }
    let px = |x: f64| MARGIN_LEFT + (x - xr.lo) / xr.span() * pw;
    let py = |y: f64, r: Range| MARGIN_TOP + ph - (y - r.lo) / r.span() * ph;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#,
        WIDTH / 2.0,
        escape(&chart.title)
    );
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
    for t in ticks(xr) {
        let x = px(t);
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{MARGIN_TOP}" x2="{x:.2}" y2="{:.2}" stroke="#ddd"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"##,
            MARGIN_TOP + ph,
            MARGIN_TOP + ph + 16.0,
            fmt_tick(t)
        );
    }
    for t in ticks(yr) {
        let y = py(t, yr);
        let _ = writeln!(
            s,
            r##"<line x1="{MARGIN_LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#ddd"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"##,
            MARGIN_LEFT + pw,
            MARGIN_LEFT - 6.0,
            y + 4.0,
            fmt_tick(t)
        );
    }
    if let Some(label) = &chart.y2_label {
        for t in ticks(y2r) {
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" text-anchor="start">{}</text>"#,
                MARGIN_LEFT + pw + 6.0,
                py(t, y2r) + 4.0,
                fmt_tick(t)
            );
        }
        let (x, y) = (WIDTH - 20.0, MARGIN_TOP + ph / 2.0);
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{y}" text-anchor="middle" transform="rotate(90 {x} {y})">{}</text>"#,
            escape(label)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        MARGIN_LEFT + pw / 2.0,
        HEIGHT - 18.0,
        escape(&chart.x_label)
    );
    let (x, y) = (20.0, MARGIN_TOP + ph / 2.0);
    let _ = writeln!(
        s,
        r#"<text x="{x}" y="{y}" text-anchor="middle" transform="rotate(-90 {x} {y})">{}</text>"#,
        escape(&chart.y_label)
    );

    for (i, series) in chart.series.iter().enumerate() {
        let r = if series.axis == Axis::Left { yr } else { y2r };
        let pts = series.points.iter().filter(|p| p.0.is_finite() && p.1.is_finite());
        match series.style {
            Style::Dots => {
                for p in pts {
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{}"/>"#,
                        px(p.0),
                        py(p.1, r),
                        series.color
                    );
                }
            }
            Style::Line | Style::Dashed => {
                let coords: Vec<String> = pts.map(|p| format!("{:.2},{:.2}", px(p.0), py(p.1, r))).collect();
                let dash = if series.style == Style::Dashed { r#" stroke-dasharray="6 4""# } else { "" };
                let _ = writeln!(
                    s,
                    r#"<polyline fill="none" stroke="{}" stroke-width="1.5"{dash} points="{}"/>"#,
                    series.color,
                    coords.join(" ")
                );
            }
        }
        let ly = MARGIN_TOP + 16.0 + 16.0 * i as f64;
        let lx = MARGIN_LEFT + 10.0;
        let _ = writeln!(
            s,
            r#"<rect x="{lx}" y="{:.2}" width="14" height="4" fill="{}"/><text x="{:.2}" y="{ly:.2}">{}</text>"#,
            ly - 6.0,
            series.color,
            lx + 20.0,
            escape(&series.label)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn series(label: &str, color: &'static str, style: Style, axis: Axis, points: Vec<(f64, f64)>) -> Series {
    Series { label: label.into(), color, style, axis, points }
}

/// Charts for a run: x-y track, deviation and steering, and the first three
/// lateral coefficients.
pub fn telemetry_charts(rows: &[TelemetryRow]) -> Vec<(&'static str, Chart)> {
    let pick = |f: fn(&TelemetryRow) -> (f64, f64)| rows.iter().map(f).collect::<Vec<_>>();
    let mut charts = vec![
        (
            "track.svg",
            Chart {
                title: "Vehicle track".into(),
                x_label: "x [m]".into(),
                y_label: "y [m]".into(),
                y2_label: None,
                equal_aspect: true,
                series: vec![
                    series("path", "black", Style::Dashed, Axis::Left, pick(|r| (r.x_omega, r.y_omega))),
                    series("Q", "crimson", Style::Line, Axis::Left, pick(|r| (r.x_q, r.y_q))),
                ],
            },
        ),
        (
            "deviation.svg",
            Chart {
                title: "Lateral deviation and steering".into(),
                x_label: "t [s]".into(),
                y_label: "ε_Ω [m]".into(),
                y2_label: Some("γ_des [deg]".into()),
                equal_aspect: false,
                series: vec![
                    series("ε_Ω", "steelblue", Style::Line, Axis::Left, pick(|r| (r.t, r.eps_omega))),
                    series("γ_des", "crimson", Style::Line, Axis::Right, pick(|r| (r.t, r.gamma_des.to_degrees()))),
                ],
            },
        ),
    ];
    type Pair = fn(&TelemetryRow) -> (f64, f64);
    let coeffs: [(&str, &str, &str, Pair, Pair); 3] = [
        ("phihat0.svg", "φ̂₀", "[m]", |r| (r.t, r.phihat0_est), |r| (r.t, r.phihat0_true)),
        ("phihat1.svg", "φ̂₁", "[1]", |r| (r.t, r.phihat1_est), |r| (r.t, r.phihat1_true)),
        ("phihat2.svg", "φ̂₂", "[1/m]", |r| (r.t, r.phihat2_est), |r| (r.t, r.phihat2_true)),
    ];
    for (file, name, unit, est, truth) in coeffs {
        let measured = rows.iter().filter(|r| r.perception_event).map(est).collect();
        charts.push((
            file,
            Chart {
                title: format!("Coefficient {name}"),
                x_label: "t [s]".into(),
                y_label: format!("{name} {unit}"),
                y2_label: None,
                equal_aspect: false,
                series: vec![
                    series("estimate", "steelblue", Style::Line, Axis::Left, pick(est)),
                    series("truth", "crimson", Style::Line, Axis::Left, pick(truth)),
                    series("measurement", "navy", Style::Dots, Axis::Left, measured),
                ],
            },
        ));
    }
    charts
}

/// Writes one SVG per chart into `out`, creating it if needed.
pub fn emit_plots(rows: &[TelemetryRow], out: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    if rows.is_empty() {
        return Err(Error::InvalidArgument("no telemetry to plot".into()));
    }
    let out = out.as_ref();
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;
    telemetry_charts(rows)
        .into_iter()
        .map(|(file, chart)| {
            let path = out.join(file);
            std::fs::write(&path, render(&chart)).map_err(|e| Error::io(&path, e))?;
            Ok(path)
        })
        .collect()
}
