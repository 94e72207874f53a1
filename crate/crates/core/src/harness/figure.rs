//! CSV and SVG output for ball boundaries.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::write_file;
use crate::ball::{boundary_curve, BallSpec, BoundaryCurve, Radius, Regime};
use crate::error::{Error, Result};

/// Samples per curve used by `figure1`.
pub const FIGURE1_SAMPLES: usize = 2048;

const PX_PER_UNIT: f64 = 200.0;
const VIEW_HALF: f64 = 4.0;
const STROKE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallFormat {
    Csv,
    Svg,
}

impl FromStr for BallFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(BallFormat::Csv),
            "svg" => Ok(BallFormat::Svg),
            _ => Err(Error::config(format!("unknown format {s:?}, expected csv or svg"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveStyle {
    pub stroke: &'static str,
    pub dasharray: Option<&'static str>,
}

impl CurveStyle {
    const SOLID: CurveStyle = CurveStyle {
        stroke: "black",
        dasharray: None,
    };

    fn attrs(self) -> String {
        let mut s = format!(r#"stroke="{}""#, self.stroke);
        if let Some(d) = self.dasharray {
            write!(s, r#" stroke-dasharray="{d}""#).expect("string write");
        }
        s
    }
}

#[derive(Debug, Clone)]
pub struct FigureCurve {
    pub label: String,
    pub curve: BoundaryCurve,
    pub style: CurveStyle,
}

fn path_data(curve: &BoundaryCurve) -> Vec<String> {
    curve
        .components
        .iter()
        .map(|comp| {
            let mut d = String::new();
            for (k, s) in comp.iter().enumerate() {
                let cmd = if k == 0 { 'M' } else { 'L' };
                write!(d, "{cmd}{:.12},{:.12} ", s.x, s.y).expect("string write");
            }
            d.push('Z');
            d
        })
        .collect()
}

/// SVG in mathematical orientation with puncture and centre markers and,
/// when more than one curve is drawn, a legend.
pub fn render_svg(curves: &[FigureCurve]) -> String {
    let size = 2.0 * VIEW_HALF * PX_PER_UNIT;
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="{} {} {} {}">"#,
        -VIEW_HALF,
        -VIEW_HALF,
        2.0 * VIEW_HALF,
        2.0 * VIEW_HALF
    )
    .unwrap();
    writeln!(w, r#"<g transform="scale(1,-1)" fill="none" stroke-width="{STROKE}">"#).unwrap();
    writeln!(
        w,
        r#"<path d="M{lo},0 L{hi},0 M0,{lo} L0,{hi}" stroke="gray" stroke-width="{}"/>"#,
        STROKE / 2.0,
        lo = -VIEW_HALF,
        hi = VIEW_HALF
    )
    .unwrap();
    for fc in curves {
        writeln!(
            w,
            r#"<g class="ball" data-radius="{}" data-regime="{}" {}>"#,
            fc.label,
            regime_name(fc.curve.regime),
            fc.style.attrs()
        )
        .unwrap();
        for d in path_data(&fc.curve) {
            writeln!(w, r#"<path d="{d}"/>"#).unwrap();
        }
        writeln!(w, "</g>").unwrap();
    }
    writeln!(
        w,
        r#"<circle class="puncture" cx="0" cy="0" r="0.04" fill="black" stroke="none"/>"#
    )
    .unwrap();
    writeln!(
        w,
        r#"<circle class="center" cx="1" cy="0" r="0.04" fill="white" stroke="black"/>"#
    )
    .unwrap();
    writeln!(w, "</g>").unwrap();
    if curves.len() > 1 {
        writeln!(
            w,
            r#"<g class="legend" font-family="serif" font-size="0.18" stroke-width="{STROKE}">"#
        )
        .unwrap();
        for (i, fc) in curves.iter().enumerate() {
            let y = -3.7 + 0.3 * i as f64;
            writeln!(
                w,
                r#"<path d="M2.3,{y:.2} L2.9,{y:.2}" fill="none" {}/>"#,
                fc.style.attrs()
            )
            .unwrap();
            writeln!(w, r#"<text x="3.0" y="{:.2}">r = {}</text>"#, y + 0.06, fc.label).unwrap();
        }
        writeln!(w, "</g>").unwrap();
    }
    writeln!(w, "</svg>").unwrap();
    out
}

fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::Sector => "sector",
        Regime::Pinched => "pinched",
        Regime::Annular => "annular",
    }
}

/// Boundary of `B_{tau_0}(e1, r)` as CSV or SVG.
pub fn cmd_ball(radius: Radius, n_samples: usize, format: BallFormat) -> Result<String> {
    let curve = boundary_curve(&BallSpec::normalized(radius), n_samples)?;
    Ok(match format {
        BallFormat::Csv => curve.to_csv(),
        BallFormat::Svg => render_svg(&[FigureCurve {
            label: radius.to_string(),
            curve,
            style: CurveStyle::SOLID,
        }]),
    })
}

/// The balls of radii `log 3, log 5, log 7, log 8.8` centred at `e1`.
#[derive(Debug, Clone)]
pub struct Figure1 {
    pub curves: Vec<FigureCurve>,
}

impl Figure1 {
    pub const RADII: [(f64, &'static str); 4] = [(3.0, "log 3"), (5.0, "log 5"), (7.0, "log 7"), (8.8, "log 8.8")];

    const STYLES: [CurveStyle; 4] = [
        CurveStyle {
            stroke: "black",
            dasharray: None,
        },
        CurveStyle {
            stroke: "#1f4e9c",
            dasharray: Some("0.08 0.04"),
        },
        CurveStyle {
            stroke: "#9c1f1f",
            dasharray: Some("0.02 0.03"),
        },
        CurveStyle {
            stroke: "#2e7d32",
            dasharray: Some("0.12 0.04 0.02 0.04"),
        },
    ];

    pub fn build(n_samples: usize) -> Result<Self> {
        let curves = Self::RADII
            .iter()
            .zip(Self::STYLES)
            .map(|(&(x, label), style)| {
                let curve = boundary_curve(&BallSpec::normalized(Radius::log_of(x)?), n_samples)?;
                Ok(FigureCurve {
                    label: label.to_string(),
                    curve,
                    style,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Figure1 { curves })
    }

    pub fn regimes(&self) -> Vec<Regime> {
        self.curves.iter().map(|c| c.curve.regime).collect()
    }

    pub fn to_svg(&self) -> String {
        render_svg(&self.curves)
    }
}

pub fn cmd_figure1(output: &Path) -> Result<Figure1> {
    let fig = Figure1::build(FIGURE1_SAMPLES)?;
    write_file(output, &fig.to_svg())?;
    Ok(fig)
}
