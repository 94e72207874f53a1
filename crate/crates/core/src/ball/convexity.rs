use serde::{Deserialize, Serialize};

use super::curve::{boundary_curve, CurveSample};
use super::polar::{Radius, Regime};
use super::BallSpec;
use crate::error::Result;

/// Sign tolerance on normalized cross products.
pub const CONVEXITY_TOL: f64 = 1e-9;

/// Radii within this distance of `log 3` are flagged in verdicts.
pub const NEAR_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convexity {
    Convex,
    NonConvex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexityVerdict {
    pub radius: f64,
    pub regime: Regime,
    pub verdict: Convexity,
    /// Three boundary-related points whose turn has the wrong sign, or, off
    /// the sector regime, two ball points whose midpoint is the puncture.
    pub witness: Option<[[f64; 2]; 3]>,
    /// Polar angle of the middle witness point.
    pub witness_theta: Option<f64>,
    /// Largest wrong-signed normalized cross product, `0` if none.
    pub max_reverse_turn: f64,
    pub near_threshold: bool,
}

impl ConvexityVerdict {
    pub fn is_convex(&self) -> bool {
        self.verdict == Convexity::Convex
    }
}

/// Radius at which the inner boundary vertex on the axis loses convexity:
/// `c = 2√2 - 2`, i.e. `r = log(1 + 2 sqrt(2√2 - 2))`.
pub fn convexity_threshold() -> f64 {
    (2.0 * (2.0 * 2f64.sqrt() - 2.0).sqrt()).ln_1p()
}

/// Discrete turning test on the sampled boundary of `B_{tau_0}(e1, r)`.
///
/// Pinched and annular balls are non-convex outright: the points `(0, ±c/2)`
/// lie in the ball and their midpoint is the puncture.
pub fn classify_convexity(radius: Radius, n_samples: usize, tol: f64) -> Result<ConvexityVerdict> {
    let curve = boundary_curve(&BallSpec::normalized(radius), n_samples)?;
    let near_threshold = (radius.value() - 3f64.ln()).abs() < NEAR_THRESHOLD;
    let mut verdict = ConvexityVerdict {
        radius: radius.value(),
        regime: curve.regime,
        verdict: Convexity::NonConvex,
        witness: None,
        witness_theta: None,
        max_reverse_turn: 0.0,
        near_threshold,
    };
    if curve.regime != Regime::Sector {
        let h = curve.c / 2.0;
        verdict.witness = Some([[0.0, h], [0.0, 0.0], [0.0, -h]]);
        verdict.witness_theta = Some(std::f64::consts::FRAC_PI_2);
        return Ok(verdict);
    }

    let pts = &curve.components[0];
    let orientation = signed_area(pts).signum();
    let n = pts.len();
    let mut worst: Option<(usize, f64)> = None;
    for i in 0..n {
        let (a, b, c) = (pts[(i + n - 1) % n], pts[i], pts[(i + 1) % n]);
        let turn = orientation * normalized_cross(&a, &b, &c);
        if turn < -tol && worst.is_none_or(|(_, w)| turn < w) {
            worst = Some((i, turn));
        }
    }
    match worst {
        None => verdict.verdict = Convexity::Convex,
        Some((i, turn)) => {
            let p = |s: &CurveSample| [s.x, s.y];
            verdict.witness = Some([p(&pts[(i + n - 1) % n]), p(&pts[i]), p(&pts[(i + 1) % n])]);
            verdict.witness_theta = Some(pts[i].theta);
            verdict.max_reverse_turn = -turn;
        }
    }
    Ok(verdict)
}

fn signed_area(pts: &[CurveSample]) -> f64 {
    let n = pts.len();
    0.5 * (0..n)
        .map(|i| {
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            a.x * b.y - b.x * a.y
        })
        .sum::<f64>()
}

/// Sine of the turning angle at `b`.
fn normalized_cross(a: &CurveSample, b: &CurveSample, c: &CurveSample) -> f64 {
    let (ux, uy) = (b.x - a.x, b.y - a.y);
    let (vx, vy) = (c.x - b.x, c.y - b.y);
    let norm = ux.hypot(uy) * vx.hypot(vy);
    if norm == 0.0 {
        return 0.0;
    }
    (ux * vy - uy * vx) / norm
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(r: f64) -> ConvexityVerdict {
        classify_convexity(Radius::new(r).unwrap(), 4096, CONVEXITY_TOL).unwrap()
    }

    #[test]
    fn small_balls_are_convex() {
        for r in [0.25, 0.5, 0.75, 1.0, 0.9 * 3f64.ln()] {
            let v = classify(r);
            assert!(v.is_convex(), "{v:?}");
            assert!(v.witness.is_none());
        }
    }

    #[test]
    fn larger_balls_are_not() {
        let v = classify(1.05 * 3f64.ln());
        assert_eq!(v.verdict, Convexity::NonConvex);
        assert!(v.witness_theta.unwrap().abs() < 0.1, "{v:?}");
        for r in [1.2, 1.8] {
            assert!(!classify(r).is_convex());
        }
    }

    #[test]
    fn annular_and_pinched_witness() {
        for x in [5.0, 7.0] {
            let v = classify_convexity(Radius::log_of(x).unwrap(), 64, CONVEXITY_TOL).unwrap();
            assert_eq!(v.verdict, Convexity::NonConvex);
            let w = v.witness.unwrap();
            assert_eq!(w[1], [0.0, 0.0]);
            assert_eq!(w[0][1], -w[2][1]);
        }
    }

    #[test]
    fn threshold_sits_below_log3() {
        let rs = convexity_threshold();
        assert!((rs - 1.036_864_3).abs() < 1e-6, "{rs}");
        assert!(classify(rs - 1e-3).is_convex());
        assert!(!classify(rs + 1e-3).is_convex());
        assert!(!classify(3f64.ln() - 1e-3).is_convex());
    }

    #[test]
    fn near_threshold_flag() {
        assert!(classify(3f64.ln()).near_threshold);
        assert!(!classify(1.0).near_threshold);
    }
}
