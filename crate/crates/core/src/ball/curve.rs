use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::polar::{polar_roots_clamped, theta_max, Radius, Regime, ThetaMax};
use super::BallSpec;
use crate::error::{Error, Result};
use crate::metric::Point;

pub const MIN_SAMPLES: usize = 16;

/// Rounding slack allowed on the discriminant at `θ = ±θ_max`.
const CLOSE_SLACK: f64 = 1e-12;

/// One boundary sample in the normalized frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub theta: f64,
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

impl CurveSample {
    fn new(theta: f64, t: f64) -> Self {
        CurveSample {
            theta,
            t,
            x: t * theta.cos(),
            y: t * theta.sin(),
        }
    }
}

/// Discretized sphere `{ y : tau_p(center, y) = r }`, one closed loop per component.
///
/// The last sample of a component connects back to its first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    pub spec: BallSpec,
    pub c: f64,
    pub regime: Regime,
    pub components: Vec<Vec<CurveSample>>,
}

impl BoundaryCurve {
    pub fn radius(&self) -> Radius {
        self.spec.radius()
    }

    pub fn len(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn samples(&self) -> impl Iterator<Item = (usize, &CurveSample)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, comp)| comp.iter().map(move |s| (i, s)))
    }

    /// `|t^2 + 1 - 2 t cos θ - c t|` at a sample.
    pub fn residual(&self, s: &CurveSample) -> f64 {
        (s.t * s.t + 1.0 - 2.0 * s.t * s.theta.cos() - self.c * s.t).abs()
    }

    /// Samples mapped into the ambient space of the spec.
    pub fn ambient_points(&self) -> Vec<Vec<Point>> {
        self.components
            .iter()
            .map(|comp| comp.iter().map(|s| self.spec.to_ambient(s.x, s.y)).collect())
            .collect()
    }

    /// CSV with header `component_id,theta,t,x,y`, normalized-frame coordinates.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("component_id,theta,t,x,y\n");
        for (i, s) in self.samples() {
            writeln!(out, "{i},{:.16e},{:.16e},{:.16e},{:.16e}", s.theta, s.t, s.x, s.y).expect("string write");
        }
        out
    }
}

/// Samples the boundary of the ball described by `spec`.
///
/// Sector and pinched regimes give one loop of `n_samples` points: `t2` over
/// `θ` from `θ_max` down to `-θ_max`, then `t1` back, with nodes clustered
/// towards `±θ_max` where the branches meet. The annular regime gives two
/// loops of `n_samples` points each, `t1` (inner) then `t2` (outer).
pub fn boundary_curve(spec: &BallSpec, n_samples: usize) -> Result<BoundaryCurve> {
    if n_samples < MIN_SAMPLES {
        return Err(Error::config(format!(
            "n_samples must be at least {MIN_SAMPLES}, got {n_samples}"
        )));
    }
    let radius = spec.radius();
    let regime = radius.regime();
    let roots = |theta: f64| {
        polar_roots_clamped(radius, theta, CLOSE_SLACK)
            .ok_or_else(|| Error::out_of_range(format!("no boundary point at θ = {theta}")))
    };

    let components = match theta_max(radius) {
        ThetaMax::Angle(limit) => {
            let m = n_samples / 2;
            let nodes: Vec<f64> = (0..=m)
                .map(|k| match k {
                    0 => limit,
                    k if k == m => -limit,
                    k => limit * (PI * k as f64 / m as f64).cos(),
                })
                .collect();
            let mut loop_ = Vec::with_capacity(2 * m);
            for &th in &nodes {
                loop_.push(CurveSample::new(th, roots(th)?.1));
            }
            for &th in nodes[1..m].iter().rev() {
                loop_.push(CurveSample::new(th, roots(th)?.0));
            }
            vec![loop_]
        }
        ThetaMax::Full => {
            let nodes: Vec<f64> = (0..n_samples)
                .map(|k| -PI + 2.0 * PI * k as f64 / n_samples as f64)
                .collect();
            let inner = nodes
                .iter()
                .map(|&th| Ok(CurveSample::new(th, roots(th)?.0)))
                .collect::<Result<_>>()?;
            let outer = nodes
                .iter()
                .map(|&th| Ok(CurveSample::new(th, roots(th)?.1)))
                .collect::<Result<_>>()?;
            vec![inner, outer]
        }
    };
    Ok(BoundaryCurve {
        spec: spec.clone(),
        c: radius.c(),
        regime,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::tau_p;

    fn curve(x: f64, n: usize) -> BoundaryCurve {
        boundary_curve(&BallSpec::normalized(Radius::log_of(x).unwrap()), n).unwrap()
    }

    fn tau_from_e1(s: &CurveSample) -> f64 {
        tau_p(
            &Point::origin(2),
            &Point::e1(2, 1.0),
            &Point::new(vec![s.x, s.y]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn samples_lie_on_the_sphere() {
        for x in [1.5, 3.0, 4.0, 5.0, 7.0, 8.8] {
            let c = curve(x, 512);
            let r = c.radius().value();
            for (_, s) in c.samples() {
                assert!(c.residual(s) < 1e-10, "x={x} {s:?}");
                assert!((tau_from_e1(s) - r).abs() < 1e-9, "x={x} {s:?}");
            }
        }
    }

    #[test]
    fn component_counts_and_regimes() {
        let c = curve(3.0, 64);
        assert_eq!((c.regime, c.components.len(), c.len()), (Regime::Sector, 1, 64));
        let max_theta = c.samples().map(|(_, s)| s.theta.abs()).fold(0.0, f64::max);
        assert!((max_theta - PI / 3.0).abs() < 1e-15);
        let c = curve(5.0, 64);
        assert_eq!((c.regime, c.components.len()), (Regime::Pinched, 1));
        let c = curve(7.0, 64);
        assert_eq!((c.regime, c.components.len(), c.len()), (Regime::Annular, 2, 128));
        assert!(c.components[0].iter().all(|s| s.t < 1.0));
        assert!(c.components[1].iter().all(|s| s.t > 1.0));
    }

    #[test]
    fn pinched_curve_passes_through_minus_e1() {
        let c = curve(5.0, 400);
        let first = c.components[0][0];
        assert!((first.x + 1.0).abs() < 1e-9 && first.y.abs() < 1e-9, "{first:?}");
        let best = c
            .samples()
            .map(|(_, s)| ((s.x + 1.0).powi(2) + s.y * s.y).sqrt())
            .fold(f64::INFINITY, f64::min);
        assert!(best < 1e-9);
    }

    #[test]
    fn mirror_symmetry() {
        let c = curve(3.0, 200);
        let loop_ = &c.components[0];
        let m = loop_.len() / 2;
        let pairs = (0..=m).map(|k| (k, m - k)).chain((1..m).map(|j| (m + j, 2 * m - j)));
        for (a, b) in pairs {
            let (a, b) = (loop_[a], loop_[b]);
            assert!(
                (a.theta + b.theta).abs() < 1e-15 && (a.t - b.t).abs() < 1e-12,
                "{a:?} {b:?}"
            );
        }
    }

    #[test]
    fn too_few_samples() {
        let spec = BallSpec::normalized(Radius::new(1.0).unwrap());
        assert!(matches!(boundary_curve(&spec, 15), Err(Error::Config(_))));
    }

    #[test]
    fn general_spec_maps_onto_its_sphere() {
        let spec = BallSpec::new(
            Point::new(vec![2.0, 3.0]).unwrap(),
            Point::new(vec![-1.0, 0.5]).unwrap(),
            Radius::new(1.3).unwrap(),
        )
        .unwrap();
        let c = boundary_curve(&spec, 128).unwrap();
        for comp in c.ambient_points() {
            for y in comp {
                let tau = tau_p(spec.puncture(), spec.center(), &y).unwrap();
                assert!((tau - 1.3).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn csv_layout() {
        let csv = curve(3.0, 16).to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "component_id,theta,t,x,y");
        assert_eq!(lines.len(), 17);
        let fields: Vec<f64> = lines[1].split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 5);
        assert!((fields[1] - PI / 3.0).abs() < 1e-15 && (fields[2] - 1.0).abs() < 1e-7);
        assert!(lines[1].split(',').nth(1).unwrap().contains('e'));
    }
}
