//! `tau_p`-balls: polar boundary, tangent slopes, convexity and the
//! Euclidean-ball sandwich.
//!
//! Ball geometry is computed in the normalized frame with puncture `0` and
//! centre `e1` in the plane. [`BallSpec`] carries the similarity that maps
//! any other (puncture, centre) pair to that frame.

mod convexity;
mod curve;
mod inclusion;
mod polar;

use serde::{Deserialize, Serialize};

pub use convexity::{
    classify_convexity, convexity_threshold, Convexity, ConvexityVerdict, CONVEXITY_TOL, NEAR_THRESHOLD,
};
pub use curve::{boundary_curve, BoundaryCurve, CurveSample, MIN_SAMPLES};
pub use inclusion::{inclusion_radii, verify_inclusion, InclusionReport};
pub use polar::{
    alpha, alpha_prime, c_param, polar_roots, slope_expression, slope_m1, slope_m2, theta_max, PolarRoots, Radius,
    Regime, Slope, ThetaMax, REGIME_TOL,
};

use crate::error::{Error, Result};
use crate::metric::{dist_unchecked, same_dim, Point, BOUNDARY_GUARD};

/// `B_{tau_p}(center, radius)` with `p = puncture`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallSpec {
    center: Point,
    puncture: Point,
    radius: Radius,
    /// Unit vector from the puncture towards the centre.
    axis: Point,
    /// Unit vector completing `axis` to the plane the boundary is drawn in.
    normal: Point,
    scale: f64,
}

impl BallSpec {
    pub fn new(center: Point, puncture: Point, radius: Radius) -> Result<Self> {
        same_dim(&center, &puncture)?;
        if center.dim() < 2 {
            return Err(Error::Dimension {
                expected: 2,
                found: center.dim(),
            });
        }
        let scale = dist_unchecked(&center, &puncture);
        if scale <= BOUNDARY_GUARD {
            return Err(Error::OnBoundary { distance: scale });
        }
        let diff: Vec<f64> = center
            .coords()
            .iter()
            .zip(puncture.coords())
            .map(|(a, b)| (a - b) / scale)
            .collect();
        let normal = orthonormal_to(&diff);
        Ok(BallSpec {
            axis: Point::new(diff)?,
            normal: Point::new(normal)?,
            center,
            puncture,
            radius,
            scale,
        })
    }

    /// Centre `e1`, puncture `0` in the plane.
    pub fn normalized(radius: Radius) -> Self {
        BallSpec::new(Point::e1(2, 1.0), Point::origin(2), radius).expect("e1 and 0 are distinct")
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn puncture(&self) -> &Point {
        &self.puncture
    }

    pub fn radius(&self) -> Radius {
        self.radius
    }

    /// `|center - puncture|`, the similarity ratio to the normalized frame.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Maps normalized-frame coordinates to a point of the ambient space.
    pub fn to_ambient(&self, x: f64, y: f64) -> Point {
        let coords = self
            .puncture
            .coords()
            .iter()
            .zip(self.axis.coords().iter().zip(self.normal.coords()))
            .map(|(p, (a, n))| p + self.scale * (x * a + y * n))
            .collect();
        Point::new(coords).expect("finite image")
    }

    /// Polar coordinates `(t, θ)` of `y` in the normalized frame, `θ ∈ [0, π]`.
    ///
    /// The ball is a surface of revolution about the axis, so `(t, θ)` decides
    /// membership in any dimension.
    pub fn to_polar(&self, y: &Point) -> Result<(f64, f64)> {
        same_dim(&self.puncture, y)?;
        let rel: Vec<f64> = y
            .coords()
            .iter()
            .zip(self.puncture.coords())
            .map(|(a, b)| a - b)
            .collect();
        let len = rel.iter().map(|v| v * v).sum::<f64>().sqrt();
        if len <= BOUNDARY_GUARD {
            return Err(Error::OnBoundary { distance: len });
        }
        let along: f64 = rel.iter().zip(self.axis.coords()).map(|(a, b)| a * b).sum();
        Ok((len / self.scale, (along / len).clamp(-1.0, 1.0).acos()))
    }
}

/// A unit vector orthogonal to the unit vector `u`, by Gram-Schmidt on the
/// coordinate axis least aligned with `u`; in the plane, `u` rotated by `+π/2`.
fn orthonormal_to(u: &[f64]) -> Vec<f64> {
    if u.len() == 2 {
        return vec![-u[1], u[0]];
    }
    let k = (0..u.len())
        .min_by(|&a, &b| u[a].abs().total_cmp(&u[b].abs()))
        .expect("nonempty");
    let mut v: Vec<f64> = u.iter().map(|&ui| -u[k] * ui).collect();
    v[k] += 1.0;
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter().map(|x| x / n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::tau_p;

    fn spec(center: Vec<f64>, puncture: Vec<f64>, r: f64) -> BallSpec {
        BallSpec::new(
            Point::new(center).unwrap(),
            Point::new(puncture).unwrap(),
            Radius::new(r).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn normalized_frame_is_identity() {
        let s = BallSpec::normalized(Radius::new(1.0).unwrap());
        assert_eq!(s.to_ambient(0.3, -0.7).coords(), &[0.3, -0.7]);
        let (t, th) = s.to_polar(&Point::new(vec![0.0, 2.0]).unwrap()).unwrap();
        assert!((t - 2.0).abs() < 1e-15 && (th - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn similarity_preserves_tau() {
        let s = spec(vec![3.0, -1.0], vec![1.0, 0.5], 0.8);
        let e1 = Point::e1(2, 1.0);
        let origin = Point::origin(2);
        for &(a, b) in &[(0.4, 0.2), (1.7, -0.9), (-0.5, 0.3)] {
            let q = Point::new(vec![a, b]).unwrap();
            let y = s.to_ambient(a, b);
            let lhs = tau_p(&origin, &e1, &q).unwrap();
            let rhs = tau_p(s.puncture(), s.center(), &y).unwrap();
            assert!((lhs - rhs).abs() < 1e-13, "{lhs} {rhs}");
            let (t, th) = s.to_polar(&y).unwrap();
            assert!((t - q.norm()).abs() < 1e-13);
            assert!((th - b.atan2(a).abs()).abs() < 1e-12);
        }
        assert_eq!(s.to_ambient(1.0, 0.0).coords(), s.center().coords());
    }

    #[test]
    fn three_dimensional_sections() {
        let s = spec(vec![1.0, 2.0, 2.0], vec![0.0, 0.0, 0.0], 0.5);
        let y = s.to_ambient(0.8, 0.6);
        let (t, th) = s.to_polar(&y).unwrap();
        assert!((t - 1.0).abs() < 1e-14);
        assert!((th - 0.6f64.atan2(0.8)).abs() < 1e-14);
        let n = s.normal.coords();
        let a = s.axis.coords();
        assert!(n.iter().zip(a).map(|(x, y)| x * y).sum::<f64>().abs() < 1e-15);
    }

    #[test]
    fn invalid_specs() {
        let p = Point::origin(2);
        let r = Radius::new(1.0).unwrap();
        assert!(matches!(
            BallSpec::new(p.clone(), p.clone(), r),
            Err(Error::OnBoundary { .. })
        ));
        assert!(BallSpec::new(Point::e1(3, 1.0), p, r).is_err());
        assert!(BallSpec::new(Point::e1(1, 1.0), Point::origin(1), r).is_err());
    }
}
