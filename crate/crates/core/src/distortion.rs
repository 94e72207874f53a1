//! Bilipschitz test maps and the distortion of `tau_p` under them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extrapolate::richardson;
use crate::metric::{euclid_dist, tau_p, Point, PuncturedDomain};
use crate::sampling::sphere_directions;

/// Slack on the `[L^-2, L^2]` ratio bound.
pub const DISTORTION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum TestMap {
    /// `x -> scale * R(angle) x + translation`, rotating the `(x1, x2)` plane.
    Similarity {
        scale: f64,
        angle: f64,
        translation: Vec<f64>,
    },
    /// `(x1, x2, ..) -> (factor * x1, x2, ..)`.
    AxisStretch { factor: f64 },
    /// Applied left to right.
    Composite { maps: Vec<TestMap> },
}

impl TestMap {
    pub fn similarity(scale: f64, angle: f64, translation: Vec<f64>) -> Result<Self> {
        if !(scale.is_finite() && scale > 0.0) || !angle.is_finite() || translation.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "similarity needs a positive scale and finite parameters, got scale {scale}, angle {angle}"
            )));
        }
        Ok(TestMap::Similarity {
            scale,
            angle,
            translation,
        })
    }

    pub fn axis_stretch(factor: f64) -> Result<Self> {
        if !(factor.is_finite() && factor >= 1.0) {
            return Err(Error::InvalidInput(format!(
                "stretch factor must be >= 1, got {factor}"
            )));
        }
        Ok(TestMap::AxisStretch { factor })
    }

    pub fn composite(maps: Vec<TestMap>) -> Self {
        TestMap::Composite { maps }
    }

    pub fn identity() -> Self {
        TestMap::Composite { maps: Vec::new() }
    }

    /// Euclidean bilipschitz constant; exact for similarities and stretches,
    /// the product of the factors' constants for composites.
    pub fn bilipschitz_constant(&self) -> f64 {
        match self {
            TestMap::Similarity { scale, .. } => scale.max(1.0 / scale),
            TestMap::AxisStretch { factor } => *factor,
            TestMap::Composite { maps } => maps.iter().map(TestMap::bilipschitz_constant).product(),
        }
    }
}

pub fn apply_map(f: &TestMap, x: &Point) -> Result<Point> {
    match f {
        TestMap::Similarity {
            scale,
            angle,
            translation,
        } => {
            let n = x.dim();
            if !translation.is_empty() && translation.len() != n {
                return Err(Error::Dimension {
                    expected: translation.len(),
                    found: n,
                });
            }
            let mut v = x.coords().to_vec();
            if *angle != 0.0 {
                if n < 2 {
                    return Err(Error::Dimension { expected: 2, found: n });
                }
                let (s, c) = angle.sin_cos();
                let (a, b) = (v[0], v[1]);
                v[0] = c * a - s * b;
                v[1] = s * a + c * b;
            }
            for (i, vi) in v.iter_mut().enumerate() {
                *vi = scale * *vi + translation.get(i).copied().unwrap_or(0.0);
            }
            Point::new(v)
        }
        TestMap::AxisStretch { factor } => {
            let mut v = x.coords().to_vec();
            v[0] *= factor;
            Point::new(v)
        }
        TestMap::Composite { maps } => maps.iter().try_fold(x.clone(), |y, g| apply_map(g, &y)),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistortionReport {
    pub map: TestMap,
    pub p: Point,
    pub x: Point,
    pub y: Point,
    pub tau: f64,
    pub tau_image: f64,
    /// `tau_{f(p)}(f(x), f(y)) / tau_p(x, y)`.
    pub ratio: f64,
    /// `|f(x) - f(y)| / |x - y|`.
    pub euclid_ratio: f64,
    /// `L^2`.
    pub bound: f64,
    pub euclid_holds: bool,
    pub holds: bool,
}

/// Compares `tau_p(x, y)` with `tau_{f(p)}(f(x), f(y))` against `[L^-2, L^2]`.
pub fn check_bilipschitz_distortion(f: &TestMap, p: &Point, x: &Point, y: &Point) -> Result<DistortionReport> {
    let d = euclid_dist(x, y)?;
    if d == 0.0 {
        return Err(Error::InvalidInput("distortion ratio needs x != y".into()));
    }
    let tau = tau_p(p, x, y)?;
    let (fp, fx, fy) = (apply_map(f, p)?, apply_map(f, x)?, apply_map(f, y)?);
    let tau_image = tau_p(&fp, &fx, &fy)?;
    let l = f.bilipschitz_constant();
    let ratio = tau_image / tau;
    let euclid_ratio = euclid_dist(&fx, &fy)? / d;
    let bound = l * l;
    let rel = 1.0 + DISTORTION_TOL;
    Ok(DistortionReport {
        map: f.clone(),
        p: p.clone(),
        x: x.clone(),
        y: y.clone(),
        tau,
        tau_image,
        ratio,
        euclid_ratio,
        bound,
        euclid_holds: euclid_ratio * l * rel >= 1.0 && euclid_ratio <= l * rel,
        holds: ratio >= 1.0 / bound - DISTORTION_TOL && ratio <= bound + DISTORTION_TOL,
    })
}

/// Radii `{1e-2, 1e-3, 1e-4} * d(z)` for [`linear_dilatation_estimate`].
pub fn default_radius_schedule(domain: &PuncturedDomain, z: &Point) -> Result<Vec<f64>> {
    let dz = domain.boundary_dist(z)?;
    Ok([1e-2, 1e-3, 1e-4].iter().map(|s| s * dz).collect())
}

/// `max_u |f(z + r u) - f(z)| / min_u |f(z + r u) - f(z)|`, extrapolated to `r = 0`.
pub fn linear_dilatation_estimate(f: &TestMap, z: &Point, r_schedule: &[f64], n_directions: usize) -> Result<f64> {
    if r_schedule.is_empty() || r_schedule.windows(2).any(|w| w[1] >= w[0]) || r_schedule.iter().any(|&r| r <= 0.0) {
        return Err(Error::config(
            "radius schedule must be positive and strictly decreasing",
        ));
    }
    if n_directions < 2 {
        return Err(Error::config("need at least two directions"));
    }
    let fz = apply_map(f, z)?;
    let dirs = sphere_directions(z.dim(), n_directions);
    let ratios = r_schedule
        .iter()
        .map(|&r| {
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            for u in &dirs {
                let len = euclid_dist(&apply_map(f, &z.offset(u, r)?)?, &fz)?;
                lo = lo.min(len);
                hi = hi.max(len);
            }
            Ok(hi / lo)
        })
        .collect::<Result<Vec<_>>>()?;
    richardson(r_schedule, &ratios)
}

/// `log(1 + a x) <= a log(1 + x)` for `a >= 1`, `x >= 0`.
pub fn bernoulli_step_holds(a: f64, x: f64) -> bool {
    (a * x).ln_1p() <= a * x.ln_1p() * (1.0 + 1e-15)
}
