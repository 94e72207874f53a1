use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{self, Point, PuncturedDomain};
use crate::sampling::sphere_directions;

/// Relative margin `ε / d(x)` applied to both Euclidean radii.
pub const INCLUSION_MARGIN: f64 = 1e-6;

/// Euclidean radii `r <= R` with `B(x, r) ⊆ B_tau(x, t) ⊆ B(x, R)`:
/// `r = (e^t - 1)/(e^t + 1) d_x`, `R = (e^t - 1)/(3 - e^t) d_x`.
pub fn inclusion_radii(t: f64, dx: f64) -> Result<(f64, f64)> {
    let log3 = 3f64.ln();
    if !(0.0..log3).contains(&t) {
        return Err(Error::out_of_range(format!("t must lie in [0, log 3), got {t}")));
    }
    if !(dx.is_finite() && dx > 0.0) {
        return Err(Error::out_of_range(format!("d(x) must be positive, got {dx}")));
    }
    let em1 = t.exp_m1();
    Ok(((0.5 * t).tanh() * dx, em1 / (2.0 - em1) * dx))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InclusionReport {
    pub t: f64,
    pub x: Point,
    /// `d(x)`, distance from `x` to the nearest puncture.
    pub dx: f64,
    pub r_in: f64,
    pub r_out: f64,
    pub rays: usize,
    /// Rays whose point at distance `r_in - ε` has `tau >= t`.
    pub inner_violations: usize,
    /// Rays whose point at distance `R_out + ε` has `tau < t`.
    pub outer_violations: usize,
    /// `max (tau - t)` over the inner sphere, negative when the inclusion holds.
    pub inner_excess: f64,
    /// `min (tau - t)` over the outer sphere, nonnegative when the inclusion holds.
    pub outer_excess: f64,
    pub holds: bool,
}

/// Checks the Euclidean sandwich of `B_tau(x, t)` on `n_rays` rays from `x`.
///
/// `tau` is `tau_p` for a once-punctured domain and `tau_hat` otherwise. A ray
/// point that lands on a puncture is outside the domain and counts as excluded.
pub fn verify_inclusion(domain: &PuncturedDomain, x: &Point, t: f64, n_rays: usize) -> Result<InclusionReport> {
    if !(t > 0.0 && t < 3f64.ln()) {
        return Err(Error::out_of_range(format!("t must lie in (0, log 3), got {t}")));
    }
    if n_rays == 0 {
        return Err(Error::config("n_rays must be positive"));
    }
    let dx = domain.boundary_dist(x)?;
    let (r_in, r_out) = inclusion_radii(t, dx)?;
    let eps = INCLUSION_MARGIN * dx;
    let tau = |y: &Point| metric::tau_hat(domain, x, y);

    let mut report = InclusionReport {
        t,
        x: x.clone(),
        dx,
        r_in,
        r_out,
        rays: n_rays,
        inner_violations: 0,
        outer_violations: 0,
        inner_excess: f64::NEG_INFINITY,
        outer_excess: f64::INFINITY,
        holds: false,
    };
    for dir in sphere_directions(domain.dim(), n_rays) {
        if r_in > eps {
            let excess = tau(&x.offset(&dir, r_in - eps)?)? - t;
            report.inner_excess = report.inner_excess.max(excess);
            report.inner_violations += usize::from(excess >= 0.0);
        }
        match tau(&x.offset(&dir, r_out + eps)?) {
            Ok(v) => {
                let excess = v - t;
                report.outer_excess = report.outer_excess.min(excess);
                report.outer_violations += usize::from(excess < 0.0);
            }
            Err(Error::OnBoundary { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    report.holds = report.inner_violations == 0 && report.outer_violations == 0;
    Ok(report)
}
