use serde::{Deserialize, Serialize};

use super::{single_puncture_of, Side, TheoremId, TheoremReport};
use crate::error::{Error, Result};
use crate::extrapolate::richardson;
use crate::metric::{self, euclid_dist, Point, PuncturedDomain};

/// Which metric the local bounds are stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DensityVariant {
    /// `tau_p` on a once-punctured space, radius `delta = d(x, p)`.
    Once,
    /// `tau_hat` on a finitely punctured space, radius `delta = d(x)`.
    Average,
}

impl DensityVariant {
    fn theorem(self) -> TheoremId {
        match self {
            DensityVariant::Once => TheoremId::DensityOnce,
            DensityVariant::Average => TheoremId::DensityAvg,
        }
    }

    fn metric(self, domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
        match self {
            DensityVariant::Once => metric::tau_p(single_puncture_of(self.theorem(), domain)?, x, y),
            DensityVariant::Average => metric::tau_hat(domain, x, y),
        }
    }

    /// Validity radius `delta` at `x`.
    fn delta(self, domain: &PuncturedDomain, x: &Point) -> Result<f64> {
        if self == DensityVariant::Once {
            single_puncture_of(self.theorem(), domain)?;
        }
        domain.boundary_dist(x)
    }
}

/// `log(1 + 2d/(delta + d)) <= tau <= log(1 + 2d/(delta - d))` for `d = d(x,y) < delta`.
pub fn check_density_bounds(
    variant: DensityVariant,
    domain: &PuncturedDomain,
    x: &Point,
    y: &Point,
) -> Result<Vec<TheoremReport>> {
    let delta = variant.delta(domain, x)?;
    let d = euclid_dist(x, y)?;
    if d >= delta {
        return Err(Error::out_of_range(format!(
            "d(x,y) = {d} must be below the validity radius {delta}"
        )));
    }
    let tau = variant.metric(domain, x, y)?;
    let lower = (2.0 * d / (delta + d)).ln_1p();
    let upper = (2.0 * d / (delta - d)).ln_1p();
    let id = variant.theorem();
    Ok(vec![
        TheoremReport::new(id, Side::Lower, x, y, lower, tau),
        TheoremReport::new(id, Side::Upper, x, y, tau, upper),
    ])
}

/// The limit `2 / delta` claimed for `tau(x, y) / d(x, y)` as `y -> x`.
pub fn claimed_density_limit(variant: DensityVariant, domain: &PuncturedDomain, x: &Point) -> Result<f64> {
    Ok(2.0 / variant.delta(domain, x)?)
}

/// Richardson-extrapolated limit of `tau(x, x + h u) / h` over `h_schedule`.
pub fn density_limit(
    variant: DensityVariant,
    domain: &PuncturedDomain,
    x: &Point,
    direction: &Point,
    h_schedule: &[f64],
) -> Result<f64> {
    if (direction.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::config("direction must be a unit vector"));
    }
    let delta = variant.delta(domain, x)?;
    if h_schedule.is_empty() || h_schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::config("h schedule must be nonempty and strictly decreasing"));
    }
    if h_schedule[h_schedule.len() - 1] <= 0.0 || h_schedule[0] >= delta {
        return Err(Error::out_of_range(format!(
            "h schedule must lie in (0, {delta}), the validity ball around x"
        )));
    }
    let ratios = h_schedule
        .iter()
        .map(|&h| Ok(variant.metric(domain, x, &x.offset(direction, h)?)? / h))
        .collect::<Result<Vec<_>>>()?;
    richardson(h_schedule, &ratios)
}
