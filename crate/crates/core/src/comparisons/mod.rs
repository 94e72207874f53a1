//! Comparison inequalities between the Cassinian metrics and the other
//! hyperbolic-type metrics, checked pointwise.
//!
//! Each [`TheoremId`] names one inequality chain. [`check_theorem`] returns
//! one [`TheoremReport`] per inequality of the chain (two for two-sided
//! statements), with `slack = rhs - lhs`.

mod density;
mod sharpness;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use density::{check_density_bounds, claimed_density_limit, density_limit, DensityVariant};
pub use sharpness::{
    default_schedule, s_tau_equality_witness, sharpness_family, sharpness_scan, ConvergenceRate, Endpoint,
    EqualityWitness, SharpnessFamily, SharpnessScan, SHARPNESS_TOL,
};

use crate::error::{Error, Result};
use crate::metric::{self, Point, PuncturedDomain};

/// A report holds when `slack >= -REPORT_TOL`.
pub const REPORT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// `tau_p <= u_p <= 2 tau_p`.
    #[serde(rename = "T_tau_u")]
    TauU,
    /// `tau_hat <= u`.
    #[serde(rename = "T_tauhat_u")]
    TauHatU,
    /// `j_tilde / 2 <= tau_p <= 2 j_tilde`.
    #[serde(rename = "T_tau_jtilde")]
    TauJTilde,
    /// `tau_hat <= 2 j_tilde`.
    #[serde(rename = "T_tauhat_jtilde")]
    TauHatJTilde,
    /// `j <= tau_p <= 2 j`.
    #[serde(rename = "T_tau_j")]
    TauJ,
    /// `tau_hat <= 2 j`.
    #[serde(rename = "T_tauhat_j")]
    TauHatJ,
    /// `j* / 2 <= tanh(tau_p / 2) <= 2 j*`.
    #[serde(rename = "T_tanh_jstar")]
    TanhJStar,
    /// `s <= (e^tau_p - 1) / 4`.
    #[serde(rename = "T_s_tau")]
    STau,
    /// Local two-sided bounds for `tau_p` inside `B(x, d(x,p))`.
    #[serde(rename = "T_density_once")]
    DensityOnce,
    /// Local two-sided bounds for `tau_hat` inside `B(x, d(x))`.
    #[serde(rename = "T_density_avg")]
    DensityAvg,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::TauU,
        TheoremId::TauHatU,
        TheoremId::TauJTilde,
        TheoremId::TauHatJTilde,
        TheoremId::TauJ,
        TheoremId::TauHatJ,
        TheoremId::TanhJStar,
        TheoremId::STau,
        TheoremId::DensityOnce,
        TheoremId::DensityAvg,
    ];

    /// The global comparison inequalities (everything except the density bounds).
    pub const COMPARISONS: [TheoremId; 8] = [
        TheoremId::TauU,
        TheoremId::TauHatU,
        TheoremId::TauJTilde,
        TheoremId::TauHatJTilde,
        TheoremId::TauJ,
        TheoremId::TauHatJ,
        TheoremId::TanhJStar,
        TheoremId::STau,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TheoremId::TauU => "T_tau_u",
            TheoremId::TauHatU => "T_tauhat_u",
            TheoremId::TauJTilde => "T_tau_jtilde",
            TheoremId::TauHatJTilde => "T_tauhat_jtilde",
            TheoremId::TauJ => "T_tau_j",
            TheoremId::TauHatJ => "T_tauhat_j",
            TheoremId::TanhJStar => "T_tanh_jstar",
            TheoremId::STau => "T_s_tau",
            TheoremId::DensityOnce => "T_density_once",
            TheoremId::DensityAvg => "T_density_avg",
        }
    }

    /// Statements about a once-punctured space.
    pub fn single_puncture(self) -> bool {
        matches!(
            self,
            TheoremId::TauU
                | TheoremId::TauJTilde
                | TheoremId::TauJ
                | TheoremId::TanhJStar
                | TheoremId::STau
                | TheoremId::DensityOnce
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::config(format!("unknown theorem id {s:?}")))
    }
}

/// Which inequality of a chain a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
    Single,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub side: Side,
    pub x: Point,
    pub y: Point,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

impl TheoremReport {
    pub(crate) fn new(theorem: TheoremId, side: Side, x: &Point, y: &Point, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        TheoremReport {
            theorem,
            side,
            x: x.clone(),
            y: y.clone(),
            lhs,
            rhs,
            slack,
            holds: slack >= -REPORT_TOL,
        }
    }
}

fn single_puncture_of(id: TheoremId, domain: &PuncturedDomain) -> Result<&Point> {
    match domain.punctures() {
        [p] => Ok(p),
        ps => Err(Error::config(format!(
            "{id} is stated for a once-punctured space, got {} punctures",
            ps.len()
        ))),
    }
}

/// Evaluates both sides of theorem `id` at `(x, y)`.
pub fn check_theorem(id: TheoremId, domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<Vec<TheoremReport>> {
    use Side::*;
    let rep = |side, lhs, rhs| TheoremReport::new(id, side, x, y, lhs, rhs);

    let base = if id.single_puncture() {
        Some(single_puncture_of(id, domain)?)
    } else {
        None
    };
    let tau_p = || metric::tau_p(base.expect("single-puncture theorem"), x, y);
    let reports = match id {
        TheoremId::TauU => {
            let tau = tau_p()?;
            let u = metric::u_metric(domain, x, y)?;
            vec![rep(Lower, tau, u), rep(Upper, u, 2.0 * tau)]
        }
        TheoremId::TauHatU => {
            let tau = metric::tau_hat(domain, x, y)?;
            vec![rep(Single, tau, metric::u_metric(domain, x, y)?)]
        }
        TheoremId::TauJTilde => {
            let tau = tau_p()?;
            let jt = metric::j_tilde(domain, x, y)?;
            vec![rep(Lower, 0.5 * jt, tau), rep(Upper, tau, 2.0 * jt)]
        }
        TheoremId::TauHatJTilde => {
            let tau = metric::tau_hat(domain, x, y)?;
            vec![rep(Single, tau, 2.0 * metric::j_tilde(domain, x, y)?)]
        }
        TheoremId::TauJ => {
            let tau = tau_p()?;
            let j = metric::j_metric(domain, x, y)?;
            vec![rep(Lower, j, tau), rep(Upper, tau, 2.0 * j)]
        }
        TheoremId::TauHatJ => {
            let tau = metric::tau_hat(domain, x, y)?;
            vec![rep(Single, tau, 2.0 * metric::j_metric(domain, x, y)?)]
        }
        TheoremId::TanhJStar => {
            let th = (0.5 * tau_p()?).tanh();
            let js = metric::j_star(domain, x, y)?;
            vec![rep(Lower, 0.5 * js, th), rep(Upper, th, 2.0 * js)]
        }
        TheoremId::STau => {
            let tau = tau_p()?;
            vec![rep(Single, metric::s_metric(domain, x, y)?, tau.exp_m1() / 4.0)]
        }
        TheoremId::DensityOnce => check_density_bounds(DensityVariant::Once, domain, x, y)?,
        TheoremId::DensityAvg => check_density_bounds(DensityVariant::Average, domain, x, y)?,
    };
    Ok(reports)
}
