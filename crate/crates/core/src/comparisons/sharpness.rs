//! One-parameter point families along which a comparison inequality
//! becomes asymptotically tight, and numerical limits of the ratio of its
//! two sides.
//!
//! Families with both points on the `e_1` axis of `R^2 \ {0}` diverge
//! logarithmically as `t -> 0`: both sides grow like multiples of `log(1/t)`
//! with `O(sqrt t)` corrections. For those the ratio of secant slopes
//! `(N_i - N_{i+1}) / (D_i - D_{i+1})` removes the constant terms, and the
//! remaining `sqrt t` expansion is extrapolated. All other families are
//! analytic in the distance `h` to the endpoint and are extrapolated in `h`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TheoremId;
use crate::error::{Error, Result};
use crate::extrapolate::richardson;
use crate::metric::{self, Point, PuncturedDomain};

/// Required agreement between an extrapolated and a claimed limit.
pub const SHARPNESS_TOL: f64 = 1e-3;

/// Dimension of the ambient space used by all families.
const FAMILY_DIM: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Endpoint {
    ToZero,
    ToOne,
}

impl Endpoint {
    /// Distance from `t` to the endpoint.
    pub fn gap(self, t: f64) -> f64 {
        match self {
            Endpoint::ToZero => t,
            Endpoint::ToOne => 1.0 - t,
        }
    }

    fn at_gap(self, gap: f64) -> f64 {
        match self {
            Endpoint::ToZero => gap,
            Endpoint::ToOne => 1.0 - gap,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Endpoint::ToZero => "toZero",
            Endpoint::ToOne => "toOne",
        })
    }
}

impl FromStr for Endpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zero" | "tozero" | "0" => Ok(Endpoint::ToZero),
            "one" | "toone" | "1" => Ok(Endpoint::ToOne),
            _ => Err(Error::config(format!("unknown endpoint {s:?}, expected zero or one"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ConvergenceRate {
    /// Analytic in the distance to the endpoint.
    Power,
    /// Both sides diverge like `log(1/t)`.
    Logarithmic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Placement {
    /// `R^2 \ {0}`, `x = e1`, `y = t e1`.
    AxisOnce,
    /// `R^2 \ {-e1, e1}`, `x = -t e1`, `y = t e1`.
    Symmetric,
    /// `R^2 \ {-e1, e1}`, `x = 0`, `y = t e1`.
    FromCenter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantity {
    Tau,
    TanhHalfTau,
    U,
    JTilde,
    J,
    JStar,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::Tau => "tau",
            Quantity::TanhHalfTau => "tanh(tau/2)",
            Quantity::U => "u",
            Quantity::JTilde => "jtilde",
            Quantity::J => "j",
            Quantity::JStar => "jstar",
        }
    }

    fn eval(self, d: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
        // tau_hat over a single puncture is tau_p
        match self {
            Quantity::Tau => metric::tau_hat(d, x, y),
            Quantity::TanhHalfTau => Ok((0.5 * metric::tau_hat(d, x, y)?).tanh()),
            Quantity::U => metric::u_metric(d, x, y),
            Quantity::JTilde => metric::j_tilde(d, x, y),
            Quantity::J => metric::j_metric(d, x, y),
            Quantity::JStar => metric::j_star(d, x, y),
        }
    }
}

/// The point family and ratio used to probe one theorem at one endpoint.
#[derive(Debug, Clone)]
pub struct SharpnessFamily {
    pub theorem: TheoremId,
    pub endpoint: Endpoint,
    /// Domain and point placement.
    pub label: &'static str,
    /// The limit stated for this family.
    pub claimed_limit: f64,
    pub rate: ConvergenceRate,
    placement: Placement,
    numerator: Quantity,
    denominator: Quantity,
}

impl SharpnessFamily {
    pub fn domain(&self) -> PuncturedDomain {
        match self.placement {
            Placement::AxisOnce => PuncturedDomain::once(Point::origin(FAMILY_DIM)),
            Placement::Symmetric | Placement::FromCenter => {
                PuncturedDomain::new(vec![Point::e1(FAMILY_DIM, -1.0), Point::e1(FAMILY_DIM, 1.0)])
                    .expect("distinct punctures")
            }
        }
    }

    pub fn points(&self, t: f64) -> (Point, Point) {
        let e1 = |s| Point::e1(FAMILY_DIM, s);
        match self.placement {
            Placement::AxisOnce => (e1(1.0), e1(t)),
            Placement::Symmetric => (e1(-t), e1(t)),
            Placement::FromCenter => (e1(0.0), e1(t)),
        }
    }

    /// Numerator and denominator of the ratio at parameter `t`.
    pub fn terms(&self, t: f64) -> Result<(f64, f64)> {
        let d = self.domain();
        let (x, y) = self.points(t);
        Ok((self.numerator.eval(&d, &x, &y)?, self.denominator.eval(&d, &x, &y)?))
    }

    /// e.g. `tau/u on R^2\\{0}, x=e1, y=t*e1`.
    pub fn description(&self) -> String {
        format!(
            "{}/{} on {}",
            self.numerator.name(),
            self.denominator.name(),
            self.label
        )
    }

    pub fn ratio(&self, t: f64) -> Result<f64> {
        let (n, d) = self.terms(t)?;
        Ok(n / d)
    }
}

/// Looks up the family for `(id, endpoint)`.
pub fn sharpness_family(id: TheoremId, endpoint: Endpoint) -> Result<SharpnessFamily> {
    use ConvergenceRate::*;
    use Endpoint::*;
    use Placement::*;
    use Quantity::*;

    const AXIS: &str = "R^2\\{0}, x=e1, y=t*e1";
    const SYM: &str = "R^2\\{-e1,e1}, x=-t*e1, y=t*e1";
    const CENTER: &str = "R^2\\{-e1,e1}, x=0, y=t*e1";

    let (placement, numerator, denominator, claimed_limit, rate) = match (id, endpoint) {
        (TheoremId::TauU, ToZero) => (AxisOnce, Tau, U, 0.5, Logarithmic),
        (TheoremId::TauHatU, ToZero) => (Symmetric, U, Tau, 1.0, Power),
        (TheoremId::TauJTilde, ToOne) => (AxisOnce, JTilde, Tau, 0.5, Power),
        (TheoremId::TauJTilde, ToZero) => (AxisOnce, JTilde, Tau, 2.0, Logarithmic),
        (TheoremId::TauHatJTilde, ToZero) => (FromCenter, JTilde, Tau, 0.5, Power),
        (TheoremId::TauJ, ToZero) => (AxisOnce, Tau, J, 1.0, Logarithmic),
        (TheoremId::TauJ, ToOne) => (AxisOnce, Tau, J, 2.0, Power),
        (TheoremId::TanhJStar, ToOne) => (AxisOnce, TanhHalfTau, JStar, 2.0, Power),
        (TheoremId::STau, _) => {
            return Err(Error::config(
                "T_s_tau is sharp at the single pair (e1, -e1); use the equality witness",
            ))
        }
        _ => {
            return Err(Error::config(format!("{id} states no sharpness family at {endpoint}")));
        }
    };
    let label = match placement {
        AxisOnce => AXIS,
        Symmetric => SYM,
        FromCenter => CENTER,
    };
    Ok(SharpnessFamily {
        theorem: id,
        endpoint,
        label,
        claimed_limit,
        rate,
        placement,
        numerator,
        denominator,
    })
}

/// Ratio samples along a family together with their extrapolated limit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SharpnessScan {
    pub theorem: TheoremId,
    pub family: String,
    pub endpoint: Endpoint,
    pub rate: ConvergenceRate,
    pub t_values: Vec<f64>,
    pub ratios: Vec<f64>,
    pub extrapolated_limit: f64,
    pub claimed_limit: f64,
    /// `|extrapolated_limit - claimed_limit|`.
    pub discrepancy: f64,
    /// Whether the sampled ratios move monotonically toward the endpoint.
    pub monotone: bool,
}

impl SharpnessScan {
    pub fn matches(&self, tol: f64) -> bool {
        self.discrepancy < tol
    }
}

/// Decade schedule `10^-1, 10^-2, ...` of distances to the endpoint, ending at `gap_min`.
pub fn default_schedule(endpoint: Endpoint, gap_min: f64) -> Result<Vec<f64>> {
    if !(gap_min > 0.0 && gap_min <= 1e-3) {
        return Err(Error::out_of_range(format!(
            "minimal distance to the endpoint must lie in (0, 1e-3], got {gap_min}"
        )));
    }
    let mut gaps = Vec::new();
    let mut k = 1;
    loop {
        let g = 10f64.powi(-k);
        if g < gap_min * (1.0 - 1e-9) {
            break;
        }
        gaps.push(g);
        k += 1;
    }
    if gaps.last().is_some_and(|&g| g > gap_min * (1.0 + 1e-9)) {
        gaps.push(gap_min);
    }
    Ok(gaps.into_iter().map(|g| endpoint.at_gap(g)).collect())
}

/// Evaluates the family of `(id, endpoint)` on `t_schedule` and extrapolates
/// the ratio to the endpoint.
pub fn sharpness_scan(id: TheoremId, endpoint: Endpoint, t_schedule: &[f64]) -> Result<SharpnessScan> {
    let family = sharpness_family(id, endpoint)?;
    validate_schedule(endpoint, family.rate, t_schedule)?;

    let terms = t_schedule
        .iter()
        .map(|&t| family.terms(t))
        .collect::<Result<Vec<_>>>()?;
    let ratios: Vec<f64> = terms.iter().map(|(n, d)| n / d).collect();

    let extrapolated_limit = match family.rate {
        ConvergenceRate::Power => {
            let gaps: Vec<f64> = t_schedule.iter().map(|&t| endpoint.gap(t)).collect();
            richardson(&gaps, &ratios)?
        }
        ConvergenceRate::Logarithmic => {
            let secants: Vec<f64> = terms
                .windows(2)
                .map(|w| (w[0].0 - w[1].0) / (w[0].1 - w[1].1))
                .collect();
            let nodes: Vec<f64> = t_schedule[..secants.len()].iter().map(|t| t.sqrt()).collect();
            richardson(&nodes, &secants)?
        }
    };

    let diffs: Vec<f64> = ratios.windows(2).map(|w| w[1] - w[0]).collect();
    let monotone = diffs.iter().all(|&d| d >= 0.0) || diffs.iter().all(|&d| d <= 0.0);

    Ok(SharpnessScan {
        theorem: id,
        family: family.description(),
        endpoint,
        rate: family.rate,
        t_values: t_schedule.to_vec(),
        ratios,
        extrapolated_limit,
        claimed_limit: family.claimed_limit,
        discrepancy: (extrapolated_limit - family.claimed_limit).abs(),
        monotone,
    })
}

fn validate_schedule(endpoint: Endpoint, rate: ConvergenceRate, t: &[f64]) -> Result<()> {
    let needed = match rate {
        ConvergenceRate::Power => 2,
        ConvergenceRate::Logarithmic => 3,
    };
    if t.len() < needed {
        return Err(Error::config(format!("schedule needs at least {needed} values")));
    }
    if let Some(bad) = t.iter().find(|&&v| !(v > 0.0 && v < 1.0)) {
        return Err(Error::out_of_range(format!("schedule value {bad} outside (0, 1)")));
    }
    if t.windows(2).any(|w| endpoint.gap(w[1]) >= endpoint.gap(w[0])) {
        return Err(Error::config(format!(
            "schedule must move strictly monotonically {endpoint}"
        )));
    }
    Ok(())
}

/// Both sides of `s <= (e^tau - 1)/4` at the pair where it is attained.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EqualityWitness {
    pub x: Point,
    pub y: Point,
    pub s: f64,
    pub bound: f64,
    pub slack: f64,
}

/// `x = e1`, `y = -e1` in `R^2 \ {0}`.
pub fn s_tau_equality_witness() -> EqualityWitness {
    let d = PuncturedDomain::once(Point::origin(FAMILY_DIM));
    let (x, y) = (Point::e1(FAMILY_DIM, 1.0), Point::e1(FAMILY_DIM, -1.0));
    let s = metric::s_metric(&d, &x, &y).expect("off the puncture");
    let bound = metric::tau_p(&Point::origin(FAMILY_DIM), &x, &y)
        .expect("off the puncture")
        .exp_m1()
        / 4.0;
    EqualityWitness {
        x,
        y,
        s,
        bound,
        slack: bound - s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // closed forms along x = e1, y = t e1 in R^2 \ {0}
    fn tau_axis(t: f64) -> f64 {
        (1.0 + 2.0 * (1.0 - t) / t.sqrt()).ln()
    }
    fn u_axis(t: f64) -> f64 {
        2.0 * ((2.0 - t) / t.sqrt()).ln()
    }

    fn scan(id: TheoremId, e: Endpoint) -> SharpnessScan {
        sharpness_scan(id, e, &default_schedule(e, 1e-6).unwrap()).unwrap()
    }

    #[test]
    fn family_terms_match_closed_forms() {
        let f = sharpness_family(TheoremId::TauU, Endpoint::ToZero).unwrap();
        for t in [0.9, 0.25, 1e-3] {
            let (n, d) = f.terms(t).unwrap();
            assert!((n - tau_axis(t)).abs() < 1e-12);
            assert!((d - u_axis(t)).abs() < 1e-12);
        }
        let f = sharpness_family(TheoremId::TauHatU, Endpoint::ToZero).unwrap();
        let t: f64 = 0.5;
        let (n, d) = f.terms(t).unwrap();
        assert!((n - 2.0 * ((1.0 + t) / (1.0 - t)).ln()).abs() < 1e-12);
        assert!((d - (1.0 + 4.0 * t / (1.0 - t * t).sqrt()).ln()).abs() < 1e-12);
    }

    #[test]
    fn claimed_limits_are_recovered() {
        let cases = [
            (TheoremId::TauU, Endpoint::ToZero, 0.5),
            (TheoremId::TauHatU, Endpoint::ToZero, 1.0),
            (TheoremId::TauJTilde, Endpoint::ToOne, 0.5),
            (TheoremId::TauJTilde, Endpoint::ToZero, 2.0),
            (TheoremId::TauHatJTilde, Endpoint::ToZero, 0.5),
            (TheoremId::TauJ, Endpoint::ToZero, 1.0),
            (TheoremId::TauJ, Endpoint::ToOne, 2.0),
            (TheoremId::TanhJStar, Endpoint::ToOne, 2.0),
        ];
        for (id, e, limit) in cases {
            let s = scan(id, e);
            assert_eq!(s.claimed_limit, limit);
            assert!(s.matches(SHARPNESS_TOL), "{id} {e}: {}", s.extrapolated_limit);
        }
    }

    #[test]
    fn tau_u_ratio_near_one_stays_away_from_the_bounds() {
        // tau ~ 2(1-t) and u ~ 3(1-t) as t -> 1
        let f = sharpness_family(TheoremId::TauU, Endpoint::ToZero).unwrap();
        assert!((f.ratio(1.0 - 1e-6).unwrap() - 2.0 / 3.0).abs() < 1e-5);
    }

    #[test]
    fn raw_log_rate_ratios_are_far_from_the_limit() {
        let s = scan(TheoremId::TauJTilde, Endpoint::ToZero);
        let last = *s.ratios.last().unwrap();
        assert!((last - 2.0).abs() > 0.1);
        assert!(s.monotone);
    }

    #[test]
    fn families_without_statement_are_config_errors() {
        for (id, e) in [
            (TheoremId::TauHatJ, Endpoint::ToZero),
            (TheoremId::TauHatJ, Endpoint::ToOne),
            (TheoremId::TauHatU, Endpoint::ToOne),
            (TheoremId::TauU, Endpoint::ToOne),
            (TheoremId::STau, Endpoint::ToZero),
            (TheoremId::DensityOnce, Endpoint::ToZero),
        ] {
            assert!(matches!(sharpness_family(id, e), Err(Error::Config(_))));
        }
    }

    #[test]
    fn schedule_validation() {
        let e = Endpoint::ToZero;
        assert!(matches!(
            sharpness_scan(TheoremId::TauJ, e, &[0.1, 0.01, 0.0]),
            Err(Error::OutOfRange(_))
        ));
        assert!(sharpness_scan(TheoremId::TauJ, e, &[0.01, 0.1, 0.001]).is_err());
        assert!(sharpness_scan(TheoremId::TauJ, Endpoint::ToOne, &[0.9, 0.99, 1.5]).is_err());
        assert!(default_schedule(e, 0.5).is_err());
        assert_eq!(default_schedule(e, 1e-3).unwrap(), vec![0.1, 0.01, 0.001]);
        assert_eq!(default_schedule(e, 5e-4).unwrap().len(), 4);
        let one = default_schedule(Endpoint::ToOne, 1e-6).unwrap();
        assert_eq!(one.len(), 6);
        assert!((1.0 - one[5] - 1e-6).abs() < 1e-15);
    }

    #[test]
    fn equality_witness() {
        let w = s_tau_equality_witness();
        assert_eq!(w.s, 1.0);
        assert!((w.bound - 1.0).abs() < 1e-12);
        assert!(w.slack.abs() < 1e-12);
    }

    #[test]
    fn endpoint_parsing() {
        assert_eq!("zero".parse::<Endpoint>().unwrap(), Endpoint::ToZero);
        assert_eq!("toOne".parse::<Endpoint>().unwrap(), Endpoint::ToOne);
        assert!("half".parse::<Endpoint>().is_err());
    }
}
