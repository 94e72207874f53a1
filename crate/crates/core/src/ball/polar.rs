//! Polar description of `tau_0`-balls centred at `e1` in `R^2 \ {0}`.
//!
//! A point `y = t (cos θ, sin θ)` lies on the sphere of radius `r` iff
//! `t^2 + 1 - 2 t cos θ = c t` with `c = (e^r - 1)^2 / 4`, i.e. iff `t` is a
//! root of `t^2 - (2 cos θ + c) t + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c` values this close to 4 are treated as the pinched regime.
pub const REGIME_TOL: f64 = 1e-9;

/// A positive `tau_p`-radius, carried together with `e^r - 1`.
///
/// Radii built with [`Radius::log_of`] keep `e^r` exact, so `log 5` yields
/// `c = 4` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Radius {
    value: f64,
    exp_m1: f64,
}

impl Radius {
    pub fn new(r: f64) -> Result<Self> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::out_of_range(format!("radius must be positive, got {r}")));
        }
        Ok(Radius {
            value: r,
            exp_m1: r.exp_m1(),
        })
    }

    /// The radius `log x` for `x > 1`.
    pub fn log_of(x: f64) -> Result<Self> {
        if !(x.is_finite() && x > 1.0) {
            return Err(Error::out_of_range(format!(
                "log-radius argument must exceed 1, got {x}"
            )));
        }
        Ok(Radius {
            value: x.ln(),
            exp_m1: x - 1.0,
        })
    }

    pub fn value(self) -> f64 {
        self.value
    }

    /// `e^r`.
    pub fn growth(self) -> f64 {
        self.exp_m1 + 1.0
    }

    /// `c = (e^r - 1)^2 / 4`.
    pub fn c(self) -> f64 {
        self.exp_m1 * self.exp_m1 / 4.0
    }

    pub fn regime(self) -> Regime {
        Regime::of(self.c())
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FromStr for Radius {
    type Err = Error;

    /// Accepts plain numbers and the symbolic forms `log3`, `ln8.8`, `log(5)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let symbolic = s
            .strip_prefix("log")
            .or_else(|| s.strip_prefix("ln"))
            .map(|rest| rest.trim().trim_start_matches('(').trim_end_matches(')').trim());
        let parse = |v: &str| {
            v.parse::<f64>()
                .map_err(|_| Error::config(format!("cannot parse radius {s:?}")))
        };
        match symbolic {
            Some(arg) => Radius::log_of(parse(arg)?),
            None => Radius::new(parse(s)?),
        }
    }
}

/// Shape class of the sphere `{ tau_0(e1, y) = r }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `c < 4`: one loop inside the sector `|θ| < θ_max`.
    Sector,
    /// `c = 4`: the two branches touch at `-e1`.
    Pinched,
    /// `c > 4`: two loops around the puncture.
    Annular,
}

impl Regime {
    pub fn of(c: f64) -> Regime {
        if c < 4.0 - REGIME_TOL {
            Regime::Sector
        } else if c <= 4.0 + REGIME_TOL {
            Regime::Pinched
        } else {
            Regime::Annular
        }
    }
}

/// `(e^r - 1)^2 / 4`.
pub fn c_param(r: f64) -> Result<f64> {
    Ok(Radius::new(r)?.c())
}

/// Angular half-width of the ball seen from the puncture.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ThetaMax {
    Angle(f64),
    /// Every direction meets the sphere.
    Full,
}

/// `arccos(1 - c/2)`, or [`ThetaMax::Full`] in the annular regime.
pub fn theta_max(radius: Radius) -> ThetaMax {
    match radius.regime() {
        Regime::Sector => ThetaMax::Angle((1.0 - radius.c() / 2.0).acos()),
        Regime::Pinched => ThetaMax::Angle(std::f64::consts::PI),
        Regime::Annular => ThetaMax::Full,
    }
}

/// The two radial solutions at angle `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PolarRoots {
    /// `t1 <= t2`, `t1 * t2 = 1`.
    Pair {
        theta: f64,
        t1: f64,
        t2: f64,
    },
    Empty,
}

fn linear_coeff(radius: Radius, theta: f64) -> f64 {
    2.0 * theta.cos() + radius.c()
}

/// `α(θ) = (2 cos θ + c)^2 - 4`, the discriminant of the radial quadratic.
pub fn alpha(radius: Radius, theta: f64) -> f64 {
    let b = linear_coeff(radius, theta);
    (b - 2.0) * (b + 2.0)
}

/// `α'(θ) = -4 sin θ (2 cos θ + c)`.
pub fn alpha_prime(radius: Radius, theta: f64) -> f64 {
    -4.0 * theta.sin() * linear_coeff(radius, theta)
}

/// Roots of `t^2 - (2 cos θ + c) t + 1`, larger root first, smaller by `t1 = 1 / t2`.
pub fn polar_roots(radius: Radius, theta: f64) -> PolarRoots {
    let disc = alpha(radius, theta);
    if disc < 0.0 {
        return PolarRoots::Empty;
    }
    let (t1, t2) = roots_from_disc(linear_coeff(radius, theta), disc);
    PolarRoots::Pair { theta, t1, t2 }
}

/// Like [`polar_roots`], but clamps a discriminant that is negative only by
/// rounding (within `slack`) to zero. Used where `θ = ±θ_max` is sampled.
pub(crate) fn polar_roots_clamped(radius: Radius, theta: f64, slack: f64) -> Option<(f64, f64)> {
    let disc = alpha(radius, theta);
    if disc < -slack {
        return None;
    }
    Some(roots_from_disc(linear_coeff(radius, theta), disc.max(0.0)))
}

fn roots_from_disc(b: f64, disc: f64) -> (f64, f64) {
    // b >= 2 whenever disc >= 0, so the sum below never cancels
    let t2 = 0.5 * (b + disc.sqrt());
    (1.0 / t2, t2)
}

/// Slope of the boundary tangent, possibly vertical.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Slope {
    Finite(f64),
    Vertical,
}

impl Slope {
    pub fn finite(self) -> Option<f64> {
        match self {
            Slope::Finite(m) => Some(m),
            Slope::Vertical => None,
        }
    }
}

fn slope_from(num: f64, den: f64) -> Slope {
    if den == 0.0 || den.abs() <= 1e-15 * num.abs() {
        Slope::Vertical
    } else {
        Slope::Finite(num / den)
    }
}

fn slope_inputs(radius: Radius, theta: f64) -> Result<(f64, f64, f64)> {
    let a = alpha(radius, theta);
    if a <= 0.0 {
        return Err(Error::out_of_range(format!(
            "slope needs α(θ) > 0, got {a} at θ = {theta}"
        )));
    }
    Ok((theta.sin(), theta.tan(), a.sqrt()))
}

/// Tangent slope of the inner branch `t1(θ)`:
/// `(2 sin θ tan θ + √α) / (2 sin θ - tan θ √α)`.
pub fn slope_m1(radius: Radius, theta: f64) -> Result<Slope> {
    let (s, tn, sq) = slope_inputs(radius, theta)?;
    Ok(slope_from(2.0 * s * tn + sq, 2.0 * s - tn * sq))
}

/// Tangent slope of the outer branch `t2(θ)`:
/// `(2 sin θ tan θ - √α) / (2 sin θ + tan θ √α)`.
pub fn slope_m2(radius: Radius, theta: f64) -> Result<Slope> {
    let (s, tn, sq) = slope_inputs(radius, theta)?;
    Ok(slope_from(2.0 * s * tn - sq, 2.0 * s + tn * sq))
}

/// `4 sin^2 θ √α + sin θ α' - 2 cos θ α + α^{3/2}` for `0 < r <= log 3`
/// and `0 < θ < θ_max(r)`.
pub fn slope_expression(radius: Radius, theta: f64) -> Result<f64> {
    if radius.value() > 3f64.ln() {
        return Err(Error::out_of_range(format!(
            "expression is only considered for r <= log 3, got {}",
            radius.value()
        )));
    }
    let ThetaMax::Angle(limit) = theta_max(radius) else {
        unreachable!("r <= log 3 is in the sector regime");
    };
    if !(theta > 0.0 && theta < limit) {
        return Err(Error::out_of_range(format!("θ = {theta} outside (0, {limit})")));
    }
    let a = alpha(radius, theta);
    let sq = a.max(0.0).sqrt();
    let s = theta.sin();
    Ok(4.0 * s * s * sq + s * alpha_prime(radius, theta) - 2.0 * theta.cos() * a + a * sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn log_r(x: f64) -> Radius {
        Radius::log_of(x).unwrap()
    }

    fn tau_from_e1(t: f64, theta: f64) -> f64 {
        let (x, y) = (t * theta.cos(), t * theta.sin());
        let d = ((x - 1.0).powi(2) + y * y).sqrt();
        (2.0 * d / t.sqrt()).ln_1p()
    }

    #[test]
    fn c_param_examples() {
        assert!((c_param(3f64.ln()).unwrap() - 1.0).abs() < 1e-15);
        assert!((c_param(5f64.ln()).unwrap() - 4.0).abs() < 1e-14);
        assert_eq!(log_r(3.0).c(), 1.0);
        assert_eq!(log_r(5.0).c(), 4.0);
        assert!(c_param(1e-12).unwrap() < 1e-24);
        assert!(matches!(c_param(0.0), Err(Error::OutOfRange(_))));
        assert!(matches!(c_param(-1.0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn theta_max_examples() {
        let ThetaMax::Angle(a) = theta_max(log_r(3.0)) else {
            panic!()
        };
        assert!((a - PI / 3.0).abs() < 1e-15);
        assert_eq!(theta_max(log_r(5.0)), ThetaMax::Angle(PI));
        assert_eq!(theta_max(log_r(7.0)), ThetaMax::Full);
        let ThetaMax::Angle(b) = theta_max(Radius::new(1.2).unwrap()) else {
            panic!()
        };
        assert!(b > PI / 3.0);
    }

    #[test]
    fn roots_at_log3_on_axis() {
        let PolarRoots::Pair { t1, t2, .. } = polar_roots(log_r(3.0), 0.0) else {
            panic!()
        };
        assert!((t1 - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((t2 - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((tau_from_e1(t1, 0.0) - 3f64.ln()).abs() < 1e-14);
        assert!((tau_from_e1(t2, 0.0) - 3f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn pinched_double_root_at_minus_e1() {
        let PolarRoots::Pair { t1, t2, .. } = polar_roots(log_r(5.0), PI) else {
            panic!()
        };
        assert_eq!((t1, t2), (1.0, 1.0));
        assert!((tau_from_e1(1.0, PI) - 5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn no_roots_outside_sector() {
        assert_eq!(polar_roots(log_r(3.0), PI / 2.0), PolarRoots::Empty);
    }

    #[test]
    fn alpha_examples() {
        let r = log_r(3.0);
        assert_eq!(alpha(r, 0.0), 5.0);
        for x in [2.0, 3.0, 7.0] {
            let c = log_r(x).c();
            assert!((alpha(log_r(x), PI / 2.0) - (c * c - 4.0)).abs() < 1e-12);
            assert_eq!(alpha_prime(log_r(x), 0.0), 0.0);
        }
    }

    #[test]
    fn alpha_prime_matches_central_difference() {
        let h = 1e-5;
        for &(r, th) in &[(0.5, 0.3), (1.0, 0.7), (2.0, 2.5)] {
            let rad = Radius::new(r).unwrap();
            let fd = (alpha(rad, th + h) - alpha(rad, th - h)) / (2.0 * h);
            assert!((fd - alpha_prime(rad, th)).abs() < 1e-6);
        }
    }

    /// Slope of the parametric curve `t_branch(θ) (cos θ, sin θ)` by central differences.
    fn fd_slope(radius: Radius, theta: f64, outer: bool) -> f64 {
        let point = |th: f64| {
            let PolarRoots::Pair { t1, t2, .. } = polar_roots(radius, th) else {
                panic!()
            };
            let t = if outer { t2 } else { t1 };
            (t * th.cos(), t * th.sin())
        };
        let h = 1e-6;
        let (a, b) = (point(theta + h), point(theta - h));
        (a.1 - b.1) / (a.0 - b.0)
    }

    #[test]
    fn slopes_match_finite_differences() {
        let r = Radius::new(0.9 * 3f64.ln()).unwrap();
        let m1 = slope_m1(r, 0.2).unwrap().finite().unwrap();
        let m2 = slope_m2(r, 0.2).unwrap().finite().unwrap();
        assert!((m1 - fd_slope(r, 0.2, false)).abs() < 1e-6 * m1.abs().max(1.0));
        assert!((m2 - fd_slope(r, 0.2, true)).abs() < 1e-6 * m2.abs().max(1.0));
    }

    #[test]
    fn inner_slope_sign_near_axis() {
        // negative just above the axis once sqrt(α(0)) > 2
        let big = Radius::new(1.05 * 3f64.ln()).unwrap();
        assert!(slope_m1(big, 1e-3).unwrap().finite().unwrap() < 0.0);
        // vertical tangent on the axis
        assert_eq!(slope_m1(big, 0.0).unwrap(), Slope::Vertical);
        let small = Radius::new(0.5).unwrap();
        let m = slope_m1(small, 1e-6).unwrap().finite().unwrap();
        assert!(m > 1e5);
    }

    #[test]
    fn slope_outside_sector_is_an_error() {
        assert!(matches!(slope_m1(log_r(3.0), PI / 2.0), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn slope_expression_examples() {
        let r = log_r(3.0);
        // at θ = π/6 the value is negative
        assert!(slope_expression(r, PI / 6.0).unwrap() < 0.0);
        let half = Radius::new(0.5).unwrap();
        let ThetaMax::Angle(tm) = theta_max(half) else { panic!() };
        assert!(slope_expression(half, tm / 2.0).unwrap() <= 0.0);
        // the θ -> 0 limit is α(0)(√α(0) - 2)
        let a0 = alpha(r, 0.0);
        let near = slope_expression(r, 1e-7).unwrap();
        assert!((near - a0 * (a0.sqrt() - 2.0)).abs() < 1e-5);
        assert!(near > 0.0);
    }

    #[test]
    fn slope_expression_domain() {
        assert!(slope_expression(Radius::new(1.2).unwrap(), 0.1).is_err());
        assert!(slope_expression(log_r(3.0), 0.0).is_err());
        let ThetaMax::Angle(tm) = theta_max(log_r(3.0)) else {
            panic!()
        };
        assert!(slope_expression(log_r(3.0), tm).is_err());
    }

    #[test]
    fn radius_tokens() {
        assert_eq!("log5".parse::<Radius>().unwrap(), log_r(5.0));
        assert_eq!("ln(8.8)".parse::<Radius>().unwrap(), log_r(8.8));
        assert_eq!("0.5".parse::<Radius>().unwrap().value(), 0.5);
        assert!("-1".parse::<Radius>().is_err());
        assert!("logx".parse::<Radius>().is_err());
        assert!("log0.5".parse::<Radius>().is_err());
    }

    #[test]
    fn regimes() {
        assert_eq!(log_r(3.0).regime(), Regime::Sector);
        assert_eq!(log_r(5.0).regime(), Regime::Pinched);
        assert_eq!(Radius::new(5f64.ln()).unwrap().regime(), Regime::Pinched);
        assert_eq!(log_r(7.0).regime(), Regime::Annular);
        assert_eq!(log_r(8.8).regime(), Regime::Annular);
    }
}
