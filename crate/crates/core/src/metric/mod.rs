//! Hyperbolic-type metrics on finitely punctured Euclidean spaces.
//!
//! All metrics take the puncture set of a [`PuncturedDomain`] as the
//! boundary. The log-type metrics (`tau_p`, `tau_hat`, `tau_tilde`, `u`,
//! `j_tilde`, `j`) use natural logarithms; `j_star` and `s` take values in
//! `[0, 1]`.

mod axioms;
pub mod formula;
mod point;

use serde::{Deserialize, Serialize};

pub use axioms::{metric_axioms_check, ptolemy_check, AxiomReport, PtolemyCheck};
pub use point::{boundary_dist, euclid_dist, Point, PuncturedDomain, BOUNDARY_GUARD};

use crate::error::{Error, Result};
pub(crate) use point::{dist_unchecked, same_dim};

/// Selects one of the implemented metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "base", rename_all = "camelCase")]
pub enum MetricKind {
    /// `tau_p` for the given base point, ignoring the domain's punctures.
    TauP(Point),
    TauHat,
    TauTilde,
    U,
    JTilde,
    J,
    JStar,
    S,
}

impl MetricKind {
    /// Every kind that is evaluated against a domain, plus `tau_p` based at `p`.
    pub fn all(p: Point) -> [MetricKind; 8] {
        [
            MetricKind::TauP(p),
            MetricKind::TauHat,
            MetricKind::TauTilde,
            MetricKind::U,
            MetricKind::JTilde,
            MetricKind::J,
            MetricKind::JStar,
            MetricKind::S,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            MetricKind::TauP(_) => "tauP",
            MetricKind::TauHat => "tauHat",
            MetricKind::TauTilde => "tauTilde",
            MetricKind::U => "u",
            MetricKind::JTilde => "jTilde",
            MetricKind::J => "j",
            MetricKind::JStar => "jStar",
            MetricKind::S => "s",
        }
    }

    /// Whether values are confined to `[0, 1]`.
    pub fn is_bounded(&self) -> bool {
        matches!(self, MetricKind::JStar | MetricKind::S)
    }

    pub fn evaluate(&self, domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
        match self {
            MetricKind::TauP(p) => tau_p(p, x, y),
            MetricKind::TauHat => tau_hat(domain, x, y),
            MetricKind::TauTilde => tau_tilde(domain, x, y),
            MetricKind::U => u_metric(domain, x, y),
            MetricKind::JTilde => j_tilde(domain, x, y),
            MetricKind::J => j_metric(domain, x, y),
            MetricKind::JStar => j_star(domain, x, y),
            MetricKind::S => s_metric(domain, x, y),
        }
    }
}

/// Distances `d(x,y)`, `d(x, p_i)` and `d(y, p_i)` for a validated pair.
struct PairDistances {
    dxy: f64,
    dxp: Vec<f64>,
    dyp: Vec<f64>,
}

impl PairDistances {
    fn new(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<Self> {
        let dxp = domain.puncture_distances(x)?;
        let dyp = domain.puncture_distances(y)?;
        Ok(PairDistances {
            dxy: dist_unchecked(x, y),
            dxp,
            dyp,
        })
    }

    fn dx(&self) -> f64 {
        self.dxp.iter().copied().fold(f64::INFINITY, f64::min)
    }

    fn dy(&self) -> f64 {
        self.dyp.iter().copied().fold(f64::INFINITY, f64::min)
    }

    fn max_over_punctures(&self, term: impl Fn(f64, f64, f64) -> f64) -> f64 {
        self.dxp
            .iter()
            .zip(&self.dyp)
            .map(|(&a, &b)| term(self.dxy, a, b))
            .fold(0.0, f64::max)
    }
}

/// Scale-invariant Cassinian metric of `R^n \ {p}`.
pub fn tau_p(p: &Point, x: &Point, y: &Point) -> Result<f64> {
    same_dim(p, x)?;
    same_dim(p, y)?;
    let dxp = dist_unchecked(x, p);
    let dyp = dist_unchecked(y, p);
    let nearest = dxp.min(dyp);
    if nearest < BOUNDARY_GUARD {
        return Err(Error::OnBoundary { distance: nearest });
    }
    Ok(formula::tau(dist_unchecked(x, y), dxp, dyp))
}

/// Average of `tau_{p_i}` over the punctures of `domain`.
pub fn tau_hat(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
    let d = PairDistances::new(domain, x, y)?;
    let sum: f64 = d.dxp.iter().zip(&d.dyp).map(|(&a, &b)| formula::tau(d.dxy, a, b)).sum();
    Ok(sum / domain.len() as f64)
}

/// Cassinian metric `log(1 + max_p d(x,y) / sqrt(d(x,p) d(p,y)))`.
pub fn tau_tilde(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
    let d = PairDistances::new(domain, x, y)?;
    Ok(d.max_over_punctures(formula::cassinian_ratio).ln_1p())
}

/// Ibragimov's `u` metric with the puncture set as boundary.
pub fn u_metric(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
    let d = PairDistances::new(domain, x, y)?;
    Ok(formula::u(d.dxy, d.dx(), d.dy()))
}

pub fn j_tilde(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
    let d = PairDistances::new(domain, x, y)?;
    Ok(formula::j_tilde(d.dxy, d.dx(), d.dy()))
}

pub fn j_metric(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
    let d = PairDistances::new(domain, x, y)?;
    Ok(formula::j(d.dxy, d.dx(), d.dy()))
}

pub fn j_star(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
    let d = PairDistances::new(domain, x, y)?;
    Ok(formula::j_star(d.dxy, d.dx(), d.dy()))
}

/// Triangular ratio metric `max_p d(x,y) / (d(x,p) + d(y,p))`.
pub fn s_metric(domain: &PuncturedDomain, x: &Point, y: &Point) -> Result<f64> {
    let d = PairDistances::new(domain, x, y)?;
    Ok(d.max_over_punctures(formula::s_term))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    fn e1(t: f64) -> Point {
        Point::e1(2, t)
    }

    fn once() -> PuncturedDomain {
        PuncturedDomain::once(Point::origin(2))
    }

    fn twice() -> PuncturedDomain {
        PuncturedDomain::new(vec![e1(1.0), e1(-1.0)]).unwrap()
    }

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < EPS, "{a} != {b}");
    }

    #[test]
    fn tau_p_examples() {
        let p = Point::origin(2);
        let t: f64 = 0.25;
        // closed form along the axis family x = e1, y = t e1
        close(
            tau_p(&p, &e1(1.0), &e1(t)).unwrap(),
            (1.0 + 2.0 * (1.0 - t) / t.sqrt()).ln(),
        );
        close(tau_p(&p, &e1(1.0), &e1(t)).unwrap(), 4f64.ln());
        assert_eq!(tau_p(&p, &e1(1.0), &e1(1.0)).unwrap(), 0.0);
        close(tau_p(&p, &e1(1.0), &e1(-1.0)).unwrap(), 5f64.ln());
    }

    #[test]
    fn tau_p_rejects_base_point() {
        let p = Point::origin(2);
        assert!(matches!(tau_p(&p, &p, &e1(1.0)), Err(Error::OnBoundary { .. })));
        assert!(matches!(tau_p(&p, &e1(1.0), &p), Err(Error::OnBoundary { .. })));
        assert!(matches!(
            tau_p(&p, &Point::e1(3, 1.0), &e1(1.0)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn tau_hat_examples() {
        let t: f64 = 0.5;
        let v = tau_hat(&twice(), &e1(-t), &e1(t)).unwrap();
        close(v, (1.0 + 4.0 * t / (1.0 - t * t).sqrt()).ln());
        assert!((v - 1.196_767_2).abs() < 1e-7);
        assert_eq!(tau_hat(&twice(), &Point::origin(2), &Point::origin(2)).unwrap(), 0.0);
        let (x, y) = (
            Point::new(vec![0.3, -1.2]).unwrap(),
            Point::new(vec![2.0, 0.7]).unwrap(),
        );
        assert_eq!(
            tau_hat(&once(), &x, &y).unwrap(),
            tau_p(&Point::origin(2), &x, &y).unwrap()
        );
    }

    #[test]
    fn tau_tilde_examples() {
        close(tau_tilde(&once(), &e1(1.0), &e1(0.25)).unwrap(), 2.5f64.ln());
        assert_eq!(tau_tilde(&twice(), &e1(0.3), &e1(0.3)).unwrap(), 0.0);
        close(
            tau_tilde(&twice(), &e1(-0.5), &e1(0.5)).unwrap(),
            (1.0 + 1.0 / 0.75f64.sqrt()).ln(),
        );
    }

    #[test]
    fn u_examples() {
        let t: f64 = 0.25;
        let v = u_metric(&once(), &e1(1.0), &e1(t)).unwrap();
        close(v, 2.0 * ((2.0 - t) / t.sqrt()).ln());
        assert!((v - 2.5055259).abs() < 1e-7);
        assert_eq!(u_metric(&once(), &e1(0.7), &e1(0.7)).unwrap(), 0.0);
        close(u_metric(&twice(), &e1(-0.5), &e1(0.5)).unwrap(), 2.0 * 3f64.ln());
    }

    #[test]
    fn j_tilde_examples() {
        close(j_tilde(&once(), &e1(1.0), &e1(0.25)).unwrap(), -(0.25f64.ln()));
        assert_eq!(j_tilde(&once(), &e1(2.0), &e1(2.0)).unwrap(), 0.0);
        close(j_tilde(&twice(), &Point::origin(2), &e1(0.5)).unwrap(), -(0.5f64.ln()));
    }

    #[test]
    fn j_examples() {
        let t: f64 = 0.25;
        let v = j_metric(&once(), &e1(1.0), &e1(t)).unwrap();
        close(v, 0.5 * ((2.0 - t) / t).ln());
        assert!((v - 0.9729551).abs() < 1e-7);
        assert_eq!(j_metric(&once(), &e1(3.0), &e1(3.0)).unwrap(), 0.0);
        let jt = j_tilde(&once(), &e1(1.0), &e1(t)).unwrap();
        assert!(jt / 2.0 <= v && v <= jt);
        assert!((jt / 2.0 - std::f64::consts::LN_2).abs() < 1e-12 && (jt - 4f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn j_star_examples() {
        let t: f64 = 0.25;
        close(j_star(&once(), &e1(1.0), &e1(t)).unwrap(), (1.0 - t) / (1.0 + t));
        close(j_star(&once(), &e1(1.0), &e1(t)).unwrap(), 0.6);
        assert_eq!(j_star(&once(), &e1(1.0), &e1(1.0)).unwrap(), 0.0);
        let mut prev = 0.0;
        for k in 1..=12 {
            let v = j_star(&once(), &e1(1.0), &e1(10f64.powi(-k))).unwrap();
            assert!(v > prev && v < 1.0);
            prev = v;
        }
        assert!(1.0 - prev < 1e-11);
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_metric(&once(), &e1(1.0), &e1(-1.0)).unwrap(), 1.0);
        assert_eq!(s_metric(&once(), &e1(1.0), &e1(1.0)).unwrap(), 0.0);
        close(s_metric(&once(), &e1(1.0), &e1(0.25)).unwrap(), 0.6);
    }

    #[test]
    fn every_kind_rejects_punctures() {
        let d = twice();
        for kind in MetricKind::all(e1(1.0)) {
            let err = kind.evaluate(&d, &e1(1.0), &e1(0.5)).unwrap_err();
            assert!(matches!(err, Error::OnBoundary { .. }), "{}", kind.name());
        }
    }

    #[test]
    fn metric_kind_serializes_with_tag() {
        let json = serde_json::to_string(&MetricKind::TauP(Point::origin(2))).unwrap();
        assert_eq!(json, r#"{"kind":"tauP","base":[0.0,0.0]}"#);
        assert_eq!(
            serde_json::to_string(&MetricKind::JStar).unwrap(),
            r#"{"kind":"jStar"}"#
        );
    }
}
