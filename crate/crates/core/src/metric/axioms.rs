use serde::Serialize;

use super::point::{dist_unchecked, same_dim};
use super::{MetricKind, Point, PuncturedDomain};
use crate::error::Result;

/// Values below this count as zero for identity-of-indiscernibles.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Allowed violation of the triangle inequality.
pub const TRIANGLE_TOL: f64 = 1e-12;
/// Allowed asymmetry `|m(x,y) - m(y,x)|`.
pub const SYMMETRY_TOL: f64 = 1e-15;

/// Result of Ptolemy's four-point inequality
/// `d(a,b) d(c,d) <= d(a,c) d(b,d) + d(a,d) d(b,c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PtolemyCheck {
    pub holds: bool,
    /// `rhs - lhs`.
    pub slack: f64,
}

pub fn ptolemy_check(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<PtolemyCheck> {
    same_dim(a, b)?;
    same_dim(a, c)?;
    same_dim(a, d)?;
    let dd = dist_unchecked;
    let lhs = dd(a, b) * dd(c, d);
    let rhs = dd(a, c) * dd(b, d) + dd(a, d) * dd(b, c);
    let slack = rhs - lhs;
    // relative rounding allowance on the products
    let tol = 1e-12 * lhs.max(rhs).max(1.0);
    Ok(PtolemyCheck {
        holds: slack >= -tol,
        slack,
    })
}

/// Metric axioms evaluated on one triple `(x, y, z)`.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub kind: &'static str,
    pub nonnegative: bool,
    pub identity: bool,
    /// Largest `|m(a,b) - m(b,a)|` over the three pairs.
    pub symmetry_slack: f64,
    /// `m(x,y) + m(y,z) - m(x,z)`.
    pub triangle_slack: f64,
    pub bounded: bool,
    pub holds: bool,
}

pub fn metric_axioms_check(
    kind: &MetricKind,
    domain: &PuncturedDomain,
    x: &Point,
    y: &Point,
    z: &Point,
) -> Result<AxiomReport> {
    let m = |a: &Point, b: &Point| kind.evaluate(domain, a, b);
    let pairs = [(x, y), (y, z), (x, z)];

    let mut nonnegative = true;
    let mut identity = true;
    let mut bounded = true;
    let mut symmetry_slack: f64 = 0.0;
    let mut forward = [0.0; 3];
    for (i, (a, b)) in pairs.iter().enumerate() {
        let ab = m(a, b)?;
        let ba = m(b, a)?;
        forward[i] = ab;
        nonnegative &= ab >= 0.0 && ba >= 0.0;
        symmetry_slack = symmetry_slack.max((ab - ba).abs());
        let equal = a == b;
        identity &= (ab < IDENTITY_TOL) == equal;
        if kind.is_bounded() {
            bounded &= ab <= 1.0;
        }
    }
    let triangle_slack = forward[0] + forward[1] - forward[2];
    let holds = nonnegative && identity && bounded && symmetry_slack <= SYMMETRY_TOL && triangle_slack >= -TRIANGLE_TOL;
    Ok(AxiomReport {
        kind: kind.name(),
        nonnegative,
        identity,
        symmetry_slack,
        triangle_slack,
        bounded,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn square_corners() {
        let (a, b, c, d) = (pt(&[0., 0.]), pt(&[1., 0.]), pt(&[1., 1.]), pt(&[0., 1.]));
        // side product on the left: slack is (sqrt2 * sqrt2 + 1) - 1
        let sides = ptolemy_check(&a, &b, &c, &d).unwrap();
        assert!(sides.holds);
        assert!((sides.slack - 2.0).abs() < 1e-15);
        // diagonal product on the left: equality for a cyclic quadrilateral
        let diag = ptolemy_check(&a, &c, &b, &d).unwrap();
        assert!(diag.holds);
        assert!(diag.slack.abs() < 1e-15);
    }

    #[test]
    fn collinear_quadruple() {
        let p = |t: f64| Point::e1(1, t);
        for perm in [[0., 1., 2., 3.], [0., 2., 1., 3.], [0., 3., 1., 2.]] {
            let c = ptolemy_check(&p(perm[0]), &p(perm[1]), &p(perm[2]), &p(perm[3])).unwrap();
            assert!(c.holds, "{perm:?}: {}", c.slack);
        }
    }

    #[test]
    fn axioms_on_collinear_triple() {
        let domain = PuncturedDomain::once(Point::origin(2));
        let kind = MetricKind::TauP(Point::origin(2));
        let r = metric_axioms_check(
            &kind,
            &domain,
            &Point::e1(2, 1.0),
            &Point::e1(2, 2.0),
            &Point::e1(2, 3.0),
        )
        .unwrap();
        assert!(r.holds, "{r:?}");
        assert!(r.triangle_slack > 0.0);
    }

    #[test]
    fn degenerate_triple_has_zero_slacks() {
        let domain = PuncturedDomain::once(Point::origin(2));
        let x = pt(&[0.4, -0.3]);
        for kind in MetricKind::all(Point::origin(2)) {
            let r = metric_axioms_check(&kind, &domain, &x, &x, &x).unwrap();
            assert!(r.holds);
            assert_eq!(r.symmetry_slack, 0.0);
            assert_eq!(r.triangle_slack, 0.0);
        }
    }

    #[test]
    fn propagates_boundary_error() {
        let domain = PuncturedDomain::once(Point::origin(2));
        let r = metric_axioms_check(
            &MetricKind::U,
            &domain,
            &Point::origin(2),
            &pt(&[1., 0.]),
            &pt(&[0., 1.]),
        );
        assert!(r.is_err());
    }
}
