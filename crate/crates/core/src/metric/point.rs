use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Points closer than this to a puncture are treated as lying on the boundary.
pub const BOUNDARY_GUARD: f64 = 1e-12;

/// A point of the ambient Euclidean space `R^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidInput("a point needs at least one coordinate".into()));
        }
        if let Some(c) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite coordinate {c}")));
        }
        Ok(Point(coords))
    }

    /// The origin of `R^dim`.
    pub fn origin(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        Point(vec![0.0; dim])
    }

    /// `t * e_axis` in `R^dim`.
    pub fn on_axis(dim: usize, axis: usize, t: f64) -> Self {
        assert!(axis < dim && t.is_finite());
        let mut coords = vec![0.0; dim];
        coords[axis] = t;
        Point(coords)
    }

    /// `t * e_1` in `R^dim`.
    pub fn e1(dim: usize, t: f64) -> Self {
        Self::on_axis(dim, 0, t)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    /// `self + h * dir`.
    pub fn offset(&self, dir: &Point, h: f64) -> Result<Point> {
        same_dim(self, dir)?;
        Point::new(self.0.iter().zip(&dir.0).map(|(a, b)| a + h * b).collect())
    }

    pub fn translate(&self, v: &Point) -> Result<Point> {
        self.offset(v, 1.0)
    }

    pub fn scale(&self, lambda: f64) -> Result<Point> {
        Point::new(self.0.iter().map(|a| lambda * a).collect())
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|a| a * a).sum::<f64>().sqrt()
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Point::new(coords)
    }
}

pub(crate) fn same_dim(a: &Point, b: &Point) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// Euclidean distance `|x - y|`.
///
/// Each squared difference is formed as `(a - b)^2`, which is bitwise
/// identical to `(b - a)^2`, so the result is exactly symmetric.
pub fn euclid_dist(x: &Point, y: &Point) -> Result<f64> {
    same_dim(x, y)?;
    Ok(dist_unchecked(x, y))
}

pub(crate) fn dist_unchecked(x: &Point, y: &Point) -> f64 {
    x.0.iter()
        .zip(&y.0)
        .map(|(a, b)| {
            let d = a - b;
            d * d
        })
        .sum::<f64>()
        .sqrt()
}

/// `R^n` minus a finite, nonempty set of distinct punctures.
///
/// The puncture set plays the role of the boundary for every metric in the
/// crate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PuncturedDomain {
    dim: usize,
    punctures: Vec<Point>,
}

impl PuncturedDomain {
    pub fn new(punctures: Vec<Point>) -> Result<Self> {
        let first = punctures
            .first()
            .ok_or_else(|| Error::InvalidInput("a punctured domain needs at least one puncture".into()))?;
        let dim = first.dim();
        for p in &punctures {
            same_dim(first, p)?;
        }
        for (i, p) in punctures.iter().enumerate() {
            for q in &punctures[i + 1..] {
                if dist_unchecked(p, q) < BOUNDARY_GUARD {
                    return Err(Error::InvalidInput(format!(
                        "punctures {:?} and {:?} coincide",
                        p.coords(),
                        q.coords()
                    )));
                }
            }
        }
        Ok(PuncturedDomain { dim, punctures })
    }

    /// `R^n \ {p}`.
    pub fn once(p: Point) -> Self {
        PuncturedDomain {
            dim: p.dim(),
            punctures: vec![p],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn punctures(&self) -> &[Point] {
        &self.punctures
    }

    /// Number of punctures `k`.
    pub fn len(&self) -> usize {
        self.punctures.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distances from `x` to every puncture, after validating `x`.
    pub(crate) fn puncture_distances(&self, x: &Point) -> Result<Vec<f64>> {
        if x.dim() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: x.dim(),
            });
        }
        let ds: Vec<f64> = self.punctures.iter().map(|p| dist_unchecked(x, p)).collect();
        let nearest = ds.iter().copied().fold(f64::INFINITY, f64::min);
        if nearest < BOUNDARY_GUARD {
            return Err(Error::OnBoundary { distance: nearest });
        }
        Ok(ds)
    }

    /// `d(x) = dist(x, boundary)`.
    pub fn boundary_dist(&self, x: &Point) -> Result<f64> {
        Ok(self.puncture_distances(x)?.into_iter().fold(f64::INFINITY, f64::min))
    }

    /// Applies `f` to every puncture, producing a new domain.
    pub fn map_punctures(&self, f: impl Fn(&Point) -> Result<Point>) -> Result<Self> {
        PuncturedDomain::new(self.punctures.iter().map(f).collect::<Result<_>>()?)
    }
}

/// `d(x) = dist(x, boundary of D)`.
pub fn boundary_dist(domain: &PuncturedDomain, x: &Point) -> Result<f64> {
    domain.boundary_dist(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn euclid_examples() {
        assert_eq!(euclid_dist(&Point::e1(2, 1.0), &Point::e1(2, -1.0)).unwrap(), 2.0);
        assert_eq!(euclid_dist(&Point::origin(2), &Point::origin(2)).unwrap(), 0.0);
        assert_eq!(euclid_dist(&pt(&[1.0, 0.0]), &pt(&[0.25, 0.0])).unwrap(), 0.75);
    }

    #[test]
    fn euclid_dimension_mismatch() {
        let err = euclid_dist(&Point::origin(2), &Point::origin(3)).unwrap_err();
        assert!(matches!(err, Error::Dimension { expected: 2, found: 3 }));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Point::new(vec![f64::NAN]).is_err());
        assert!(Point::new(vec![1.0, f64::INFINITY]).is_err());
        assert!(Point::new(vec![]).is_err());
    }

    #[test]
    fn boundary_dist_examples() {
        let two = PuncturedDomain::new(vec![Point::e1(2, 1.0), Point::e1(2, -1.0)]).unwrap();
        assert_eq!(two.boundary_dist(&Point::origin(2)).unwrap(), 1.0);
        assert_eq!(two.boundary_dist(&Point::e1(2, 0.5)).unwrap(), 0.5);
        let one = PuncturedDomain::once(Point::origin(2));
        assert_eq!(one.boundary_dist(&Point::e1(2, 1.0)).unwrap(), 1.0);
    }

    #[test]
    fn on_boundary_is_rejected() {
        let one = PuncturedDomain::once(Point::origin(2));
        assert!(matches!(
            one.boundary_dist(&Point::origin(2)),
            Err(Error::OnBoundary { .. })
        ));
        assert!(matches!(
            one.boundary_dist(&pt(&[1e-13, 0.0])),
            Err(Error::OnBoundary { .. })
        ));
    }

    #[test]
    fn domain_validation() {
        assert!(PuncturedDomain::new(vec![]).is_err());
        assert!(PuncturedDomain::new(vec![Point::origin(2), Point::origin(3)]).is_err());
        assert!(PuncturedDomain::new(vec![Point::origin(2), Point::origin(2)]).is_err());
    }
}
