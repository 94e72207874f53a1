//! The metric formulas written against abstract distances.
//!
//! Every function here takes already-computed distances of some metric space
//! `(X, d)`, so the same kernels serve any ambient distance. The crate only
//! instantiates them with the Euclidean distance.
//!
//! Arguments are combined with commutative operations only (`+`, `*`,
//! `min`, `max`), which keeps each formula bitwise symmetric in `x` and `y`.

/// Scale-invariant Cassinian metric term `log(1 + 2 d(x,y) / sqrt(d(x,p) d(y,p)))`.
pub fn tau(dxy: f64, dxp: f64, dyp: f64) -> f64 {
    (2.0 * dxy / (dxp * dyp).sqrt()).ln_1p()
}

/// Ratio inside the Cassinian metric of a Ptolemaic domain, `d(x,y) / sqrt(d(x,p) d(p,y))`.
pub fn cassinian_ratio(dxy: f64, dxp: f64, dyp: f64) -> f64 {
    dxy / (dxp * dyp).sqrt()
}

/// Ibragimov's metric `2 log((d(x,y) + max(d(x), d(y))) / sqrt(d(x) d(y)))`.
pub fn u(dxy: f64, dx: f64, dy: f64) -> f64 {
    let g = (dx * dy).sqrt();
    2.0 * ((dxy + dx.max(dy) - g) / g).ln_1p()
}

/// Distance ratio metric `log(1 + d(x,y) / min(d(x), d(y)))`.
pub fn j_tilde(dxy: f64, dx: f64, dy: f64) -> f64 {
    (dxy / dx.min(dy)).ln_1p()
}

/// Gehring–Osgood metric `1/2 log((1 + d(x,y)/d(x)) (1 + d(x,y)/d(y)))`.
pub fn j(dxy: f64, dx: f64, dy: f64) -> f64 {
    0.5 * ((dxy / dx).ln_1p() + (dxy / dy).ln_1p())
}

/// `tanh(j_tilde / 2)`, evaluated as `a / (2 + a)` with `a = d(x,y) / min(d(x), d(y))`.
pub fn j_star(dxy: f64, dx: f64, dy: f64) -> f64 {
    let a = dxy / dx.min(dy);
    a / (2.0 + a)
}

/// Triangular ratio term `d(x,y) / (d(x,p) + d(y,p))`.
pub fn s_term(dxy: f64, dxp: f64, dyp: f64) -> f64 {
    dxy / (dxp + dyp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_star_matches_tanh_form() {
        for &(dxy, dx, dy) in &[(0.75, 1.0, 0.25), (3.0, 0.1, 2.0), (1e-9, 1.0, 1.0)] {
            let direct = (j_tilde(dxy, dx, dy) / 2.0).tanh();
            assert!((j_star(dxy, dx, dy) - direct).abs() < 1e-15);
        }
    }

    #[test]
    fn u_matches_plain_log_form() {
        for &(dxy, dx, dy) in &[(0.75, 1.0, 0.25), (3.0, 0.1, 2.0), (2.0, 1.0, 1.0)] {
            let plain = 2.0 * ((dxy + f64::max(dx, dy)) / (dx * dy).sqrt()).ln();
            assert!((u(dxy, dx, dy) - plain).abs() < 1e-14);
        }
    }
}
