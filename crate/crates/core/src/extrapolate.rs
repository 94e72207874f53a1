//! Richardson extrapolation to a vanishing step.

use crate::error::{Error, Result};

/// Extrapolates samples `f(h_i)` to `h = 0`, assuming `f` has an expansion in
/// integer powers of `h`.
///
/// This is Richardson's deferred approach to the limit carried out with
/// Neville's tableau, so the nodes need not form a geometric sequence. With
/// a geometric sequence of ratio `q` it reduces to the classic table with
/// factors `q, q^2, ...`.
pub fn richardson(h: &[f64], f: &[f64]) -> Result<f64> {
    if h.len() != f.len() || h.is_empty() {
        return Err(Error::config("richardson needs equally many nodes and values"));
    }
    for (i, a) in h.iter().enumerate() {
        if !a.is_finite() || h[i + 1..].contains(a) {
            return Err(Error::config("richardson nodes must be finite and distinct"));
        }
    }
    let mut table = f.to_vec();
    let n = h.len();
    for k in 1..n {
        for i in 0..n - k {
            table[i] = (h[i + k] * table[i] - h[i] * table[i + 1]) / (h[i + k] - h[i]);
        }
    }
    Ok(table[0])
}
