//! Seeded sampling of punctured domains and test points.
//!
//! Every random case draws from its own ChaCha stream keyed by
//! `(seed, stream, index)`, so a case's inputs do not depend on how many
//! cases ran before it or on which thread evaluated it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::metric::{Point, PuncturedDomain};

/// Sampled points closer than this to a puncture are redrawn.
pub const RESAMPLE_GUARD: f64 = 1e-6;

/// Deterministic generator for case `index` of stream `stream`.
pub fn case_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stream.to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Stable stream id for a label, so suites never share random inputs.
pub fn stream_id(label: &str) -> u64 {
    // FNV-1a
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn normal_point<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Point {
    Point::new((0..dim).map(|_| rng.sample(StandardNormal)).collect()).expect("normal samples are finite")
}

/// `k` standard-normal punctures in `R^dim`.
pub fn normal_domain<R: Rng + ?Sized>(rng: &mut R, dim: usize, k: usize) -> PuncturedDomain {
    loop {
        let punctures = (0..k).map(|_| normal_point(rng, dim)).collect();
        if let Ok(domain) = PuncturedDomain::new(punctures) {
            return domain;
        }
    }
}

/// A standard-normal point at least [`RESAMPLE_GUARD`] away from every puncture.
pub fn free_point<R: Rng + ?Sized>(rng: &mut R, domain: &PuncturedDomain) -> Point {
    loop {
        let x = normal_point(rng, domain.dim());
        if domain.boundary_dist(&x).is_ok_and(|d| d >= RESAMPLE_GUARD) {
            return x;
        }
    }
}

/// A uniformly distributed unit vector in `R^dim`.
pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Point {
    loop {
        let v = normal_point(rng, dim);
        let n = v.norm();
        if n > 1e-9 {
            return v.scale(1.0 / n).expect("finite");
        }
    }
}

/// `n` deterministic unit directions in `R^dim`.
///
/// Equispaced on the circle for `dim = 2`, a Fibonacci lattice for `dim = 3`,
/// `±1` for `dim = 1`, and seeded Gaussian directions otherwise.
pub fn sphere_directions(dim: usize, n: usize) -> Vec<Point> {
    let pt = |v: Vec<f64>| Point::new(v).expect("finite direction");
    match dim {
        1 => (0..n).map(|i| pt(vec![if i % 2 == 0 { 1.0 } else { -1.0 }])).collect(),
        2 => (0..n)
            .map(|i| {
                let a = std::f64::consts::TAU * i as f64 / n as f64;
                pt(vec![a.cos(), a.sin()])
            })
            .collect(),
        3 => {
            let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
            (0..n)
                .map(|i| {
                    let z = 1.0 - (2.0 * i as f64 + 1.0) / n as f64;
                    let rho = (1.0 - z * z).max(0.0).sqrt();
                    let a = golden * i as f64;
                    pt(vec![rho * a.cos(), rho * a.sin(), z])
                })
                .collect()
        }
        _ => {
            let mut rng = case_rng(0, stream_id("sphere_directions"), dim as u64);
            (0..n).map(|_| unit_vector(&mut rng, dim)).collect()
        }
    }
}
