//! Case generators for the verification suites.
//!
//! Case `i` of a suite draws its inputs from `case_rng(seed, stream, i)`, with
//! one stream per (suite, sub-check, dimension), so every case can be rebuilt
//! in isolation from the report line that names it.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{CaseRecord, RunConfig, Suite};
use crate::ball::{
    classify_convexity, slope_expression, theta_max, verify_inclusion, Convexity, ConvexityVerdict, InclusionReport,
    Radius, ThetaMax,
};
use crate::comparisons::{
    check_density_bounds, check_theorem, claimed_density_limit, density_limit, DensityVariant, TheoremId, TheoremReport,
};
use crate::distortion::{
    check_bilipschitz_distortion, default_radius_schedule, linear_dilatation_estimate, DistortionReport, TestMap,
};
use crate::error::Result;
use crate::metric::{
    metric_axioms_check, ptolemy_check, AxiomReport, MetricKind, Point, PtolemyCheck, PuncturedDomain,
};
use crate::sampling::{case_rng, free_point, normal_domain, normal_point, stream_id, unit_vector, RESAMPLE_GUARD};

/// Puncture counts cycled through by multi-puncture cases.
pub const PUNCTURE_COUNTS: [usize; 3] = [1, 2, 5];

/// Boundary samples per convexity verdict.
pub const CONVEXITY_SAMPLES: usize = 4096;

/// Side length of the `(r, θ)` grid for the sign of the slope-derivative expression.
pub const SLOPE_GRID: usize = 200;

/// Rays per inclusion check.
pub const INCLUSION_RAYS: usize = 1000;

/// Random configurations per density-limit variant.
pub const DENSITY_LIMIT_CASES: usize = 20;

/// Directions per dilatation estimate.
pub const DILATATION_DIRECTIONS: usize = 256;

/// Per-case payload written to the report.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Detail {
    Axioms(AxiomReport),
    Ptolemy {
        points: [Point; 4],
        check: PtolemyCheck,
    },
    Theorem {
        dim: usize,
        punctures: usize,
        report: TheoremReport,
    },
    DensityLimit(DensityLimitCase),
    Inclusion {
        config: &'static str,
        report: InclusionReport,
    },
    Convexity {
        expected: Convexity,
        verdict: ConvexityVerdict,
    },
    SlopeSign {
        r: f64,
        theta: f64,
        value: f64,
    },
    Distortion(DistortionReport),
    Dilatation(DilatationCase),
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityLimitCase {
    pub variant: DensityVariant,
    pub punctures: usize,
    pub x: Point,
    pub direction: Point,
    pub h: Vec<f64>,
    pub limit: f64,
    pub claimed: f64,
    pub discrepancy: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DilatationCase {
    pub map: TestMap,
    pub z: Point,
    pub estimate: f64,
    pub exact: f64,
    /// `L^2`.
    pub bound: f64,
}

fn par_cases<F>(n: usize, f: F) -> Result<Vec<CaseRecord>>
where
    F: Fn(usize) -> Result<Vec<CaseRecord>> + Sync + Send,
{
    let nested = (0..n).into_par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn record(suite: Suite, case: usize, holds: bool, slack: f64, detail: Detail) -> CaseRecord {
    CaseRecord {
        suite,
        case,
        holds,
        slack,
        detail,
    }
}

/// A point within a random fraction `10^-U(0,6)` of `d(x)` from `x`, off the punctures.
fn point_near<R: Rng>(rng: &mut R, domain: &PuncturedDomain, x: &Point) -> Result<Point> {
    let dx = domain.boundary_dist(x)?;
    loop {
        let h = dx * 10f64.powf(-6.0 * rng.random::<f64>());
        let y = x.offset(&unit_vector(rng, domain.dim()), h)?;
        if domain.boundary_dist(&y).is_ok_and(|d| d >= RESAMPLE_GUARD) {
            return Ok(y);
        }
    }
}

/// Inputs of case `index` for a comparison theorem in dimension `dim`.
///
/// Every fourth case takes `y` close to `x` and every fourth `y` far out, to
/// probe both ends of the logarithmic scale.
pub fn theorem_case_inputs(
    id: TheoremId,
    dim: usize,
    seed: u64,
    index: usize,
) -> Result<(PuncturedDomain, Point, Point)> {
    let mut rng = case_rng(seed, stream_id(&format!("theorems/{}/{dim}", id.tag())), index as u64);
    let k = if id.single_puncture() {
        1
    } else {
        PUNCTURE_COUNTS[index % PUNCTURE_COUNTS.len()]
    };
    let domain = normal_domain(&mut rng, dim, k);
    let x = free_point(&mut rng, &domain);
    let y = match index % 4 {
        0 => point_near(&mut rng, &domain, &x)?,
        1 => loop {
            let y = normal_point(&mut rng, dim).scale(100.0)?;
            if domain.boundary_dist(&y).is_ok_and(|d| d >= RESAMPLE_GUARD) {
                break y;
            }
        },
        _ => free_point(&mut rng, &domain),
    };
    Ok((domain, x, y))
}

pub fn theorem_case(id: TheoremId, dim: usize, seed: u64, index: usize) -> Result<Vec<TheoremReport>> {
    let (domain, x, y) = theorem_case_inputs(id, dim, seed, index)?;
    check_theorem(id, &domain, &x, &y)
}

/// Dimensions the comparison theorems are sampled in.
pub fn theorem_dims(cfg: &RunConfig) -> Vec<usize> {
    if cfg.dim == 3 {
        vec![3]
    } else {
        vec![cfg.dim, 3]
    }
}

pub(super) fn metrics(cfg: &RunConfig) -> Result<Vec<CaseRecord>> {
    let stream = stream_id(&format!("metrics/{}", cfg.dim));
    par_cases(cfg.samples, |i| {
        let mut rng = case_rng(cfg.seed, stream, i as u64);
        let k = PUNCTURE_COUNTS[i % PUNCTURE_COUNTS.len()];
        let domain = normal_domain(&mut rng, cfg.dim, k);
        let x = free_point(&mut rng, &domain);
        let y = if i % 4 == 0 {
            point_near(&mut rng, &domain, &x)?
        } else {
            free_point(&mut rng, &domain)
        };
        let z = free_point(&mut rng, &domain);
        let mut out = Vec::with_capacity(9);
        for kind in MetricKind::all(domain.punctures()[0].clone()) {
            let rep = metric_axioms_check(&kind, &domain, &x, &y, &z)?;
            let slack = rep.triangle_slack.min(-rep.symmetry_slack);
            out.push(record(Suite::Metrics, i, rep.holds, slack, Detail::Axioms(rep)));
        }
        let w = normal_point(&mut rng, cfg.dim);
        let check = ptolemy_check(&x, &y, &z, &w)?;
        out.push(record(
            Suite::Metrics,
            i,
            check.holds,
            check.slack,
            Detail::Ptolemy {
                points: [x, y, z, w],
                check,
            },
        ));
        Ok(out)
    })
}

pub(super) fn theorems(cfg: &RunConfig) -> Result<Vec<CaseRecord>> {
    let mut out = Vec::new();
    let tol = cfg.tolerances.report;
    for dim in theorem_dims(cfg) {
        for id in TheoremId::COMPARISONS {
            out.extend(par_cases(cfg.samples, |i| {
                let k = if id.single_puncture() {
                    1
                } else {
                    PUNCTURE_COUNTS[i % PUNCTURE_COUNTS.len()]
                };
                Ok(theorem_case(id, dim, cfg.seed, i)?
                    .into_iter()
                    .map(|report| {
                        let (holds, slack) = (report.slack >= -tol, report.slack);
                        record(
                            Suite::Theorems,
                            i,
                            holds,
                            slack,
                            Detail::Theorem {
                                dim,
                                punctures: k,
                                report,
                            },
                        )
                    })
                    .collect())
            })?);
        }
    }
    Ok(out)
}

/// Random `(D, x, direction)` for case `index` of the density-limit check.
pub fn density_limit_case(
    variant: DensityVariant,
    punctures: usize,
    dim: usize,
    seed: u64,
    index: usize,
) -> Result<DensityLimitCase> {
    let mut rng = case_rng(
        seed,
        stream_id(&format!("density-limit/{punctures}/{dim}")),
        index as u64,
    );
    let domain = normal_domain(&mut rng, dim, punctures);
    let x = free_point(&mut rng, &domain);
    let direction = unit_vector(&mut rng, dim);
    let delta = domain.boundary_dist(&x)?;
    let h: Vec<f64> = [1e-3, 1e-4, 1e-5].iter().map(|s| s * delta).collect();
    let limit = density_limit(variant, &domain, &x, &direction, &h)?;
    let claimed = claimed_density_limit(variant, &domain, &x)?;
    Ok(DensityLimitCase {
        variant,
        punctures,
        x,
        direction,
        h,
        limit,
        claimed,
        discrepancy: (limit - claimed).abs(),
    })
}

pub(super) fn density(cfg: &RunConfig) -> Result<Vec<CaseRecord>> {
    let mut out = Vec::new();
    for (variant, counts) in [
        (DensityVariant::Once, &[1usize][..]),
        (DensityVariant::Average, &[2, 5][..]),
    ] {
        let stream = stream_id(&format!("density-bounds/{variant:?}/{}", cfg.dim));
        out.extend(par_cases(cfg.samples, |i| {
            let mut rng = case_rng(cfg.seed, stream, i as u64);
            let k = counts[i % counts.len()];
            let domain = normal_domain(&mut rng, cfg.dim, k);
            let x = free_point(&mut rng, &domain);
            let delta = domain.boundary_dist(&x)?;
            let y = x.offset(&unit_vector(&mut rng, cfg.dim), 0.999 * delta * rng.random::<f64>())?;
            Ok(check_density_bounds(variant, &domain, &x, &y)?
                .into_iter()
                .map(|report| {
                    let holds = report.slack >= -cfg.tolerances.report;
                    let slack = report.slack;
                    record(
                        Suite::Density,
                        i,
                        holds,
                        slack,
                        Detail::Theorem {
                            dim: cfg.dim,
                            punctures: k,
                            report,
                        },
                    )
                })
                .collect())
        })?);
        out.extend(par_cases(DENSITY_LIMIT_CASES, |i| {
            let k = counts[i % counts.len()];
            let case = density_limit_case(variant, k, cfg.dim, cfg.seed, i)?;
            let tol = cfg.tolerances.density;
            Ok(vec![record(
                Suite::Density,
                i,
                case.discrepancy < tol,
                tol - case.discrepancy,
                Detail::DensityLimit(case),
            )])
        })?);
    }
    Ok(out)
}

/// `t_i = i log 3 / 21`, `i = 1..=20`.
pub fn inclusion_grid() -> Vec<f64> {
    (1..=20).map(|i| 3f64.ln() * i as f64 / 21.0).collect()
}

/// Named inclusion configurations `(label, D, x)` in dimension `dim`.
pub fn inclusion_configs(dim: usize, seed: u64) -> Vec<(&'static str, PuncturedDomain, Point)> {
    let e1 = |t| Point::e1(dim, t);
    let mut rng = case_rng(seed, stream_id(&format!("inclusion/{dim}")), 0);
    let random = normal_domain(&mut rng, dim, 1);
    let x = free_point(&mut rng, &random);
    vec![
        ("once", PuncturedDomain::once(Point::origin(dim)), e1(1.0)),
        (
            "twice",
            PuncturedDomain::new(vec![e1(1.0), e1(-1.0)]).expect("distinct"),
            Point::origin(dim),
        ),
        ("random-once", random, x),
    ]
}

pub(super) fn inclusion(cfg: &RunConfig) -> Result<Vec<CaseRecord>> {
    let configs = inclusion_configs(cfg.dim, cfg.seed);
    let grid = inclusion_grid();
    let cases: Vec<_> = configs.iter().flat_map(|c| grid.iter().map(move |&t| (c, t))).collect();
    par_cases(cases.len(), |i| {
        let ((label, domain, x), t) = cases[i];
        let report = verify_inclusion(domain, x, t, INCLUSION_RAYS)?;
        let slack = (-report.inner_excess).min(report.outer_excess);
        Ok(vec![record(
            Suite::Inclusion,
            i,
            report.holds,
            slack,
            Detail::Inclusion { config: label, report },
        )])
    })
}

/// The radii of the convexity table, labelled.
pub fn convexity_grid() -> Vec<(String, Radius)> {
    let log3 = 3f64.ln();
    let plain = |r: f64| (format!("{r}"), Radius::new(r).expect("positive"));
    let mut grid: Vec<_> = [0.25, 0.5, 0.75, 1.0].into_iter().map(plain).collect();
    grid.push(("log3-1e-3".into(), Radius::new(log3 - 1e-3).expect("positive")));
    grid.push(("log3+1e-3".into(), Radius::new(log3 + 1e-3).expect("positive")));
    grid.push(plain(1.2));
    grid.push(("log5".into(), Radius::log_of(5.0).expect("> 1")));
    grid.push(plain(1.8));
    grid.push(("log7".into(), Radius::log_of(7.0).expect("> 1")));
    grid
}

/// The `SLOPE_GRID x SLOPE_GRID` nodes over `(0, log 3] x (1e-3 θ_max, θ_max)`.
pub fn slope_grid(n: usize) -> Vec<(Radius, f64)> {
    let log3 = Radius::log_of(3.0).expect("> 1");
    let mut nodes = Vec::with_capacity(n * n);
    for i in 1..=n {
        let r = if i == n {
            log3
        } else {
            Radius::new(log3.value() * i as f64 / n as f64).expect("positive")
        };
        let ThetaMax::Angle(tm) = theta_max(r) else {
            unreachable!("r <= log 3 is in the sector regime")
        };
        for j in 0..n {
            nodes.push((r, tm * (1e-3 + (1.0 - 1e-3) * (j as f64 + 0.5) / n as f64)));
        }
    }
    nodes
}

pub(super) fn convexity(cfg: &RunConfig) -> Result<Vec<CaseRecord>> {
    let log3 = 3f64.ln();
    let grid = convexity_grid();
    let mut out = par_cases(grid.len(), |i| {
        let r = grid[i].1;
        let verdict = classify_convexity(r, CONVEXITY_SAMPLES, cfg.tolerances.convexity)?;
        let expected = if r.value() <= log3 {
            Convexity::Convex
        } else {
            Convexity::NonConvex
        };
        let holds = verdict.verdict == expected;
        let slack = if holds {
            0.0
        } else {
            -verdict.max_reverse_turn.max(cfg.tolerances.convexity)
        };
        Ok(vec![record(
            Suite::Convexity,
            i,
            holds,
            slack,
            Detail::Convexity { expected, verdict },
        )])
    })?;
    let nodes = slope_grid(SLOPE_GRID);
    let offset = grid.len();
    out.extend(par_cases(nodes.len(), |i| {
        let (r, theta) = nodes[i];
        let value = slope_expression(r, theta)?;
        Ok(vec![record(
            Suite::Convexity,
            offset + i,
            value <= cfg.tolerances.slope,
            -value,
            Detail::SlopeSign {
                r: r.value(),
                theta,
                value,
            },
        )])
    })?);
    Ok(out)
}

/// The built-in maps, in dimension `dim`.
pub fn test_maps(dim: usize) -> Vec<TestMap> {
    let shift: Vec<f64> = [1.0, -3.0, 0.5].iter().copied().cycle().take(dim).collect();
    let stretch = |l| TestMap::axis_stretch(l).expect("L >= 1");
    vec![
        stretch(1.0),
        stretch(2.0),
        stretch(5.0),
        TestMap::similarity(7.0, 0.4, shift).expect("valid"),
        TestMap::composite(vec![
            stretch(2.0),
            TestMap::similarity(3.0, 1.1, Vec::new()).expect("valid"),
        ]),
    ]
}

/// Exact linear dilatation of a built-in map.
pub fn exact_dilatation(map: &TestMap) -> f64 {
    match map {
        TestMap::Similarity { .. } => 1.0,
        TestMap::AxisStretch { factor } => *factor,
        TestMap::Composite { maps } => maps.iter().map(exact_dilatation).product(),
    }
}

pub fn distortion_case(
    map: &TestMap,
    map_index: usize,
    dim: usize,
    seed: u64,
    index: usize,
) -> Result<DistortionReport> {
    let mut rng = case_rng(seed, stream_id(&format!("distortion/{map_index}/{dim}")), index as u64);
    let p = normal_point(&mut rng, dim);
    let domain = PuncturedDomain::once(p.clone());
    let x = free_point(&mut rng, &domain);
    let y = loop {
        let y = free_point(&mut rng, &domain);
        if y != x {
            break y;
        }
    };
    check_bilipschitz_distortion(map, &p, &x, &y)
}

pub(super) fn distortion(cfg: &RunConfig) -> Result<Vec<CaseRecord>> {
    let maps = test_maps(cfg.dim);
    let tol = cfg.tolerances.distortion;
    let mut out = Vec::new();
    for (m, map) in maps.iter().enumerate() {
        let exact_ratio = matches!(map, TestMap::Similarity { .. });
        out.extend(par_cases(cfg.samples, |i| {
            let rep = distortion_case(map, m, cfg.dim, cfg.seed, i)?;
            let slack = if exact_ratio {
                tol - (rep.ratio - 1.0).abs()
            } else {
                (rep.ratio - 1.0 / rep.bound).min(rep.bound - rep.ratio)
            };
            let holds = rep.holds && rep.euclid_holds && (!exact_ratio || slack >= 0.0);
            Ok(vec![record(
                Suite::Distortion,
                i,
                holds,
                slack,
                Detail::Distortion(rep),
            )])
        })?);
    }
    // dilatation is estimated in the plane, where the direction set contains
    // the extreme directions of every built-in map
    let planar = test_maps(2);
    let offset = cfg.samples * maps.len();
    out.extend(par_cases(planar.len(), |m| {
        let map = &planar[m];
        let mut rng = case_rng(cfg.seed, stream_id("dilatation"), m as u64);
        let domain = PuncturedDomain::once(Point::origin(2));
        let z = free_point(&mut rng, &domain);
        let estimate =
            linear_dilatation_estimate(map, &z, &default_radius_schedule(&domain, &z)?, DILATATION_DIRECTIONS)?;
        let exact = exact_dilatation(map);
        let l = map.bilipschitz_constant();
        let bound = l * l;
        let err = (estimate - exact).abs();
        let holds = err <= cfg.tolerances.dilatation && estimate <= bound + cfg.tolerances.dilatation;
        Ok(vec![record(
            Suite::Distortion,
            offset + m,
            holds,
            cfg.tolerances.dilatation - err,
            Detail::Dilatation(DilatationCase {
                map: map.clone(),
                z,
                estimate,
                exact,
                bound,
            }),
        )])
    })?);
    Ok(out)
}
