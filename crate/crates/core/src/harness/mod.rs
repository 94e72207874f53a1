//! Verification suites, report files and figure emitters behind the
//! `cassini` binary.

mod figure;
mod suites;

use std::fmt;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

pub use figure::{cmd_ball, cmd_figure1, render_svg, BallFormat, CurveStyle, Figure1, FigureCurve, FIGURE1_SAMPLES};
pub use suites::{
    convexity_grid, density_limit_case, distortion_case, exact_dilatation, inclusion_configs, inclusion_grid,
    slope_grid, test_maps, theorem_case, theorem_case_inputs, theorem_dims, DensityLimitCase, Detail, DilatationCase,
    CONVEXITY_SAMPLES, DENSITY_LIMIT_CASES, DILATATION_DIRECTIONS, INCLUSION_RAYS, PUNCTURE_COUNTS, SLOPE_GRID,
};

use crate::comparisons::{
    default_schedule, s_tau_equality_witness, sharpness_scan, Endpoint, EqualityWitness, SharpnessScan, TheoremId,
    SHARPNESS_TOL,
};
use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Random cases per theorem and dimension, per metric kind, per map.
pub const DEFAULT_SAMPLES: usize = 6250;

pub const REPORT_FILE: &str = "reports.jsonl";
pub const SUMMARY_FILE: &str = "summary.txt";

/// Process exit codes of the binary.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// At least one case failed.
    pub const FAILURES: i32 = 1;
    /// Configuration or I/O error.
    pub const ERROR: i32 = 2;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Metrics,
    Theorems,
    Density,
    Inclusion,
    Convexity,
    Distortion,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Metrics,
        Suite::Theorems,
        Suite::Density,
        Suite::Inclusion,
        Suite::Convexity,
        Suite::Distortion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Metrics => "metrics",
            Suite::Theorems => "theorems",
            Suite::Density => "density",
            Suite::Inclusion => "inclusion",
            Suite::Convexity => "convexity",
            Suite::Distortion => "distortion",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::config(format!("unknown suite {s:?}")))
    }
}

/// Pass/fail thresholds used by the suites.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tolerances {
    /// Slack allowed on inequality reports.
    pub report: f64,
    /// Allowed `|limit - 2/delta|` for density limits.
    pub density: f64,
    /// Sign tolerance of the convexity turning test.
    pub convexity: f64,
    /// Upper bound on the slope-derivative expression.
    pub slope: f64,
    /// Slack on the `tau` distortion ratio of similarities.
    pub distortion: f64,
    /// Allowed error of dilatation estimates.
    pub dilatation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            report: 1e-12,
            density: 1e-4,
            convexity: 1e-9,
            slope: 1e-12,
            distortion: 1e-12,
            dilatation: 1e-6,
        }
    }
}

impl Tolerances {
    pub const KEYS: [&'static str; 6] = ["report", "density", "convexity", "slope", "distortion", "dilatation"];

    pub fn set(&mut self, key: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value >= 0.0) {
            return Err(Error::config(format!(
                "tolerance {key} must be finite and nonnegative, got {value}"
            )));
        }
        let slot = match key {
            "report" => &mut self.report,
            "density" => &mut self.density,
            "convexity" => &mut self.convexity,
            "slope" => &mut self.slope,
            "distortion" => &mut self.distortion,
            "dilatation" => &mut self.dilatation,
            _ => {
                return Err(Error::config(format!(
                    "unknown tolerance {key:?}, expected one of {}",
                    Self::KEYS.join(", ")
                )))
            }
        };
        *slot = value;
        Ok(())
    }

    /// Applies a `key=value` override.
    pub fn apply(&mut self, spec: &str) -> Result<()> {
        let (key, value) = spec
            .split_once('=')
            .ok_or_else(|| Error::config(format!("tolerance override {spec:?} is not key=value")))?;
        let value = value
            .trim()
            .parse()
            .map_err(|_| Error::config(format!("cannot parse tolerance value in {spec:?}")))?;
        self.set(key.trim(), value)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub dim: usize,
    pub samples: usize,
    pub tolerances: Tolerances,
    pub output_dir: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            dim: 2,
            samples: DEFAULT_SAMPLES,
            tolerances: Tolerances::default(),
            output_dir: PathBuf::from("cassini-report"),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !matches!(self.dim, 2 | 3) {
            return Err(Error::config(format!("dimension must be 2 or 3, got {}", self.dim)));
        }
        if self.samples == 0 {
            return Err(Error::config("samples must be positive"));
        }
        Ok(())
    }
}

/// One line of `reports.jsonl`.
#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub suite: Suite,
    pub case: usize,
    pub holds: bool,
    pub slack: f64,
    pub detail: Detail,
}

fn serialize_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub cases: usize,
    pub failures: usize,
    /// Smallest slack over all cases.
    pub worst_slack: f64,
    #[serde(rename = "wall_time_ms", serialize_with = "serialize_millis")]
    pub wall_time: Duration,
}

impl SuiteSummary {
    fn of(suite: Suite, records: &[CaseRecord], wall_time: Duration) -> Self {
        SuiteSummary {
            suite,
            cases: records.len(),
            failures: records.iter().filter(|r| !r.holds).count(),
            worst_slack: records.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min),
            wall_time,
        }
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<11} {:>8} {:>8} {:>12.3e} {:>9.2}s",
            self.suite.name(),
            self.cases,
            self.failures,
            self.worst_slack,
            self.wall_time.as_secs_f64()
        )
    }
}

/// Runs one suite and returns its records in case order.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<(Vec<CaseRecord>, SuiteSummary)> {
    cfg.validate()?;
    let start = Instant::now();
    let records = match suite {
        Suite::Metrics => suites::metrics(cfg)?,
        Suite::Theorems => suites::theorems(cfg)?,
        Suite::Density => suites::density(cfg)?,
        Suite::Inclusion => suites::inclusion(cfg)?,
        Suite::Convexity => suites::convexity(cfg)?,
        Suite::Distortion => suites::distortion(cfg)?,
    };
    let summary = SuiteSummary::of(suite, &records, start.elapsed());
    Ok((records, summary))
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub summaries: Vec<SuiteSummary>,
    pub exit_code: i32,
}

impl VerifyOutcome {
    pub fn summary_text(&self) -> String {
        let mut out = format!(
            "{:<11} {:>8} {:>8} {:>12} {:>10}\n",
            "suite", "cases", "failures", "worst_slack", "time"
        );
        for s in &self.summaries {
            out.push_str(&format!("{s}\n"));
        }
        let failed: usize = self.summaries.iter().map(|s| s.failures).sum();
        out.push_str(&format!("total failures: {failed}\n"));
        out
    }
}

/// Runs `suites` in order, writing `reports.jsonl` and `summary.txt` into
/// `cfg.output_dir`. The report bytes depend only on `cfg` and `suites`.
pub fn cmd_verify(cfg: &RunConfig, suites: &[Suite]) -> Result<VerifyOutcome> {
    cfg.validate()?;
    if suites.is_empty() {
        return Err(Error::config("no suites selected"));
    }
    fs::create_dir_all(&cfg.output_dir)?;
    let mut report = BufWriter::new(File::create(cfg.output_dir.join(REPORT_FILE))?);
    let mut summaries = Vec::with_capacity(suites.len());
    for &suite in suites {
        let (records, summary) = run_suite(suite, cfg)?;
        for r in &records {
            serde_json::to_writer(&mut report, r).map_err(io_error)?;
            report.write_all(b"\n")?;
        }
        summaries.push(summary);
    }
    report.flush()?;
    let exit_code = if summaries.iter().all(|s| s.failures == 0) {
        exit::SUCCESS
    } else {
        exit::FAILURES
    };
    let outcome = VerifyOutcome { summaries, exit_code };
    write_file(&cfg.output_dir.join(SUMMARY_FILE), &outcome.summary_text())?;
    Ok(outcome)
}

fn io_error(e: serde_json::Error) -> Error {
    Error::Io(e.into())
}

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, contents)?;
    Ok(())
}

/// Output of the `sharpness` command.
#[derive(Debug, Clone)]
pub enum SharpnessOutput {
    Scan(SharpnessScan),
    Witness(EqualityWitness),
}

impl SharpnessOutput {
    pub fn exit_code(&self) -> i32 {
        let ok = match self {
            SharpnessOutput::Scan(s) => s.matches(SHARPNESS_TOL),
            SharpnessOutput::Witness(w) => w.slack.abs() <= 1e-12,
        };
        if ok {
            exit::SUCCESS
        } else {
            exit::FAILURES
        }
    }

    /// `t,ratio` rows followed by `# key,value` trailer lines.
    pub fn to_csv(&self) -> String {
        match self {
            SharpnessOutput::Scan(s) => {
                let mut out = String::from("t,ratio\n");
                for (t, r) in s.t_values.iter().zip(&s.ratios) {
                    out.push_str(&format!("{t:.16e},{r:.16e}\n"));
                }
                out.push_str(&format!("# theorem,{}\n", s.theorem));
                out.push_str(&format!("# family,{}\n", s.family));
                out.push_str(&format!("# endpoint,{}\n", s.endpoint));
                out.push_str(&format!("# extrapolated_limit,{:.16e}\n", s.extrapolated_limit));
                out.push_str(&format!("# claimed_limit,{:.16e}\n", s.claimed_limit));
                out.push_str(&format!("# discrepancy,{:.3e}\n", s.discrepancy));
                out.push_str(&format!("# monotone,{}\n", s.monotone));
                out
            }
            SharpnessOutput::Witness(w) => format!(
                "x,y,s,bound,slack\n{:?},{:?},{:.16e},{:.16e},{:.3e}\n",
                w.x.coords(),
                w.y.coords(),
                w.s,
                w.bound,
                w.slack
            )
            .replace(", ", " "),
        }
    }
}

/// Sharpness scan of `id` toward `endpoint`, down to distance `gap_min` from it.
pub fn cmd_sharpness(id: TheoremId, endpoint: Endpoint, gap_min: f64) -> Result<SharpnessOutput> {
    if id == TheoremId::STau {
        return Ok(SharpnessOutput::Witness(s_tau_equality_witness()));
    }
    let schedule = default_schedule(endpoint, gap_min)?;
    Ok(SharpnessOutput::Scan(sharpness_scan(id, endpoint, &schedule)?))
}
