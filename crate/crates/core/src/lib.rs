//! Scale-invariant Cassinian metrics on finitely punctured Euclidean spaces.
//!
//! The crate evaluates the scale-invariant Cassinian metric `tau_p`, its
//! average `tau_hat` over a finite puncture set, and the companion
//! hyperbolic-type metrics (`u`, `j`, `j_tilde`, `j*`, `s`, the Cassinian
//! metric `tau_tilde`), and numerically checks the comparison inequalities,
//! sharpness constants, local density bounds, ball inclusions, bilipschitz
//! distortion and ball convexity relating them.
//!
//! - [`metric`]: points, punctured domains and the metric evaluators.
//! - [`comparisons`]: pointwise inequality checks and sharpness scans.
//! - [`ball`]: polar boundary of `tau_p`-balls, convexity, Euclidean sandwich.
//! - [`distortion`]: bilipschitz test maps and their `tau_p` distortion.
//! - [`harness`]: the verification suites and file emitters behind the CLI.

pub mod ball;
pub mod comparisons;
pub mod distortion;
pub mod error;
pub mod extrapolate;
pub mod harness;
pub mod metric;
pub mod sampling;

pub use error::{Error, Result};
pub use metric::{MetricKind, Point, PuncturedDomain};
