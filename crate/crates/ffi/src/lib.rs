//! C ABI for `cassini`.
//!
//! Every function returns a [`CassiniStatus`]. Results are written through
//! out-pointers, which are left untouched on failure. After a failure the
//! message is available from [`cassini_last_error_message`] on the same
//! thread. Handles are created by `*_new` functions and released with the
//! matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use cassini::ball::{
    boundary_curve, classify_convexity, polar_roots, BallSpec, BoundaryCurve, PolarRoots, Radius, Regime,
};
use cassini::comparisons::{check_theorem, default_schedule, sharpness_scan, Endpoint, TheoremId};
use cassini::metric::{self, MetricKind};
use cassini::{Error, Point, PuncturedDomain};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CassiniStatus {
    Ok = 0,
    NullPointer = 1,
    Dimension = 2,
    OnBoundary = 3,
    OutOfRange = 4,
    Config = 5,
    InvalidInput = 6,
    Io = 7,
    /// An internal panic was caught at the boundary.
    Panic = 8,
    /// A buffer passed by the caller is too small.
    BufferTooSmall = 9,
}

/// Metric selector for [`cassini_metric`].
#[repr(u32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CassiniMetric {
    TauHat = 0,
    TauTilde = 1,
    U = 2,
    JTilde = 3,
    J = 4,
    JStar = 5,
    S = 6,
}

/// Inequality selector for [`cassini_check_theorem`] and [`cassini_sharpness`].
#[repr(u32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CassiniTheorem {
    TauU = 0,
    TauHatU = 1,
    TauJTilde = 2,
    TauHatJTilde = 3,
    TauJ = 4,
    TauHatJ = 5,
    TanhJStar = 6,
    STau = 7,
    DensityOnce = 8,
    DensityAvg = 9,
}

#[repr(u32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CassiniEndpoint {
    ToZero = 0,
    ToOne = 1,
}

#[repr(u32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CassiniRegime {
    Sector = 0,
    Pinched = 1,
    Annular = 2,
}

/// Opaque punctured domain.
pub struct CassiniDomain(PuncturedDomain);

/// Opaque sampled ball boundary.
pub struct CassiniCurve(BoundaryCurve);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_last_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> CassiniStatus {
    match e {
        Error::Dimension { .. } => CassiniStatus::Dimension,
        Error::OnBoundary { .. } => CassiniStatus::OnBoundary,
        Error::OutOfRange(_) => CassiniStatus::OutOfRange,
        Error::Config(_) => CassiniStatus::Config,
        Error::InvalidInput(_) => CassiniStatus::InvalidInput,
        Error::Io(_) => CassiniStatus::Io,
    }
}

struct Fail(CassiniStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(CassiniStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> CassiniStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => CassiniStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("internal panic: {msg}"));
            CassiniStatus::Panic
        }
    }
}

unsafe fn ref_of<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn point(coords: *const f64, dim: usize, what: &str) -> Result<Point, Fail> {
    if coords.is_null() {
        return Err(null(what));
    }
    Ok(Point::new(slice::from_raw_parts(coords, dim).to_vec())?)
}

fn theorem(code: u32) -> Result<TheoremId, Fail> {
    TheoremId::ALL
        .get(code as usize)
        .copied()
        .ok_or_else(|| Fail(CassiniStatus::Config, format!("unknown theorem code {code}")))
}

fn radius(r: f64) -> Result<Radius, Fail> {
    Ok(Radius::new(r)?)
}

/// Length in bytes of the last error message on this thread, excluding the NUL.
#[no_mangle]
pub extern "C" fn cassini_last_error_length() -> usize {
    LAST_ERROR.with(|e| e.borrow().len())
}

/// Copies the last error message, NUL-terminated, into `buf`.
///
/// # Safety
/// `buf` must be valid for `cap` bytes of writes.
#[no_mangle]
pub unsafe extern "C" fn cassini_last_error_message(buf: *mut c_char, cap: usize) -> CassiniStatus {
    if buf.is_null() {
        return CassiniStatus::NullPointer;
    }
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if msg.len() + 1 > cap {
            return CassiniStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), msg.len());
        *buf.add(msg.len()) = 0;
        CassiniStatus::Ok
    })
}

/// Creates `R^dim` minus `n_punctures` points read row-major from `coords`.
///
/// # Safety
/// `coords` must hold `n_punctures * dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_domain_new(
    coords: *const f64,
    n_punctures: usize,
    dim: usize,
    out: *mut *mut CassiniDomain,
) -> CassiniStatus {
    guard(|| {
        if coords.is_null() {
            return Err(null("coords"));
        }
        if dim == 0 || n_punctures == 0 {
            return Err(Fail(
                CassiniStatus::Config,
                "need at least one puncture in dimension >= 1".into(),
            ));
        }
        let flat = slice::from_raw_parts(coords, n_punctures * dim);
        let pts = flat
            .chunks_exact(dim)
            .map(|c| Point::new(c.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        let domain = PuncturedDomain::new(pts)?;
        write(out, Box::into_raw(Box::new(CassiniDomain(domain))), "out")
    })
}

/// # Safety
/// `domain` must come from [`cassini_domain_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cassini_domain_free(domain: *mut CassiniDomain) {
    if !domain.is_null() {
        drop(Box::from_raw(domain));
    }
}

/// # Safety
/// `domain` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_domain_dim(domain: *const CassiniDomain, out: *mut usize) -> CassiniStatus {
    guard(|| write(out, ref_of(domain, "domain")?.0.dim(), "out"))
}

/// Evaluates a metric of the domain at `x`, `y`, each of the domain's dimension.
///
/// # Safety
/// `domain` must be a live handle, `x` and `y` must hold `dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn cassini_metric(
    domain: *const CassiniDomain,
    metric: u32,
    x: *const f64,
    y: *const f64,
    out: *mut f64,
) -> CassiniStatus {
    guard(|| {
        let d = &ref_of(domain, "domain")?.0;
        let kind = match metric {
            0 => MetricKind::TauHat,
            1 => MetricKind::TauTilde,
            2 => MetricKind::U,
            3 => MetricKind::JTilde,
            4 => MetricKind::J,
            5 => MetricKind::JStar,
            6 => MetricKind::S,
            _ => return Err(Fail(CassiniStatus::Config, format!("unknown metric code {metric}"))),
        };
        let (x, y) = (point(x, d.dim(), "x")?, point(y, d.dim(), "y")?);
        write(out, kind.evaluate(d, &x, &y)?, "out")
    })
}

/// `tau_p(x, y)` in `R^dim \ {p}`.
///
/// # Safety
/// `p`, `x`, `y` must hold `dim` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_tau_p(
    p: *const f64,
    x: *const f64,
    y: *const f64,
    dim: usize,
    out: *mut f64,
) -> CassiniStatus {
    guard(|| {
        let v = metric::tau_p(&point(p, dim, "p")?, &point(x, dim, "x")?, &point(y, dim, "y")?)?;
        write(out, v, "out")
    })
}

/// Checks every side of an inequality at `(x, y)`. `holds` is set when all
/// sides hold, `min_slack` to the smallest `rhs - lhs`.
///
/// # Safety
/// `domain` must be a live handle; `x`, `y` must hold `dim` doubles; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_check_theorem(
    domain: *const CassiniDomain,
    theorem_code: u32,
    x: *const f64,
    y: *const f64,
    holds: *mut bool,
    min_slack: *mut f64,
) -> CassiniStatus {
    guard(|| {
        let d = &ref_of(domain, "domain")?.0;
        if holds.is_null() || min_slack.is_null() {
            return Err(null("output"));
        }
        let (x, y) = (point(x, d.dim(), "x")?, point(y, d.dim(), "y")?);
        let reports = check_theorem(theorem(theorem_code)?, d, &x, &y)?;
        write(holds, reports.iter().all(|r| r.holds), "holds")?;
        write(
            min_slack,
            reports.iter().map(|r| r.slack).fold(f64::INFINITY, f64::min),
            "min_slack",
        )
    })
}

/// Roots `t1 <= t2` of the ball boundary of radius `r` centred at `e1` along
/// angle `theta`. `has_roots` is false when the ray misses the boundary.
///
/// # Safety
/// Outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_polar_roots(
    r: f64,
    theta: f64,
    has_roots: *mut bool,
    t1: *mut f64,
    t2: *mut f64,
) -> CassiniStatus {
    guard(|| {
        if has_roots.is_null() || t1.is_null() || t2.is_null() {
            return Err(null("output"));
        }
        match polar_roots(radius(r)?, theta) {
            PolarRoots::Pair { t1: a, t2: b, .. } => {
                write(t1, a, "t1")?;
                write(t2, b, "t2")?;
                write(has_roots, true, "has_roots")
            }
            PolarRoots::Empty => write(has_roots, false, "has_roots"),
        }
    })
}

/// Convexity of the ball of radius `r` from `n_samples` boundary points.
///
/// # Safety
/// Outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_classify_convexity(
    r: f64,
    n_samples: usize,
    tol: f64,
    convex: *mut bool,
    max_reverse_turn: *mut f64,
) -> CassiniStatus {
    guard(|| {
        if convex.is_null() || max_reverse_turn.is_null() {
            return Err(null("output"));
        }
        let v = classify_convexity(radius(r)?, n_samples, tol)?;
        write(convex, v.is_convex(), "convex")?;
        write(max_reverse_turn, v.max_reverse_turn, "max_reverse_turn")
    })
}

/// Samples the boundary of the ball of radius `r` centred at `e1` in `R^2 \ {0}`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_curve_new(r: f64, n_samples: usize, out: *mut *mut CassiniCurve) -> CassiniStatus {
    guard(|| {
        let curve = boundary_curve(&BallSpec::normalized(radius(r)?), n_samples)?;
        write(out, Box::into_raw(Box::new(CassiniCurve(curve))), "out")
    })
}

/// Like [`cassini_curve_new`] with a radius token such as `"log5"` or `"0.8"`,
/// which keeps `log x` radii exact.
///
/// # Safety
/// `radius` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_curve_new_parsed(
    radius: *const c_char,
    n_samples: usize,
    out: *mut *mut CassiniCurve,
) -> CassiniStatus {
    guard(|| {
        if radius.is_null() {
            return Err(null("radius"));
        }
        let text = CStr::from_ptr(radius)
            .to_str()
            .map_err(|_| Fail(CassiniStatus::InvalidInput, "radius is not UTF-8".into()))?;
        let r: Radius = text.parse()?;
        let curve = boundary_curve(&BallSpec::normalized(r), n_samples)?;
        write(out, Box::into_raw(Box::new(CassiniCurve(curve))), "out")
    })
}

/// # Safety
/// `curve` must come from a `cassini_curve_new*` call and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cassini_curve_free(curve: *mut CassiniCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// # Safety
/// `curve` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_curve_regime(curve: *const CassiniCurve, out: *mut CassiniRegime) -> CassiniStatus {
    guard(|| {
        let regime = match ref_of(curve, "curve")?.0.regime {
            Regime::Sector => CassiniRegime::Sector,
            Regime::Pinched => CassiniRegime::Pinched,
            Regime::Annular => CassiniRegime::Annular,
        };
        write(out, regime, "out")
    })
}

/// # Safety
/// `curve` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_curve_component_count(curve: *const CassiniCurve, out: *mut usize) -> CassiniStatus {
    guard(|| write(out, ref_of(curve, "curve")?.0.components.len(), "out"))
}

/// Number of samples in one component.
///
/// # Safety
/// `curve` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_curve_component_len(
    curve: *const CassiniCurve,
    component: usize,
    out: *mut usize,
) -> CassiniStatus {
    guard(|| {
        let c = &ref_of(curve, "curve")?.0;
        let comp = c
            .components
            .get(component)
            .ok_or_else(|| Fail(CassiniStatus::OutOfRange, format!("no component {component}")))?;
        write(out, comp.len(), "out")
    })
}

/// Copies the `(x, y)` samples of one component into `xs` and `ys`.
///
/// # Safety
/// `xs` and `ys` must be valid for `cap` doubles of writes.
#[no_mangle]
pub unsafe extern "C" fn cassini_curve_component_points(
    curve: *const CassiniCurve,
    component: usize,
    xs: *mut f64,
    ys: *mut f64,
    cap: usize,
) -> CassiniStatus {
    guard(|| {
        let c = &ref_of(curve, "curve")?.0;
        if xs.is_null() || ys.is_null() {
            return Err(null("output"));
        }
        let comp = c
            .components
            .get(component)
            .ok_or_else(|| Fail(CassiniStatus::OutOfRange, format!("no component {component}")))?;
        if comp.len() > cap {
            return Err(Fail(
                CassiniStatus::BufferTooSmall,
                format!("component has {} samples, buffer holds {cap}", comp.len()),
            ));
        }
        let (xs, ys) = (slice::from_raw_parts_mut(xs, cap), slice::from_raw_parts_mut(ys, cap));
        for (k, s) in comp.iter().enumerate() {
            xs[k] = s.x;
            ys[k] = s.y;
        }
        Ok(())
    })
}

/// Extrapolated and claimed limits of the sharpness family of `theorem_code`
/// toward `endpoint`, sampled down to distance `gap_min` from it.
///
/// # Safety
/// Outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn cassini_sharpness(
    theorem_code: u32,
    endpoint: u32,
    gap_min: f64,
    extrapolated: *mut f64,
    claimed: *mut f64,
) -> CassiniStatus {
    guard(|| {
        if extrapolated.is_null() || claimed.is_null() {
            return Err(null("output"));
        }
        let endpoint = match endpoint {
            0 => Endpoint::ToZero,
            1 => Endpoint::ToOne,
            _ => return Err(Fail(CassiniStatus::Config, format!("unknown endpoint code {endpoint}"))),
        };
        let scan = sharpness_scan(theorem(theorem_code)?, endpoint, &default_schedule(endpoint, gap_min)?)?;
        write(extrapolated, scan.extrapolated_limit, "extrapolated")?;
        write(claimed, scan.claimed_limit, "claimed")
    })
}
