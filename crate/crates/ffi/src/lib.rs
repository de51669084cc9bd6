//! C ABI for the catalan-log library.
//!
//! Series live behind opaque `CatlogSeries` handles; every function returns a
//! `CatlogStatus` and reports results through out-pointers. Coefficients
//! cross the boundary as lowest-terms "num/den" strings (plain "num" for
//! integers) allocated by Rust; release them with `catlog_string_free`.
//!
//! The header is generated into `include/catalan_log.h` at build time.

use std::ffi::{c_char, CString};

use catalan_log::catalan::{catalan_series, fuss_catalan_series, u_power_series_lambda, Lambda};
use catalan_log::cli::reports_to_json;
use catalan_log::combinatorics::StirlingTriangle;
use catalan_log::identities::{
    self, grunberg_stirling, knuth_rhs, log_pow_direct, log_pow_harmonic, log_pow_stirling,
    ExpansionRequest, VerifyOptions,
};
use catalan_log::series::Series;

/// Status code of every C-ABI call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatlogStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was outside its domain (for example lambda = 0, or the
    /// harmonic route with lambda != 2 or p = 0).
    InvalidArgument = 2,
    /// A coefficient index beyond the series truncation order.
    OutOfRange = 3,
}

/// Which of the three routes computes (log C_lambda)^p.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatlogRoute {
    Direct = 0,
    Stirling = 1,
    Harmonic = 2,
}

/// Verification suite selector, mirroring the CLI `verify --suite` values.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatlogSuite {
    All = 0,
    Routes = 1,
    Knuth = 2,
    Alternating = 3,
    Grunberg = 4,
    FunctionalEquation = 5,
}

/// Opaque handle to a truncated series with exact rational coefficients.
pub struct CatlogSeries {
    inner: Series,
}

fn store_series(series: Series, out: *mut *mut CatlogSeries) -> CatlogStatus {
    let handle = Box::new(CatlogSeries { inner: series });
    unsafe { *out = Box::into_raw(handle) };
    CatlogStatus::Ok
}

fn make_lambda(lambda: u32) -> Result<Lambda, CatlogStatus> {
    Lambda::new(lambda).map_err(|_| CatlogStatus::InvalidArgument)
}

fn into_c_string(text: String, out: *mut *mut c_char) -> CatlogStatus {
    // Rational and JSON strings never contain interior NULs.
    let c = CString::new(text).expect("no interior NUL");
    unsafe { *out = c.into_raw() };
    CatlogStatus::Ok
}

/// Catalan generating function C(z) truncated at `order`.
///
/// # Safety
/// `out` must be a valid pointer to a `CatlogSeries*`.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_catalan(
    order: usize,
    out: *mut *mut CatlogSeries,
) -> CatlogStatus {
    if out.is_null() {
        return CatlogStatus::NullArgument;
    }
    store_series(catalan_series(order), out)
}

/// Generalized Catalan series C_lambda(z) truncated at `order`.
///
/// # Safety
/// `out` must be a valid pointer to a `CatlogSeries*`.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_fuss_catalan(
    lambda: u32,
    order: usize,
    out: *mut *mut CatlogSeries,
) -> CatlogStatus {
    if out.is_null() {
        return CatlogStatus::NullArgument;
    }
    match make_lambda(lambda) {
        Ok(lam) => store_series(fuss_catalan_series(lam, order), out),
        Err(status) => status,
    }
}

/// u(z)^m for u = z(1+u)^lambda, from the Lagrange-inversion closed form.
///
/// # Safety
/// `out` must be a valid pointer to a `CatlogSeries*`.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_u_power(
    m: u32,
    lambda: u32,
    order: usize,
    out: *mut *mut CatlogSeries,
) -> CatlogStatus {
    if out.is_null() {
        return CatlogStatus::NullArgument;
    }
    match make_lambda(lambda) {
        Ok(lam) => store_series(u_power_series_lambda(m, lam, order), out),
        Err(status) => status,
    }
}

/// (log C_lambda(z))^p by the chosen route. The harmonic route requires
/// lambda = 2 and p >= 1.
///
/// # Safety
/// `out` must be a valid pointer to a `CatlogSeries*`.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_log_pow(
    route: CatlogRoute,
    p: u32,
    lambda: u32,
    order: usize,
    out: *mut *mut CatlogSeries,
) -> CatlogStatus {
    if out.is_null() {
        return CatlogStatus::NullArgument;
    }
    let lam = match make_lambda(lambda) {
        Ok(lam) => lam,
        Err(status) => return status,
    };
    let request = ExpansionRequest::new(p, lam, order);
    let series = match route {
        CatlogRoute::Direct => log_pow_direct(request),
        CatlogRoute::Stirling => log_pow_stirling(request),
        CatlogRoute::Harmonic => match log_pow_harmonic(request) {
            Ok(series) => series,
            Err(_) => return CatlogStatus::InvalidArgument,
        },
    };
    store_series(series, out)
}

/// The harmonic-number closed form for (log C)^2.
///
/// # Safety
/// `out` must be a valid pointer to a `CatlogSeries*`.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_knuth_rhs(
    order: usize,
    out: *mut *mut CatlogSeries,
) -> CatlogStatus {
    if out.is_null() {
        return CatlogStatus::NullArgument;
    }
    store_series(knuth_rhs(order), out)
}

/// Truncation order of a series handle.
///
/// # Safety
/// `series` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_order(
    series: *const CatlogSeries,
    out: *mut usize,
) -> CatlogStatus {
    if series.is_null() || out.is_null() {
        return CatlogStatus::NullArgument;
    }
    unsafe { *out = (*series).inner.order() };
    CatlogStatus::Ok
}

/// Coefficient of z^n as a lowest-terms string; free it with
/// `catlog_string_free`.
///
/// # Safety
/// `series` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_coeff(
    series: *const CatlogSeries,
    n: usize,
    out: *mut *mut c_char,
) -> CatlogStatus {
    if series.is_null() || out.is_null() {
        return CatlogStatus::NullArgument;
    }
    let inner = unsafe { &(*series).inner };
    if n > inner.order() {
        return CatlogStatus::OutOfRange;
    }
    into_c_string(inner.coeff(n).to_string(), out)
}

/// c(n+1, r+1)/n! from harmonic numbers and partitions, as a lowest-terms
/// string; free it with `catlog_string_free`.
///
/// # Safety
/// `out` must be a valid pointer to a `char*`.
#[no_mangle]
pub unsafe extern "C" fn catlog_grunberg_stirling(
    n: usize,
    r: usize,
    out: *mut *mut c_char,
) -> CatlogStatus {
    if out.is_null() {
        return CatlogStatus::NullArgument;
    }
    into_c_string(grunberg_stirling(n, r).to_string(), out)
}

/// Runs a verification suite. `lambdas`/`lambdas_len` select the branching
/// parameters for the route sweeps (pass a single 2 for the classical case).
/// `out_passed` receives whether every report passed; when `out_json` is
/// non-null it receives the full report document (free with
/// `catlog_string_free`).
///
/// # Safety
/// `lambdas` must point to `lambdas_len` readable u32 values (it may be null
/// only when `lambdas_len` is 0); `out_passed` must be valid.
#[no_mangle]
pub unsafe extern "C" fn catlog_verify(
    suite: CatlogSuite,
    pmax: u32,
    lambdas: *const u32,
    lambdas_len: usize,
    order: usize,
    nmax: usize,
    rmax: usize,
    out_passed: *mut bool,
    out_json: *mut *mut c_char,
) -> CatlogStatus {
    if out_passed.is_null() || (lambdas.is_null() && lambdas_len > 0) {
        return CatlogStatus::NullArgument;
    }
    if lambdas_len == 0 || nmax < 2 {
        return CatlogStatus::InvalidArgument;
    }
    let raw = unsafe { std::slice::from_raw_parts(lambdas, lambdas_len) };
    let mut resolved = Vec::with_capacity(raw.len());
    for &value in raw {
        match make_lambda(value) {
            Ok(lam) => resolved.push(lam),
            Err(status) => return status,
        }
    }
    let opts = VerifyOptions { pmax, lambdas: resolved, order, nmax, rmax };
    let triangle = StirlingTriangle::new(opts.required_stirling_rows());
    let (name, reports) = match suite {
        CatlogSuite::All => ("all", identities::verify_all(&opts, &triangle)),
        CatlogSuite::Routes => ("routes", identities::verify_routes(&opts, &triangle)),
        CatlogSuite::Knuth => ("knuth", identities::verify_knuth(&opts, &triangle)),
        CatlogSuite::Alternating => (
            "alternating",
            vec![identities::alternating_identity_check(opts.nmax)],
        ),
        CatlogSuite::Grunberg => (
            "grunberg",
            identities::verify_grunberg(opts.nmax, opts.rmax, &triangle),
        ),
        CatlogSuite::FunctionalEquation => (
            "functional-equation",
            identities::verify_functional_equation_suite(&opts),
        ),
    };
    unsafe { *out_passed = reports.iter().all(|r| r.passed) };
    if !out_json.is_null() {
        return into_c_string(reports_to_json(name, &reports), out_json);
    }
    CatlogStatus::Ok
}

/// Frees a series handle. Null is ignored.
///
/// # Safety
/// `series` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn catlog_series_free(series: *mut CatlogSeries) {
    if !series.is_null() {
        drop(unsafe { Box::from_raw(series) });
    }
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn catlog_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
