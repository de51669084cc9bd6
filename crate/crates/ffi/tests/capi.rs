//! Exercises the C ABI the way a foreign caller would: through the exported
//! extern "C" functions, opaque handles, and status codes.

use std::ffi::{c_char, CStr};
use std::ptr;

use catalan_log_ffi::{
    catlog_grunberg_stirling, catlog_series_catalan, catlog_series_coeff, catlog_series_free,
    catlog_series_fuss_catalan, catlog_series_knuth_rhs, catlog_series_log_pow,
    catlog_series_order, catlog_series_u_power, catlog_string_free, catlog_verify, CatlogRoute,
    CatlogSeries, CatlogStatus, CatlogSuite,
};

unsafe fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let text = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    catlog_string_free(ptr);
    text
}

unsafe fn coeff_string(series: *const CatlogSeries, n: usize) -> String {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(catlog_series_coeff(series, n, &mut out), CatlogStatus::Ok);
    take_string(out)
}

#[test]
fn catalan_series_through_the_abi() {
    unsafe {
        let mut series: *mut CatlogSeries = ptr::null_mut();
        assert_eq!(catlog_series_catalan(5, &mut series), CatlogStatus::Ok);

        let mut order = 0usize;
        assert_eq!(catlog_series_order(series, &mut order), CatlogStatus::Ok);
        assert_eq!(order, 5);

        let coeffs: Vec<String> = (0..=5).map(|n| coeff_string(series, n)).collect();
        assert_eq!(coeffs, ["1", "1", "2", "5", "14", "42"]);

        assert_eq!(
            catlog_series_coeff(series, 0, ptr::null_mut()),
            CatlogStatus::NullArgument
        );
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(catlog_series_coeff(series, 6, &mut out), CatlogStatus::OutOfRange);

        catlog_series_free(series);
    }
}

#[test]
fn routes_agree_coefficientwise() {
    unsafe {
        let mut direct: *mut CatlogSeries = ptr::null_mut();
        let mut stirling: *mut CatlogSeries = ptr::null_mut();
        let mut harmonic: *mut CatlogSeries = ptr::null_mut();
        assert_eq!(
            catlog_series_log_pow(CatlogRoute::Direct, 2, 2, 12, &mut direct),
            CatlogStatus::Ok
        );
        assert_eq!(
            catlog_series_log_pow(CatlogRoute::Stirling, 2, 2, 12, &mut stirling),
            CatlogStatus::Ok
        );
        assert_eq!(
            catlog_series_log_pow(CatlogRoute::Harmonic, 2, 2, 12, &mut harmonic),
            CatlogStatus::Ok
        );
        let mut knuth: *mut CatlogSeries = ptr::null_mut();
        assert_eq!(catlog_series_knuth_rhs(12, &mut knuth), CatlogStatus::Ok);

        for n in 0..=12 {
            let expect = coeff_string(knuth, n);
            assert_eq!(coeff_string(direct, n), expect, "direct, n={n}");
            assert_eq!(coeff_string(stirling, n), expect, "stirling, n={n}");
            assert_eq!(coeff_string(harmonic, n), expect, "harmonic, n={n}");
        }

        catlog_series_free(direct);
        catlog_series_free(stirling);
        catlog_series_free(harmonic);
        catlog_series_free(knuth);
    }
}

#[test]
fn u_power_and_fuss_catalan() {
    unsafe {
        let mut u: *mut CatlogSeries = ptr::null_mut();
        assert_eq!(catlog_series_u_power(1, 3, 4, &mut u), CatlogStatus::Ok);
        let mut c: *mut CatlogSeries = ptr::null_mut();
        assert_eq!(catlog_series_fuss_catalan(3, 4, &mut c), CatlogStatus::Ok);

        // C_lambda = 1 + u.
        assert_eq!(coeff_string(c, 0), "1");
        assert_eq!(coeff_string(u, 0), "0");
        for n in 1..=4 {
            assert_eq!(coeff_string(u, n), coeff_string(c, n), "n={n}");
        }

        catlog_series_free(u);
        catlog_series_free(c);
    }
}

#[test]
fn grunberg_scalar() {
    unsafe {
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(catlog_grunberg_stirling(3, 1, &mut out), CatlogStatus::Ok);
        assert_eq!(take_string(out), "11/6");

        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(catlog_grunberg_stirling(3, 2, &mut out), CatlogStatus::Ok);
        assert_eq!(take_string(out), "1");
    }
}

#[test]
fn argument_errors() {
    unsafe {
        let mut series: *mut CatlogSeries = ptr::null_mut();
        assert_eq!(catlog_series_fuss_catalan(0, 4, &mut series), CatlogStatus::InvalidArgument);
        assert_eq!(catlog_series_catalan(4, ptr::null_mut()), CatlogStatus::NullArgument);
        assert_eq!(
            catlog_series_log_pow(CatlogRoute::Harmonic, 2, 3, 8, &mut series),
            CatlogStatus::InvalidArgument
        );
        assert_eq!(
            catlog_series_log_pow(CatlogRoute::Harmonic, 0, 2, 8, &mut series),
            CatlogStatus::InvalidArgument
        );
        assert!(series.is_null(), "failed constructors must not write a handle");

        // free functions tolerate null
        catlog_series_free(ptr::null_mut());
        catlog_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_suite_through_the_abi() {
    unsafe {
        let lambdas = [1u32, 2, 3];
        let mut passed = false;
        let mut json: *mut c_char = ptr::null_mut();
        let status = catlog_verify(
            CatlogSuite::Routes,
            3,
            lambdas.as_ptr(),
            lambdas.len(),
            12,
            12,
            4,
            &mut passed,
            &mut json,
        );
        assert_eq!(status, CatlogStatus::Ok);
        assert!(passed);
        let doc: catalan_log::cli::VerifyJson =
            serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(doc.suite, "routes");
        assert_eq!(doc.reports.len(), 2);
        assert!(doc.reports.iter().all(|r| r.passed));

        // JSON output is optional.
        let mut passed = false;
        let status = catlog_verify(
            CatlogSuite::Alternating,
            0,
            lambdas.as_ptr(),
            lambdas.len(),
            0,
            40,
            0,
            &mut passed,
            ptr::null_mut(),
        );
        assert_eq!(status, CatlogStatus::Ok);
        assert!(passed);

        // Bad arguments are rejected up front.
        let bad = [0u32];
        let status = catlog_verify(
            CatlogSuite::Routes,
            2,
            bad.as_ptr(),
            1,
            10,
            10,
            4,
            &mut passed,
            ptr::null_mut(),
        );
        assert_eq!(status, CatlogStatus::InvalidArgument);
        let status = catlog_verify(
            CatlogSuite::Routes,
            2,
            ptr::null(),
            2,
            10,
            10,
            4,
            &mut passed,
            ptr::null_mut(),
        );
        assert_eq!(status, CatlogStatus::NullArgument);
    }
}

#[test]
fn generated_header_exports_the_api() {
    let header = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/catalan_log.h"),
    )
    .expect("header generated at build time");
    for symbol in [
        "typedef struct CatlogSeries CatlogSeries;",
        "catlog_series_catalan",
        "catlog_series_log_pow",
        "catlog_series_coeff",
        "catlog_verify",
        "catlog_string_free",
        "CATLOG_STATUS_INVALID_ARGUMENT",
    ] {
        assert!(header.contains(symbol), "missing from header: {symbol}");
    }
}
