use std::ffi::{CStr, CString};
use std::ptr;

use sinecert_ffi::*;

fn last_error() -> String {
    let p = sc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn exact_poly_round_trip() {
    let text = CString::new("2,1,4/3,1,6/5,0,0,3/4").unwrap();
    let mut poly = ptr::null_mut();
    unsafe {
        assert_eq!(sc_sine_poly_parse(text.as_ptr(), &mut poly), ScStatus::Ok);
        assert_eq!(sc_sine_poly_len(poly), 8);
        let mut v = 0.0;
        assert_eq!(sc_sine_poly_eval(poly, std::f64::consts::FRAC_PI_2, &mut v), ScStatus::Ok);
        assert!((v - (2.0 - 4.0 / 3.0 + 6.0 / 5.0)).abs() < 1e-12);

        let mut cert = ptr::null_mut();
        assert_eq!(sc_certify(poly, &mut cert), ScStatus::Ok);
        let mut verdict = ScVerdict::ExactNonneg;
        assert_eq!(sc_certificate_verdict(cert, &mut verdict), ScStatus::Ok);
        assert_eq!(verdict, ScVerdict::Violation);
        let (mut x, mut val) = (0.0, 0.0);
        assert_eq!(sc_certificate_witness(cert, &mut x, &mut val), ScStatus::Ok);
        assert!(val < 0.0 && x > 0.0 && x < std::f64::consts::PI);
        let mut at = 0.0;
        sc_sine_poly_eval(poly, x, &mut at);
        assert!((at - val).abs() < 1e-9);

        let json = sc_certificate_to_json(cert);
        assert!(CStr::from_ptr(json).to_str().unwrap().contains("\"verdict\":\"Violation\""));
        sc_string_free(json);
        sc_certificate_free(cert);
        sc_sine_poly_free(poly);
    }
}

#[test]
fn float_poly_is_certified_numerically() {
    let c = [1.0, 0.5, 1.0 / 3.0];
    let mut poly = ptr::null_mut();
    unsafe {
        assert_eq!(sc_sine_poly_from_f64(c.as_ptr(), c.len(), &mut poly), ScStatus::Ok);
        let mut cert = ptr::null_mut();
        assert_eq!(sc_certify(poly, &mut cert), ScStatus::Ok);
        let mut verdict = ScVerdict::Violation;
        sc_certificate_verdict(cert, &mut verdict);
        assert_eq!(verdict, ScVerdict::NumericEvidence);
        let (mut x, mut v) = (0.0, 0.0);
        assert_eq!(sc_certificate_witness(cert, &mut x, &mut v), ScStatus::NotAViolation);
        sc_certificate_free(cert);
        sc_sine_poly_free(poly);
    }
}

#[test]
fn family_reports() {
    let fam = CString::new("phi1:3913/5000").unwrap();
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(sc_certify_family(fam.as_ptr(), 8, ScMode::Exact, &mut report), ScStatus::Ok);
        assert_eq!(sc_report_len(report), 8);
        let mut first = 0;
        assert_eq!(sc_report_first_violation(report, &mut first), ScStatus::Ok);
        assert_eq!(first, 5);
        let json = sc_report_to_json(report);
        assert!(CStr::from_ptr(json).to_str().unwrap().starts_with('{'));
        sc_string_free(json);
        sc_report_free(report);

        let fam = CString::new("gamma").unwrap();
        assert_eq!(sc_certify_family(fam.as_ptr(), 10, ScMode::Auto, &mut report), ScStatus::Ok);
        sc_report_first_violation(report, &mut first);
        assert_eq!(first, 0);
        sc_report_free(report);
    }
}

#[test]
fn errors_are_reported() {
    let mut poly = ptr::null_mut();
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(sc_sine_poly_parse(ptr::null(), &mut poly), ScStatus::NullPointer);
        assert!(last_error().contains("coeffs"));
        let bad = CString::new("1,x").unwrap();
        assert_eq!(sc_sine_poly_parse(bad.as_ptr(), &mut poly), ScStatus::Parse);
        let fam = CString::new("nope").unwrap();
        assert_eq!(sc_certify_family(fam.as_ptr(), 4, ScMode::Auto, &mut report), ScStatus::InvalidArgument);
        assert!(last_error().contains("nope"));
        let fam = CString::new("power_phi:0.3").unwrap();
        assert_eq!(sc_certify_family(fam.as_ptr(), 4, ScMode::Exact, &mut report), ScStatus::ExactRequired);
        let fam = CString::new("gamma").unwrap();
        assert_eq!(sc_certify_family(fam.as_ptr(), 0, ScMode::Exact, &mut report), ScStatus::InvalidArgument);
        assert_eq!(sc_certificate_verdict(ptr::null(), &mut ScVerdict::Violation), ScStatus::NullPointer);
        let nan = [f64::NAN];
        assert_ne!(sc_sine_poly_from_f64(nan.as_ptr(), 1, &mut poly), ScStatus::Ok);

        // a successful call clears the message
        let ok = CString::new("1").unwrap();
        assert_eq!(sc_sine_poly_parse(ok.as_ptr(), &mut poly), ScStatus::Ok);
        assert!(sc_last_error_message().is_null());
        sc_sine_poly_free(poly);
        sc_sine_poly_free(ptr::null_mut());
        sc_string_free(ptr::null_mut());
    }
}

#[test]
fn constants() {
    assert!((sc_alpha() - 0.782652132952).abs() < 1e-11);
    assert!((sc_sigma() - 4.493409457909).abs() < 1e-11);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sinecert.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for t in [
        "typedef struct ScSinePoly ScSinePoly;",
        "typedef struct ScCertificate ScCertificate;",
        "typedef struct ScReport ScReport;",
    ] {
        assert!(header.contains(t));
    }
}
