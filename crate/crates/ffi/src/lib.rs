//! C interface to `sinecert`.
//!
//! Every function returns an [`ScStatus`]; on failure the message is available
//! from [`sc_last_error_message`] on the same thread. Handles are opaque and
//! must be released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sinecert::certify::{
    self, certify_nonneg_exact, certify_numeric, certify_ps, numeric_min, Certificate, MinOptions, Mode, PsReport,
};
use sinecert::coeffseq::CoeffSeq;
use sinecert::trigpoly::SinePoly;
use sinecert::{analysis, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    ExactRequired = 4,
    OutOfDomain = 5,
    NotAViolation = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScVerdict {
    ExactNonneg = 0,
    NumericEvidence = 1,
    Violation = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScMode {
    Auto = 0,
    Exact = 1,
    Numeric = 2,
}

pub struct ScSinePoly(SinePoly);
pub struct ScCertificate(Certificate);
pub struct ScReport(PsReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ScStatus {
    match e {
        Error::Parse(_) => ScStatus::Parse,
        Error::ExactRequired => ScStatus::ExactRequired,
        Error::OutOfDomain(_) => ScStatus::OutOfDomain,
        _ => ScStatus::InvalidArgument,
    }
}

/// Runs `f`, recording errors and converting panics to `Internal`.
fn guard(f: impl FnOnce() -> Result<(), (ScStatus, String)>) -> ScStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ScStatus::Ok,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            ScStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (ScStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (ScStatus, String) {
    (ScStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, (ScStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (ScStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, (ScStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, (ScStatus, String)> {
    p.as_mut().ok_or_else(|| null(what))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses comma-separated exact coefficients `a_1,a_2,...` (`p/q` or integers).
///
/// # Safety
/// `coeffs` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_sine_poly_parse(coeffs: *const c_char, out: *mut *mut ScSinePoly) -> ScStatus {
    guard(|| {
        let text = str_arg(coeffs, "coeffs")?;
        let out = out_arg(out, "out")?;
        let seq = CoeffSeq::parse_custom(text, false).map_err(lib_err)?;
        let n = seq.natural_len().unwrap_or(0);
        *out = Box::into_raw(Box::new(ScSinePoly(seq.partial_sum(n))));
        Ok(())
    })
}

/// Floating-point coefficients; such polynomials are certified numerically.
///
/// # Safety
/// `coeffs` must point to `len` doubles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_sine_poly_from_f64(coeffs: *const f64, len: usize, out: *mut *mut ScSinePoly) -> ScStatus {
    guard(|| {
        if coeffs.is_null() {
            return Err(null("coeffs"));
        }
        let out = out_arg(out, "out")?;
        let v = std::slice::from_raw_parts(coeffs, len).to_vec();
        let sp = SinePoly::numeric(v).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(ScSinePoly(sp)));
        Ok(())
    })
}

/// Number of coefficients.
///
/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_sine_poly_len(poly: *const ScSinePoly) -> usize {
    poly.as_ref().map_or(0, |p| p.0.len())
}

/// # Safety
/// `poly` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sc_sine_poly_eval(poly: *const ScSinePoly, x: f64, out: *mut f64) -> ScStatus {
    guard(|| {
        let p = ref_arg(poly, "poly")?;
        *out_arg(out, "out")? = p.0.eval(x);
        Ok(())
    })
}

/// # Safety
/// `poly` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_sine_poly_free(poly: *mut ScSinePoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Certifies nonnegativity on `[0, pi]`: Sturm for exact coefficients,
/// sampled minimum for floating ones.
///
/// # Safety
/// `poly` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sc_certify(poly: *const ScSinePoly, out: *mut *mut ScCertificate) -> ScStatus {
    guard(|| {
        let p = ref_arg(poly, "poly")?;
        let out = out_arg(out, "out")?;
        let cert = if p.0.is_exact() {
            certify_nonneg_exact(&p.0).map_err(lib_err)?
        } else {
            certify_numeric(numeric_min(&p.0, &MinOptions::default()), certify::NUMERIC_TOL)
        };
        *out = Box::into_raw(Box::new(ScCertificate(cert)));
        Ok(())
    })
}

/// # Safety
/// `cert` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_verdict(cert: *const ScCertificate, out: *mut ScVerdict) -> ScStatus {
    guard(|| {
        let c = ref_arg(cert, "cert")?;
        *out_arg(out, "out")? = match c.0 {
            Certificate::ExactNonneg { .. } => ScVerdict::ExactNonneg,
            Certificate::NumericEvidence(_) => ScVerdict::NumericEvidence,
            Certificate::Violation { .. } => ScVerdict::Violation,
        };
        Ok(())
    })
}

/// Point and value of a violation; `NotAViolation` otherwise.
///
/// # Safety
/// `cert` must be a live handle; `x` and `value` valid.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_witness(cert: *const ScCertificate, x: *mut f64, value: *mut f64) -> ScStatus {
    guard(|| {
        let c = ref_arg(cert, "cert")?;
        let (x, value) = (out_arg(x, "x")?, out_arg(value, "value")?);
        match &c.0 {
            Certificate::Violation { x: wx, value: wv, .. } => {
                *x = *wx;
                *value = *wv;
                Ok(())
            }
            _ => Err((ScStatus::NotAViolation, "certificate is not a violation".into())),
        }
    })
}

/// JSON form of the certificate. Release with [`sc_string_free`].
///
/// # Safety
/// `cert` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_to_json(cert: *const ScCertificate) -> *mut c_char {
    match cert.as_ref() {
        Some(c) => to_c_string(serde_json::to_string(&c.0).unwrap_or_default()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `cert` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_certificate_free(cert: *mut ScCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Certifies partial sums `1..=n` of a named family, e.g. `gamma`,
/// `phi1:3913/5000`, `power_phi:0.25`.
///
/// # Safety
/// `family` must be a nul-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sc_certify_family(
    family: *const c_char,
    n: usize,
    mode: ScMode,
    out: *mut *mut ScReport,
) -> ScStatus {
    guard(|| {
        let id = str_arg(family, "family")?;
        let out = out_arg(out, "out")?;
        let seq = CoeffSeq::parse(id).map_err(lib_err)?;
        let mode = match mode {
            ScMode::Auto => Mode::Auto,
            ScMode::Exact => Mode::Exact,
            ScMode::Numeric => Mode::Numeric,
        };
        let r = certify_ps(&seq, n, mode).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(ScReport(r)));
        Ok(())
    })
}

/// Number of entries (partial sums) in the report.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_report_len(report: *const ScReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.entries.len())
}

/// First failing `n`, or 0 when every partial sum passes.
///
/// # Safety
/// `report` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sc_report_first_violation(report: *const ScReport, out: *mut usize) -> ScStatus {
    guard(|| {
        let r = ref_arg(report, "report")?;
        *out_arg(out, "out")? = r.0.first_violation.unwrap_or(0);
        Ok(())
    })
}

/// JSON form of the report. Release with [`sc_string_free`].
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_report_to_json(report: *const ScReport) -> *mut c_char {
    match report.as_ref() {
        Some(r) => to_c_string(serde_json::to_string(&r.0).unwrap_or_default()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `report` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_report_free(report: *mut ScReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The critical constant alpha, second largest real root of its quartic.
#[no_mangle]
pub extern "C" fn sc_alpha() -> f64 {
    analysis::alpha().value
}

/// First positive zero of `sin z - z cos z`.
#[no_mangle]
pub extern "C" fn sc_sigma() -> f64 {
    analysis::sigma().value
}
