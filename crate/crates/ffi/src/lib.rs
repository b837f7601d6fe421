//! C interface to `compident`.
//!
//! Every fallible call returns a [`CompidentStatus`]; on failure the message is
//! available from [`compident_last_error`] on the same thread. Handles are
//! opaque and must be released with their matching `_free` function. Strings
//! returned through out-parameters are owned by the caller and released with
//! [`compident_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use compident::compositions::Budget;
use compident::exact_arith::{binomial, int, parse_rational};
use compident::identities::{list_identities, verify_range, Ranges, SuiteReport, VerifyConfig};
use compident::stirling::stirling1;
use compident::symfun::bernoulli;
use compident::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompidentStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    UnknownIdentity = 5,
    BudgetExceeded = 6,
    DivisionByZero = 7,
    Internal = 8,
    Panic = 9,
}

/// Settings for verification runs.
pub struct CompidentVerifier {
    config: VerifyConfig,
}

/// Outcome of one verification run.
pub struct CompidentReport {
    report: SuiteReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CompidentStatus {
    match err {
        Error::Domain(_) | Error::MissingParam(_) => CompidentStatus::Domain,
        Error::DivisionByZero => CompidentStatus::DivisionByZero,
        Error::BudgetExceeded { .. } => CompidentStatus::BudgetExceeded,
        Error::UnknownIdentity(_) | Error::UnknownPair(_) => CompidentStatus::UnknownIdentity,
        Error::Parse(_) => CompidentStatus::Parse,
        Error::Internal(_) => CompidentStatus::Internal,
    }
}

struct Failure(CompidentStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CompidentStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CompidentStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside compident");
            CompidentStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CompidentStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CompidentStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).expect("no interior nul").into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn compident_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn compident_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A verifier with the given seed; `samples == 0` keeps each identity's default.
#[no_mangle]
pub extern "C" fn compident_verifier_new(seed: u64, samples: u32) -> *mut CompidentVerifier {
    let config = VerifyConfig {
        seed,
        samples: (samples > 0).then_some(samples as usize),
        jobs: Some(1),
        ..VerifyConfig::default()
    };
    Box::into_raw(Box::new(CompidentVerifier { config }))
}

/// # Safety
/// `v` must come from [`compident_verifier_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn compident_verifier_free(v: *mut CompidentVerifier) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Fixes the rational parameter `a` (e.g. "3/7"); NULL clears it.
///
/// # Safety
/// `v` must be a live verifier; `a` NULL or a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn compident_verifier_set_a(
    v: *mut CompidentVerifier,
    a: *const c_char,
) -> CompidentStatus {
    guard(|| {
        let v = v.as_mut().ok_or_else(|| null("verifier"))?;
        v.config.a = if a.is_null() {
            None
        } else {
            Some(parse_rational(str_arg(a, "a")?)?)
        };
        Ok(())
    })
}

/// Fixes the rational parameter `b`; NULL clears it.
///
/// # Safety
/// As for [`compident_verifier_set_a`].
#[no_mangle]
pub unsafe extern "C" fn compident_verifier_set_b(
    v: *mut CompidentVerifier,
    b: *const c_char,
) -> CompidentStatus {
    guard(|| {
        let v = v.as_mut().ok_or_else(|| null("verifier"))?;
        v.config.b = if b.is_null() {
            None
        } else {
            Some(parse_rational(str_arg(b, "b")?)?)
        };
        Ok(())
    })
}

/// Caps the composition size `k` for enumeration-based identities.
///
/// # Safety
/// `v` must be a live verifier.
#[no_mangle]
pub unsafe extern "C" fn compident_verifier_set_budget(
    v: *mut CompidentVerifier,
    max_k: u32,
) -> CompidentStatus {
    guard(|| {
        let v = v.as_mut().ok_or_else(|| null("verifier"))?;
        v.config.budget = Budget::new(max_k as usize);
        Ok(())
    })
}

/// Checks identity `id` over `ranges`, written like `"k=1..8,n=0..8"`.
/// NULL or empty `ranges` uses the identity's defaults. On success `*out`
/// receives a report to be released with [`compident_report_free`].
///
/// # Safety
/// `v` must be a live verifier, `id` a nul-terminated string, `ranges` NULL
/// or nul-terminated, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn compident_verify_range(
    v: *const CompidentVerifier,
    id: *const c_char,
    ranges: *const c_char,
    out: *mut *mut CompidentReport,
) -> CompidentStatus {
    guard(|| {
        let v = v.as_ref().ok_or_else(|| null("verifier"))?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let id = str_arg(id, "id")?;
        let ranges = if ranges.is_null() {
            Ranges::new()
        } else {
            Ranges::parse(str_arg(ranges, "ranges")?)?
        };
        let report = verify_range(id, &ranges, &v.config)?;
        *out = Box::into_raw(Box::new(CompidentReport { report }));
        Ok(())
    })
}

/// # Safety
/// `r` must come from [`compident_verify_range`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn compident_report_free(r: *mut CompidentReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// True when every case passed. NULL yields false.
///
/// # Safety
/// `r` must be NULL or a live report.
#[no_mangle]
pub unsafe extern "C" fn compident_report_passed(r: *const CompidentReport) -> bool {
    r.as_ref().is_some_and(|r| r.report.passed())
}

/// # Safety
/// `r` must be NULL or a live report.
#[no_mangle]
pub unsafe extern "C" fn compident_report_cases(r: *const CompidentReport) -> u64 {
    r.as_ref().map_or(0, |r| r.report.cases_total as u64)
}

/// # Safety
/// `r` must be NULL or a live report.
#[no_mangle]
pub unsafe extern "C" fn compident_report_failed(r: *const CompidentReport) -> u64 {
    r.as_ref().map_or(0, |r| r.report.cases_failed as u64)
}

/// The report as one JSON line, without timing.
///
/// # Safety
/// `r` must be a live report and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn compident_report_json(
    r: *const CompidentReport,
    out: *mut *mut c_char,
) -> CompidentStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        write_string(out, r.report.to_json(false))
    })
}

/// `C(top, k)` in decimal; zero for negative `k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compident_binomial(
    top: i64,
    k: i64,
    out: *mut *mut c_char,
) -> CompidentStatus {
    guard(|| write_string(out, binomial(&int(top), k).to_string()))
}

/// Signed Stirling number of the first kind `s(n, t)` in decimal.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compident_stirling1(
    n: i64,
    t: i64,
    out: *mut *mut c_char,
) -> CompidentStatus {
    guard(|| write_string(out, stirling1(n, t)?.to_string()))
}

/// Bernoulli number `B_m` as `"p/q"` (bare integer when `q = 1`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn compident_bernoulli(m: i64, out: *mut *mut c_char) -> CompidentStatus {
    guard(|| write_string(out, bernoulli(m)?.to_string()))
}

fn ids() -> &'static [CString] {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    IDS.get_or_init(|| {
        list_identities()
            .iter()
            .map(|d| CString::new(d.id).expect("ids are plain ascii"))
            .collect()
    })
}

#[no_mangle]
pub extern "C" fn compident_identity_count() -> usize {
    ids().len()
}

/// Static id string of the `index`-th registered identity, or NULL when out of range.
#[no_mangle]
pub extern "C" fn compident_identity_id(index: usize) -> *const c_char {
    ids().get(index).map_or(ptr::null(), |c| c.as_ptr())
}
