//! C interface to the body and Seshadri computations.
//!
//! Objects cross the boundary as opaque handles created by `*_new` and
//! released by the matching `*_free`. Every call returns an [`OkStatus`];
//! results come back through out-pointers. Strings handed out by the library
//! are NUL-terminated UTF-8, rationals are written as `"p/q"`, and all of them
//! must be released with [`ok_string_free`]. After a failing call,
//! [`ok_last_error`] describes what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use okounkov_core::cli::{run_on_text, JobConfig, Mode};
use okounkov_core::geometry::volume;
use okounkov_core::seshadri::{xi_simplex_fit, BodyFamily};
use okounkov_core::surface::{surface_body, zariski, SurfaceInput};
use okounkov_core::toric::ToricInput;
use okounkov_core::{Error, ErrorKind};

/// Result of every exported call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed input: bad UTF-8 or JSON, wrong shape, unknown name.
    InvalidInput = 2,
    /// Well-formed input violating a mathematical precondition.
    Precondition = 3,
    /// Internal invariant failure or a caught panic.
    Internal = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OkStatus {
    match e.kind() {
        ErrorKind::Schema => OkStatus::InvalidInput,
        ErrorKind::Precondition => OkStatus::Precondition,
        ErrorKind::Internal => OkStatus::Internal,
    }
}

enum Fail {
    Null(&'static str),
    Input(String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Runs `f`, converting errors and panics into a status plus the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> OkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OkStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer passed for {what}"));
            OkStatus::NullPointer
        }
        Ok(Err(Fail::Input(msg))) => {
            set_error(msg);
            OkStatus::InvalidInput
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside the library".into());
            OkStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Input(format!("{what} is not valid UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Input("result contains a NUL byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Fail> {
    serde_json::to_string(v).map_err(|e| Fail::Core(Error::Json(e)))
}

/// A smooth lattice polytope with chosen vertices.
pub struct OkToric {
    input: ToricInput,
}

/// A blown-up plane, its curve list and a class `L`.
pub struct OkSurface {
    input: SurfaceInput,
}

/// Message for the last failing call on this thread, or NULL. Owned by the
/// library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ok_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ok_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ok_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"vertices": [...], "chosen": [...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_new(json: *const c_char, out: *mut *mut OkToric) -> OkStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let text = read_str(json, "json")?;
        let input = ToricInput::from_json(text)?;
        *out = Box::into_raw(Box::new(OkToric { input }));
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`ok_toric_new`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_free(h: *mut OkToric) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn toric_ref<'a>(h: *const OkToric) -> Result<&'a OkToric, Fail> {
    h.as_ref().ok_or(Fail::Null("handle"))
}

/// Number of chosen vertices.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_num_points(h: *const OkToric, out: *mut usize) -> OkStatus {
    guard(|| {
        let t = toric_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = t.input.num_points();
        Ok(())
    })
}

/// Body at the `j`-th chosen vertex as polytope JSON.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_body_json(h: *const OkToric, j: usize, out: *mut *mut c_char) -> OkStatus {
    guard(|| {
        let t = toric_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let body = t.input.body(j)?;
        write_string(out, to_json(&body)?)
    })
}

/// Euclidean volume of the `j`-th body as `"p/q"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_body_volume(h: *const OkToric, j: usize, out: *mut *mut c_char) -> OkStatus {
    guard(|| {
        let t = toric_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        write_string(out, volume(&t.input.body(j)?).to_string())
    })
}

/// Closed-form Seshadri constant from edge lengths, as `"p/q"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_seshadri(h: *const OkToric, out: *mut *mut c_char) -> OkStatus {
    guard(|| {
        let t = toric_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        write_string(out, t.input.seshadri().to_string())
    })
}

/// Largest `t` with `t * Sigma_n` inside every body, as `"p/q"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_xi(h: *const OkToric, out: *mut *mut c_char) -> OkStatus {
    guard(|| {
        let t = toric_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let fam = BodyFamily::from_toric(&t.input)?;
        write_string(out, xi_simplex_fit(&fam)?.xi.to_string())
    })
}

/// Whether `n!` times the total body volume equals `n! * vol(P)`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_toric_volume_check(h: *const OkToric, out: *mut bool) -> OkStatus {
    guard(|| {
        let t = toric_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = t.input.volume_check()?.2;
        Ok(())
    })
}

/// Parses `{"N": .., "curves": .., "L": [..], "rays": ..}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_surface_new(json: *const c_char, out: *mut *mut OkSurface) -> OkStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let text = read_str(json, "json")?;
        let input = SurfaceInput::from_json(text)?;
        *out = Box::into_raw(Box::new(OkSurface { input }));
        Ok(())
    })
}

/// # Safety
/// `h` must come from [`ok_surface_new`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ok_surface_free(h: *mut OkSurface) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn surface_ref<'a>(h: *const OkSurface) -> Result<&'a OkSurface, Fail> {
    h.as_ref().ok_or(Fail::Null("handle"))
}

/// Zariski decomposition of `L` as JSON.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_surface_zariski_json(h: *const OkSurface, out: *mut *mut c_char) -> OkStatus {
    guard(|| {
        let s = surface_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let z = zariski(&s.input.spec, &s.input.l)?;
        write_string(out, to_json(&z)?)
    })
}

/// Body over the `j`-th exceptional curve, with breakpoints and slice profile, as JSON.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_surface_body_json(h: *const OkSurface, j: usize, out: *mut *mut c_char) -> OkStatus {
    guard(|| {
        let s = surface_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let b = surface_body(&s.input.spec, &s.input.l, j)?;
        write_string(out, to_json(&b)?)
    })
}

/// Simplex-fit constant of the bodies over all points, as `"p/q"`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_surface_xi(h: *const OkSurface, out: *mut *mut c_char) -> OkStatus {
    guard(|| {
        let s = surface_ref(h)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let fam = BodyFamily::from_surface(&s.input.spec, &s.input.l)?;
        write_string(out, xi_simplex_fit(&fam)?.xi.to_string())
    })
}

/// Runs a whole pipeline (`"toric"`, `"surface"`, `"semigroup"`, `"seshadri"`
/// or `"check"`) on an input document and returns the JSON report.
/// `k_max` of 0 means the default. Failed checks are reported inside the
/// document, not through the status.
///
/// # Safety
/// `mode` and `input_json` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ok_run_json(
    mode: *const c_char,
    input_json: *const c_char,
    k_max: u32,
    out: *mut *mut c_char,
) -> OkStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        let mode: Mode = read_str(mode, "mode")?.parse()?;
        let text = read_str(input_json, "input_json")?;
        let mut cfg = JobConfig::new(mode, "");
        cfg.k_max = (k_max > 0).then_some(k_max);
        let run = run_on_text(&cfg, text)?;
        write_string(out, run.report_json()?)
    })
}
