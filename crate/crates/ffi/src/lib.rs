//! C ABI over `gsf-core`. Every function returns a [`GsfStatus`]; on
//! failure [`gsf_last_error`] describes the cause for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gsf_core::analysis::wilf_check;
use gsf_core::enumeration::{count_by_genus, EnumOptions};
use gsf_core::metrics::metrics_report;
use gsf_core::{parse_semigroup, Error, GoodSemigroup};

/// Opaque handle to a validated semigroup.
pub struct GsfSemigroup(GoodSemigroup);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GsfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Invalid = 4,
    Unsupported = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct GsfMetrics {
    pub length: u64,
    pub genus: u64,
    pub conductor_sum: u64,
    /// 0 when undefined (dimension other than 2, or the whole plane).
    pub type_: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct GsfWilf {
    pub edim: u64,
    pub c_s: u64,
    pub genus: u64,
    pub rhs_num: u64,
    pub rhs_den: u64,
    pub holds: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> GsfStatus {
    match e {
        Error::Syntax { .. } | Error::Json(_) => GsfStatus::Syntax,
        Error::Invalid(_) | Error::DimensionMismatch { .. } => GsfStatus::Invalid,
        Error::NotPlanar(_) | Error::Unsupported(_) => GsfStatus::Unsupported,
        _ => GsfStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (GsfStatus, String)>) -> GsfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            GsfStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GsfStatus::Internal
        }
    }
}

fn lift(e: Error) -> (GsfStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (GsfStatus, String) {
    (GsfStatus::NullPointer, "null pointer argument".into())
}

unsafe fn handle<'a>(h: *const GsfSemigroup) -> Result<&'a GoodSemigroup, (GsfStatus, String)> {
    h.as_ref().map(|h| &h.0).ok_or_else(null)
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn gsf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses and validates a small-element document (text or JSON).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsf_semigroup_parse(
    text: *const c_char,
    out: *mut *mut GsfSemigroup,
) -> GsfStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (GsfStatus::InvalidUtf8, e.to_string()))?;
        let sg = parse_semigroup(s).map_err(lift)?;
        *out = Box::into_raw(Box::new(GsfSemigroup(sg)));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gsf_semigroup_free(h: *mut GsfSemigroup) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsf_semigroup_dim(h: *const GsfSemigroup, out: *mut usize) -> GsfStatus {
    guard(|| {
        let s = handle(h)?;
        *out.as_mut().ok_or_else(null)? = s.dim();
        Ok(())
    })
}

/// Copies the conductor into `out`, which holds `len` entries.
///
/// # Safety
/// `h` must be a live handle; `out` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn gsf_semigroup_conductor(
    h: *const GsfSemigroup,
    out: *mut u32,
    len: usize,
) -> GsfStatus {
    guard(|| {
        let s = handle(h)?;
        if out.is_null() {
            return Err(null());
        }
        if len < s.dim() {
            return Err((
                GsfStatus::BufferTooSmall,
                format!("need {} entries", s.dim()),
            ));
        }
        ptr::copy_nonoverlapping(s.conductor().as_ptr(), out, s.dim());
        Ok(())
    })
}

/// Membership of the finite point `point[0..len]`.
///
/// # Safety
/// `h` must be a live handle; `point` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn gsf_semigroup_contains(
    h: *const GsfSemigroup,
    point: *const u32,
    len: usize,
    out: *mut bool,
) -> GsfStatus {
    guard(|| {
        let s = handle(h)?;
        if point.is_null() || out.is_null() {
            return Err(null());
        }
        let p = std::slice::from_raw_parts(point, len);
        *out = s.contains(p).map_err(lift)?;
        Ok(())
    })
}

/// Canonical text form; release with [`gsf_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsf_semigroup_to_string(
    h: *const GsfSemigroup,
    out: *mut *mut c_char,
) -> GsfStatus {
    guard(|| {
        let s = handle(h)?;
        if out.is_null() {
            return Err(null());
        }
        *out = CString::new(s.to_string())
            .map_err(|e| (GsfStatus::Internal, e.to_string()))?
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn gsf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsf_semigroup_metrics(
    h: *const GsfSemigroup,
    out: *mut GsfMetrics,
) -> GsfStatus {
    guard(|| {
        let s = handle(h)?;
        let out = out.as_mut().ok_or_else(null)?;
        let r = metrics_report(s).map_err(lift)?;
        *out = GsfMetrics {
            length: r.length,
            genus: r.genus,
            conductor_sum: r.conductor_sum,
            type_: r.type_.unwrap_or(0) as u64,
        };
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gsf_wilf_check(h: *const GsfSemigroup, out: *mut GsfWilf) -> GsfStatus {
    guard(|| {
        let s = handle(h)?;
        let out = out.as_mut().ok_or_else(null)?;
        let r = wilf_check(s).map_err(lift)?;
        *out = GsfWilf {
            edim: r.edim,
            c_s: r.c_s,
            genus: r.genus,
            rhs_num: r.rhs.num,
            rhs_den: r.rhs.den,
            holds: r.holds,
        };
        Ok(())
    })
}

/// Writes `n_1..n_max_g` into `out`, which holds `len` entries.
/// `threads == 0` uses every core.
///
/// # Safety
/// `out` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn gsf_count_by_genus(
    max_g: u64,
    threads: usize,
    out: *mut u64,
    len: usize,
) -> GsfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        if (len as u64) < max_g {
            return Err((GsfStatus::BufferTooSmall, format!("need {max_g} entries")));
        }
        let opts = EnumOptions {
            threads,
            count_only: true,
            ..Default::default()
        };
        let t = count_by_genus(max_g, &opts).map_err(lift)?;
        ptr::copy_nonoverlapping(t.counts.as_ptr(), out, t.counts.len());
        Ok(())
    })
}
