//! C ABI over the arquiver library.
//!
//! Quivers travel as opaque handles created by [`arq_quiver_new`] and
//! released by [`arq_quiver_free`]. Every computation returns its payload
//! as a newly allocated NUL-terminated string (JSON, CSV or DOT) through an
//! out-parameter and reports an `ArqStatus` code; strings are released with
//! [`arq_string_free`]. All functions are safe to call from any thread.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use arquiver::check::run_check;
use arquiver::dot::{graded_dot, seed_dot, window_dot};
use arquiver::dynkin::{DynkinType, Family, Quiver};
use arquiver::error::Error;
use arquiver::numerics::{dims_csv, EulerData};
use arquiver::rigid::{dq_closed_form, graded_quiver, start_json};
use arquiver::seed::{adapted_ordering, seed_json};
use arquiver::zq::Window;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArqStatus {
    Ok = 0,
    /// Invalid argument: unknown family, bad rank, malformed arrow list.
    InvalidArgument = 1,
    /// A cross-check that the theory guarantees has failed.
    Inconsistent = 2,
    /// A required pointer was NULL.
    NullPointer = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
    /// A panic was caught at the boundary.
    Panic = 5,
}

/// Opaque quiver handle.
pub struct ArqQuiver {
    inner: Quiver,
}

fn status_of(err: &Error) -> ArqStatus {
    match err {
        Error::InternalInconsistency(_)
        | Error::CaseMismatch { .. }
        | Error::NegativeKnit { .. } => ArqStatus::Inconsistent,
        _ => ArqStatus::InvalidArgument,
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, ArqStatus> {
    if ptr.is_null() {
        return Err(ArqStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| ArqStatus::InvalidUtf8)
}

fn write_string(out: *mut *mut c_char, text: String) -> ArqStatus {
    if out.is_null() {
        return ArqStatus::NullPointer;
    }
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ArqStatus::Ok
        }
        Err(_) => ArqStatus::InvalidArgument,
    }
}

fn guarded<F: FnOnce() -> ArqStatus>(f: F) -> ArqStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ArqStatus::Panic)
}

/// Creates a quiver handle from a family letter, a rank and an arrow list
/// such as `"4>3,3>5,2>3,2>1"` (empty for rank 1). On success writes the
/// handle to `out`.
///
/// # Safety
/// `arrows` must be NULL or a valid NUL-terminated string; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn arq_quiver_new(
    family: c_char,
    rank: usize,
    arrows: *const c_char,
    out: *mut *mut ArqQuiver,
) -> ArqStatus {
    guarded(|| {
        if out.is_null() {
            return ArqStatus::NullPointer;
        }
        let spec = if arrows.is_null() {
            ""
        } else {
            match read_str(arrows) {
                Ok(s) => s,
                Err(st) => return st,
            }
        };
        let fam = match Family::parse(family as u8 as char) {
            Ok(f) => f,
            Err(_) => return ArqStatus::InvalidArgument,
        };
        let ty = match DynkinType::new(fam, rank) {
            Ok(t) => t,
            Err(_) => return ArqStatus::InvalidArgument,
        };
        match Quiver::parse(ty, spec) {
            Ok(q) => {
                *out = Box::into_raw(Box::new(ArqQuiver { inner: q }));
                ArqStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a quiver handle. NULL is a no-op.
///
/// # Safety
/// `q` must be NULL or a pointer obtained from [`arq_quiver_new`].
#[no_mangle]
pub unsafe extern "C" fn arq_quiver_free(q: *mut ArqQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Releases a string returned by any payload function. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a pointer returned by this library.
#[no_mangle]
pub unsafe extern "C" fn arq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn arq_status_name(status: ArqStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        ArqStatus::Ok => b"ok\0",
        ArqStatus::InvalidArgument => b"invalid argument\0",
        ArqStatus::Inconsistent => b"internal consistency failure\0",
        ArqStatus::NullPointer => b"null pointer\0",
        ArqStatus::InvalidUtf8 => b"invalid utf-8\0",
        ArqStatus::Panic => b"panic\0",
    };
    name.as_ptr() as *const c_char
}

unsafe fn with_quiver<F>(q: *const ArqQuiver, out: *mut *mut c_char, f: F) -> ArqStatus
where
    F: FnOnce(&Quiver) -> Result<String, Error>,
{
    guarded(AssertUnwindSafe(|| {
        if q.is_null() {
            return ArqStatus::NullPointer;
        }
        let quiver = &(*q).inner;
        match f(quiver) {
            Ok(text) => write_string(out, text),
            Err(e) => status_of(&e),
        }
    }))
}

/// Window JSON: objects, arrows and exponents.
///
/// # Safety
/// `q` must come from [`arq_quiver_new`]; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn arq_window_json(q: *const ArqQuiver, out: *mut *mut c_char) -> ArqStatus {
    with_quiver(q, out, |quiver| {
        let w = Window::build(quiver)?;
        Ok(serde_json::to_string(&w.to_json()).expect("serializable"))
    })
}

/// Window DOT rendering.
///
/// # Safety
/// As for [`arq_window_json`].
#[no_mangle]
pub unsafe extern "C" fn arq_window_dot(q: *const ArqQuiver, out: *mut *mut c_char) -> ArqStatus {
    with_quiver(q, out, |quiver| Ok(window_dot(&Window::build(quiver)?)))
}

/// Dimension-vector table as CSV rows `i,q,d1,...,dn` sorted by `(q,i)`.
///
/// # Safety
/// As for [`arq_window_json`].
#[no_mangle]
pub unsafe extern "C" fn arq_dims_csv(q: *const ArqQuiver, out: *mut *mut c_char) -> ArqStatus {
    with_quiver(q, out, |quiver| {
        let w = Window::build(quiver)?;
        dims_csv(&w, &EulerData::build(quiver))
    })
}

/// Rigid-module JSON: summands, total, endomorphism dimension, certificate.
///
/// # Safety
/// As for [`arq_window_json`].
#[no_mangle]
pub unsafe extern "C" fn arq_start_json(q: *const ArqQuiver, out: *mut *mut c_char) -> ArqStatus {
    with_quiver(q, out, |quiver| {
        let w = Window::build(quiver)?;
        let data = start_json(&w, &EulerData::build(quiver))?;
        Ok(serde_json::to_string(&data).expect("serializable"))
    })
}

/// Graded-quiver DOT rendering.
///
/// # Safety
/// As for [`arq_window_json`].
#[no_mangle]
pub unsafe extern "C" fn arq_graded_dot(q: *const ArqQuiver, out: *mut *mut c_char) -> ArqStatus {
    with_quiver(q, out, |quiver| {
        let w = Window::build(quiver)?;
        Ok(graded_dot(&graded_quiver(&w)))
    })
}

/// Initial-seed JSON for the canonical adapted word.
///
/// # Safety
/// As for [`arq_window_json`].
#[no_mangle]
pub unsafe extern "C" fn arq_seed_json(q: *const ArqQuiver, out: *mut *mut c_char) -> ArqStatus {
    with_quiver(q, out, |quiver| {
        let w = Window::build(quiver)?;
        let ordering = adapted_ordering(&w);
        Ok(serde_json::to_string(&seed_json(&w, &ordering)).expect("serializable"))
    })
}

/// Seed-quiver DOT rendering for the canonical adapted word.
///
/// # Safety
/// As for [`arq_window_json`].
#[no_mangle]
pub unsafe extern "C" fn arq_seed_dot(q: *const ArqQuiver, out: *mut *mut c_char) -> ArqStatus {
    with_quiver(q, out, |quiver| {
        let w = Window::build(quiver)?;
        let ordering = adapted_ordering(&w);
        Ok(seed_dot(&w, &ordering))
    })
}

/// Full cross-validation report as JSON. Returns `Inconsistent` (with the
/// report still written) when any check fails.
///
/// # Safety
/// As for [`arq_window_json`].
#[no_mangle]
pub unsafe extern "C" fn arq_check_json(
    q: *const ArqQuiver,
    seed: u64,
    out: *mut *mut c_char,
) -> ArqStatus {
    guarded(AssertUnwindSafe(|| {
        if q.is_null() {
            return ArqStatus::NullPointer;
        }
        let quiver = &(*q).inner;
        match run_check(quiver, seed) {
            Ok(report) => {
                let text = serde_json::to_string(&report).expect("serializable");
                let st = write_string(out, text);
                if st == ArqStatus::Ok && !report.all_pass() {
                    ArqStatus::Inconsistent
                } else {
                    st
                }
            }
            Err(e) => status_of(&e),
        }
    }))
}

/// Tabulated endomorphism dimensions for one family as JSON
/// (`{"6":2444,...}` for `E`).
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn arq_dq_table_json(family: c_char, out: *mut *mut c_char) -> ArqStatus {
    guarded(AssertUnwindSafe(|| {
        let fam = match Family::parse(family as u8 as char) {
            Ok(f) => f,
            Err(_) => return ArqStatus::InvalidArgument,
        };
        let ranks: Vec<usize> = match fam {
            Family::A => (1..=8).collect(),
            Family::D => (4..=8).collect(),
            Family::E => (6..=8).collect(),
        };
        let mut table = std::collections::BTreeMap::new();
        for r in ranks {
            match dq_closed_form(fam, r) {
                Ok(v) => {
                    table.insert(r, v);
                }
                Err(e) => return status_of(&e),
            }
        }
        write_string(out, serde_json::to_string(&table).expect("serializable"))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn take(out: *mut c_char) -> String {
        let s = CStr::from_ptr(out).to_str().unwrap().to_string();
        arq_string_free(out);
        s
    }

    #[test]
    fn round_trip_through_the_c_abi() {
        unsafe {
            let mut handle: *mut ArqQuiver = ptr::null_mut();
            let arrows = CString::new("4>3,3>5,2>3,2>1").unwrap();
            let st = arq_quiver_new('D' as c_char, 5, arrows.as_ptr(), &mut handle);
            assert_eq!(st, ArqStatus::Ok);

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(arq_window_json(handle, &mut out), ArqStatus::Ok);
            let window: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
            assert_eq!(window["objects"].as_array().unwrap().len(), 20);

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(arq_start_json(handle, &mut out), ArqStatus::Ok);
            let start: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
            assert_eq!(start["rigid"], serde_json::Value::Bool(true));

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(arq_check_json(handle, 0xA05, &mut out), ArqStatus::Ok);
            let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
            assert_eq!(report["r"], serde_json::json!(20));

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(arq_dims_csv(handle, &mut out), ArqStatus::Ok);
            assert!(take(out).starts_with("i,q,d1,d2,d3,d4,d5\n"));

            arq_quiver_free(handle);
        }
    }

    #[test]
    fn error_paths() {
        unsafe {
            let mut handle: *mut ArqQuiver = ptr::null_mut();
            let arrows = CString::new("1>2,2>1").unwrap();
            let st = arq_quiver_new('A' as c_char, 2, arrows.as_ptr(), &mut handle);
            assert_eq!(st, ArqStatus::InvalidArgument);

            let st = arq_quiver_new('Q' as c_char, 2, ptr::null(), &mut handle);
            assert_eq!(st, ArqStatus::InvalidArgument);

            let mut out: *mut c_char = ptr::null_mut();
            assert_eq!(
                arq_window_json(ptr::null(), &mut out),
                ArqStatus::NullPointer
            );

            assert_eq!(arq_dq_table_json('E' as c_char, &mut out), ArqStatus::Ok);
            let table = take(out);
            assert_eq!(table, r#"{"6":2444,"7":13130,"8":107114}"#);
        }
    }
}
