//! C ABI over `octant-cover`.
//!
//! Point sets and colorings cross the boundary as opaque handles created
//! and released by this library. Every fallible call returns an
//! [`OcStatus`]; results are written through out-pointers only on success.
//! The message of the most recent failure on the calling thread is
//! available from [`oc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use octant_cover::coloring::{color_set, threshold, Coloring, ExhaustiveTwoColorer, Palette};
use octant_cover::geom::OrderedPointSet;
use octant_cover::io::parse_instance;
use octant_cover::verify::{empirical_min_threshold, verify};
use octant_cover::wedgegraph::{build_wedge_graph, four_color};
use octant_cover::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    BudgetExhausted = 3,
    Overflow = 4,
    ContractViolation = 5,
    NotFound = 6,
}

/// Opaque ordered planar point set.
pub struct OcPointSet {
    inner: OrderedPointSet,
}

/// Opaque coloring, keyed by point id.
pub struct OcColoring {
    inner: Coloring,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: OcStatus, msg: impl ToString) -> OcStatus {
    let msg = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn from_error(e: Error) -> OcStatus {
    let status = match e {
        Error::BudgetExhausted { .. } => OcStatus::BudgetExhausted,
        Error::Contract(_) => OcStatus::ContractViolation,
        Error::UnknownPoint(_) | Error::MissingColor(_) => OcStatus::NotFound,
        _ => OcStatus::InvalidInput,
    };
    fail(status, e)
}

macro_rules! deref {
    ($p:expr) => {
        match unsafe { $p.as_ref() } {
            Some(v) => v,
            None => return fail(OcStatus::NullPointer, concat!(stringify!($p), " is null")),
        }
    };
}

/// Message of the last failed call on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn oc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parse an instance in the `x y z` text format and reduce it to an
/// ordered planar set.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_pointset_parse(text: *const c_char, out: *mut *mut OcPointSet) -> OcStatus {
    if text.is_null() || out.is_null() {
        return fail(OcStatus::NullPointer, "null argument");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(e) => return fail(OcStatus::InvalidInput, e),
    };
    match parse_instance(text) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(OcPointSet { inner }));
            OcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Build a set from rank arrays: point `i` has x-rank `xs[i]`, y-rank
/// `ys[i]`, arrival time `i + 1` and id `i`.
///
/// # Safety
/// `xs` and `ys` must point to `n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_pointset_from_ranks(
    xs: *const u32,
    ys: *const u32,
    n: usize,
    out: *mut *mut OcPointSet,
) -> OcStatus {
    if out.is_null() || (n > 0 && (xs.is_null() || ys.is_null())) {
        return fail(OcStatus::NullPointer, "null argument");
    }
    let (xs, ys) = if n == 0 {
        (&[][..], &[][..])
    } else {
        (std::slice::from_raw_parts(xs, n), std::slice::from_raw_parts(ys, n))
    };
    match OrderedPointSet::from_ranks(xs, ys) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(OcPointSet { inner }));
            OcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Number of points; 0 for a null handle.
///
/// # Safety
/// `set` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_pointset_len(set: *const OcPointSet) -> usize {
    set.as_ref().map_or(0, |s| s.inner.len())
}

/// # Safety
/// `set` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_pointset_free(set: *mut OcPointSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Color `set` with colors `1..=k`.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_color_set(
    set: *const OcPointSet,
    k: usize,
    node_budget: u64,
    out: *mut *mut OcColoring,
) -> OcStatus {
    let set = deref!(set);
    if out.is_null() {
        return fail(OcStatus::NullPointer, "out is null");
    }
    let base = ExhaustiveTwoColorer { node_budget };
    let result = Palette::first(k).and_then(|p| color_set(&set.inner, &p, &base));
    match result {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(OcColoring { inner }));
            OcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Proper 4-coloring of the wedge graph of `set`.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_wedge_four_color(set: *const OcPointSet, out: *mut *mut OcColoring) -> OcStatus {
    let set = deref!(set);
    if out.is_null() {
        return fail(OcStatus::NullPointer, "out is null");
    }
    match four_color(&build_wedge_graph(&set.inner)) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(OcColoring { inner }));
            OcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Color of point `id`.
///
/// # Safety
/// `coloring` must be a live handle; `color` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_get(coloring: *const OcColoring, id: usize, color: *mut u32) -> OcStatus {
    let coloring = deref!(coloring);
    if color.is_null() {
        return fail(OcStatus::NullPointer, "color is null");
    }
    match coloring.inner.color_of(id) {
        Ok(c) => {
            *color = c;
            OcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// # Safety
/// `coloring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_len(coloring: *const OcColoring) -> usize {
    coloring.as_ref().map_or(0, |c| c.inner.len())
}

/// # Safety
/// `coloring` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_coloring_free(coloring: *mut OcColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}

/// Count wedges whose first `m` arrivals show fewer than `d` colors.
///
/// # Safety
/// Handles must be live; `violations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_verify(
    set: *const OcPointSet,
    coloring: *const OcColoring,
    m: usize,
    d: usize,
    violations: *mut usize,
) -> OcStatus {
    let set = deref!(set);
    let coloring = deref!(coloring);
    if violations.is_null() {
        return fail(OcStatus::NullPointer, "violations is null");
    }
    match verify(&set.inner, &coloring.inner, m, d) {
        Ok(v) => {
            *violations = v.len();
            OcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// Smallest `m` at which the coloring passes with `d` distinct colors.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_empirical_min_threshold(
    set: *const OcPointSet,
    coloring: *const OcColoring,
    d: usize,
    out: *mut usize,
) -> OcStatus {
    let set = deref!(set);
    let coloring = deref!(coloring);
    if out.is_null() {
        return fail(OcStatus::NullPointer, "out is null");
    }
    match empirical_min_threshold(&set.inner, &coloring.inner, d) {
        Ok(m) => {
            *out = m;
            OcStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

/// `m(k)` as a 64-bit integer; `OVERFLOW` from `k = 5` on.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn oc_threshold(k: u32, out: *mut u64) -> OcStatus {
    if out.is_null() {
        return fail(OcStatus::NullPointer, "out is null");
    }
    match threshold(k) {
        Ok(t) => match u64::try_from(&t) {
            Ok(v) => {
                *out = v;
                OcStatus::Ok
            }
            Err(_) => fail(OcStatus::Overflow, format!("m({k}) = {t} does not fit in 64 bits")),
        },
        Err(e) => from_error(e),
    }
}

/// Decimal digits of `m(k)` as a new string; release with [`oc_string_free`].
#[no_mangle]
pub extern "C" fn oc_threshold_string(k: u32) -> *mut c_char {
    match threshold(k) {
        Ok(t) => CString::new(t.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        Err(e) => {
            from_error(e);
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn oc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
