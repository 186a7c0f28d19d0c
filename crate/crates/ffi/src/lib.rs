//! C interface to the ramseyforge library.
//!
//! Every fallible function returns an [`RfStatus`]; on failure a message is
//! available from [`rf_last_error`] until the next call on the same thread.
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `*_free` function. Strings returned through out-parameters are
//! released with [`rf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ramseyforge::bridge::{self, ColorVector, Colorability, VectorColoring};
use ramseyforge::shift::{self, ProperColoring};
use ramseyforge::tower::{self, BoundKind};
use ramseyforge::{formats, sat, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfStatus {
    Ok = 0,
    Parameter = 1,
    Domain = 2,
    DegenerateBridge = 3,
    SizeLimit = 4,
    NotProper = 5,
    Parse = 6,
    Internal = 7,
    NullPointer = 8,
    InvalidUtf8 = 9,
    Panic = 10,
}

/// A 2-coloring of `Z_c^n`.
pub struct RfVectorColoring(VectorColoring);

/// A proper coloring of a shift graph.
pub struct RfShiftColoring(ProperColoring);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> RfStatus {
    match e {
        Error::Parameter(_) => RfStatus::Parameter,
        Error::Domain(_) => RfStatus::Domain,
        Error::DegenerateBridge(_) => RfStatus::DegenerateBridge,
        Error::SizeLimit(_) => RfStatus::SizeLimit,
        Error::NotProper(_) => RfStatus::NotProper,
        Error::Parse { .. } => RfStatus::Parse,
        Error::Internal(_) => RfStatus::Internal,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
    Utf8,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RfStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RfStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("{what} is null"));
            RfStatus::NullPointer
        }
        Ok(Err(Fail::Utf8)) => {
            set_error("string argument is not valid UTF-8");
            RfStatus::InvalidUtf8
        }
        Err(_) => {
            set_error("panic inside ramseyforge");
            RfStatus::Panic
        }
    }
}

fn non_null<T>(p: *const T, what: &'static str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail::Null(what))
    } else {
        Ok(())
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    non_null(out, "out")?;
    let c = CString::new(s)
        .map_err(|_| Fail::Lib(Error::Internal("string contains a nul byte".into())))?;
    *out = c.into_raw();
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn rf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from this thread.
#[no_mangle]
pub extern "C" fn rf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn rf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The key coloring of `Z_3^4` at `coords[0..4]`, written to `out_color`
/// as 1 or 2.
///
/// # Safety
/// `coords` must point to `n` readable bytes and `out_color` be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_chi_key(coords: *const u8, n: usize, out_color: *mut u8) -> RfStatus {
    guard(|| {
        non_null(coords, "coords")?;
        non_null(out_color, "out_color")?;
        let v = ColorVector::new(std::slice::from_raw_parts(coords, n).to_vec(), 3)?;
        *out_color = bridge::chi_key(&v)?;
        Ok(())
    })
}

/// A new handle holding the key coloring of `Z_3^4`.
#[no_mangle]
pub extern "C" fn rf_vector_coloring_key() -> *mut RfVectorColoring {
    Box::into_raw(Box::new(RfVectorColoring(bridge::chi_key_coloring())))
}

/// A coloring of `Z_c^n` from `c^n` colors in {1, 2}, indexed with the first
/// coordinate most significant.
///
/// # Safety
/// `colors` must point to `len` readable bytes and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_vector_coloring_new(
    n: usize,
    c: u8,
    colors: *const u8,
    len: usize,
    out: *mut *mut RfVectorColoring,
) -> RfStatus {
    guard(|| {
        non_null(colors, "colors")?;
        non_null(out, "out")?;
        let vc = VectorColoring::new(n, c, std::slice::from_raw_parts(colors, len).to_vec())?;
        *out = Box::into_raw(Box::new(RfVectorColoring(vc)));
        Ok(())
    })
}

/// Number of vectors (`c^n`) colored by `h`, or 0 for null.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rf_vector_coloring_len(h: *const RfVectorColoring) -> usize {
    h.as_ref().map_or(0, |h| h.0.iter().count())
}

/// Copies the colors of `h` into `buf[0..len]`; `len` must equal
/// [`rf_vector_coloring_len`].
///
/// # Safety
/// `h` must be a live handle and `buf` point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn rf_vector_coloring_colors(
    h: *const RfVectorColoring,
    buf: *mut u8,
    len: usize,
) -> RfStatus {
    guard(|| {
        non_null(h, "handle")?;
        non_null(buf, "buf")?;
        let colors: Vec<u8> = (*h).0.iter().map(|(_, col)| col).collect();
        if colors.len() != len {
            return Err(Error::Parameter(format!(
                "buffer holds {len} colors, need {}",
                colors.len()
            ))
            .into());
        }
        ptr::copy_nonoverlapping(colors.as_ptr(), buf, len);
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rf_vector_coloring_free(h: *mut RfVectorColoring) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Scans all bridges of the coloring's space. Sets `*out_found`; when a
/// monochromatic bridge exists and `out_a`/`out_b` are non-null, its
/// endpoints are written there (`n` bytes each).
///
/// # Safety
/// `h` must be a live handle; `out_a` and `out_b` null or `n` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn rf_has_mono_bridge(
    h: *const RfVectorColoring,
    workers: usize,
    out_found: *mut bool,
    out_a: *mut u8,
    out_b: *mut u8,
) -> RfStatus {
    guard(|| {
        non_null(h, "handle")?;
        non_null(out_found, "out_found")?;
        let hit = bridge::has_mono_bridge(&(*h).0, workers.max(1));
        *out_found = hit.is_some();
        if let Some(b) = hit {
            let n = b.a().coords().len();
            if !out_a.is_null() {
                ptr::copy_nonoverlapping(b.a().coords().as_ptr(), out_a, n);
            }
            if !out_b.is_null() {
                ptr::copy_nonoverlapping(b.b().coords().as_ptr(), out_b, n);
            }
        }
        Ok(())
    })
}

/// Decides 2-colorability of the bridge hypergraph over `Z_c^n`. When
/// colorable and `out_certificate` is non-null, a certificate handle is
/// stored there; otherwise it is set to null.
///
/// # Safety
/// `out_colorable` must be writable; `out_certificate` null or writable.
#[no_mangle]
pub unsafe extern "C" fn rf_bridge_2colorable(
    n: usize,
    c: u8,
    out_colorable: *mut bool,
    out_certificate: *mut *mut RfVectorColoring,
) -> RfStatus {
    guard(|| {
        non_null(out_colorable, "out_colorable")?;
        let result = bridge::bridge_2colorable(n, c)?;
        *out_colorable = result.is_colorable();
        if !out_certificate.is_null() {
            *out_certificate = match result {
                Colorability::Colorable(vc) => Box::into_raw(Box::new(RfVectorColoring(vc))),
                Colorability::NotColorable => ptr::null_mut(),
            };
        }
        Ok(())
    })
}

/// The plain not-all-equal CNF of the bridge hypergraph as DIMACS text.
///
/// # Safety
/// `out` must be writable; free the result with [`rf_string_free`].
#[no_mangle]
pub unsafe extern "C" fn rf_bridge_dimacs(n: usize, c: u8, out: *mut *mut c_char) -> RfStatus {
    guard(|| {
        let cnf = bridge::bridge_cnf(n, c)?;
        write_string(out, sat::write_dimacs(&cnf))
    })
}

/// Searches for a proper `c`-coloring of `Sh(n, k)`. Stores a handle in
/// `*out`, or null when none exists.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_shift_coloring_find(
    n: u32,
    k: u32,
    c: u32,
    out: *mut *mut RfShiftColoring,
) -> RfStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = match shift::find_coloring_sat(n, k, c)? {
            Some(p) => Box::into_raw(Box::new(RfShiftColoring(p))),
            None => ptr::null_mut(),
        };
        Ok(())
    })
}

/// The most-significant-bit coloring of the pairs of `[n]`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_shift_coloring_bit_pairs(
    n: u32,
    out: *mut *mut RfShiftColoring,
) -> RfStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = Box::into_raw(Box::new(RfShiftColoring(shift::bit_color_pairs(n)?)));
        Ok(())
    })
}

/// Number of k-sets colored by `h`, or 0 for null.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rf_shift_coloring_len(h: *const RfShiftColoring) -> usize {
    h.as_ref().map_or(0, |h| h.0.colors().len())
}

/// Colors in `0..c` by lexicographic rank, copied into `buf[0..len]`.
///
/// # Safety
/// `h` must be a live handle and `buf` point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn rf_shift_coloring_colors(
    h: *const RfShiftColoring,
    buf: *mut u8,
    len: usize,
) -> RfStatus {
    guard(|| {
        non_null(h, "handle")?;
        non_null(buf, "buf")?;
        let colors = (*h).0.colors();
        if colors.len() != len {
            return Err(Error::Parameter(format!(
                "buffer holds {len} colors, need {}",
                colors.len()
            ))
            .into());
        }
        ptr::copy_nonoverlapping(colors.as_ptr(), buf, len);
        Ok(())
    })
}

/// The coloring in the `shiftcoloring` text format.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rf_shift_coloring_to_text(
    h: *const RfShiftColoring,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| {
        non_null(h, "handle")?;
        write_string(out, formats::write_shift_coloring(&(*h).0))
    })
}

/// Parses and re-verifies a `shiftcoloring` file.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rf_shift_coloring_from_text(
    text: *const c_char,
    out: *mut *mut RfShiftColoring,
) -> RfStatus {
    guard(|| {
        non_null(text, "text")?;
        non_null(out, "out")?;
        let s = CStr::from_ptr(text).to_str().map_err(|_| Fail::Utf8)?;
        *out = Box::into_raw(Box::new(RfShiftColoring(formats::read_shift_coloring(s)?)));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rf_shift_coloring_free(h: *mut RfShiftColoring) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// `tw_i(x)` rendered in decimal, or symbolically once it is too large.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rf_tower_render(i: u32, x: u64, out: *mut *mut c_char) -> RfStatus {
    guard(|| write_string(out, tower::tw(i, x)?.to_string()))
}

/// A bound from the table (`kind` is "diag", "k1k2", "k2k2" or "k1_2k1"),
/// rendered like [`rf_tower_render`].
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rf_bound_render(
    k: u32,
    kind: *const c_char,
    out: *mut *mut c_char,
) -> RfStatus {
    guard(|| {
        non_null(kind, "kind")?;
        let kind: BoundKind = CStr::from_ptr(kind)
            .to_str()
            .map_err(|_| Fail::Utf8)?
            .parse()?;
        write_string(out, tower::bound_table(k, kind)?.to_string())
    })
}
