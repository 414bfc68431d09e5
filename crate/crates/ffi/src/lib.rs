//! C ABI for `schemeforge`.
//!
//! Objects are opaque handles created by `sf_*_new`/`sf_scheme_from_*` and released with the
//! matching `*_free`. Every fallible call returns an [`SfStatus`]; on failure the message is
//! available from [`sf_last_error`] on the same thread. Strings returned by the library must be
//! released with [`sf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schemeforge::graph::Graph;
use schemeforge::report::{spectral_report, Status};
use schemeforge::scheme::{catalog_scheme, scheme_of_graph, AssociationScheme};
use schemeforge::spectral::{eigensystem, SpectralData};
use schemeforge::suite::run_suite;
use schemeforge::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    UnknownCatalog = 4,
    Computation = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque symmetric association scheme.
pub struct SfScheme {
    scheme: AssociationScheme,
    spectral: Option<SpectralData>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: SfStatus, msg: impl Into<String>) -> SfStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> SfStatus {
    let status = match e {
        Error::Parse { .. } => SfStatus::Parse,
        Error::UnknownCatalog(_) => SfStatus::UnknownCatalog,
        Error::InvalidParameters(_) => SfStatus::InvalidArgument,
        _ => SfStatus::Computation,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into [`SfStatus::Panic`].
fn guard(f: impl FnOnce() -> SfStatus) -> SfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(SfStatus::Panic, "internal panic"),
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, SfStatus> {
    if p.is_null() {
        return Err(fail(SfStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(SfStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn publish(out: *mut *mut SfScheme, r: schemeforge::Result<AssociationScheme>) -> SfStatus {
    if out.is_null() {
        return fail(SfStatus::NullPointer, "null output pointer");
    }
    match r {
        Ok(scheme) => {
            *out = Box::into_raw(Box::new(SfScheme { scheme, spectral: None }));
            SfStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

unsafe fn handle<'a>(s: *mut SfScheme) -> Result<&'a mut SfScheme, SfStatus> {
    s.as_mut().ok_or_else(|| fail(SfStatus::NullPointer, "null scheme handle"))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Last error message on this thread, or NULL. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn sf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Scheme of a catalog name such as `"cube"` or `"bd-dodecahedron"`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_from_catalog(name: *const c_char, out: *mut *mut SfScheme) -> SfStatus {
    guard(|| {
        let name = tri!(text(name));
        publish(out, catalog_scheme(name))
    })
}

/// Scheme generated by a graph in the edge-list format (`n m`, then `u v` lines).
///
/// # Safety
/// `edges` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_from_graph_text(edges: *const c_char, out: *mut *mut SfScheme) -> SfStatus {
    guard(|| {
        let t = tri!(text(edges));
        publish(out, Graph::parse(t).and_then(|g| scheme_of_graph(&g)))
    })
}

/// Scheme in the text format (`n d`, then `rel i` blocks of pairs).
///
/// # Safety
/// `scheme` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_parse(scheme: *const c_char, out: *mut *mut SfScheme) -> SfStatus {
    guard(|| {
        let t = tri!(text(scheme));
        publish(out, AssociationScheme::parse(t))
    })
}

/// Releases a scheme. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_free(s: *mut SfScheme) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of points and rank `d + 1`.
///
/// # Safety
/// `s` must be a live handle; `n` and `rank` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_size(s: *mut SfScheme, n: *mut usize, rank: *mut usize) -> SfStatus {
    guard(|| {
        let h = tri!(handle(s));
        if n.is_null() || rank.is_null() {
            return fail(SfStatus::NullPointer, "null output pointer");
        }
        *n = h.scheme.n();
        *rank = h.scheme.rank();
        SfStatus::Ok
    })
}

/// Intersection number `p^h_ij`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_intersection_number(
    s: *mut SfScheme,
    h: usize,
    i: usize,
    j: usize,
    out: *mut usize,
) -> SfStatus {
    guard(|| {
        let sh = tri!(handle(s));
        let r = sh.scheme.rank();
        if h >= r || i >= r || j >= r {
            return fail(SfStatus::InvalidArgument, format!("relation index out of range 0..{r}"));
        }
        if out.is_null() {
            return fail(SfStatus::NullPointer, "null output pointer");
        }
        *out = sh.scheme.p(h, i, j);
        SfStatus::Ok
    })
}

/// Writes the multiplicities into `buf` (capacity `len`) and their count into `written`.
/// Returns [`SfStatus::BufferTooSmall`] with `written` set to the rank if `len` is too small.
///
/// # Safety
/// `s` must be a live handle, `buf` valid for `len` writes and `written` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_multiplicities(
    s: *mut SfScheme,
    buf: *mut usize,
    len: usize,
    written: *mut usize,
) -> SfStatus {
    guard(|| {
        let h = tri!(handle(s));
        if written.is_null() || (buf.is_null() && len > 0) {
            return fail(SfStatus::NullPointer, "null output pointer");
        }
        if h.spectral.is_none() {
            match eigensystem(&h.scheme) {
                Ok(sd) => h.spectral = Some(sd),
                Err(e) => return from_error(e),
            }
        }
        let m = &h.spectral.as_ref().unwrap().multiplicities;
        *written = m.len();
        if len < m.len() {
            return fail(SfStatus::BufferTooSmall, format!("need room for {} values", m.len()));
        }
        ptr::copy_nonoverlapping(m.as_ptr(), buf, m.len());
        SfStatus::Ok
    })
}

/// Spectral report as JSON; release with [`sf_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_scheme_spectral_json(s: *mut SfScheme, out: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let h = tri!(handle(s));
        if out.is_null() {
            return fail(SfStatus::NullPointer, "null output pointer");
        }
        let r = match spectral_report(&h.scheme) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        let json = serde_json::to_string(&r).expect("serializable report");
        *out = CString::new(json).expect("json has no nul").into_raw();
        SfStatus::Ok
    })
}

/// Runs a verification suite and stores the number of failed checks in `failed`.
///
/// # Safety
/// `suite` must be a nul-terminated string and `failed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sf_verify_suite(suite: *const c_char, failed: *mut usize) -> SfStatus {
    guard(|| {
        let name = tri!(text(suite));
        if failed.is_null() {
            return fail(SfStatus::NullPointer, "null output pointer");
        }
        match run_suite(name) {
            Ok(v) => {
                *failed = v.iter().filter(|c| c.status == Status::Fail).count();
                SfStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}
