//! C interface to `ribbondm`.
//!
//! Objects are opaque handles created by `*_parse` or by an operation and
//! released with the matching `*_free`. Strings returned through `char **`
//! out-parameters are owned by the caller and released with
//! `rdm_string_free`. Every call returns an [`RdmStatus`]; after a failure,
//! `rdm_last_error` describes it for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ribbondm::dm::SetSystem;
use ribbondm::harness::{TwoIsoOutcome, TwoIsoSolver};
use ribbondm::ops::{delta_matroid_of, partial_dual, partial_petrial};
use ribbondm::poly::bollobas_riordan;
use ribbondm::ribbon::{
    boundary_count, isomorphic, orientability_and_genus, parse, parse_inline, serialize,
    ArrowPresentation,
};
use ribbondm::{Error, Subset};

/// Result codes. `RDM_STATUS_FALSE` is a successful "no" answer.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RdmStatus {
    Ok = 0,
    False = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    UnknownLabel = 5,
    CapExceeded = 6,
    Disconnected = 7,
    BudgetExhausted = 8,
    Invalid = 9,
    Panic = 10,
}

/// A ribbon graph given by an arrow presentation.
pub struct RdmRibbon(ArrowPresentation);

/// A set system over a labelled ground set.
pub struct RdmSetSystem(SetSystem);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RdmStats {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub boundaries: usize,
    pub euler_genus: usize,
    pub orientable: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> RdmStatus {
    match e {
        Error::Parse { .. } => RdmStatus::Parse,
        Error::UnknownLabel(_) => RdmStatus::UnknownLabel,
        Error::CapExceeded { .. } => RdmStatus::CapExceeded,
        Error::Disconnected(_) => RdmStatus::Disconnected,
        Error::BudgetExhausted(_) => RdmStatus::BudgetExhausted,
        _ => RdmStatus::Invalid,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<RdmStatus, (RdmStatus, String)>) -> RdmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            set_error("");
            s
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            RdmStatus::Panic
        }
    }
}

type Fallible<T> = Result<T, (RdmStatus, String)>;

fn lib<T>(r: ribbondm::Result<T>) -> Fallible<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Fallible<&'a T> {
    p.as_ref()
        .ok_or_else(|| (RdmStatus::NullArgument, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Fallible<&'a str> {
    if p.is_null() {
        return Err((RdmStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (RdmStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Fallible<RdmStatus> {
    if out.is_null() {
        return Err((RdmStatus::NullArgument, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(RdmStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Fallible<RdmStatus> {
    if out.is_null() {
        return Err((RdmStatus::NullArgument, "output pointer is null".into()));
    }
    *out = CString::new(s).unwrap_or_default().into_raw();
    Ok(RdmStatus::Ok)
}

fn verdict(b: bool) -> RdmStatus {
    if b {
        RdmStatus::Ok
    } else {
        RdmStatus::False
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn rdm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a presentation: the `ribbon v1` file format, or the inline form
/// with curves separated by `/`.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_parse(
    source: *const c_char,
    out: *mut *mut RdmRibbon,
) -> RdmStatus {
    guard(|| {
        let s = text(source, "source")?;
        let ap = if s.trim_start().starts_with("ribbon") {
            lib(parse(s))?
        } else {
            lib(parse_inline(s))?
        };
        put(out, RdmRibbon(ap))
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_free(g: *mut RdmRibbon) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// The `ribbon v1` text of a presentation.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_serialize(
    g: *const RdmRibbon,
    out: *mut *mut c_char,
) -> RdmStatus {
    guard(|| put_string(out, serialize(&borrow(g, "graph")?.0)))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_stats(g: *const RdmRibbon, out: *mut RdmStats) -> RdmStatus {
    guard(|| {
        let ap = &borrow(g, "graph")?.0;
        if out.is_null() {
            return Err((RdmStatus::NullArgument, "output pointer is null".into()));
        }
        let s = orientability_and_genus(ap);
        *out = RdmStats {
            vertices: ap.num_vertices(),
            edges: ap.num_edges(),
            components: ap.components().0,
            boundaries: boundary_count(ap, ap.all_edges()),
            euler_genus: s.euler_genus,
            orientable: s.orientable,
        };
        Ok(RdmStatus::Ok)
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_delta_matroid(
    g: *const RdmRibbon,
    out: *mut *mut RdmSetSystem,
) -> RdmStatus {
    guard(|| {
        let d = lib(delta_matroid_of(&borrow(g, "graph")?.0))?;
        put(out, RdmSetSystem(d))
    })
}

unsafe fn edge_set(ap: &ArrowPresentation, edges: *const c_char) -> Fallible<Subset> {
    let s = text(edges, "edges")?;
    let labels: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|l| !l.is_empty())
        .collect();
    lib(ap.subset(&labels))
}

/// Partial dual at the edges listed in `edges` (comma or space separated).
///
/// # Safety
/// `g` must be a live handle, `edges` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_partial_dual(
    g: *const RdmRibbon,
    edges: *const c_char,
    out: *mut *mut RdmRibbon,
) -> RdmStatus {
    guard(|| {
        let ap = &borrow(g, "graph")?.0;
        let a = edge_set(ap, edges)?;
        put(out, RdmRibbon(lib(partial_dual(ap, a))?))
    })
}

/// Partial petrial at the edges listed in `edges`.
///
/// # Safety
/// As for [`rdm_ribbon_partial_dual`].
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_partial_petrial(
    g: *const RdmRibbon,
    edges: *const c_char,
    out: *mut *mut RdmRibbon,
) -> RdmStatus {
    guard(|| {
        let ap = &borrow(g, "graph")?.0;
        let a = edge_set(ap, edges)?;
        put(out, RdmRibbon(lib(partial_petrial(ap, a))?))
    })
}

/// `RDM_STATUS_OK` if isomorphic, `RDM_STATUS_FALSE` if not.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_isomorphic(
    a: *const RdmRibbon,
    b: *const RdmRibbon,
) -> RdmStatus {
    guard(|| {
        Ok(verdict(isomorphic(
            &borrow(a, "first graph")?.0,
            &borrow(b, "second graph")?.0,
        )))
    })
}

/// Decides equivalence under vertex joins, vertex cuts, mutation and
/// isomorphism. If `report` is not null it receives one line per move of
/// the certificate, or the reason the graphs differ.
///
/// # Safety
/// Both handles must be live; `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn rdm_two_isomorphic(
    a: *const RdmRibbon,
    b: *const RdmRibbon,
    report: *mut *mut c_char,
) -> RdmStatus {
    guard(|| {
        let (a, b) = (&borrow(a, "first graph")?.0, &borrow(b, "second graph")?.0);
        let outcome = lib(TwoIsoSolver::default().decide(a, b))?;
        let (status, lines) = match outcome {
            TwoIsoOutcome::NotEquivalent(w) => (RdmStatus::False, w.to_string()),
            TwoIsoOutcome::Equivalent { certificate, .. } => {
                let moves = certificate.unwrap_or_default();
                (
                    RdmStatus::Ok,
                    moves.iter().map(|m| format!("{m}\n")).collect(),
                )
            }
        };
        if !report.is_null() {
            put_string(report, lines)?;
        }
        Ok(status)
    })
}

/// The Bollobás–Riordan polynomial as text, e.g. `1*y*z - 1*z + 1`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_ribbon_polynomial(
    g: *const RdmRibbon,
    out: *mut *mut c_char,
) -> RdmStatus {
    guard(|| {
        let p = lib(bollobas_riordan(&borrow(g, "graph")?.0))?;
        put_string(out, p.to_string())
    })
}

/// Parses a set system: a `ground` line then `feasible` lines.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_set_system_parse(
    source: *const c_char,
    out: *mut *mut RdmSetSystem,
) -> RdmStatus {
    guard(|| {
        let d = lib(SetSystem::parse(text(source, "source")?))?;
        put(out, RdmSetSystem(d))
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rdm_set_system_text(
    d: *const RdmSetSystem,
    out: *mut *mut c_char,
) -> RdmStatus {
    guard(|| put_string(out, borrow(d, "set system")?.0.to_text()))
}

/// `RDM_STATUS_OK` if the two set systems are isomorphic.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn rdm_set_system_isomorphic(
    a: *const RdmSetSystem,
    b: *const RdmSetSystem,
) -> RdmStatus {
    guard(|| {
        let (a, b) = (
            &borrow(a, "first set system")?.0,
            &borrow(b, "second set system")?.0,
        );
        Ok(verdict(ribbondm::dm::isomorphic_dm(a, b).is_some()))
    })
}

/// # Safety
/// `d` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn rdm_set_system_free(d: *mut RdmSetSystem) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `s` must be a string returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn rdm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn rdm_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => c"",
        };
    VERSION.as_ptr()
}
