//! C ABI over `cdgraph`.
//!
//! Objects are opaque handles created by `cdg_*_parse`/`cdg_*_from_*` and
//! released with the matching `cdg_*_free`. Every fallible call returns a
//! [`CdgStatus`]; on failure `cdg_last_error_message` describes the error
//! for the calling thread. Strings handed out by the library must be
//! released with `cdg_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cdgraph::catalog::load_fixture;
use cdgraph::chargraph::build_graph;
use cdgraph::degrees::{character_degrees, DegreeMultiset};
use cdgraph::graphkit::SimpleGraph;
use cdgraph::permgroup::PermGroup;
use cdgraph::spectrum::distinct_eigenvalue_count;
use cdgraph::theorems::{analyze, screen_solvable_feasibility, AnalysisInput, AnalysisReport, Solvability};
use cdgraph::Error;

pub struct CdgGroup(PermGroup);

pub struct CdgDegrees(DegreeMultiset);

pub struct CdgGraph(SimpleGraph);

pub struct CdgReport(AnalysisReport);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CdgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    ResourceLimit = 5,
    Computation = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CdgSolvability {
    Solvable = 0,
    Nonsolvable = 1,
    Unknown = 2,
    Auto = 3,
}

impl From<CdgSolvability> for Solvability {
    fn from(s: CdgSolvability) -> Self {
        match s {
            CdgSolvability::Solvable => Solvability::Solvable,
            CdgSolvability::Nonsolvable => Solvability::Nonsolvable,
            CdgSolvability::Unknown => Solvability::Unknown,
            CdgSolvability::Auto => Solvability::Auto,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CdgStatus {
    match e {
        _ if e.is_resource_limit() => CdgStatus::ResourceLimit,
        Error::Parse(_) | Error::MalformedPermutation(_) | Error::EmptyInput => CdgStatus::Parse,
        Error::InvalidArgument(_) | Error::UnknownFixture(_) | Error::PrimeDoesNotDivideOrder { .. } => {
            CdgStatus::InvalidArgument
        }
        _ => CdgStatus::Computation,
    }
}

/// Runs `f`, recording errors and panics for `cdg_last_error_message`.
fn guard(f: impl FnOnce() -> Result<(), (CdgStatus, String)>) -> CdgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CdgStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {message}"));
            CdgStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CdgStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CdgStatus, String) {
    (CdgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (CdgStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (CdgStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, (CdgStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (CdgStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, value: T) -> Result<(), (CdgStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = value;
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (CdgStatus, String)> {
    let c = CString::new(s).map_err(|_| (CdgStatus::Computation, "string holds a nul byte".to_string()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn cdg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn cdg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses cycle-notation generators or group JSON.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_group_parse(text: *const c_char, order_cap: usize, out: *mut *mut CdgGroup) -> CdgStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        put(out, CdgGroup(PermGroup::parse(text, order_cap).map_err(lib_err)?))
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn cdg_group_free(g: *mut CdgGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_group_order(g: *const CdgGroup, out: *mut u64) -> CdgStatus {
    guard(|| put_value(out, handle(g, "group")?.0.order()))
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_group_is_solvable(g: *const CdgGroup, out: *mut bool) -> CdgStatus {
    guard(|| put_value(out, handle(g, "group")?.0.is_solvable()))
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_degrees_of_group(g: *const CdgGroup, out: *mut *mut CdgDegrees) -> CdgStatus {
    guard(|| {
        let d = character_degrees(&handle(g, "group")?.0).map_err(lib_err)?;
        put(out, CdgDegrees(d))
    })
}

/// Parses `"1,15,16,17"` or a JSON array.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_degrees_parse(text: *const c_char, out: *mut *mut CdgDegrees) -> CdgStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        put(out, CdgDegrees(DegreeMultiset::parse(text).map_err(lib_err)?))
    })
}

/// # Safety
/// `d` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn cdg_degrees_free(d: *mut CdgDegrees) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Writes the degrees in increasing order, with multiplicity, into `buf`.
/// `len` receives the full count; at most `cap` entries are written.
///
/// # Safety
/// `d` must be a valid handle; `buf` must hold `cap` values or be null
/// with `cap == 0`; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_degrees_values(d: *const CdgDegrees, buf: *mut u64, cap: usize, len: *mut usize) -> CdgStatus {
    guard(|| {
        let values = handle(d, "degrees")?.0.expanded();
        if cap > 0 && buf.is_null() {
            return Err(null("buffer"));
        }
        for (i, &v) in values.iter().take(cap).enumerate() {
            *buf.add(i) = v;
        }
        put_value(len, values.len())
    })
}

/// # Safety
/// `d` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_degrees_to_json(d: *const CdgDegrees, out: *mut *mut c_char) -> CdgStatus {
    guard(|| {
        let json = degrees_json(&handle(d, "degrees")?.0)?;
        put_string(out, json)
    })
}

fn degrees_json(d: &DegreeMultiset) -> Result<String, (CdgStatus, String)> {
    let expanded = d.expanded();
    Ok(format!(
        "[{}]",
        expanded.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    ))
}

/// Character degree graph of a degree multiset, vertices labelled by primes.
///
/// # Safety
/// `d` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_from_degrees(d: *const CdgDegrees, out: *mut *mut CdgGraph) -> CdgStatus {
    guard(|| {
        let cg = build_graph(&handle(d, "degrees")?.0).map_err(lib_err)?;
        put(out, CdgGraph(cg.to_simple_graph()))
    })
}

/// Parses an edge list such as `"3-5;2;17"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_parse_edge_list(text: *const c_char, out: *mut *mut CdgGraph) -> CdgStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        put(out, CdgGraph(SimpleGraph::parse_edge_list(text).map_err(lib_err)?))
    })
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_parse_json(text: *const c_char, out: *mut *mut CdgGraph) -> CdgStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        put(out, CdgGraph(SimpleGraph::parse_json(text).map_err(lib_err)?))
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_free(g: *mut CdgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_vertex_count(g: *const CdgGraph, out: *mut usize) -> CdgStatus {
    guard(|| put_value(out, handle(g, "graph")?.0.n()))
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_edge_count(g: *const CdgGraph, out: *mut usize) -> CdgStatus {
    guard(|| put_value(out, handle(g, "graph")?.0.edge_count()))
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_distinct_eigenvalues(g: *const CdgGraph, out: *mut usize) -> CdgStatus {
    guard(|| put_value(out, distinct_eigenvalue_count(&handle(g, "graph")?.0).distinct_count))
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_to_json(g: *const CdgGraph, out: *mut *mut c_char) -> CdgStatus {
    guard(|| put_string(out, handle(g, "graph")?.0.to_json().to_string()))
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_graph_to_edge_list(g: *const CdgGraph, out: *mut *mut c_char) -> CdgStatus {
    guard(|| put_string(out, handle(g, "graph")?.0.to_edge_list()))
}

/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_analyze_group(g: *const CdgGroup, solvability: CdgSolvability, out: *mut *mut CdgReport) -> CdgStatus {
    guard(|| {
        let group = handle(g, "group")?.0.clone();
        let input = AnalysisInput::Group { description: String::new(), group };
        put(out, CdgReport(analyze(&input, solvability.into()).map_err(lib_err)?))
    })
}

/// `Auto` is rejected for degree input.
///
/// # Safety
/// `d` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_analyze_degrees(d: *const CdgDegrees, solvability: CdgSolvability, out: *mut *mut CdgReport) -> CdgStatus {
    guard(|| {
        let input = AnalysisInput::Degrees(handle(d, "degrees")?.0.clone());
        put(out, CdgReport(analyze(&input, solvability.into()).map_err(lib_err)?))
    })
}

/// `Auto` is rejected for graph input.
///
/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_analyze_graph(g: *const CdgGraph, solvability: CdgSolvability, out: *mut *mut CdgReport) -> CdgStatus {
    guard(|| {
        let input = AnalysisInput::Graph(handle(g, "graph")?.0.clone());
        put(out, CdgReport(analyze(&input, solvability.into()).map_err(lib_err)?))
    })
}

/// Necessary conditions for a graph to be the character graph of a
/// solvable group.
///
/// # Safety
/// `g` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_screen_graph(g: *const CdgGraph, out: *mut *mut CdgReport) -> CdgStatus {
    guard(|| put(out, CdgReport(screen_solvable_feasibility(&handle(g, "graph")?.0).map_err(lib_err)?)))
}

/// Analyzes a named fixture under its own solvability assumption.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_analyze_fixture(name: *const c_char, order_cap: usize, out: *mut *mut CdgReport) -> CdgStatus {
    guard(|| {
        let fixture = load_fixture(read_str(name, "name")?).map_err(lib_err)?;
        let input = fixture.input(order_cap).map_err(lib_err)?;
        put(out, CdgReport(analyze(&input, fixture.solvability()).map_err(lib_err)?))
    })
}

/// # Safety
/// `r` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn cdg_report_free(r: *mut CdgReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// True when no check failed.
///
/// # Safety
/// `r` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_report_passed(r: *const CdgReport, out: *mut bool) -> CdgStatus {
    guard(|| put_value(out, !handle(r, "report")?.0.failed()))
}

/// # Safety
/// `r` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_report_check_count(r: *const CdgReport, out: *mut usize) -> CdgStatus {
    guard(|| put_value(out, handle(r, "report")?.0.checks.len()))
}

/// Name of the first failing check, or null when the report passed.
///
/// # Safety
/// `r` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_report_first_failure(r: *const CdgReport, out: *mut *mut c_char) -> CdgStatus {
    guard(|| match &handle(r, "report")?.0.first_failure {
        Some(name) => put_string(out, name.clone()),
        None => put_value(out, ptr::null_mut()),
    })
}

/// # Safety
/// `r` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_report_to_json(r: *const CdgReport, out: *mut *mut c_char) -> CdgStatus {
    guard(|| put_string(out, handle(r, "report")?.0.to_json_string()))
}

/// # Safety
/// `r` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_report_to_text(r: *const CdgReport, out: *mut *mut c_char) -> CdgStatus {
    guard(|| put_string(out, handle(r, "report")?.0.to_text()))
}

/// # Safety
/// `r` must be a valid handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cdg_report_to_dot(r: *const CdgReport, out: *mut *mut c_char) -> CdgStatus {
    guard(|| put_string(out, handle(r, "report")?.0.to_dot()))
}
