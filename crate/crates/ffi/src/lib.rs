//! C interface: opaque handles for arrays and graphs, integer status codes,
//! and heap strings released with `drg_string_free`.
//!
//! Every function returns a [`DrgStatus`]. On failure a message is kept per
//! thread and can be read with `drg_last_error`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::sync::Arc;

use drgkit::drg::{parse_array, IntersectionArray, SpectralData};
use drgkit::finitegeom::{
    build_hamming, build_hermitian_dual_polar, measure_parameters, verify_light_tail_on_graph,
    FiniteGeomError, FiniteGraph,
};
use drgkit::krein::light_tail_at;
use drgkit::report::{analyze, AnalyzeOptions};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Parse or feasibility failure of the input.
    InvalidInput = 3,
    Unsupported = 4,
    OutOfRange = 5,
    /// Two independent computations disagreed.
    Internal = 6,
}

/// Request every nonzero Krein parameter in reports.
pub const DRG_REPORT_KREIN_FULL: u32 = 1;
/// Treat the graph as 2-bounded in reports.
pub const DRG_REPORT_ASSUME_2_BOUNDED: u32 = 2;

pub struct DrgArray {
    array: IntersectionArray,
    spectrum: Arc<SpectralData>,
}

pub struct DrgGraph {
    graph: FiniteGraph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(status: DrgStatus, msg: impl Into<String>) -> DrgStatus {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap());
    status
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::default());
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, DrgStatus> {
    if s.is_null() {
        return Err(set_error(DrgStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| set_error(DrgStatus::InvalidUtf8, "string is not UTF-8"))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap().into_raw()
}

macro_rules! out_ptr {
    ($p:expr) => {
        if $p.is_null() {
            return set_error(DrgStatus::NullPointer, "null output pointer");
        }
    };
}

macro_rules! handle {
    ($p:expr) => {
        match $p.as_ref() {
            Some(h) => h,
            None => return set_error(DrgStatus::NullPointer, "null handle"),
        }
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn drg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failing call on this thread; empty after success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn drg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub unsafe extern "C" fn drg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"b0,...;c1,..."`, validates it and computes its spectrum.
#[no_mangle]
pub unsafe extern "C" fn drg_array_parse(text: *const c_char, out: *mut *mut DrgArray) -> DrgStatus {
    out_ptr!(out);
    *out = ptr::null_mut();
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let array = match parse_array(text) {
        Ok(a) => a,
        Err(e) => return set_error(DrgStatus::InvalidInput, e.to_string()),
    };
    match make_array(array) {
        Ok(h) => {
            *out = h;
            clear_error();
            DrgStatus::Ok
        }
        Err(s) => s,
    }
}

fn make_array(array: IntersectionArray) -> Result<*mut DrgArray, DrgStatus> {
    let spectrum = array.spectral().map_err(|e| match e {
        drgkit::drg::SpectrumError::Inconsistent(m) => set_error(DrgStatus::Internal, m),
        other => set_error(DrgStatus::InvalidInput, other.to_string()),
    })?;
    Ok(Box::into_raw(Box::new(DrgArray { array, spectrum })))
}

#[no_mangle]
pub unsafe extern "C" fn drg_array_free(a: *mut DrgArray) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

#[no_mangle]
pub unsafe extern "C" fn drg_array_diameter(a: *const DrgArray, out: *mut usize) -> DrgStatus {
    let a = handle!(a);
    out_ptr!(out);
    *out = a.array.diameter();
    DrgStatus::Ok
}

/// Canonical text `"b0,...;c1,..."`; free with `drg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn drg_array_text(a: *const DrgArray, out: *mut *mut c_char) -> DrgStatus {
    let a = handle!(a);
    out_ptr!(out);
    *out = to_c(a.array.to_text());
    DrgStatus::Ok
}

/// Vertex count as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn drg_array_vertex_count(a: *const DrgArray, out: *mut *mut c_char) -> DrgStatus {
    let a = handle!(a);
    out_ptr!(out);
    *out = to_c(a.array.vertex_count().to_string());
    DrgStatus::Ok
}

/// `θ_i` as JSON: `"p/q"` or `{"min_poly": [...], "interval": [lo, hi]}`.
#[no_mangle]
pub unsafe extern "C" fn drg_array_eigenvalue(a: *const DrgArray, i: usize, out: *mut *mut c_char) -> DrgStatus {
    let a = handle!(a);
    out_ptr!(out);
    if i > a.array.diameter() {
        return set_error(DrgStatus::OutOfRange, format!("index {i} > D"));
    }
    *out = to_c(serde_json::to_string(a.spectrum.theta(i)).unwrap());
    DrgStatus::Ok
}

/// `m_i` as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn drg_array_multiplicity(a: *const DrgArray, i: usize, out: *mut *mut c_char) -> DrgStatus {
    let a = handle!(a);
    out_ptr!(out);
    if i > a.array.diameter() {
        return set_error(DrgStatus::OutOfRange, format!("index {i} > D"));
    }
    *out = to_c(a.spectrum.multiplicities[i].to_string());
    DrgStatus::Ok
}

/// Writes 1 if `E_i` is a light tail, else 0; `associated` receives the
/// index of `F`, or -1.
#[no_mangle]
pub unsafe extern "C" fn drg_array_light_tail(
    a: *const DrgArray,
    i: usize,
    is_light_tail: *mut i32,
    associated: *mut i64,
) -> DrgStatus {
    let a = handle!(a);
    out_ptr!(is_light_tail);
    out_ptr!(associated);
    if i > a.array.diameter() {
        return set_error(DrgStatus::OutOfRange, format!("index {i} > D"));
    }
    let r = light_tail_at(&a.spectrum, i);
    *is_light_tail = r.is_light_tail as i32;
    *associated = r.associated_index.map_or(-1, |h| h as i64);
    DrgStatus::Ok
}

/// Full JSON report; `flags` is a bitwise OR of the `DRG_REPORT_*` constants.
#[no_mangle]
pub unsafe extern "C" fn drg_array_report_json(a: *const DrgArray, flags: u32, out: *mut *mut c_char) -> DrgStatus {
    let a = handle!(a);
    out_ptr!(out);
    *out = ptr::null_mut();
    let opts = AnalyzeOptions {
        krein_full: flags & DRG_REPORT_KREIN_FULL != 0,
        assume_2_bounded: flags & DRG_REPORT_ASSUME_2_BOUNDED != 0,
    };
    match analyze(&a.array, &a.array.to_text(), opts) {
        Ok(r) => {
            *out = to_c(serde_json::to_string(&r).unwrap());
            clear_error();
            DrgStatus::Ok
        }
        Err(e) => {
            let status = if e.exit_code() == 3 { DrgStatus::Internal } else { DrgStatus::InvalidInput };
            set_error(status, e.to_string())
        }
    }
}

fn graph_status(e: FiniteGeomError) -> DrgStatus {
    let status = match e {
        FiniteGeomError::Unsupported(_) | FiniteGeomError::SizeCap { .. } => DrgStatus::Unsupported,
        _ => DrgStatus::InvalidInput,
    };
    set_error(status, e.to_string())
}

unsafe fn store_graph(r: Result<FiniteGraph, FiniteGeomError>, out: *mut *mut DrgGraph) -> DrgStatus {
    match r {
        Ok(graph) => {
            *out = Box::into_raw(Box::new(DrgGraph { graph }));
            clear_error();
            DrgStatus::Ok
        }
        Err(e) => graph_status(e),
    }
}

/// Hermitian dual polar graph for `(d, r)` in `{(2,2), (3,2), (2,3)}`.
#[no_mangle]
pub unsafe extern "C" fn drg_graph_hermitian(d: usize, r: u64, out: *mut *mut DrgGraph) -> DrgStatus {
    out_ptr!(out);
    *out = ptr::null_mut();
    store_graph(build_hermitian_dual_polar(d, r), out)
}

/// Hamming graph `H(d, q)`.
#[no_mangle]
pub unsafe extern "C" fn drg_graph_hamming(d: usize, q: usize, out: *mut *mut DrgGraph) -> DrgStatus {
    out_ptr!(out);
    *out = ptr::null_mut();
    store_graph(build_hamming(d, q), out)
}

#[no_mangle]
pub unsafe extern "C" fn drg_graph_free(g: *mut DrgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn drg_graph_vertex_count(g: *const DrgGraph, out: *mut usize) -> DrgStatus {
    let g = handle!(g);
    out_ptr!(out);
    *out = g.graph.n();
    DrgStatus::Ok
}

#[no_mangle]
pub unsafe extern "C" fn drg_graph_edge_count(g: *const DrgGraph, out: *mut usize) -> DrgStatus {
    let g = handle!(g);
    out_ptr!(out);
    *out = g.graph.edge_count();
    DrgStatus::Ok
}

/// Edge list, one `"u v"` line per edge.
#[no_mangle]
pub unsafe extern "C" fn drg_graph_edge_list(g: *const DrgGraph, out: *mut *mut c_char) -> DrgStatus {
    let g = handle!(g);
    out_ptr!(out);
    *out = to_c(g.graph.to_edge_list());
    DrgStatus::Ok
}

/// Verifies distance-regularity and returns the measured array as a new handle.
#[no_mangle]
pub unsafe extern "C" fn drg_graph_measure(g: *const DrgGraph, out: *mut *mut DrgArray) -> DrgStatus {
    let g = handle!(g);
    out_ptr!(out);
    *out = ptr::null_mut();
    let m = match measure_parameters(&g.graph) {
        Ok(m) => m,
        Err(e) => return graph_status(e),
    };
    match make_array(m.intersection_array) {
        Ok(h) => {
            *out = h;
            clear_error();
            DrgStatus::Ok
        }
        Err(s) => s,
    }
}

/// Graph-level check that `E_D ∘ E_D` is a light-tail square; writes 1 or 0.
#[no_mangle]
pub unsafe extern "C" fn drg_graph_light_tail(g: *const DrgGraph, a: *const DrgArray, out: *mut i32) -> DrgStatus {
    let g = handle!(g);
    let a = handle!(a);
    out_ptr!(out);
    match verify_light_tail_on_graph(&g.graph, &a.spectrum) {
        Ok(r) if !r.krein_agrees => set_error(DrgStatus::Internal, "graph check disagrees with the Krein row"),
        Ok(r) => {
            *out = r.is_light_tail as i32;
            clear_error();
            DrgStatus::Ok
        }
        Err(e) => graph_status(e),
    }
}
