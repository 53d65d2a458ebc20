//! C ABI over `ikforge`.
//!
//! Graphs cross the boundary as opaque `IkGraph` handles. Every fallible
//! call returns an `IkStatus`; on failure a message for the calling thread
//! is available from `ik_last_error`. Strings returned through out-pointers
//! are owned by the caller and released with `ik_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ikforge::catalog;
use ikforge::graph::{bipartition, canonical_form, MultiGraph};
use ikforge::graph6;
use ikforge::planarity::is_planar;
use ikforge::reduction::{self, obstruction_scan, Rule};

/// Opaque graph handle.
pub struct IkGraph {
    inner: MultiGraph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    OutOfRange = 5,
    UnknownName = 6,
    NotFound = 7,
    Unsupported = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IkRule {
    /// The reduced graph is not planar.
    None = 0,
    EdgeCount = 1,
    Embedding = 2,
}

/// Outcome of deleting two vertices and reducing.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IkReduction {
    pub edge_count: usize,
    /// Edge count predicted by the counting formula.
    pub predicted: i64,
    pub eliminates: bool,
    pub rule: IkRule,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl std::fmt::Display) {
    let s = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn fail(status: IkStatus, msg: impl std::fmt::Display) -> IkStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> IkStatus) -> IkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(IkStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, IkStatus> {
    if p.is_null() {
        return Err(fail(IkStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(IkStatus::InvalidUtf8, e))
}

unsafe fn graph_arg<'a>(g: *const IkGraph) -> Result<&'a MultiGraph, IkStatus> {
    g.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(IkStatus::NullPointer, "null graph handle"))
}

unsafe fn emit_graph(out: *mut *mut IkGraph, g: MultiGraph) -> IkStatus {
    *out = Box::into_raw(Box::new(IkGraph { inner: g }));
    IkStatus::Ok
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> IkStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            IkStatus::Ok
        }
        Err(e) => fail(IkStatus::Panic, e),
    }
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! require {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(IkStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

/// Message for the last failed call on this thread. Valid until the next
/// call on the same thread; never null.
#[no_mangle]
pub extern "C" fn ik_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn ik_status_message(status: IkStatus) -> *const c_char {
    let s: &'static CStr = match status {
        IkStatus::Ok => c"ok",
        IkStatus::NullPointer => c"null pointer",
        IkStatus::InvalidUtf8 => c"invalid UTF-8",
        IkStatus::ParseError => c"parse error",
        IkStatus::InvalidGraph => c"invalid graph",
        IkStatus::OutOfRange => c"vertex out of range",
        IkStatus::UnknownName => c"unknown catalog name",
        IkStatus::NotFound => c"not found",
        IkStatus::Unsupported => c"unsupported",
        IkStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

/// Library version, static.
#[no_mangle]
pub extern "C" fn ik_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_from_graph6(text: *const c_char, out: *mut *mut IkGraph) -> IkStatus {
    guard(|| {
        require!(out);
        let s = try_ffi!(str_arg(text));
        match graph6::decode(s.trim()) {
            Ok(g) => emit_graph(out, g),
            Err(e) => fail(IkStatus::ParseError, e),
        }
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `pairs`
/// (`2 * edge_count` entries). Repeated pairs become parallel edges.
///
/// # Safety
/// `pairs` must hold `2 * edge_count` readable values and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_from_edges(
    order: usize,
    pairs: *const u32,
    edge_count: usize,
    out: *mut *mut IkGraph,
) -> IkStatus {
    guard(|| {
        require!(out);
        if edge_count > 0 && pairs.is_null() {
            return fail(IkStatus::NullPointer, "null edge array");
        }
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        let mut counts = std::collections::BTreeMap::<(usize, usize), u8>::new();
        for e in flat.chunks_exact(2) {
            let (u, v) = (e[0] as usize, e[1] as usize);
            if u >= order || v >= order {
                return fail(IkStatus::OutOfRange, format!("edge ({u}, {v}) outside order {order}"));
            }
            let m = counts.entry((u.min(v), u.max(v))).or_default();
            *m = match m.checked_add(1) {
                Some(m) => m,
                None => return fail(IkStatus::InvalidGraph, format!("too many parallel edges at ({u}, {v})")),
            };
        }
        let edges: Vec<(usize, usize, u8)> = counts.into_iter().map(|((u, v), m)| (u, v, m)).collect();
        let g = match MultiGraph::new(order, &edges) {
            Ok(g) => g,
            Err(e) => return fail(IkStatus::InvalidGraph, e),
        };
        emit_graph(out, g)
    })
}

/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_catalog_graph(name: *const c_char, out: *mut *mut IkGraph) -> IkStatus {
    guard(|| {
        require!(out);
        let s = try_ffi!(str_arg(name));
        match catalog::named(s) {
            Ok(entry) => emit_graph(out, entry.graph),
            Err(e) => fail(IkStatus::UnknownName, e),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_free(g: *mut IkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be null or a live handle. Null yields 0.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_order(g: *const IkGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.order())
}

/// Edges counted with multiplicity.
///
/// # Safety
/// `g` must be null or a live handle. Null yields 0.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_edge_count(g: *const IkGraph) -> usize {
    g.as_ref().map_or(0, |h| h.inner.edge_count())
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_degree(g: *const IkGraph, v: usize, out: *mut usize) -> IkStatus {
    guard(|| {
        require!(out);
        let g = try_ffi!(graph_arg(g));
        if v >= g.order() {
            return fail(IkStatus::OutOfRange, format!("vertex {v} out of range"));
        }
        *out = g.degree(v);
        IkStatus::Ok
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_is_planar(g: *const IkGraph, out: *mut bool) -> IkStatus {
    guard(|| {
        require!(out);
        *out = is_planar(try_ffi!(graph_arg(g)));
        IkStatus::Ok
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_is_bipartite(g: *const IkGraph, out: *mut bool) -> IkStatus {
    guard(|| {
        require!(out);
        *out = bipartition(try_ffi!(graph_arg(g))).is_some();
        IkStatus::Ok
    })
}

/// Hex canonical form: equal strings iff isomorphic graphs.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_canonical_hex(g: *const IkGraph, out: *mut *mut c_char) -> IkStatus {
    guard(|| {
        require!(out);
        emit_string(out, canonical_form(try_ffi!(graph_arg(g))).to_hex())
    })
}

/// Fails with `IK_STATUS_UNSUPPORTED` for multigraphs and graphs on more
/// than 62 vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_graph_to_graph6(g: *const IkGraph, out: *mut *mut c_char) -> IkStatus {
    guard(|| {
        require!(out);
        match graph6::encode(try_ffi!(graph_arg(g))) {
            Ok(s) => emit_string(out, s),
            Err(e) => fail(IkStatus::Unsupported, e),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ik_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn summarize(r: &reduction::ReductionResult) -> IkReduction {
    let rule = match reduction::rule(r) {
        None => IkRule::None,
        Some(Rule::EdgeCount) => IkRule::EdgeCount,
        Some(Rule::Embedding) => IkRule::Embedding,
    };
    IkReduction {
        edge_count: r.edge_count,
        predicted: r.breakdown.predicted,
        eliminates: rule != IkRule::None,
        rule,
    }
}

/// Deletes `a` and `b`, reduces, and reports whether the result is planar.
/// Optionally returns the reduced multigraph through `reduced`.
///
/// # Safety
/// `g` must be a live handle, `out` writable, `reduced` null or writable.
#[no_mangle]
pub unsafe extern "C" fn ik_reduce(
    g: *const IkGraph,
    a: usize,
    b: usize,
    out: *mut IkReduction,
    reduced: *mut *mut IkGraph,
) -> IkStatus {
    guard(|| {
        require!(out);
        let g = try_ffi!(graph_arg(g));
        match reduction::reduce(g, a, b) {
            Ok(r) => {
                *out = summarize(&r);
                if !reduced.is_null() {
                    *reduced = Box::into_raw(Box::new(IkGraph { inner: r.reduced }));
                }
                IkStatus::Ok
            }
            Err(e) => fail(IkStatus::OutOfRange, e),
        }
    })
}

/// First eliminating vertex pair in lexicographic order. Returns
/// `IK_STATUS_NOT_FOUND` when no pair eliminates the graph.
///
/// # Safety
/// `g` must be a live handle; `a`, `b` and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ik_obstruction_scan(
    g: *const IkGraph,
    a: *mut usize,
    b: *mut usize,
    out: *mut IkReduction,
) -> IkStatus {
    guard(|| {
        require!(a, b, out);
        let g = try_ffi!(graph_arg(g));
        match obstruction_scan(g) {
            Some(e) => {
                *a = e.pair.0;
                *b = e.pair.1;
                *out = summarize(&e.result);
                IkStatus::Ok
            }
            None => fail(IkStatus::NotFound, "no vertex pair eliminates this graph"),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn status_messages_are_static() {
        let s = unsafe { CStr::from_ptr(ik_status_message(IkStatus::NotFound)) };
        assert_eq!(s.to_str().unwrap(), "not found");
        let v = unsafe { CStr::from_ptr(ik_version()) };
        assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
    }

    #[test]
    fn null_handles_are_reported() {
        let mut p = false;
        let s = unsafe { ik_graph_is_planar(ptr::null(), &mut p) };
        assert_eq!(s, IkStatus::NullPointer);
        assert_eq!(unsafe { ik_graph_order(ptr::null()) }, 0);
        unsafe { ik_graph_free(ptr::null_mut()) };
        unsafe { ik_string_free(ptr::null_mut()) };
    }
}
