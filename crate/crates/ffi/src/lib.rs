//! C interface to `linecolour`.
//!
//! Graphs and colourings live behind opaque handles that the caller frees
//! with the matching `*_free` function. Every fallible call returns an
//! [`LcStatus`]; on failure [`lc_last_error`] describes the problem until
//! the next call on the same thread. Colours crossing the boundary are
//! 1-based, as in the text formats.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use linecolour::quasiline::{colour_decomposition, parse_qltree};
use linecolour::simple::{colours_used, local_vertex_bound};
use linecolour::{edge_colour, io, Error, Multigraph, PartialEdgeColouring};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    /// Palette smaller than the local bound.
    Infeasible = 1,
    Parse = 2,
    /// A bug in the library; please report it.
    Invariant = 3,
    NullPointer = 4,
    InvalidArgument = 5,
    /// The output buffer is too short; the required length was written.
    BufferTooSmall = 6,
}

/// Opaque multigraph handle.
pub struct LcMultigraph(Multigraph);

/// Opaque edge-colouring handle.
pub struct LcEdgeColouring(PartialEdgeColouring);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LcStatus {
    match e {
        Error::PaletteTooSmall { .. } => LcStatus::Infeasible,
        Error::InvariantViolation(_) => LcStatus::Invariant,
        Error::Parse { .. } | Error::Io(_) | Error::Structure(_) => LcStatus::Parse,
        _ => LcStatus::InvalidArgument,
    }
}

// Runs `f`, recording errors and turning panics into `Invariant`.
fn guarded(f: impl FnOnce() -> Result<(), (LcStatus, String)>) -> LcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside linecolour".into());
            LcStatus::Invariant
        }
    }
}

fn lib(e: Error) -> (LcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LcStatus, String) {
    (LcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn as_str<'a>(s: *const c_char) -> Result<&'a str, (LcStatus, String)> {
    if s.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (LcStatus::Parse, "text is not UTF-8".into()))
}

// Copies `values` (plus one, for 1-based colours) into `buf`, or reports
// the needed length.
unsafe fn fill(values: &[usize], buf: *mut u32, len: usize, needed: *mut usize) -> Result<(), (LcStatus, String)> {
    if !needed.is_null() {
        *needed = values.len();
    }
    if values.len() > len {
        return Err((LcStatus::BufferTooSmall, format!("buffer holds {len}, need {}", values.len())));
    }
    if values.is_empty() {
        return Ok(());
    }
    if buf.is_null() {
        return Err(null("buf"));
    }
    let out = std::slice::from_raw_parts_mut(buf, values.len());
    for (o, &v) in out.iter_mut().zip(values) {
        *o = u32::try_from(v + 1).map_err(|_| (LcStatus::InvalidArgument, "colour exceeds u32".to_string()))?;
    }
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn lc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// A multigraph on `n` vertices with no edges.
#[no_mangle]
pub extern "C" fn lc_multigraph_new(n: usize) -> *mut LcMultigraph {
    Box::into_raw(Box::new(LcMultigraph(Multigraph::new(n))))
}

/// Parses the `p mgraph` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lc_multigraph_parse(text: *const c_char, out: *mut *mut LcMultigraph) -> LcStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = io::parse_multigraph(as_str(text)?).map_err(lib)?;
        *out = Box::into_raw(Box::new(LcMultigraph(g)));
        Ok(())
    })
}

/// Adds an edge `uv`; its id is written to `edge` when that is non-NULL.
///
/// # Safety
/// `g` must come from this library and not be freed.
#[no_mangle]
pub unsafe extern "C" fn lc_multigraph_add_edge(g: *mut LcMultigraph, u: usize, v: usize, edge: *mut usize) -> LcStatus {
    guarded(|| {
        let g = g.as_mut().ok_or_else(|| null("graph"))?;
        let e = g.0.add_edge(u, v).map_err(lib)?;
        if !edge.is_null() {
            *edge = e;
        }
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lc_multigraph_vertex_count(g: *const LcMultigraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lc_multigraph_edge_count(g: *const LcMultigraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// # Safety
/// `g` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn lc_multigraph_free(g: *mut LcMultigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Writes the local edge bound of `g` to `gamma`.
///
/// # Safety
/// `g` must be a live handle and `gamma` writable.
#[no_mangle]
pub unsafe extern "C" fn lc_local_edge_bound(g: *const LcMultigraph, gamma: *mut usize) -> LcStatus {
    guarded(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        let gamma = gamma.as_mut().ok_or_else(|| null("gamma"))?;
        *gamma = g.0.local_edge_bound().gamma;
        Ok(())
    })
}

/// Edge-colours `g` with colours `1..=k`; `k = 0` means the local bound.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lc_edge_colour(g: *const LcMultigraph, k: usize, out: *mut *mut LcEdgeColouring) -> LcStatus {
    guarded(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let k = if k == 0 { g.0.local_edge_bound().gamma } else { k };
        let c = edge_colour(&g.0, k).map_err(lib)?;
        *out = Box::into_raw(Box::new(LcEdgeColouring(c)));
        Ok(())
    })
}

/// # Safety
/// `c` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn lc_edge_colouring_colours_used(c: *const LcEdgeColouring) -> usize {
    c.as_ref().map_or(0, |c| c.0.colours_used())
}

/// Copies the colour of every edge, by edge id, into `buf`. `needed`
/// receives the edge count whether or not `buf` is long enough.
///
/// # Safety
/// `c` must be a live handle; `buf` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn lc_edge_colouring_get(
    c: *const LcEdgeColouring,
    buf: *mut u32,
    len: usize,
    needed: *mut usize,
) -> LcStatus {
    guarded(|| {
        let c = c.as_ref().ok_or_else(|| null("colouring"))?;
        let colours: Vec<usize> = c
            .0
            .assignment()
            .into_iter()
            .map(|x| x.ok_or((LcStatus::Invariant, "uncoloured edge".to_string())))
            .collect::<Result<_, _>>()?;
        fill(&colours, buf, len, needed)
    })
}

/// # Safety
/// `c` must be NULL or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn lc_edge_colouring_free(c: *mut LcEdgeColouring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Colours the quasi-line graph described by a decomposition tree in the
/// `p qltree` format, which must keep all leaves inline. Vertex colours go
/// to `buf`; `used` and `gamma` receive the colour count and the local
/// vertex bound when non-NULL.
///
/// # Safety
/// `text` must be NUL-terminated; `buf` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn lc_quasiline_colour(
    text: *const c_char,
    buf: *mut u32,
    len: usize,
    needed: *mut usize,
    used: *mut usize,
    gamma: *mut usize,
) -> LcStatus {
    guarded(|| {
        let tree = parse_qltree(as_str(text)?, None).map_err(lib)?;
        let c = colour_decomposition(&tree).map_err(lib)?;
        if !used.is_null() {
            *used = colours_used(&c.colours);
        }
        if !gamma.is_null() {
            *gamma = local_vertex_bound(tree.graph());
        }
        fill(&c.colours, buf, len, needed)
    })
}
