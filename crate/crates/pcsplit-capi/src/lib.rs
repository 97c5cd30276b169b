//! C ABI over the pcsplit library.
//!
//! Conventions: objects are opaque handles created and destroyed by this
//! API; every function returns a [`PcStatus`] code; strings returned
//! through out-parameters are NUL-terminated UTF-8 JSON documents owned by
//! the caller and must be released with [`pc_string_free`]. On any error
//! the thread-local message behind [`pc_last_error`] is updated.

use libc::c_char;
use pcsplit::docs::{to_json_pretty, AlgebraDoc, GeneratorSetDoc, InvariantSetDoc};
use pcsplit::generators::{pc_generators, ScenarioContext};
use pcsplit::rootdata::{build_classical, LieAlgebraData, Scenario, Series};
use pcsplit::verify::{run_scenario, RunConfig};
use std::cell::RefCell;
use std::ffi::{CStr, CString};

/// Status codes returned by every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    /// Success.
    PcOk = 0,
    /// A pointer argument was null or a scalar argument was out of range.
    PcInvalidArgument = 1,
    /// The requested algebra or scenario is outside the supported table.
    PcUnsupported = 2,
    /// The verification ran but at least one certificate did not pass.
    PcCheckFailed = 3,
    /// Internal error; consult `pc_last_error`.
    PcInternal = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid message").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Message describing the most recent error on this thread, or null.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Opaque handle to a constructed Lie algebra.
pub struct PcAlgebra {
    inner: LieAlgebraData,
}

fn parse_series(series: c_char) -> Option<Series> {
    Series::from_letter(series as u8 as char)
}

fn string_out(payload: String, out: *mut *mut c_char) -> PcStatus {
    match CString::new(payload) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            PcStatus::PcOk
        }
        Err(_) => {
            set_error("payload contained an interior NUL".into());
            PcStatus::PcInternal
        }
    }
}

/// Build a classical Lie algebra (series one of 'A', 'B', 'C', 'D').
///
/// # Safety
/// `out` must be a valid pointer; the handle must be released with
/// [`pc_algebra_free`].
#[no_mangle]
pub unsafe extern "C" fn pc_algebra_build(
    series: c_char,
    rank: u32,
    out: *mut *mut PcAlgebra,
) -> PcStatus {
    if out.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    let Some(series) = parse_series(series) else {
        set_error("series must be one of A, B, C, D".into());
        return PcStatus::PcInvalidArgument;
    };
    match build_classical(series, rank as usize) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(PcAlgebra { inner }));
            PcStatus::PcOk
        }
        Err(e) => {
            set_error(e.to_string());
            PcStatus::PcUnsupported
        }
    }
}

/// Release an algebra handle (null is ignored).
///
/// # Safety
/// `handle` must come from [`pc_algebra_build`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pc_algebra_free(handle: *mut PcAlgebra) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Dimension of the algebra behind the handle, 0 for null.
///
/// # Safety
/// `handle` must be a live handle from [`pc_algebra_build`].
#[no_mangle]
pub unsafe extern "C" fn pc_algebra_dim(handle: *const PcAlgebra) -> u32 {
    handle.as_ref().map_or(0, |h| h.inner.dim as u32)
}

/// Rank of the algebra behind the handle, 0 for null.
///
/// # Safety
/// `handle` must be a live handle from [`pc_algebra_build`].
#[no_mangle]
pub unsafe extern "C" fn pc_algebra_rank(handle: *const PcAlgebra) -> u32 {
    handle.as_ref().map_or(0, |h| h.inner.rank as u32)
}

/// The magic number `b(g) = (dim g + rank g)/2`, 0 for null.
///
/// # Safety
/// `handle` must be a live handle from [`pc_algebra_build`].
#[no_mangle]
pub unsafe extern "C" fn pc_algebra_magic_number(handle: *const PcAlgebra) -> u32 {
    handle.as_ref().map_or(0, |h| h.inner.b_magic() as u32)
}

/// Serialize the algebra document (basis labels, structure constants,
/// invariant form) as JSON.
///
/// # Safety
/// `handle` must be live and `out_json` valid; release the string with
/// [`pc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pc_algebra_to_json(
    handle: *const PcAlgebra,
    out_json: *mut *mut c_char,
) -> PcStatus {
    let (Some(h), false) = (handle.as_ref(), out_json.is_null()) else {
        return PcStatus::PcInvalidArgument;
    };
    match to_json_pretty(&AlgebraDoc::from_algebra(&h.inner)) {
        Ok(s) => string_out(s, out_json),
        Err(e) => {
            set_error(e.to_string());
            PcStatus::PcInternal
        }
    }
}

/// Basic symmetric invariants of the algebra as a JSON document.
///
/// # Safety
/// `handle` must be live and `out_json` valid; release the string with
/// [`pc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pc_invariants_to_json(
    handle: *const PcAlgebra,
    out_json: *mut *mut c_char,
) -> PcStatus {
    let (Some(h), false) = (handle.as_ref(), out_json.is_null()) else {
        return PcStatus::PcInvalidArgument;
    };
    let inv = match pcsplit::invariants::basic_invariants(&h.inner) {
        Ok(inv) => inv,
        Err(e) => {
            set_error(e.to_string());
            return PcStatus::PcUnsupported;
        }
    };
    let vars: Vec<String> = h.inner.basis.iter().map(|b| b.label.clone()).collect();
    match to_json_pretty(&InvariantSetDoc::new(&inv, &vars)) {
        Ok(s) => string_out(s, out_json),
        Err(e) => {
            set_error(e.to_string());
            PcStatus::PcInternal
        }
    }
}

fn parse_scenario_ptr(scenario: *const c_char) -> Result<Scenario, PcStatus> {
    if scenario.is_null() {
        set_error("scenario must not be null".into());
        return Err(PcStatus::PcInvalidArgument);
    }
    let name = unsafe { CStr::from_ptr(scenario) };
    let Ok(name) = name.to_str() else {
        set_error("scenario is not valid UTF-8".into());
        return Err(PcStatus::PcInvalidArgument);
    };
    Scenario::from_name(name).ok_or_else(|| {
        set_error(format!(
            "unknown scenario '{name}': expected borel, involution or manin"
        ));
        PcStatus::PcUnsupported
    })
}

/// Free generators of the commutative subalgebra of a scenario, as JSON.
/// `scenario` is one of "borel", "involution", "manin".
///
/// # Safety
/// `scenario` must be a NUL-terminated string and `out_json` valid;
/// release the string with [`pc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pc_generators_to_json(
    series: c_char,
    rank: u32,
    scenario: *const c_char,
    out_json: *mut *mut c_char,
) -> PcStatus {
    if out_json.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    let Some(series) = parse_series(series) else {
        set_error("series must be one of A, B, C, D".into());
        return PcStatus::PcInvalidArgument;
    };
    let scenario = match parse_scenario_ptr(scenario) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let ctx = match ScenarioContext::new(series, rank as usize, scenario) {
        Ok(ctx) => ctx,
        Err(e) => {
            set_error(e.to_string());
            return PcStatus::PcUnsupported;
        }
    };
    let set = match pc_generators(&ctx) {
        Ok(set) => set,
        Err(e) => {
            set_error(e.to_string());
            return PcStatus::PcInternal;
        }
    };
    let vars: Vec<String> = ctx.algebra.basis.iter().map(|b| b.label.clone()).collect();
    match to_json_pretty(&GeneratorSetDoc::new(
        &set,
        ctx.series,
        ctx.base_rank,
        &vars,
    )) {
        Ok(s) => string_out(s, out_json),
        Err(e) => {
            set_error(e.to_string());
            PcStatus::PcInternal
        }
    }
}

/// Run the full certificate suite for a scenario and return the report as
/// JSON. `PcOk` means every certificate passed; `PcCheckFailed` means the
/// report (still written to `out_json`) contains a non-passing certificate.
///
/// # Safety
/// `scenario` must be a NUL-terminated string and `out_json` valid;
/// release the string with [`pc_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pc_verify_run(
    series: c_char,
    rank: u32,
    scenario: *const c_char,
    seed: u64,
    samples: u32,
    bound: i64,
    out_json: *mut *mut c_char,
) -> PcStatus {
    if out_json.is_null() {
        return PcStatus::PcInvalidArgument;
    }
    if samples == 0 || bound <= 0 {
        set_error("samples and bound must be positive".into());
        return PcStatus::PcInvalidArgument;
    }
    let Some(series) = parse_series(series) else {
        set_error("series must be one of A, B, C, D".into());
        return PcStatus::PcInvalidArgument;
    };
    let scenario = match parse_scenario_ptr(scenario) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let config = RunConfig {
        seed,
        samples: samples as usize,
        bound,
    };
    let report = match run_scenario(scenario, series, rank as usize, &config) {
        Ok(r) => r,
        Err(e) => {
            set_error(e.to_string());
            return PcStatus::PcUnsupported;
        }
    };
    let all_pass = report.all_pass();
    match to_json_pretty(&report.to_doc()) {
        Ok(s) => {
            let code = string_out(s, out_json);
            if code != PcStatus::PcOk {
                return code;
            }
            if all_pass {
                PcStatus::PcOk
            } else {
                set_error("at least one certificate did not pass".into());
                PcStatus::PcCheckFailed
            }
        }
        Err(e) => {
            set_error(e.to_string());
            PcStatus::PcInternal
        }
    }
}

/// Release a string returned by this API (null is ignored).
///
/// # Safety
/// `s` must come from this API and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
