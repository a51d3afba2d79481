//! C ABI over `ck_core`.
//!
//! Every function returns a [`CkStatus`]; on failure the message is
//! available from [`ck_last_error`] on the same thread. Handles are opaque
//! and must be released with their `_free` function. Strings returned
//! through `char **` outputs are owned by the caller and released with
//! [`ck_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use ck_core::expand::{run_atlas, run_expansion, ExpandOptions, ExpansionProblem, Verdict};
use ck_core::liealg::{
    algebra_from_json, algebra_to_json, builtin_algebra, catalog_lookup, check_structure,
    contract, ContractionKind, Family, LieAlgebra, ParamMode,
};
use ck_core::uea::{casimir, is_central};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    NotFound = 3,
    InvalidArgument = 4,
    EngineError = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkVerdict {
    Pass = 0,
    Fail = 1,
    ExpectedFail = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CkContraction {
    SpaceTime = 0,
    SpeedSpace = 1,
}

/// An algebra with its bracket table.
pub struct CkAlgebra {
    inner: LieAlgebra,
}

/// A finished expansion or atlas run.
pub struct CkReport {
    verdict: CkVerdict,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(CkStatus, String);

impl<E: std::fmt::Display> From<(CkStatus, E)> for Failure {
    fn from((s, e): (CkStatus, E)) -> Self {
        Failure(s, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CkStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(CkStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn out_ptr<T>(p: *mut T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(Failure(CkStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn algebra<'a>(p: *const CkAlgebra) -> Result<&'a LieAlgebra, Failure> {
    if p.is_null() {
        return Err(Failure(CkStatus::NullPointer, "algebra is null".into()));
    }
    Ok(&(*p).inner)
}

fn mode(symbolic: bool) -> ParamMode {
    if symbolic {
        ParamMode::Symbolic
    } else {
        ParamMode::Representative
    }
}

fn verdict(v: Verdict) -> CkVerdict {
    match v {
        Verdict::Pass => CkVerdict::Pass,
        Verdict::Fail => CkVerdict::Fail,
        Verdict::ExpectedFail => CkVerdict::ExpectedFail,
    }
}

fn key_of(name: &str) -> Result<String, Failure> {
    if name == "ext-galilei" {
        return Ok(name.into());
    }
    catalog_lookup(name)
        .map(|e| e.key)
        .map_err(|e| Failure(CkStatus::NotFound, e.to_string()))
}

fn json_string(s: String) -> Result<CString, Failure> {
    CString::new(s).map_err(|e| Failure(CkStatus::EngineError, e.to_string()))
}

/// Last error message on this thread, or null. Valid until the next call
/// into this library from the same thread.
#[no_mangle]
pub extern "C" fn ck_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Built-in algebra by key, sign pair or unique name.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_builtin(
    name: *const c_char,
    symbolic: bool,
    out: *mut *mut CkAlgebra,
) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let key = key_of(text(name, "name")?)?;
        let inner = builtin_algebra(&key, mode(symbolic)).map_err(|e| (CkStatus::NotFound, e))?;
        *out = Box::into_raw(Box::new(CkAlgebra { inner }));
        Ok(())
    })
}

/// Algebra from a JSON definition.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_from_json(
    json: *const c_char,
    out: *mut *mut CkAlgebra,
) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let inner =
            algebra_from_json(text(json, "json")?).map_err(|e| (CkStatus::InvalidArgument, e))?;
        *out = Box::into_raw(Box::new(CkAlgebra { inner }));
        Ok(())
    })
}

/// # Safety
/// `alg` must come from this library and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_free(alg: *mut CkAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_dim(alg: *const CkAlgebra, out: *mut usize) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = algebra(alg)?.dim();
        Ok(())
    })
}

/// JSON definition of the algebra, to be released with `ck_string_free`.
///
/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_to_json(
    alg: *const CkAlgebra,
    out: *mut *mut c_char,
) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let s = json_string(algebra_to_json(algebra(alg)?))?;
        *out = s.into_raw();
        Ok(())
    })
}

/// Antisymmetry, Jacobi identities and, for family members, Casimir
/// centrality.
///
/// # Safety
/// `alg` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_verify(alg: *const CkAlgebra, passed: *mut bool) -> CkStatus {
    guard(|| {
        out_ptr(passed, "passed")?;
        let g = algebra(alg)?;
        let mut ok = check_structure(g).passed;
        if matches!(g.family(), Family::CayleyKlein { .. }) {
            let g = Arc::new(g.clone());
            for index in [1u8, 2] {
                let c = casimir(&g, index).map_err(|e| (CkStatus::EngineError, e))?;
                ok &= is_central(&c).central;
            }
        }
        *passed = ok;
        Ok(())
    })
}

/// # Safety
/// `alg` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_contract(
    alg: *const CkAlgebra,
    kind: CkContraction,
    out: *mut *mut CkAlgebra,
) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let kind = match kind {
            CkContraction::SpaceTime => ContractionKind::SpaceTime,
            CkContraction::SpeedSpace => ContractionKind::SpeedSpace,
        };
        let inner = contract(algebra(alg)?, kind).map_err(|e| (CkStatus::EngineError, e))?;
        *out = Box::into_raw(Box::new(CkAlgebra { inner }));
        Ok(())
    })
}

/// Structural equality of two bracket tables.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_algebra_same_structure(
    a: *const CkAlgebra,
    b: *const CkAlgebra,
    out: *mut bool,
) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        *out = algebra(a)?.same_structure(algebra(b)?);
        Ok(())
    })
}

/// Expansion between two built-in algebras along `axis` (1 or 2).
///
/// # Safety
/// `from` and `to` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_expand(
    from: *const c_char,
    to: *const c_char,
    axis: u8,
    symbolic: bool,
    out: *mut *mut CkReport,
) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        if axis != 1 && axis != 2 {
            return Err(Failure(CkStatus::InvalidArgument, format!("axis {axis} is not 1 or 2")));
        }
        let from = key_of(text(from, "from")?)?;
        let to = key_of(text(to, "to")?)?;
        let p = ExpansionProblem::from_keys(&from, &to, axis, mode(symbolic))
            .map_err(|e| (CkStatus::InvalidArgument, e))?;
        let r = run_expansion(&p, &ExpandOptions::default())
            .map_err(|e| (CkStatus::EngineError, e))?;
        let json = json_string(serde_json::to_string_pretty(&r).expect("plain data"))?;
        *out = Box::into_raw(Box::new(CkReport {
            verdict: verdict(r.verdict),
            json,
        }));
        Ok(())
    })
}

/// Every built-in expansion. The verdict is `CK_VERDICT_PASS` when no
/// entry failed (the expected failure included).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_atlas(symbolic: bool, out: *mut *mut CkReport) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let entries = run_atlas(mode(symbolic), &ExpandOptions::default());
        let ok = entries.iter().all(|e| e.verdict.is_ok());
        let json = json_string(serde_json::to_string_pretty(&entries).expect("plain data"))?;
        *out = Box::into_raw(Box::new(CkReport {
            verdict: if ok { CkVerdict::Pass } else { CkVerdict::Fail },
            json,
        }));
        Ok(())
    })
}

/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ck_report_verdict(report: *const CkReport, out: *mut CkVerdict) -> CkStatus {
    guard(|| {
        out_ptr(out, "out")?;
        if report.is_null() {
            return Err(Failure(CkStatus::NullPointer, "report is null".into()));
        }
        *out = (*report).verdict;
        Ok(())
    })
}

/// The report as JSON, borrowed: valid while the report lives.
///
/// # Safety
/// `report` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ck_report_json(report: *const CkReport) -> *const c_char {
    if report.is_null() {
        set_error("report is null");
        return ptr::null();
    }
    (*report).json.as_ptr()
}

/// # Safety
/// `report` must come from this library and not be freed twice; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ck_report_free(report: *mut CkReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must come from a `char **` output of this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ck_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
