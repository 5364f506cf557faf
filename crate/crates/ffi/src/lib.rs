//! C ABI over `hahn-core`.
//!
//! Objects are opaque heap handles created by `*_new`/`*_project` and
//! released by the matching `*_free`. Every fallible call returns a
//! [`HahnStatus`]; on failure a message is kept per thread and can be read
//! with [`hahn_last_error_message`]. Outputs are written only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hahn_core::calculus::GridFunction;
use hahn_core::expansion::CoefficientVector;
use hahn_core::hahn::{self, HahnBasis};
use hahn_core::{HahnError, HahnParams};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HahnStatus {
    Ok = 0,
    NullPointer = 1,
    /// Parameters or arguments outside their domain.
    Domain = 2,
    DegreeOutOfRange = 3,
    LengthMismatch = 4,
    /// Any other numerical failure.
    Numeric = 5,
    Panic = 6,
}

/// Hahn family for fixed `alpha`, `beta`, `N`, with weights, norms and the
/// normalized polynomials on the grid precomputed.
pub struct HahnFamily {
    basis: HahnBasis,
}

/// Truncated expansion `sum c_n Q~_n` produced by `hahn_family_project`.
pub struct HahnExpansion {
    coeffs: CoefficientVector,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &HahnError) -> HahnStatus {
    match err {
        HahnError::Domain(_) | HahnError::DegenerateInterval { .. } | HahnError::NonTerminating(_) => {
            HahnStatus::Domain
        }
        HahnError::DegreeOutOfRange { .. } => HahnStatus::DegreeOutOfRange,
        HahnError::LengthMismatch { .. } | HahnError::TooShort { .. } => HahnStatus::LengthMismatch,
        _ => HahnStatus::Numeric,
    }
}

fn guard(f: impl FnOnce() -> Result<(), HahnStatus>) -> HahnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HahnStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            HahnStatus::Panic
        }
    }
}

fn check<T>(r: hahn_core::Result<T>) -> Result<T, HahnStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), HahnStatus> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        Err(HahnStatus::NullPointer)
    } else {
        Ok(())
    }
}

fn length(found: usize, expected: usize) -> Result<(), HahnStatus> {
    if found == expected {
        Ok(())
    } else {
        set_error(format!("buffer length {found}, expected {expected}"));
        Err(HahnStatus::LengthMismatch)
    }
}

/// Create a family. Requires `alpha, beta > -1` and `n_max >= 1`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn hahn_family_new(alpha: f64, beta: f64, n_max: usize, out: *mut *mut HahnFamily) -> HahnStatus {
    guard(|| {
        non_null(out, "out")?;
        let params = check(HahnParams::new(alpha, beta, n_max))?;
        let basis = check(HahnBasis::new(params))?;
        *out = Box::into_raw(Box::new(HahnFamily { basis }));
        Ok(())
    })
}

/// # Safety
/// `family` must be null or a handle from `hahn_family_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hahn_family_free(family: *mut HahnFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// Number of grid points, `N + 1`; 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hahn_family_grid_len(family: *const HahnFamily) -> usize {
    family.as_ref().map_or(0, |f| f.basis.params().grid_len())
}

/// `Q_n(x)`, or the unit-norm `Q~_n(x)` when `normalized` is true, at any
/// real `x`.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hahn_family_eval(
    family: *const HahnFamily,
    degree: usize,
    x: f64,
    normalized: bool,
    out: *mut f64,
) -> HahnStatus {
    guard(|| {
        non_null(family, "family")?;
        non_null(out, "out")?;
        let p = (*family).basis.params();
        let v = if normalized {
            check(hahn::eval_normalized(degree, x, p))?
        } else {
            check(hahn::eval_recurrence(degree, x, p))?
        };
        *out = v;
        Ok(())
    })
}

/// Copy `omega(0..=N)` into `out`, which must hold exactly `N + 1` values.
///
/// # Safety
/// `family` must be a live handle and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn hahn_family_weights(family: *const HahnFamily, out: *mut f64, len: usize) -> HahnStatus {
    guard(|| {
        non_null(family, "family")?;
        non_null(out, "out")?;
        let w = (*family).basis.weights().values();
        length(len, w.len())?;
        ptr::copy_nonoverlapping(w.as_ptr(), out, w.len());
        Ok(())
    })
}

/// Squared norm of the unnormalized `Q_n`.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hahn_family_norm_sq(family: *const HahnFamily, degree: usize, out: *mut f64) -> HahnStatus {
    guard(|| {
        non_null(family, "family")?;
        non_null(out, "out")?;
        *out = check(hahn::norm_sq(degree, (*family).basis.params()))?;
        Ok(())
    })
}

/// Project grid data `values[0..=N]` onto degrees `0..=m`.
///
/// # Safety
/// `family` must be a live handle, `values` valid for `len` reads and `out`
/// writable. The returned handle is released with `hahn_expansion_free`.
#[no_mangle]
pub unsafe extern "C" fn hahn_family_project(
    family: *const HahnFamily,
    values: *const f64,
    len: usize,
    m: usize,
    out: *mut *mut HahnExpansion,
) -> HahnStatus {
    guard(|| {
        non_null(family, "family")?;
        non_null(values, "values")?;
        non_null(out, "out")?;
        let basis = &(*family).basis;
        length(len, basis.params().grid_len())?;
        let data = std::slice::from_raw_parts(values, len).to_vec();
        let u = check(GridFunction::new(*basis.params(), data))?;
        let coeffs = check(basis.project(&u, m))?;
        *out = Box::into_raw(Box::new(HahnExpansion { coeffs }));
        Ok(())
    })
}

/// # Safety
/// `expansion` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hahn_expansion_free(expansion: *mut HahnExpansion) {
    if !expansion.is_null() {
        drop(Box::from_raw(expansion));
    }
}

/// Truncation degree `m`; the expansion has `m + 1` coefficients.
///
/// # Safety
/// `expansion` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hahn_expansion_degree(expansion: *const HahnExpansion) -> usize {
    expansion.as_ref().map_or(0, |e| e.coeffs.degree())
}

/// Copy the coefficients against the unit-norm basis, or against `Q_n`
/// when `normalized` is false. `out` must hold exactly `m + 1` values.
///
/// # Safety
/// `expansion` must be a live handle and `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn hahn_expansion_coeffs(
    expansion: *const HahnExpansion,
    normalized: bool,
    out: *mut f64,
    len: usize,
) -> HahnStatus {
    guard(|| {
        non_null(expansion, "expansion")?;
        non_null(out, "out")?;
        let c = &(*expansion).coeffs;
        let v = if normalized { c.coeffs().to_vec() } else { check(c.unnormalized())? };
        length(len, v.len())?;
        ptr::copy_nonoverlapping(v.as_ptr(), out, v.len());
        Ok(())
    })
}

/// Evaluate the expansion at a real grid coordinate `x`.
///
/// # Safety
/// `expansion` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hahn_expansion_eval(expansion: *const HahnExpansion, x: f64, out: *mut f64) -> HahnStatus {
    guard(|| {
        non_null(expansion, "expansion")?;
        non_null(out, "out")?;
        *out = check((*expansion).coeffs.eval(x))?;
        Ok(())
    })
}

/// Copy the calling thread's last error message into `buf` (NUL
/// terminated, truncated to fit). Returns the full message length without
/// the terminator, or 0 when there is none. Pass a null `buf` to query the
/// length.
///
/// # Safety
/// `buf` must be null or valid for `cap` writes.
#[no_mangle]
pub unsafe extern "C" fn hahn_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}
