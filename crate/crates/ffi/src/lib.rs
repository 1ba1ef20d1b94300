//! C ABI for the circlelab kernels.
//!
//! Every function returns a [`ClStatus`] and writes results through out
//! pointers. On failure the message is available from
//! [`cl_last_error`] on the same thread. Tables and sweeps are opaque
//! handles released with their `_free` function.
//!
//! # Safety
//!
//! Every pointer argument must be null or valid for the access the
//! function documents: out pointers writable, handles live and obtained
//! from this library, each handle freed at most once.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use circlelab::analysis::{sweep_delta, Sampling, SweepConfig, SweepSummary};
use circlelab::arith::{
    delta_normalized, r2_enumerate, r2_residue, r2_sieve, sum_r2, LatticeRecord, R2Table, SumMethod,
};
use circlelab::series::{
    d_partial, expint_closed_form, fresnel_closed_form, s_partial, sqrt_closed_form, voronoi_partial,
    ClosedFormReport,
};
use circlelab::special::{bessel_j1, expint, fresnel, BesselPolicy};
use circlelab::Error;
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClStatus {
    Ok = 0,
    /// An argument is outside the operation's domain.
    Domain = 1,
    /// A size cap was exceeded.
    Resource = 2,
    /// A required pointer was null.
    NullPointer = 3,
    /// An evaluation failed numerically (NaN, no convergence, inconsistency).
    Numeric = 4,
    /// A Rust panic was caught at the boundary.
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClSumMethod {
    Enumerate = 0,
    Sieve = 1,
    FloorIdentity = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClSampling {
    Integers = 0,
    HalfIntegers = 1,
    /// Uses the `step` argument of [`cl_sweep_new`].
    Grid = 2,
}

/// One lattice sample. `has_normalized` is 0 at `x = 0`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ClLatticeRecord {
    pub x: f64,
    pub count: u64,
    pub pi_x: f64,
    pub delta: f64,
    pub normalized: f64,
    pub has_normalized: i32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ClClosedForm {
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
}

/// Sieved r₂ values. Opaque.
pub struct ClR2Table(R2Table);

/// A finished sweep. Opaque.
pub struct ClSweep(SweepSummary);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> ClStatus {
    match e {
        Error::Domain(_) => ClStatus::Domain,
        Error::ResourceLimit(_) => ClStatus::Resource,
        _ => ClStatus::Numeric,
    }
}

/// Runs `f`, records any error and converts panics.
fn guard(f: impl FnOnce() -> Result<(), ClStatus>) -> ClStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ClStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            ClStatus::Internal
        }
    }
}

fn lift<T>(r: circlelab::Result<T>) -> Result<T, ClStatus> {
    r.map_err(|e| {
        set_error(&e.to_string());
        status_of(&e)
    })
}

fn bad_enum(what: &str, value: u32) -> ClStatus {
    set_error(&format!("unknown {what} value {value}"));
    ClStatus::Domain
}

fn out<'a, T>(p: *mut T) -> Result<&'a mut T, ClStatus> {
    // SAFETY: the caller passes either null or a valid, writable pointer.
    unsafe { p.as_mut() }.ok_or_else(|| {
        set_error("null output pointer");
        ClStatus::NullPointer
    })
}

fn input<'a, T>(p: *const T) -> Result<&'a T, ClStatus> {
    // SAFETY: the caller passes either null or a live handle from this library.
    unsafe { p.as_ref() }.ok_or_else(|| {
        set_error("null handle");
        ClStatus::NullPointer
    })
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn cl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, NUL-terminated and static.
#[no_mangle]
pub extern "C" fn cl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// r₂(n); `n = 0` gives 1.
#[no_mangle]
pub unsafe extern "C" fn cl_r2(n: u64, result: *mut u64) -> ClStatus {
    guard(|| {
        *out(result)? = if n == 0 { r2_enumerate(0) } else { lift(r2_residue(n))? };
        Ok(())
    })
}

/// Σ_{0 ≤ n ≤ x} r₂(n).
#[no_mangle]
///
/// `method` is a [`ClSumMethod`] value.
pub unsafe extern "C" fn cl_lattice_count(x: f64, method: u32, result: *mut u64) -> ClStatus {
    guard(|| {
        let m = match method {
            m if m == ClSumMethod::Enumerate as u32 => SumMethod::Enumerate,
            m if m == ClSumMethod::Sieve as u32 => SumMethod::Sieve,
            m if m == ClSumMethod::FloorIdentity as u32 => SumMethod::FloorIdentity,
            other => return Err(bad_enum("method", other)),
        };
        *out(result)? = lift(sum_r2(x, m))?.count;
        Ok(())
    })
}

/// Δ(x) and Δ(x)/x^{1/4} for `x > 0`.
#[no_mangle]
pub unsafe extern "C" fn cl_delta(x: f64, delta: *mut f64, normalized: *mut f64) -> ClStatus {
    guard(|| {
        let n = lift(delta_normalized(x))?;
        let rec = lift(sum_r2(x, SumMethod::FloorIdentity))?;
        *out(delta)? = rec.delta;
        *out(normalized)? = n;
        Ok(())
    })
}

/// Sieves r₂ over `0..=limit`. Free with [`cl_r2_table_free`].
#[no_mangle]
pub unsafe extern "C" fn cl_r2_table_new(limit: u64, table: *mut *mut ClR2Table) -> ClStatus {
    guard(|| {
        let slot = out(table)?;
        *slot = ptr::null_mut();
        *slot = Box::into_raw(Box::new(ClR2Table(lift(r2_sieve(limit))?)));
        Ok(())
    })
}

/// Releases a table; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cl_r2_table_free(table: *mut ClR2Table) {
    if !table.is_null() {
        // SAFETY: non-null tables come from `cl_r2_table_new` and are freed once.
        drop(unsafe { Box::from_raw(table) });
    }
}

#[no_mangle]
pub unsafe extern "C" fn cl_r2_table_limit(table: *const ClR2Table, limit: *mut u64) -> ClStatus {
    guard(|| {
        *out(limit)? = input(table)?.0.limit();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cl_r2_table_get(table: *const ClR2Table, n: u64, value: *mut u32) -> ClStatus {
    guard(|| {
        let t = input(table)?;
        *out(value)? = t.0.get(n).ok_or_else(|| {
            set_error(&format!("n = {n} is past the table limit {}", t.0.limit()));
            ClStatus::Domain
        })?;
        Ok(())
    })
}

/// J₁(z) with the default evaluation policy.
#[no_mangle]
pub unsafe extern "C" fn cl_bessel_j1(z: f64, result: *mut f64) -> ClStatus {
    guard(|| {
        if !z.is_finite() {
            set_error("z must be finite");
            return Err(ClStatus::Domain);
        }
        *out(result)? = bessel_j1(z, &BesselPolicy::default());
        Ok(())
    })
}

/// Fresnel integrals `C(z)`, `S(z)`.
#[no_mangle]
pub unsafe extern "C" fn cl_fresnel(z: f64, c: *mut f64, s: *mut f64) -> ClStatus {
    guard(|| {
        let (cv, sv) = lift(fresnel(z))?;
        *out(c)? = cv;
        *out(s)? = sv;
        Ok(())
    })
}

/// `E_order(re + i·im)`.
#[no_mangle]
pub unsafe extern "C" fn cl_expint(
    order: f64,
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> ClStatus {
    guard(|| {
        let v = lift(expint(order, Complex64::new(re, im)))?;
        *out(out_re)? = v.re;
        *out(out_im)? = v.im;
        Ok(())
    })
}

/// Truncated Hardy–Voronoi series; `table` must cover `terms`.
#[no_mangle]
pub unsafe extern "C" fn cl_voronoi_partial(
    x: f64,
    terms: u64,
    table: *const ClR2Table,
    result: *mut f64,
) -> ClStatus {
    guard(|| {
        let t = input(table)?;
        *out(result)? = lift(voronoi_partial(x, terms, &t.0, &BesselPolicy::default()))?.value;
        Ok(())
    })
}

/// `Σ_{n ≤ terms} r₂(n) cos(2π√(nx) + π/4)/n^{3/4}`.
#[no_mangle]
pub unsafe extern "C" fn cl_s_partial(
    x: f64,
    terms: u64,
    table: *const ClR2Table,
    result: *mut f64,
) -> ClStatus {
    guard(|| {
        let t = input(table)?;
        *out(result)? = lift(s_partial(x, terms, &t.0))?.value;
        Ok(())
    })
}

/// `Σ_{n ≤ terms} cos(2π√(nx) + π/4)/n^{3/4−delta}`.
#[no_mangle]
pub unsafe extern "C" fn cl_d_partial(x: f64, terms: u64, delta: f64, result: *mut f64) -> ClStatus {
    guard(|| {
        *out(result)? = lift(d_partial(x, terms, delta))?.value;
        Ok(())
    })
}

fn closed(r: circlelab::Result<ClosedFormReport>, dst: *mut ClClosedForm) -> Result<(), ClStatus> {
    let r = lift(r)?;
    *out(dst)? = ClClosedForm { lhs: r.lhs_partial, rhs: r.rhs_closed, residual: r.residual };
    Ok(())
}

#[no_mangle]
pub unsafe extern "C" fn cl_fresnel_closed_form(a: f64, m: u64, result: *mut ClClosedForm) -> ClStatus {
    guard(|| closed(fresnel_closed_form(a, m), result))
}

#[no_mangle]
pub unsafe extern "C" fn cl_expint_closed_form(
    eps: f64,
    x: f64,
    y: f64,
    result: *mut ClClosedForm,
) -> ClStatus {
    guard(|| closed(expint_closed_form(eps, x, y), result))
}

#[no_mangle]
pub unsafe extern "C" fn cl_sqrt_closed_form(x: f64, m: u64, result: *mut ClClosedForm) -> ClStatus {
    guard(|| closed(sqrt_closed_form(x, m), result))
}

/// Runs a sweep; `sampling` is a [`ClSampling`] value and `step` is read
/// only for grid sampling. Free with [`cl_sweep_free`].
#[no_mangle]
pub unsafe extern "C" fn cl_sweep_new(
    x_start: f64,
    x_end: f64,
    sampling: u32,
    step: f64,
    workers: u32,
    sweep: *mut *mut ClSweep,
) -> ClStatus {
    guard(|| {
        let slot = out(sweep)?;
        *slot = ptr::null_mut();
        let sampling = match sampling {
            s if s == ClSampling::Integers as u32 => Sampling::Integers,
            s if s == ClSampling::HalfIntegers as u32 => Sampling::HalfIntegers,
            s if s == ClSampling::Grid as u32 => Sampling::Grid(step),
            other => return Err(bad_enum("sampling", other)),
        };
        let config = SweepConfig { x_start, x_end, sampling, workers: workers as usize };
        *slot = Box::into_raw(Box::new(ClSweep(lift(sweep_delta(&config))?)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cl_sweep_free(sweep: *mut ClSweep) {
    if !sweep.is_null() {
        // SAFETY: non-null sweeps come from `cl_sweep_new` and are freed once.
        drop(unsafe { Box::from_raw(sweep) });
    }
}

#[no_mangle]
pub unsafe extern "C" fn cl_sweep_len(sweep: *const ClSweep, len: *mut u64) -> ClStatus {
    guard(|| {
        *out(len)? = input(sweep)?.0.records.len() as u64;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cl_sweep_record(
    sweep: *const ClSweep,
    index: u64,
    record: *mut ClLatticeRecord,
) -> ClStatus {
    guard(|| {
        let s = input(sweep)?;
        let r: &LatticeRecord =
            usize::try_from(index).ok().and_then(|i| s.0.records.get(i)).ok_or_else(|| {
                set_error(&format!("index {index} out of range"));
                ClStatus::Domain
            })?;
        *out(record)? = ClLatticeRecord {
            x: r.x,
            count: r.count,
            pi_x: r.pi_x,
            delta: r.delta,
            normalized: r.normalized.unwrap_or(0.0),
            has_normalized: r.normalized.is_some() as i32,
        };
        Ok(())
    })
}

/// Maximum of |Δ(x)|/x^{1/4} over the sweep and where it occurs.
#[no_mangle]
pub unsafe extern "C" fn cl_sweep_max(sweep: *const ClSweep, value: *mut f64, x: *mut f64) -> ClStatus {
    guard(|| {
        let s = input(sweep)?;
        *out(value)? = s.0.max_abs_normalized;
        *out(x)? = s.0.argmax_x;
        Ok(())
    })
}
