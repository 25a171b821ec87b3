//! C ABI for `weylorbit`.
//!
//! Every function returns a [`WoStatus`]; on failure the message is
//! available from [`wo_last_error`] until the next call on the same thread.
//! Complex buffers are interleaved `re, im` pairs. Points are returned as
//! integer numerators `u` of `u/M` in ω^∨-coordinates, labels as integer
//! ω-coordinates, both row-major with `rank` entries per row.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use num_complex::Complex64;
use weylorbit::grids::count_closed_form;
use weylorbit::orbitfn::FunctionType;
use weylorbit::rootdata::Rat;
use weylorbit::transforms::{DiscreteTransform, SampleSet, SpectrumCoeffs};
use weylorbit::{Error, System};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Unsupported = 3,
    TypeUnavailable = 4,
    OutsideDomain = 5,
    NoClosedForm = 6,
    BudgetExceeded = 7,
    TooLarge = 8,
    Internal = 9,
}

/// Opaque handle to an algebra with its Weyl group data.
pub struct WoSystem {
    inner: System,
}

/// Opaque handle to a discrete transform on one grid.
pub struct WoTransform {
    inner: DiscreteTransform,
    rank: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> WoStatus {
    match e {
        Error::UnsupportedAlgebra(_) => WoStatus::Unsupported,
        Error::SignHomUndefined(_) | Error::TypeUnavailable(..) => WoStatus::TypeUnavailable,
        Error::OutsideDomain | Error::PointNotReduced => WoStatus::OutsideDomain,
        Error::NoClosedForm(_) => WoStatus::NoClosedForm,
        Error::BudgetExceeded { .. } => WoStatus::BudgetExceeded,
        Error::GroupTooLarge(..) | Error::Overflow => WoStatus::TooLarge,
        Error::Io(_) | Error::Json(_) | Error::Csv(_) => WoStatus::Internal,
        _ => WoStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), WoStatus>) -> WoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WoStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            WoStatus::Internal
        }
    }
}

fn lib<T>(r: weylorbit::Result<T>) -> Result<T, WoStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn null() -> WoStatus {
    set_error("null pointer argument".into());
    WoStatus::NullPointer
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, WoStatus> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8".into());
        WoStatus::InvalidArgument
    })
}

unsafe fn ref_arg<'a, T>(p: *const T) -> Result<&'a T, WoStatus> {
    p.as_ref().ok_or_else(null)
}

unsafe fn in_buf<'a, T>(p: *const T, n: usize) -> Result<&'a [T], WoStatus> {
    if p.is_null() {
        return Err(null());
    }
    Ok(slice::from_raw_parts(p, n))
}

unsafe fn out_buf<'a, T>(p: *mut T, n: usize) -> Result<&'a mut [T], WoStatus> {
    if p.is_null() {
        return Err(null());
    }
    Ok(slice::from_raw_parts_mut(p, n))
}

fn parse_type(sys: &System, name: &str) -> Result<FunctionType, WoStatus> {
    let t: FunctionType = lib(name.parse())?;
    lib(t.check(sys.data()))?;
    Ok(t)
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn wo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds the root system named `name` (e.g. `"G2"`).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wo_system_new(name: *const c_char, out: *mut *mut WoSystem) -> WoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let sys = lib(System::from_name(str_arg(name)?))?;
        *out = Box::into_raw(Box::new(WoSystem { inner: sys }));
        Ok(())
    })
}

/// # Safety
/// `sys` must come from [`wo_system_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wo_system_free(sys: *mut WoSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// # Safety
/// `sys` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn wo_system_rank(sys: *const WoSystem, out: *mut usize) -> WoStatus {
    guard(|| {
        let sys = ref_arg(sys)?;
        *out_buf(out, 1)?.first_mut().unwrap() = sys.inner.rank();
        Ok(())
    })
}

/// Number of points of `F_M` for the named type, by enumeration.
///
/// # Safety
/// Pointers must be valid; `ftype` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn wo_count_points(sys: *const WoSystem, ftype: *const c_char, m: i64, out: *mut u64) -> WoStatus {
    guard(|| {
        let sys = &ref_arg(sys)?.inner;
        let t = parse_type(sys, str_arg(ftype)?)?;
        out_buf(out, 1)?[0] = lib(sys.count_enumerated(t, m))? as u64;
        Ok(())
    })
}

/// Number of points of `F_M` from the closed-form expressions.
///
/// # Safety
/// Pointers must be valid; `ftype` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn wo_count_closed_form(
    sys: *const WoSystem,
    ftype: *const c_char,
    m: i64,
    out: *mut u64,
) -> WoStatus {
    guard(|| {
        let sys = &ref_arg(sys)?.inner;
        let t = parse_type(sys, str_arg(ftype)?)?;
        let c = lib(count_closed_form(sys.algebra(), t, m))?;
        out_buf(out, 1)?[0] = u64::try_from(c).map_err(|_| {
            set_error("count does not fit in 64 bits".into());
            WoStatus::TooLarge
        })?;
        Ok(())
    })
}

/// `Ψ_t(y)` at the point with ω^∨-coordinates `num[i]/den[i]`.
///
/// # Safety
/// `label`, `num`, `den` must hold `rank` entries; `out` two doubles.
#[no_mangle]
pub unsafe extern "C" fn wo_eval_psi(
    sys: *const WoSystem,
    ftype: *const c_char,
    label: *const i64,
    num: *const i64,
    den: *const i64,
    out: *mut f64,
) -> WoStatus {
    guard(|| {
        let sys = &ref_arg(sys)?.inner;
        let t = parse_type(sys, str_arg(ftype)?)?;
        let n = sys.rank();
        let y = rational_point(in_buf(num, n)?, in_buf(den, n)?)?;
        let v = lib(sys.eval_psi(t, in_buf(label, n)?, &y))?;
        out_buf(out, 2)?.copy_from_slice(&[v.re, v.im]);
        Ok(())
    })
}

/// `ζ_t(y) = Re Ψ_t(y) + Im Ψ_t(y)`; arguments as for [`wo_eval_psi`].
///
/// # Safety
/// As for [`wo_eval_psi`], with `out` holding one double.
#[no_mangle]
pub unsafe extern "C" fn wo_eval_zeta(
    sys: *const WoSystem,
    ftype: *const c_char,
    label: *const i64,
    num: *const i64,
    den: *const i64,
    out: *mut f64,
) -> WoStatus {
    guard(|| {
        let sys = &ref_arg(sys)?.inner;
        let t = parse_type(sys, str_arg(ftype)?)?;
        let n = sys.rank();
        let y = rational_point(in_buf(num, n)?, in_buf(den, n)?)?;
        out_buf(out, 1)?[0] = lib(sys.eval_zeta(t, in_buf(label, n)?, &y))?;
        Ok(())
    })
}

fn rational_point(num: &[i64], den: &[i64]) -> Result<Vec<Rat>, WoStatus> {
    if den.contains(&0) {
        set_error("zero denominator".into());
        return Err(WoStatus::InvalidArgument);
    }
    Ok(num.iter().zip(den).map(|(&p, &q)| Rat::new(p, q)).collect())
}

/// Builds the transform for the named type on `F_M`.
///
/// # Safety
/// Pointers must be valid; `ftype` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_new(
    sys: *const WoSystem,
    ftype: *const c_char,
    m: i64,
    out: *mut *mut WoTransform,
) -> WoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let sys = &ref_arg(sys)?.inner;
        let t = parse_type(sys, str_arg(ftype)?)?;
        let inner = lib(DiscreteTransform::new(sys, t, m))?;
        *out = Box::into_raw(Box::new(WoTransform { inner, rank: sys.rank() }));
        Ok(())
    })
}

/// # Safety
/// `t` must come from [`wo_transform_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_free(t: *mut WoTransform) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of grid points, which equals the number of labels.
///
/// # Safety
/// `t` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_len(t: *const WoTransform, out: *mut usize) -> WoStatus {
    guard(|| {
        out_buf(out, 1)?[0] = ref_arg(t)?.inner.len();
        Ok(())
    })
}

/// Writes `len × rank` point numerators and, if `reflected` is not null,
/// `len` flags marking points of the reflected part.
///
/// # Safety
/// `u` must hold `len * rank` entries and `reflected` (if given) `len`.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_points(t: *const WoTransform, u: *mut i64, reflected: *mut u8) -> WoStatus {
    guard(|| {
        let t = ref_arg(t)?;
        let pts = &t.inner.points.points;
        let out = out_buf(u, pts.len() * t.rank)?;
        for (row, p) in out.chunks_mut(t.rank).zip(pts) {
            row.copy_from_slice(&p.u);
        }
        if !reflected.is_null() {
            let flags = out_buf(reflected, pts.len())?;
            for (f, p) in flags.iter_mut().zip(pts) {
                *f = p.reflected as u8;
            }
        }
        Ok(())
    })
}

/// Writes `len × rank` label coordinates.
///
/// # Safety
/// `labels` must hold `len * rank` entries.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_labels(t: *const WoTransform, labels: *mut i64) -> WoStatus {
    guard(|| {
        let t = ref_arg(t)?;
        let ls = &t.inner.labels.labels;
        let out = out_buf(labels, ls.len() * t.rank)?;
        for (row, l) in out.chunks_mut(t.rank).zip(ls) {
            row.copy_from_slice(&l.t);
        }
        Ok(())
    })
}

fn complex_in(buf: &[f64]) -> Vec<Complex64> {
    buf.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect()
}

fn complex_out(v: &[Complex64], buf: &mut [f64]) {
    for (c, z) in buf.chunks_mut(2).zip(v) {
        c[0] = z.re;
        c[1] = z.im;
    }
}

/// Expansion coefficients of complex samples (`2·len` doubles each way).
///
/// # Safety
/// `samples` and `coeffs` must hold `2 * len` doubles.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_forward(t: *const WoTransform, samples: *const f64, coeffs: *mut f64) -> WoStatus {
    guard(|| {
        let t = &ref_arg(t)?.inner;
        let n = t.len();
        let f = SampleSet { key: t.key(), values: complex_in(in_buf(samples, 2 * n)?) };
        let k = lib(t.forward(&f))?;
        complex_out(&k.coeffs, out_buf(coeffs, 2 * n)?);
        Ok(())
    })
}

/// Values of the interpolant at the grid points (`2·len` doubles each way).
///
/// # Safety
/// `coeffs` and `samples` must hold `2 * len` doubles.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_inverse(t: *const WoTransform, coeffs: *const f64, samples: *mut f64) -> WoStatus {
    guard(|| {
        let t = &ref_arg(t)?.inner;
        let n = t.len();
        let k = SpectrumCoeffs { key: t.key(), coeffs: complex_in(in_buf(coeffs, 2 * n)?) };
        let v = lib(t.interpolate_grid(&k))?;
        complex_out(&v, out_buf(samples, 2 * n)?);
        Ok(())
    })
}

/// Hartley expansion coefficients of real samples.
///
/// # Safety
/// `samples` and `coeffs` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_forward_hartley(
    t: *const WoTransform,
    samples: *const f64,
    coeffs: *mut f64,
) -> WoStatus {
    guard(|| {
        let t = &ref_arg(t)?.inner;
        let n = t.len();
        let g = SampleSet { key: t.key(), values: in_buf(samples, n)?.to_vec() };
        let l = lib(t.forward_hartley(&g))?;
        out_buf(coeffs, n)?.copy_from_slice(&l.coeffs);
        Ok(())
    })
}

/// Values of the Hartley interpolant at the grid points.
///
/// # Safety
/// `coeffs` and `samples` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn wo_transform_inverse_hartley(
    t: *const WoTransform,
    coeffs: *const f64,
    samples: *mut f64,
) -> WoStatus {
    guard(|| {
        let t = &ref_arg(t)?.inner;
        let n = t.len();
        let l = SpectrumCoeffs { key: t.key(), coeffs: in_buf(coeffs, n)?.to_vec() };
        let v = lib(t.interpolate_hartley_grid(&l))?;
        out_buf(samples, n)?.copy_from_slice(&v);
        Ok(())
    })
}
