//! C ABI over `isoblock`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and released
//! with the matching `*_free`. Every fallible call returns an [`IsoblockStatus`];
//! the message of the last failure on the calling thread is available from
//! [`isoblock_last_error`]. Strings returned by the library are freed with
//! [`isoblock_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use isoblock::blocks::{self, CharacterLabel, ModularContext};
use isoblock::partitions::{e_core_and_quotient, Partition};
use isoblock::symbols::{self, Symbol};
use isoblock::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoblockStatus {
    Ok = 0,
    InvalidInput = 1,
    Unsupported = 2,
    BoundExceeded = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

/// A modular context `(q, ℓ)`.
pub struct IsoblockContext(ModularContext);

/// A symbol in normal form.
pub struct IsoblockSymbol(Symbol);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: IsoblockStatus, msg: impl Into<String>) -> IsoblockStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> IsoblockStatus {
    let status = match e {
        Error::InvalidInput(_) => IsoblockStatus::InvalidInput,
        Error::Unsupported(_) => IsoblockStatus::Unsupported,
        Error::BoundExceeded(_) => IsoblockStatus::BoundExceeded,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), IsoblockStatus>) -> IsoblockStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IsoblockStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(IsoblockStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, IsoblockStatus> {
    if s.is_null() {
        return Err(fail(IsoblockStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(IsoblockStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), IsoblockStatus> {
    if out.is_null() {
        return Err(fail(IsoblockStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, IsoblockStatus> {
    p.as_ref().ok_or_else(|| fail(IsoblockStatus::NullPointer, "null handle"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

fn json_out(out: *mut *mut c_char, value: &impl serde::Serialize) -> Result<(), IsoblockStatus> {
    let s = serde_json::to_string(value).map_err(|e| fail(IsoblockStatus::Panic, e.to_string()))?;
    unsafe { write_out(out, to_c_string(s)) }
}

unsafe fn character(plus: *const IsoblockSymbol, minus: *const IsoblockSymbol) -> Result<CharacterLabel, IsoblockStatus> {
    let (a, b) = (handle(plus)?, handle(minus)?);
    CharacterLabel::new(a.0.clone(), b.0.clone()).map_err(from_error)
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn isoblock_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library that was not freed before.
#[no_mangle]
pub unsafe extern "C" fn isoblock_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates the context for `q` an odd prime power and `ℓ` an odd prime not dividing `q`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn isoblock_context_new(q: u64, ell: u64, out: *mut *mut IsoblockContext) -> IsoblockStatus {
    guard(|| {
        let ctx = blocks::make_context(q, ell).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(IsoblockContext(ctx))))
    })
}

/// Order `d` of `q²` mod `ℓ`, and whether `ℓ` is a linear prime.
///
/// # Safety
/// `ctx` must be a live context handle; `d` and `linear` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_context_info(ctx: *const IsoblockContext, d: *mut u32, linear: *mut bool) -> IsoblockStatus {
    guard(|| {
        let c = handle(ctx)?;
        write_out(d, c.0.d)?;
        write_out(linear, c.0.linear)
    })
}

/// # Safety
/// `ctx` must be null or a handle from [`isoblock_context_new`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn isoblock_context_free(ctx: *mut IsoblockContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Parses a symbol written `"[s1:λ | s2:μ]"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_symbol_parse(text: *const c_char, out: *mut *mut IsoblockSymbol) -> IsoblockStatus {
    guard(|| {
        let s: Symbol = read_str(text)?.parse().map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(IsoblockSymbol(s))))
    })
}

/// The symbol `Θ_t(μ1, μ2)`; partitions are written `"3,1"`, the empty string for ∅.
///
/// # Safety
/// `mu1` and `mu2` must be NUL-terminated strings; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_symbol_from_bipartition(
    t: i64,
    mu1: *const c_char,
    mu2: *const c_char,
    out: *mut *mut IsoblockSymbol,
) -> IsoblockStatus {
    guard(|| {
        let a: Partition = read_str(mu1)?.parse().map_err(from_error)?;
        let b: Partition = read_str(mu2)?.parse().map_err(from_error)?;
        let s = symbols::symbol_from_bipartition(t, (&a, &b));
        write_out(out, Box::into_raw(Box::new(IsoblockSymbol(s))))
    })
}

/// # Safety
/// `sym` must be null or a symbol handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn isoblock_symbol_free(sym: *mut IsoblockSymbol) {
    if !sym.is_null() {
        drop(Box::from_raw(sym));
    }
}

/// Defect and rank of a symbol.
///
/// # Safety
/// `sym` must be a live symbol handle; `defect` and `rank` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_symbol_invariants(sym: *const IsoblockSymbol, defect: *mut i64, rank: *mut u64) -> IsoblockStatus {
    guard(|| {
        let s = handle(sym)?;
        write_out(defect, s.0.defect())?;
        write_out(rank, s.0.rank() as u64)
    })
}

/// Display form of a symbol; free the result with [`isoblock_string_free`].
///
/// # Safety
/// `sym` must be a live symbol handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_symbol_to_string(sym: *const IsoblockSymbol, out: *mut *mut c_char) -> IsoblockStatus {
    guard(|| {
        let s = handle(sym)?;
        write_out(out, to_c_string(s.0.to_string()))
    })
}

/// The d-core (`cocore = false`) or d-cocore of a symbol, as a new handle.
///
/// # Safety
/// `sym` must be a live symbol handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_symbol_core(sym: *const IsoblockSymbol, d: u32, cocore: bool, out: *mut *mut IsoblockSymbol) -> IsoblockStatus {
    guard(|| {
        let s = handle(sym)?;
        if d == 0 {
            return Err(fail(IsoblockStatus::InvalidInput, "d must be positive"));
        }
        let c = if cocore { symbols::d_cocore(&s.0, d) } else { symbols::d_core(&s.0, d) };
        write_out(out, Box::into_raw(Box::new(IsoblockSymbol(c))))
    })
}

/// e-core and e-quotient of a partition as JSON `{"core": [...], "quotient": {...}}`.
///
/// # Safety
/// `partition` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_partition_core_json(
    partition: *const c_char,
    e: u32,
    charge: i64,
    out: *mut *mut c_char,
) -> IsoblockStatus {
    guard(|| {
        let p: Partition = read_str(partition)?.parse().map_err(from_error)?;
        let (core, quotient) = e_core_and_quotient(&p, charge, e).map_err(from_error)?;
        json_out(out, &serde_json::json!({ "core": core, "quotient": quotient }))
    })
}

/// Block label of the character `E_{Θ+, Θ-}` as JSON.
///
/// # Safety
/// `ctx`, `plus` and `minus` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_block_of_json(
    ctx: *const IsoblockContext,
    plus: *const IsoblockSymbol,
    minus: *const IsoblockSymbol,
    out: *mut *mut c_char,
) -> IsoblockStatus {
    guard(|| {
        let c = handle(ctx)?;
        let chi = character(plus, minus)?;
        let b = blocks::block_of(&chi, &c.0);
        json_out(out, &serde_json::json!({ "block": b, "defect": blocks::defect_info(&b, &c.0) }))
    })
}

/// Brauer tree of the cyclic block containing `E_{Θ+, Θ-}` as JSON with `nodes`
/// and `edges` arrays.
///
/// # Safety
/// `ctx`, `plus` and `minus` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_brauer_tree_json(
    ctx: *const IsoblockContext,
    plus: *const IsoblockSymbol,
    minus: *const IsoblockSymbol,
    out: *mut *mut c_char,
) -> IsoblockStatus {
    guard(|| {
        let c = handle(ctx)?;
        let chi = character(plus, minus)?;
        let tree = blocks::brauer_tree(&chi, &c.0).map_err(from_error)?;
        json_out(out, &tree)
    })
}

/// Whether the block of `E_{Θ+, Θ-}` is RoCK.
///
/// # Safety
/// `ctx`, `plus` and `minus` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_is_rock(
    ctx: *const IsoblockContext,
    plus: *const IsoblockSymbol,
    minus: *const IsoblockSymbol,
    out: *mut bool,
) -> IsoblockStatus {
    guard(|| {
        let c = handle(ctx)?;
        let chi = character(plus, minus)?;
        let r = blocks::is_rock(&blocks::block_of(&chi, &c.0), &c.0).map_err(from_error)?;
        write_out(out, r)
    })
}

/// Number of isolated blocks of `SO_{2n+1}(q)` at the context.
///
/// # Safety
/// `ctx` must be a live context handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn isoblock_block_count(ctx: *const IsoblockContext, n: u32, out: *mut u64) -> IsoblockStatus {
    guard(|| {
        let c = handle(ctx)?;
        write_out(out, blocks::enumerate_blocks(n as usize, &c.0).len() as u64)
    })
}
