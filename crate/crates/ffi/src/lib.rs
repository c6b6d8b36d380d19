//! C interface: opaque code and decoder handles, status codes and a
//! thread-local last-error message.
//!
//! Every function returns a [`CbStatus`]; outputs go through pointer
//! arguments. Strings returned by the library must be released with
//! [`cb_string_free`], handles with their `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use cyclic_bound::cli::{build_report, BoundRequest};
use cyclic_bound::cyclic::{self, CyclicCode, CyclicError};
use cyclic_bound::decoder::{DecodeError, DecoderContext};
use cyclic_bound::nzl::{self, NzlError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Parameters do not describe a cyclic code (q not a prime power,
    /// gcd(n, q) > 1, duplicate coset, ...).
    InvalidCode = 3,
    /// A search or field exceeded its size limit.
    LimitExceeded = 4,
    LengthMismatch = 5,
    /// More errors than the decoder can handle were detected.
    DecodeFailure = 6,
    BufferTooSmall = 7,
    Internal = 99,
}

/// Opaque cyclic code handle.
pub struct CbCode {
    code: CyclicCode,
}

/// Opaque decoder handle.
pub struct CbDecoder {
    ctx: DecoderContext,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CbBounds {
    pub bch: u64,
    /// 0 when the length is beyond the search limit.
    pub ht: u64,
    pub d_star: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CbStatus, msg: impl Into<String>) -> CbStatus {
    set_error(msg);
    status
}

fn cyclic_status(e: &CyclicError) -> CbStatus {
    match e {
        CyclicError::SearchCapExceeded(_) | CyclicError::TooManyCodewords { .. } => {
            CbStatus::LimitExceeded
        }
        _ => CbStatus::InvalidCode,
    }
}

fn nzl_status(e: &NzlError) -> CbStatus {
    match e {
        NzlError::SearchCapExceeded(_) => CbStatus::LimitExceeded,
        NzlError::Cyclic(c) => cyclic_status(c),
        _ => CbStatus::InvalidArgument,
    }
}

fn decode_status(e: &DecodeError) -> CbStatus {
    match e {
        DecodeError::FieldTooLarge { .. } => CbStatus::LimitExceeded,
        DecodeError::LengthMismatch { .. } => CbStatus::LengthMismatch,
        DecodeError::InvalidDigit(_) => CbStatus::InvalidArgument,
        DecodeError::Nzl(n) => nzl_status(n),
        _ => CbStatus::Internal,
    }
}

/// Runs `f`, turning panics into `CbStatus::Internal`.
fn guard(f: impl FnOnce() -> CbStatus) -> CbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == CbStatus::Ok {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            s
        }
        Err(_) => fail(CbStatus::Internal, "panic inside the library"),
    }
}

/// # Safety
/// `ptr` must be null or valid for reads of `len` values.
unsafe fn input<'a, T>(ptr: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(slice::from_raw_parts(ptr, len))
    }
}

/// Builds the code over GF(q) of length `n` whose defining set is the union
/// of the cyclotomic cosets of `reps[0..reps_len]`.
///
/// # Safety
/// `reps` must be valid for `reps_len` reads; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_code_new(
    q: u64,
    n: u64,
    reps: *const u64,
    reps_len: usize,
    out: *mut *mut CbCode,
) -> CbStatus {
    guard(|| {
        if out.is_null() {
            return fail(CbStatus::NullPointer, "out is null");
        }
        let Some(reps) = input(reps, reps_len) else {
            return fail(CbStatus::NullPointer, "reps is null");
        };
        match CyclicCode::build(q, n, reps) {
            Ok(code) => {
                *out = Box::into_raw(Box::new(CbCode { code }));
                CbStatus::Ok
            }
            Err(e) => fail(cyclic_status(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `code` must be null or a handle from [`cb_code_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_code_free(code: *mut CbCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length and dimension.
///
/// # Safety
/// `code` must be a live handle; `n` and `k` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_code_params(code: *const CbCode, n: *mut u64, k: *mut u64) -> CbStatus {
    guard(|| {
        let (Some(code), false, false) = (code.as_ref(), n.is_null(), k.is_null()) else {
            return fail(CbStatus::NullPointer, "null argument");
        };
        *n = code.code.n();
        *k = code.code.k();
        CbStatus::Ok
    })
}

/// BCH, Hartmann-Tzeng and the best non-zero-locator bound with default limits.
///
/// # Safety
/// `code` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_code_bounds(code: *const CbCode, out: *mut CbBounds) -> CbStatus {
    guard(|| {
        let (Some(code), Some(out)) = (code.as_ref(), out.as_mut()) else {
            return fail(CbStatus::NullPointer, "null argument");
        };
        match nzl::best_bound(&code.code, Default::default()) {
            Ok(b) => {
                *out = CbBounds {
                    bch: b.bch.value,
                    ht: b.ht.map_or(0, |h| h.value),
                    d_star: b.d_star,
                };
                CbStatus::Ok
            }
            Err(e) => fail(nzl_status(&e), e.to_string()),
        }
    })
}

/// Full bound report as JSON (exhaustive search included when at most
/// `cap` codewords); free with [`cb_string_free`].
///
/// # Safety
/// `code` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_code_report_json(
    code: *const CbCode,
    cap: u64,
    out: *mut *mut c_char,
) -> CbStatus {
    guard(|| {
        let Some(code) = code.as_ref() else {
            return fail(CbStatus::NullPointer, "code is null");
        };
        if out.is_null() {
            return fail(CbStatus::NullPointer, "out is null");
        }
        let req = BoundRequest {
            cap: cap as u128,
            ..Default::default()
        };
        match build_report(&code.code, None, &req) {
            Ok(r) => {
                let json = serde_json::to_string(&r).expect("serializable");
                *out = CString::new(json).expect("JSON has no NUL").into_raw();
                CbStatus::Ok
            }
            Err(e) => fail(CbStatus::Internal, e.to_string()),
        }
    })
}

/// Decoder built from the best non-zero-locator certificate for `code`.
///
/// # Safety
/// `code` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_decoder_new(code: *const CbCode, out: *mut *mut CbDecoder) -> CbStatus {
    guard(|| {
        let Some(code) = code.as_ref() else {
            return fail(CbStatus::NullPointer, "code is null");
        };
        if out.is_null() {
            return fail(CbStatus::NullPointer, "out is null");
        }
        let best = match nzl::best_bound(&code.code, Default::default()) {
            Ok(b) => b,
            Err(e) => return fail(nzl_status(&e), e.to_string()),
        };
        match DecoderContext::build(&code.code, &best.certificate) {
            Ok(ctx) => {
                *out = Box::into_raw(Box::new(CbDecoder { ctx }));
                CbStatus::Ok
            }
            Err(e) => fail(decode_status(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `dec` must be null or a handle from [`cb_decoder_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_decoder_free(dec: *mut CbDecoder) {
    if !dec.is_null() {
        drop(Box::from_raw(dec));
    }
}

/// Guaranteed number of correctable errors `⌊(d* - 1)/2⌋`.
///
/// # Safety
/// `dec` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_decoder_radius(dec: *const CbDecoder, out: *mut u64) -> CbStatus {
    guard(|| {
        let (Some(dec), Some(out)) = (dec.as_ref(), out.as_mut()) else {
            return fail(CbStatus::NullPointer, "null argument");
        };
        *out = dec.ctx.radius();
        CbStatus::Ok
    })
}

/// Encodes `k` message digits into `n` codeword digits.
///
/// # Safety
/// `msg` valid for `msg_len` reads, `out` for `out_len` writes.
#[no_mangle]
pub unsafe extern "C" fn cb_decoder_encode(
    dec: *const CbDecoder,
    msg: *const u32,
    msg_len: usize,
    out: *mut u32,
    out_len: usize,
) -> CbStatus {
    guard(|| {
        let (Some(dec), Some(msg)) = (dec.as_ref(), input(msg, msg_len)) else {
            return fail(CbStatus::NullPointer, "null argument");
        };
        let n = dec.ctx.code().n() as usize;
        if out.is_null() {
            return fail(CbStatus::NullPointer, "out is null");
        }
        if out_len < n {
            return fail(CbStatus::BufferTooSmall, format!("need {n} output symbols"));
        }
        if msg.iter().any(|&d| d as u64 >= dec.ctx.code().q()) {
            return fail(CbStatus::InvalidArgument, "message symbol out of range");
        }
        match dec.ctx.encode(msg) {
            Ok(word) => {
                ptr::copy_nonoverlapping(word.as_ptr(), out, n);
                CbStatus::Ok
            }
            Err(e) => fail(decode_status(&e), e.to_string()),
        }
    })
}

/// Decodes `received` (n digits) into `corrected` (n digits) and reports the
/// number of corrected symbols. Returns `CB_STATUS_DECODE_FAILURE` when the
/// word could not be decoded; `corrected` is then left untouched.
///
/// # Safety
/// `received` valid for `len` reads, `corrected` for `len` writes,
/// `num_errors` writable or null.
#[no_mangle]
pub unsafe extern "C" fn cb_decoder_decode(
    dec: *const CbDecoder,
    received: *const u32,
    len: usize,
    corrected: *mut u32,
    num_errors: *mut u64,
) -> CbStatus {
    guard(|| {
        let (Some(dec), Some(received)) = (dec.as_ref(), input(received, len)) else {
            return fail(CbStatus::NullPointer, "null argument");
        };
        if corrected.is_null() {
            return fail(CbStatus::NullPointer, "corrected is null");
        }
        match dec.ctx.decode(received) {
            Ok(res) => match res.corrected {
                Some(word) => {
                    ptr::copy_nonoverlapping(word.as_ptr(), corrected, word.len());
                    if !num_errors.is_null() {
                        *num_errors = res.positions.len() as u64;
                    }
                    CbStatus::Ok
                }
                None => fail(
                    CbStatus::DecodeFailure,
                    res.reason.unwrap_or_else(|| "decoding failed".into()),
                ),
            },
            Err(e) => fail(decode_status(&e), e.to_string()),
        }
    })
}

/// Exact minimum distance by enumeration (at most `cap` codewords).
///
/// # Safety
/// `code` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cb_code_min_distance(
    code: *const CbCode,
    cap: u64,
    out: *mut u64,
) -> CbStatus {
    guard(|| {
        let (Some(code), Some(out)) = (code.as_ref(), out.as_mut()) else {
            return fail(CbStatus::NullPointer, "null argument");
        };
        match cyclic::min_distance_oracle(&code.code, cap as u128) {
            Ok(w) => {
                *out = w.d_true;
                CbStatus::Ok
            }
            Err(e) => fail(cyclic_status(&e), e.to_string()),
        }
    })
}

/// Message of the last failed call on this thread, or null. Free with
/// [`cb_string_free`].
#[no_mangle]
pub extern "C" fn cb_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn cb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
