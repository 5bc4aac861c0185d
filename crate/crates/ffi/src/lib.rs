//! C ABI over the hfft transforms.
//!
//! Twiddle tables and traces are opaque handles owned by the caller and
//! released with their `_free` function. Every entry point returns an
//! [`HfftStatus`]; outputs are written through pointers only on success.
//! Complex vectors are arrays of [`HfftComplex`] (`{re, im}` doubles).
//!
//! Forward transforms use `w = e^{+2*pi*i/n}`; conjugate input and output to
//! get the `e^{-2*pi*i/n}` convention.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use hfft::trace::{golden_trace_check, traced_transform, PassTrace};
use hfft::{
    bit_reverse_index, transform_counted, Algorithm, BitWidth, CoefficientVector, ComplexScalar,
    Direction, FftError, OpCounter, TwiddleTable,
};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfftStatus {
    Ok = 0,
    NullPointer = 1,
    /// Zero length, or not a power of two where one is required.
    InvalidSize = 2,
    /// Table, buffer or pass index does not match.
    SizeMismatch = 3,
    NonFinite = 4,
    /// Unknown algorithm or direction code.
    InvalidArgument = 5,
    /// A self-check ran and found a discrepancy.
    VerificationFailed = 6,
    Panic = 7,
}

/// Algorithm codes accepted by `algorithm` parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfftAlgorithm {
    Naive = 0,
    Recursive = 1,
    Bitpass = 2,
    Heuristic = 3,
}

/// Direction codes accepted by `direction` parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfftDirection {
    Forward = 0,
    Inverse = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HfftComplex {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexScalar> for HfftComplex {
    fn from(z: ComplexScalar) -> Self {
        HfftComplex { re: z.re, im: z.im }
    }
}

impl From<HfftComplex> for ComplexScalar {
    fn from(z: HfftComplex) -> Self {
        ComplexScalar::new(z.re, z.im)
    }
}

/// Opaque twiddle table.
pub struct HfftTwiddles(TwiddleTable);

/// Opaque pass trace.
pub struct HfftTrace(PassTrace);

impl From<FftError> for HfftStatus {
    fn from(e: FftError) -> Self {
        match e {
            FftError::EmptyInput
            | FftError::ZeroSize
            | FftError::NotPowerOfTwo { .. }
            | FftError::OddLength { .. } => HfftStatus::InvalidSize,
            FftError::IndexOutOfRange { .. }
            | FftError::LengthMismatch { .. }
            | FftError::TableSizeMismatch { .. }
            | FftError::PassOutOfRange { .. } => HfftStatus::SizeMismatch,
            FftError::NonFinite { .. } => HfftStatus::NonFinite,
            FftError::Untraceable(_) => HfftStatus::InvalidArgument,
        }
    }
}

fn algorithm_from(code: i32) -> Result<Algorithm, HfftStatus> {
    match code {
        0 => Ok(Algorithm::Naive),
        1 => Ok(Algorithm::Recursive),
        2 => Ok(Algorithm::Bitpass),
        3 => Ok(Algorithm::Heuristic),
        _ => Err(HfftStatus::InvalidArgument),
    }
}

fn direction_from(code: i32) -> Result<Direction, HfftStatus> {
    match code {
        0 => Ok(Direction::Forward),
        1 => Ok(Direction::Inverse),
        _ => Err(HfftStatus::InvalidArgument),
    }
}

fn guard(body: impl FnOnce() -> Result<(), HfftStatus>) -> HfftStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HfftStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => HfftStatus::Panic,
    }
}

fn non_null<T>(p: *const T) -> Result<(), HfftStatus> {
    if p.is_null() {
        Err(HfftStatus::NullPointer)
    } else {
        Ok(())
    }
}

/// # Safety
/// `input` must point to `n` readable elements.
unsafe fn read_input(input: *const HfftComplex, n: usize) -> Result<CoefficientVector, HfftStatus> {
    non_null(input)?;
    if n == 0 {
        return Err(HfftStatus::InvalidSize);
    }
    let values = slice::from_raw_parts(input, n)
        .iter()
        .map(|&z| z.into())
        .collect();
    Ok(CoefficientVector::new(values)?)
}

/// # Safety
/// `output` must point to `values.len()` writable elements.
unsafe fn write_output(
    output: *mut HfftComplex,
    values: &[ComplexScalar],
) -> Result<(), HfftStatus> {
    non_null(output)?;
    let out = slice::from_raw_parts_mut(output, values.len());
    for (o, &v) in out.iter_mut().zip(values) {
        *o = v.into();
    }
    Ok(())
}

/// Builds the table `w^0 … w^{n-1}` and stores a new handle in `*out`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn hfft_twiddles_new(
    n: usize,
    direction: i32,
    out: *mut *mut HfftTwiddles,
) -> HfftStatus {
    guard(|| {
        non_null(out)?;
        let table = TwiddleTable::new(n, direction_from(direction)?)?;
        *out = Box::into_raw(Box::new(HfftTwiddles(table)));
        Ok(())
    })
}

/// Releases a table. Null is ignored.
///
/// # Safety
/// `tw` must be null or a handle from `hfft_twiddles_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hfft_twiddles_free(tw: *mut HfftTwiddles) {
    if !tw.is_null() {
        drop(Box::from_raw(tw));
    }
}

/// Transform size of the table, or 0 for null.
///
/// # Safety
/// `tw` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hfft_twiddles_len(tw: *const HfftTwiddles) -> usize {
    tw.as_ref().map_or(0, |t| t.0.len())
}

/// Reads `w^j` into `*out`.
///
/// # Safety
/// `tw` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hfft_twiddles_get(
    tw: *const HfftTwiddles,
    j: usize,
    out: *mut HfftComplex,
) -> HfftStatus {
    guard(|| {
        non_null(out)?;
        let table = &tw.as_ref().ok_or(HfftStatus::NullPointer)?.0;
        let w = *table.powers().get(j).ok_or(HfftStatus::SizeMismatch)?;
        *out = w.into();
        Ok(())
    })
}

/// Transforms `n` values from `input` into `output` (natural order).
///
/// The table must have size `n`; its direction selects forward or inverse
/// (inverse results are scaled by `1/n`). `input` and `output` may alias.
/// When `additions` / `multiplications` are non-null they receive the
/// complex operation counts of this call.
///
/// # Safety
/// `input` and `output` must each point to `n` elements; `tw` must be live.
#[no_mangle]
pub unsafe extern "C" fn hfft_transform(
    algorithm: i32,
    tw: *const HfftTwiddles,
    input: *const HfftComplex,
    output: *mut HfftComplex,
    n: usize,
    additions: *mut u64,
    multiplications: *mut u64,
) -> HfftStatus {
    guard(|| {
        let algorithm = algorithm_from(algorithm)?;
        let table = &tw.as_ref().ok_or(HfftStatus::NullPointer)?.0;
        let f = read_input(input, n)?;
        let mut ops = OpCounter::default();
        let spectrum = transform_counted(algorithm, &f, table, &mut ops)?;
        write_output(output, &spectrum)?;
        if let Some(a) = additions.as_mut() {
            *a = ops.additions;
        }
        if let Some(m) = multiplications.as_mut() {
            *m = ops.multiplications;
        }
        Ok(())
    })
}

/// Quadratic reference DFT for any `n >= 1`, building its own table.
///
/// # Safety
/// `input` and `output` must each point to `n` elements.
#[no_mangle]
pub unsafe extern "C" fn hfft_naive_dft(
    direction: i32,
    input: *const HfftComplex,
    output: *mut HfftComplex,
    n: usize,
) -> HfftStatus {
    guard(|| {
        let direction = direction_from(direction)?;
        let f = read_input(input, n)?;
        let spectrum = hfft::oracle::naive_dft(&f, direction)?;
        write_output(output, &spectrum)
    })
}

/// Reverses the low `k` bits of `i` into `*out`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hfft_bit_reverse_index(i: usize, k: u32, out: *mut usize) -> HfftStatus {
    guard(|| {
        non_null(out)?;
        *out = bit_reverse_index(i, BitWidth::new(k))?;
        Ok(())
    })
}

/// Complex additions and multiplications of a heuristic transform of size `n`.
///
/// # Safety
/// Both pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn hfft_count_operations(
    n: usize,
    additions: *mut u64,
    multiplications: *mut u64,
) -> HfftStatus {
    guard(|| {
        non_null(additions)?;
        non_null(multiplications)?;
        let (a, m) = hfft::heuristic::count_operations(n)?;
        *additions = a;
        *multiplications = m;
        Ok(())
    })
}

/// Runs a traced transform (not `HFFT_ALGORITHM_NAIVE`) and stores the trace in `*out`.
///
/// # Safety
/// `input` must point to `n` elements, `tw` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hfft_trace_new(
    algorithm: i32,
    tw: *const HfftTwiddles,
    input: *const HfftComplex,
    n: usize,
    out: *mut *mut HfftTrace,
) -> HfftStatus {
    guard(|| {
        non_null(out)?;
        let algorithm = algorithm_from(algorithm)?;
        let table = &tw.as_ref().ok_or(HfftStatus::NullPointer)?.0;
        let f = read_input(input, n)?;
        let (_, trace) = traced_transform(&f, algorithm, table)?;
        *out = Box::into_raw(Box::new(HfftTrace(trace)));
        Ok(())
    })
}

/// Releases a trace. Null is ignored.
///
/// # Safety
/// `trace` must be null or a handle from `hfft_trace_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hfft_trace_free(trace: *mut HfftTrace) {
    if !trace.is_null() {
        drop(Box::from_raw(trace));
    }
}

/// Number of passes `k`; snapshots are numbered `0..=k`. Returns 0 for null.
///
/// # Safety
/// `trace` must be null or live.
#[no_mangle]
pub unsafe extern "C" fn hfft_trace_passes(trace: *const HfftTrace) -> usize {
    trace.as_ref().map_or(0, |t| t.0.passes())
}

/// Copies snapshot `pass` (`n` values, flat slot order) into `out`.
///
/// # Safety
/// `trace` must be live and `out` must hold `n` elements.
#[no_mangle]
pub unsafe extern "C" fn hfft_trace_snapshot(
    trace: *const HfftTrace,
    pass: usize,
    out: *mut HfftComplex,
    n: usize,
) -> HfftStatus {
    guard(|| {
        let t = &trace.as_ref().ok_or(HfftStatus::NullPointer)?.0;
        let snap = t.snapshots.get(pass).ok_or(HfftStatus::SizeMismatch)?;
        if snap.len() != n {
            return Err(HfftStatus::SizeMismatch);
        }
        write_output(out, snap)
    })
}

/// Operation counts of pass `pass` (1-based).
///
/// # Safety
/// `trace` must be live and both counters writable.
#[no_mangle]
pub unsafe extern "C" fn hfft_trace_pass_counts(
    trace: *const HfftTrace,
    pass: usize,
    additions: *mut u64,
    multiplications: *mut u64,
) -> HfftStatus {
    guard(|| {
        non_null(additions)?;
        non_null(multiplications)?;
        let t = &trace.as_ref().ok_or(HfftStatus::NullPointer)?.0;
        let ops = pass
            .checked_sub(1)
            .and_then(|i| t.counters.get(i))
            .ok_or(HfftStatus::SizeMismatch)?;
        *additions = ops.additions;
        *multiplications = ops.multiplications;
        Ok(())
    })
}

/// Checks the size-8 bit-pass trace of every basis vector against the
/// worked expansions. Returns `HFFT_STATUS_VERIFICATION_FAILED` on any mismatch.
#[no_mangle]
pub extern "C" fn hfft_golden_trace_check() -> HfftStatus {
    guard(|| {
        if golden_trace_check().passed() {
            Ok(())
        } else {
            Err(HfftStatus::VerificationFailed)
        }
    })
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn hfft_status_message(status: i32) -> *const c_char {
    let msg: &'static std::ffi::CStr = match status {
        0 => c"ok",
        1 => c"null pointer argument",
        2 => c"invalid size: n must be >= 1 and a power of two for FFT algorithms",
        3 => c"size or index mismatch",
        4 => c"input contains NaN or infinity",
        5 => c"invalid algorithm or direction code",
        6 => c"verification failed",
        7 => c"internal panic",
        _ => c"unknown status",
    };
    msg.as_ptr()
}
