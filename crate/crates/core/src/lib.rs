//! Radix-2 complex FFT in three formulations, checked against a quadratic
//! Horner-rule oracle.
//!
//! The transforms evaluate a polynomial `f(x) = f_0 + f_1 x + ... + f_{n-1} x^{n-1}`
//! at the powers `1, ω, ω², …, ω^{n-1}` of the root of unity
//!
//! ```text
//! ω = e^{+2πi/n}
//! ```
//!
//! **Sign convention.** The forward transform uses the *positive* exponent.
//! Most numerical references (FFTW, RustFFT, numpy) use `e^{-2πi/n}` for the
//! forward direction; to compare against them, conjugate the input and the
//! output, or use the CLI's `--conjugate` flag.
//!
//! Algorithms:
//!
//! * [`oracle`]: Horner's rule applied once per evaluation point, `O(n²)`.
//! * [`recursive`]: remainder splitting by `x^{n/2} - 1` / `x^{n/2} + 1`,
//!   recursing on both halves and interleaving the results.
//! * [`bitpass`]: `k` passes over bit-indexed arrays, read out in bit-reversed order.
//! * [`heuristic`]: in-place split-and-shrink passes over contiguous coefficient
//!   blocks followed by a single bit-reversal permutation.
//!
//! All three fast variants perform exactly `k·n` complex additions for `n = 2^k`,
//! which [`trace::OpCounter`] makes observable.

pub mod bench;
pub mod bitpass;
pub mod compare;
pub mod error;
pub mod heuristic;
pub mod io;
pub mod numerics;
pub mod oracle;
pub mod recursive;
pub mod trace;

pub use error::{FftError, Result};
pub use numerics::{
    bit_reverse_index, bit_reverse_permute, make_twiddles, BitWidth, CoefficientVector,
    ComplexScalar, Direction, Spectrum, TwiddleTable,
};
pub use trace::{Algorithm, OpCounter};

/// Runs `algorithm` on `f` with the twiddles in `tw`.
///
/// The naive oracle accepts any length; the FFT variants require a power of two.
pub fn transform(
    algorithm: Algorithm,
    f: &CoefficientVector,
    tw: &TwiddleTable,
) -> Result<Spectrum> {
    transform_counted(algorithm, f, tw, &mut OpCounter::default())
}

/// Same as [`transform`], tallying complex operations into `counter`.
pub fn transform_counted(
    algorithm: Algorithm,
    f: &CoefficientVector,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
) -> Result<Spectrum> {
    match algorithm {
        Algorithm::Naive => oracle::naive_dft_with_table(f, tw, counter),
        Algorithm::Recursive => recursive::fft_recursive_counted(f, tw, counter),
        Algorithm::Bitpass => bitpass::fft_bitpass_counted(f, tw, counter),
        Algorithm::Heuristic => heuristic::fft_heuristic_counted(f, tw, counter),
    }
}
