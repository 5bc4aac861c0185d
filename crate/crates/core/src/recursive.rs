//! Recursive FFT by remainder splitting.
//!
//! Dividing `f` by `x^{n/2} - 1` and `x^{n/2} + 1` leaves remainders
//!
//! ```text
//! r0(x)  = Σ (f_j + f_{j+n/2}) x^j
//! r1*(x) = Σ (f_j - f_{j+n/2}) ω^j x^j
//! ```
//!
//! with `f(ω^{2ℓ}) = r0(ω^{2ℓ})` and `f(ω^{2ℓ+1}) = r1*(ω^{2ℓ})`. The quotients
//! never need to be formed.
//!
//! Recursion contract: at depth `d` every subproblem is a full, natural-order
//! DFT of size `n/2^d` with respect to `ω^{2^d}`, whose powers are read from the
//! single size-`n` table at stride `2^d`. The two sub-spectra `S0` (of `r0`)
//! and `S1` (of `r1*`) are interleaved as `S0[0], S1[0], S0[1], S1[1], …`,
//! which yields natural order with no final permutation.

use crate::error::{FftError, Result};
use crate::numerics::{CoefficientVector, ComplexScalar, Spectrum, TwiddleTable};
use crate::trace::OpCounter;

/// The remainders of `f` modulo `x^{n/2} - 1` and (twisted) `x^{n/2} + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderPair {
    pub r0: Vec<ComplexScalar>,
    pub r1_star: Vec<ComplexScalar>,
}

/// Splits `f` (even length `n ≥ 2`) given `ω^0 … ω^{n/2-1}` at the current level.
pub fn split_remainders(f: &[ComplexScalar], powers: &[ComplexScalar]) -> Result<RemainderPair> {
    let n = f.len();
    if n < 2 || n % 2 != 0 {
        return Err(FftError::OddLength { len: n });
    }
    if powers.len() != n / 2 {
        return Err(FftError::LengthMismatch {
            expected: n / 2,
            actual: powers.len(),
        });
    }
    Ok(split(f, |j| powers[j], &mut OpCounter::default()))
}

fn split(
    f: &[ComplexScalar],
    twiddle: impl Fn(usize) -> ComplexScalar,
    counter: &mut OpCounter,
) -> RemainderPair {
    let half = f.len() / 2;
    let (lo, hi) = f.split_at(half);
    let mut r0 = Vec::with_capacity(half);
    let mut r1_star = Vec::with_capacity(half);
    for (j, (&a, &b)) in lo.iter().zip(hi).enumerate() {
        r0.push(a + b);
        r1_star.push((a - b) * twiddle(j));
    }
    counter.tally_add(2 * half as u64);
    counter.tally_mul(half as u64);
    RemainderPair { r0, r1_star }
}

/// Subproblem inputs recorded per recursion depth, laid out by recursion path.
///
/// `levels[d]` has length `n`; the subproblem reached by choosing `b1, …, bd`
/// (`0` for `r0`, `1` for `r1*`) occupies the block at offset
/// `(b1…bd)₂ · n/2^d`. `counters[d]` tallies the splits performed at depth `d`.
#[derive(Debug, Clone)]
pub(crate) struct RecursionLog {
    pub levels: Vec<Vec<ComplexScalar>>,
    pub counters: Vec<OpCounter>,
}

impl RecursionLog {
    pub fn new(n: usize, bits: u32) -> Self {
        RecursionLog {
            levels: vec![vec![ComplexScalar::default(); n]; bits as usize + 1],
            counters: vec![OpCounter::default(); bits as usize],
        }
    }
}

/// Natural-order DFT of `f` by recursive remainder splitting.
pub fn fft_recursive(f: &CoefficientVector, tw: &TwiddleTable) -> Result<Spectrum> {
    fft_recursive_counted(f, tw, &mut OpCounter::default())
}

pub fn fft_recursive_counted(
    f: &CoefficientVector,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
) -> Result<Spectrum> {
    run(f, tw, counter, None)
}

pub(crate) fn run(
    f: &CoefficientVector,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
    mut log: Option<&mut RecursionLog>,
) -> Result<Spectrum> {
    f.bit_width()?;
    tw.check_len(f.len())?;
    let mut out = recurse(f, tw, 1, 0, 0, counter, &mut log);
    if let Some(s) = tw.scale() {
        out.iter_mut().for_each(|v| *v *= s);
    }
    Ok(Spectrum::from_vec(out))
}

fn recurse(
    f: &[ComplexScalar],
    tw: &TwiddleTable,
    stride: usize,
    depth: usize,
    path: usize,
    counter: &mut OpCounter,
    log: &mut Option<&mut RecursionLog>,
) -> Vec<ComplexScalar> {
    let n = f.len();
    if let Some(log) = log.as_deref_mut() {
        log.levels[depth][path * n..(path + 1) * n].copy_from_slice(f);
    }
    if n == 1 {
        return vec![f[0]];
    }

    let mut level_ops = OpCounter::default();
    let RemainderPair { r0, r1_star } = split(f, |j| tw[j * stride], &mut level_ops);
    *counter += level_ops;
    if let Some(log) = log.as_deref_mut() {
        log.counters[depth] += level_ops;
    }

    let even = recurse(&r0, tw, stride * 2, depth + 1, path * 2, counter, log);
    let odd = recurse(
        &r1_star,
        tw,
        stride * 2,
        depth + 1,
        path * 2 + 1,
        counter,
        log,
    );
    even.into_iter()
        .zip(odd)
        .flat_map(|(e, o)| [e, o])
        .collect()
}
