//! Iterative FFT over bit-indexed pass arrays `A[0] … A[k]`.
//!
//! A slot of `A[p]` is addressed by a `k`-bit string whose first `p` bits are
//! already-fixed output bits `s_{k-1} … s_{k-p}` and whose remaining bits
//! `t_{k-p-1} … t_0` still index coefficients. The leftmost bit is the most
//! significant bit of the flat index. Pass `p` fixes `s_{k-p}`:
//!
//! ```text
//! A[p](…, s_{k-p}, …) = A[p-1](…, 0, …) + ω^e · A[p-1](…, 1, …)
//! e = 2^{k-p} · (s_{k-p} s_{k-p+1} … s_{k-1})₂
//! ```
//!
//! After pass `k`, slot `(s_{k-1} … s_0)` holds `f(ω^s)` with
//! `s = (s_0 s_1 … s_{k-1})₂`, so the readout is a bit-reversal permutation.
//!
//! Two buffers alternate between passes; every pass reads only the previous
//! array and writes each of its `n` slots once.

use crate::error::{FftError, Result};
use crate::numerics::{
    permute_in_place, BitWidth, CoefficientVector, ComplexScalar, Spectrum, TwiddleTable,
};
use crate::trace::OpCounter;

/// The array `A[p]` after pass `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct PassArray {
    pass: usize,
    width: BitWidth,
    values: Vec<ComplexScalar>,
}

impl PassArray {
    /// Pass 0: `A[0](t) = f_t`.
    pub fn load(f: &CoefficientVector) -> Result<Self> {
        Ok(PassArray {
            pass: 0,
            width: f.bit_width()?,
            values: f.to_vec(),
        })
    }

    pub fn pass_index(&self) -> usize {
        self.pass
    }

    pub fn width(&self) -> BitWidth {
        self.width
    }

    pub fn values(&self) -> &[ComplexScalar] {
        &self.values
    }

    /// The slot whose `k`-bit label, read as a binary number, is `label`.
    pub fn get(&self, label: usize) -> Option<ComplexScalar> {
        self.values.get(label).copied()
    }

    pub fn into_values(self) -> Vec<ComplexScalar> {
        self.values
    }
}

/// Computes `A[p]` from `A[p-1]`.
pub fn bitpass_step(prev: &PassArray, p: usize, tw: &TwiddleTable) -> Result<PassArray> {
    let k = prev.width.bits() as usize;
    if p == 0 || p > k || prev.pass + 1 != p {
        return Err(FftError::PassOutOfRange { pass: p, passes: k });
    }
    tw.check_len(prev.values.len())?;
    let mut values = vec![ComplexScalar::default(); prev.values.len()];
    step_into(
        &prev.values,
        &mut values,
        p,
        prev.width,
        tw,
        &mut OpCounter::default(),
        None,
    );
    Ok(PassArray {
        pass: p,
        width: prev.width,
        values,
    })
}

/// Steps a reversed-order counter of `bits` bits: `rev(u) -> rev(u + 1)`.
fn next_reversed(mut rev: usize, bits: u32) -> usize {
    if bits == 0 {
        return 0;
    }
    let mut bit = 1usize << (bits - 1);
    while bit != 0 && rev & bit != 0 {
        rev ^= bit;
        bit >>= 1;
    }
    rev | bit
}

/// For pass `p`, yields the twiddle exponent of every `(p-1)`-bit prefix
/// `u = (s_{k-1} … s_{k-p+1})₂` in increasing order, taking `s_{k-p} = 0`.
///
/// The `s_{k-p} = 1` exponent is this value plus `n/2`.
pub(crate) fn prefix_exponents(p: usize, width: BitWidth) -> impl Iterator<Item = usize> {
    let shift = width.bits() as usize - p;
    let prefix_bits = (p - 1) as u32;
    (0..1usize << prefix_bits).scan(0usize, move |rev, _| {
        let e = *rev << shift;
        *rev = next_reversed(*rev, prefix_bits);
        Some(e)
    })
}

pub(crate) fn step_into(
    prev: &[ComplexScalar],
    out: &mut [ComplexScalar],
    p: usize,
    width: BitWidth,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
    mut writes: Option<&mut [u32]>,
) {
    let n = prev.len();
    let half = 1usize << (width.bits() as usize - p);
    let span = 2 * half;
    for (u, e0) in prefix_exponents(p, width).enumerate() {
        let base = u * span;
        let (w0, w1) = (tw[e0], tw[e0 + n / 2]);
        for t in 0..half {
            let lo = base + t;
            let hi = lo + half;
            let (a, x) = (prev[lo], prev[hi]);
            out[lo] = a + w0 * x;
            out[hi] = a + w1 * x;
            if let Some(w) = writes.as_deref_mut() {
                w[lo] += 1;
                w[hi] += 1;
            }
        }
    }
    counter.tally_add(n as u64);
    counter.tally_mul(n as u64);
}

/// Natural-order DFT of `f` by `k` bit-indexed passes.
pub fn fft_bitpass(f: &CoefficientVector, tw: &TwiddleTable) -> Result<Spectrum> {
    fft_bitpass_counted(f, tw, &mut OpCounter::default())
}

pub fn fft_bitpass_counted(
    f: &CoefficientVector,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
) -> Result<Spectrum> {
    let (width, mut values) = run_passes(f, tw, counter, None)?;
    permute_in_place(&mut values, width.bits());
    if let Some(s) = tw.scale() {
        values.iter_mut().for_each(|v| *v *= s);
    }
    Ok(Spectrum::from_vec(values))
}

/// `A[k]` before the bit-reversed readout: slot `i` holds `f(ω^{rev(i)})`.
pub fn bitpass_unordered(f: &CoefficientVector, tw: &TwiddleTable) -> Result<Vec<ComplexScalar>> {
    Ok(run_passes(f, tw, &mut OpCounter::default(), None)?.1)
}

/// Called after every pass with `(p, A[p], pass tally, every slot written exactly once)`.
pub(crate) type PassObserver<'a> = &'a mut dyn FnMut(usize, &[ComplexScalar], OpCounter, bool);

pub(crate) fn run_passes(
    f: &CoefficientVector,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
    mut observer: Option<PassObserver<'_>>,
) -> Result<(BitWidth, Vec<ComplexScalar>)> {
    let width = f.bit_width()?;
    tw.check_len(f.len())?;
    let n = f.len();
    let mut cur = f.to_vec();
    let mut next = vec![ComplexScalar::default(); n];
    let mut writes = observer.as_ref().map(|_| vec![0u32; n]);
    for p in 1..=width.bits() as usize {
        let mut pass_ops = OpCounter::default();
        if let Some(w) = writes.as_mut() {
            w.fill(0);
        }
        step_into(
            &cur,
            &mut next,
            p,
            width,
            tw,
            &mut pass_ops,
            writes.as_deref_mut(),
        );
        *counter += pass_ops;
        std::mem::swap(&mut cur, &mut next);
        if let Some(obs) = observer.as_mut() {
            let write_once = writes.as_ref().is_some_and(|w| w.iter().all(|&c| c == 1));
            obs(p, &cur, pass_ops, write_once);
        }
    }
    Ok((width, cur))
}
