//! In-place FFT by splitting polynomials and shrinking coefficients.
//!
//! Pass `p` splits every block `f^{[b1…b_{p-1}]}` of length `m = n/2^{p-1}`
//! into two children of length `m/2`:
//!
//! ```text
//! f^{[…0]}_j = f_j + f_{j+m/2}
//! f^{[…1]}_j = (f_j - f_{j+m/2}) · (ω^{2^{p-1}})^j
//! ```
//!
//! Blocks live in one flat buffer: block `(b1…bp)` occupies the contiguous range
//! whose leading address bits are `b1…bp`, child 0 overwriting the low half of
//! its parent and child 1 the high half. After `k` passes every block is a single
//! scalar, and `f(ω^{(bk…b1)₂}) = f^{[b1…bk]}`, so one bit-reversal permutation
//! puts the spectrum in natural order.
//!
//! Each pass costs `n` complex additions/subtractions and `n/2` twiddle
//! multiplications; `ω^0 = 1` factors are counted too. In the last pass every
//! block has length 2, so its only twiddle is `ω^0` and the multiplications could
//! be skipped. They are performed and counted anyway.

use crate::error::{FftError, Result};
use crate::numerics::{
    check_finite, permute_in_place, BitWidth, CoefficientVector, ComplexScalar, Spectrum,
    TwiddleTable,
};
use crate::trace::OpCounter;

/// The labelled coefficient blocks after pass `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockState {
    pass: usize,
    width: BitWidth,
    values: Vec<ComplexScalar>,
}

impl BlockState {
    /// Pass 0: a single block holding all of `f`.
    pub fn load(f: &CoefficientVector) -> Result<Self> {
        Ok(BlockState {
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

    pub fn block_len(&self) -> usize {
        self.values.len() >> self.pass
    }

    /// Block `(b1…bp)`, passing the label as the number `(b1…bp)₂`.
    pub fn block(&self, label: usize) -> Option<&[ComplexScalar]> {
        let len = self.block_len();
        self.values.get(label * len..(label + 1) * len)
    }

    /// All `2^p` blocks in label order.
    pub fn blocks(&self) -> impl Iterator<Item = &[ComplexScalar]> {
        self.values.chunks(self.block_len())
    }

    /// The flat buffer.
    pub fn values(&self) -> &[ComplexScalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<ComplexScalar> {
        self.values
    }
}

/// Applies pass `p` to `state` in place.
pub fn heuristic_pass(mut state: BlockState, p: usize, tw: &TwiddleTable) -> Result<BlockState> {
    let k = state.width.bits() as usize;
    if p == 0 || p > k || state.pass + 1 != p {
        return Err(FftError::PassOutOfRange { pass: p, passes: k });
    }
    tw.check_len(state.values.len())?;
    pass_in_place(&mut state.values, p, tw, &mut OpCounter::default());
    state.pass = p;
    Ok(state)
}

fn pass_in_place(buf: &mut [ComplexScalar], p: usize, tw: &TwiddleTable, counter: &mut OpCounter) {
    let n = buf.len();
    let parent = n >> (p - 1);
    let half = parent / 2;
    let stride = 1usize << (p - 1);
    for block in buf.chunks_exact_mut(parent) {
        let (lo, hi) = block.split_at_mut(half);
        for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
            let (x, y) = (*a, *b);
            *a = x + y;
            *b = (x - y) * tw[j * stride];
        }
    }
    counter.tally_add(n as u64);
    counter.tally_mul(n as u64 / 2);
}

/// Called after each pass with the pass index, the buffer and that pass's tally.
pub(crate) type BlockObserver<'a> = &'a mut dyn FnMut(usize, &[ComplexScalar], OpCounter);

/// Runs all `k` passes in place, leaving the result in bit-reversed order.
pub(crate) fn passes_in_place(
    buf: &mut [ComplexScalar],
    tw: &TwiddleTable,
    counter: &mut OpCounter,
    mut observer: Option<BlockObserver>,
) -> Result<BitWidth> {
    let width = BitWidth::for_len(buf.len())?;
    tw.check_len(buf.len())?;
    for p in 1..=width.bits() as usize {
        let mut pass_ops = OpCounter::default();
        pass_in_place(buf, p, tw, &mut pass_ops);
        *counter += pass_ops;
        if let Some(obs) = observer.as_mut() {
            obs(p, buf, pass_ops);
        }
    }
    Ok(width)
}

/// Transforms `buf` in place into natural-order spectrum.
pub fn fft_heuristic_in_place(
    buf: &mut [ComplexScalar],
    tw: &TwiddleTable,
    counter: &mut OpCounter,
) -> Result<()> {
    if buf.is_empty() {
        return Err(FftError::EmptyInput);
    }
    check_finite(buf)?;
    let width = passes_in_place(buf, tw, counter, None)?;
    permute_in_place(buf, width.bits());
    if let Some(s) = tw.scale() {
        buf.iter_mut().for_each(|v| *v *= s);
    }
    Ok(())
}

/// Natural-order DFT of `f`; the input is copied, not mutated.
pub fn fft_heuristic(f: &CoefficientVector, tw: &TwiddleTable) -> Result<Spectrum> {
    fft_heuristic_counted(f, tw, &mut OpCounter::default())
}

pub fn fft_heuristic_counted(
    f: &CoefficientVector,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
) -> Result<Spectrum> {
    let mut buf = f.to_vec();
    fft_heuristic_in_place(&mut buf, tw, counter)?;
    Ok(Spectrum::from_vec(buf))
}

/// The flat buffer after pass `k`, before the reversal permutation.
pub fn heuristic_unordered(f: &CoefficientVector, tw: &TwiddleTable) -> Result<Vec<ComplexScalar>> {
    let mut buf = f.to_vec();
    passes_in_place(&mut buf, tw, &mut OpCounter::default(), None)?;
    Ok(buf)
}

/// Complex additions and multiplications tallied from a real forward run at size `n`.
pub fn count_operations(n: usize) -> Result<(u64, u64)> {
    BitWidth::for_len(n)?;
    let tw = TwiddleTable::new(n, crate::numerics::Direction::Forward)?;
    let f = CoefficientVector::new(
        (0..n)
            .map(|i| ComplexScalar::new(i as f64, -(i as f64)))
            .collect(),
    )?;
    let mut ops = OpCounter::default();
    fft_heuristic_counted(&f, &tw, &mut ops)?;
    Ok((ops.additions, ops.multiplications))
}
