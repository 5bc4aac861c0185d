//! Quadratic-time reference DFT: Horner's rule at every power of ω.
//!
//! Deliberately unoptimized. Each of the `n` evaluations performs `n - 1`
//! complex multiplications and `n - 1` complex additions, so a full transform
//! costs exactly `n(n - 1)` of each.

use crate::error::{FftError, Result};
use crate::numerics::{
    make_twiddles, CoefficientVector, ComplexScalar, Direction, Spectrum, TwiddleTable,
};
use crate::trace::OpCounter;

/// `(…(f_{n-1}·x + f_{n-2})·x + …)·x + f_0`.
pub fn horner_eval(f: &[ComplexScalar], x: ComplexScalar) -> Result<ComplexScalar> {
    horner_eval_counted(f, x, &mut OpCounter::default())
}

pub fn horner_eval_counted(
    f: &[ComplexScalar],
    x: ComplexScalar,
    counter: &mut OpCounter,
) -> Result<ComplexScalar> {
    let (last, rest) = f.split_last().ok_or(FftError::EmptyInput)?;
    let mut acc = *last;
    for &c in rest.iter().rev() {
        acc = acc * x + c;
        counter.tally_mul(1);
        counter.tally_add(1);
    }
    Ok(acc)
}

/// Evaluates `f` at `1, ω, …, ω^{n-1}` for any `n ≥ 1`.
///
/// The inverse direction evaluates at powers of `ω^{-1}` and scales by `1/n`,
/// so that `inverse(forward(f)) = f`.
pub fn naive_dft(f: &CoefficientVector, direction: Direction) -> Result<Spectrum> {
    naive_dft_counted(f, direction, &mut OpCounter::default())
}

pub fn naive_dft_counted(
    f: &CoefficientVector,
    direction: Direction,
    counter: &mut OpCounter,
) -> Result<Spectrum> {
    let tw = make_twiddles(f.len(), direction)?;
    naive_dft_with_table(f, &tw, counter)
}

pub(crate) fn naive_dft_with_table(
    f: &CoefficientVector,
    tw: &TwiddleTable,
    counter: &mut OpCounter,
) -> Result<Spectrum> {
    tw.check_len(f.len())?;
    let mut values = tw
        .powers()
        .iter()
        .map(|&x| horner_eval_counted(f, x, counter))
        .collect::<Result<Vec<_>>>()?;
    if let Some(s) = tw.scale() {
        values.iter_mut().for_each(|v| *v *= s);
    }
    Ok(Spectrum::from_vec(values))
}
