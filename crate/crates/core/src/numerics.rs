//! Complex scalars, roots of unity, bit reversal and the validated vector types
//! shared by every algorithm.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Deref, Index};

use num_complex::Complex64;

use crate::error::{FftError, Result};

/// Double-precision complex number; the element type of every vector here.
pub type ComplexScalar = Complex64;

/// Sign of the root of unity: forward uses `e^{+2πi/n}`, inverse `e^{-2πi/n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Direction {
    #[default]
    Forward,
    Inverse,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Inverse => "inverse",
        })
    }
}

/// Number of address bits `k` of a transform of size `n = 2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWidth(u32);

impl BitWidth {
    pub const fn new(k: u32) -> Self {
        BitWidth(k)
    }

    /// The width for a power-of-two length.
    pub fn for_len(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(FftError::ZeroSize);
        }
        if !n.is_power_of_two() {
            return Err(FftError::NotPowerOfTwo { len: n });
        }
        Ok(BitWidth(n.trailing_zeros()))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `2^k`.
    #[allow(clippy::len_without_is_empty)]
    pub const fn len(self) -> usize {
        1 << self.0
    }
}

/// Reverses the low `k` bits of `i`.
pub fn bit_reverse_index(i: usize, k: BitWidth) -> Result<usize> {
    if k.bits() >= usize::BITS || i >= k.len() {
        return Err(FftError::IndexOutOfRange {
            index: i,
            bits: k.bits(),
        });
    }
    Ok(reverse_bits(i, k.bits()))
}

#[inline]
pub(crate) fn reverse_bits(i: usize, bits: u32) -> usize {
    if bits == 0 {
        0
    } else {
        i.reverse_bits() >> (usize::BITS - bits)
    }
}

/// Returns `out` with `out[rev(i)] = v[i]`. The permutation is an involution.
pub fn bit_reverse_permute<T: Clone>(v: &[T], k: BitWidth) -> Result<Vec<T>> {
    if v.len() != k.len() {
        return Err(FftError::LengthMismatch {
            expected: k.len(),
            actual: v.len(),
        });
    }
    let mut out = v.to_vec();
    permute_in_place(&mut out, k.bits());
    Ok(out)
}

/// Swaps every pair `(i, rev(i))` once. Length must be `2^bits`.
pub(crate) fn permute_in_place<T>(v: &mut [T], bits: u32) {
    debug_assert_eq!(v.len(), 1usize << bits);
    for i in 0..v.len() {
        let j = reverse_bits(i, bits);
        if i < j {
            v.swap(i, j);
        }
    }
}

/// `e^{2πi·j/n}`, evaluated from the angle of `j` alone.
///
/// The angle is folded into the first octant so that quarter-turn points
/// (`1`, `i`, `-1`, `-i`) come out exact and symmetric entries are mirrored
/// bit-for-bit.
fn unit_root(j: usize, n: usize) -> ComplexScalar {
    let j = j % n;
    let at = |m: usize| 2.0 * PI * (m as f64) / (n as f64);
    if n % 4 == 0 {
        let quarter = n / 4;
        let (q, r) = (j / quarter, j % quarter);
        let base = if 2 * r > quarter {
            let t = at(quarter - r);
            ComplexScalar::new(t.sin(), t.cos())
        } else {
            let t = at(r);
            ComplexScalar::new(t.cos(), t.sin())
        };
        match q {
            0 => base,
            1 => ComplexScalar::new(-base.im, base.re),
            2 => -base,
            _ => ComplexScalar::new(base.im, -base.re),
        }
    } else if n % 2 == 0 && j == n / 2 {
        ComplexScalar::new(-1.0, 0.0)
    } else if j == 0 {
        ComplexScalar::new(1.0, 0.0)
    } else {
        let t = at(j);
        ComplexScalar::new(t.cos(), t.sin())
    }
}

/// Powers `ω^0, ω^1, …, ω^{n-1}` of the primitive `n`-th root of unity.
#[derive(Debug, Clone, PartialEq)]
pub struct TwiddleTable {
    direction: Direction,
    powers: Vec<ComplexScalar>,
}

/// Builds the table for size `n`; `ω = e^{+2πi/n}` forward, `e^{-2πi/n}` inverse.
pub fn make_twiddles(n: usize, direction: Direction) -> Result<TwiddleTable> {
    if n == 0 {
        return Err(FftError::ZeroSize);
    }
    let powers = (0..n)
        .map(|j| {
            let w = unit_root(j, n);
            match direction {
                Direction::Forward => w,
                Direction::Inverse => w.conj(),
            }
        })
        .collect();
    Ok(TwiddleTable { direction, powers })
}

impl TwiddleTable {
    pub fn new(n: usize, direction: Direction) -> Result<Self> {
        make_twiddles(n, direction)
    }

    /// Transform size `n`.
    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn powers(&self) -> &[ComplexScalar] {
        &self.powers
    }

    /// `ω^e` for any exponent, reduced modulo `n`.
    pub fn power(&self, e: usize) -> ComplexScalar {
        self.powers[e % self.powers.len()]
    }

    pub(crate) fn check_len(&self, input: usize) -> Result<()> {
        if self.powers.len() != input {
            return Err(FftError::TableSizeMismatch {
                table: self.powers.len(),
                input,
            });
        }
        Ok(())
    }

    /// `1/n` for the inverse direction, `None` otherwise.
    pub(crate) fn scale(&self) -> Option<f64> {
        match self.direction {
            Direction::Forward => None,
            Direction::Inverse => Some(1.0 / self.powers.len() as f64),
        }
    }
}

impl Index<usize> for TwiddleTable {
    type Output = ComplexScalar;

    fn index(&self, j: usize) -> &ComplexScalar {
        &self.powers[j]
    }
}

pub(crate) fn check_finite(values: &[ComplexScalar]) -> Result<()> {
    match values
        .iter()
        .position(|z| !(z.re.is_finite() && z.im.is_finite()))
    {
        Some(index) => Err(FftError::NonFinite { index }),
        None => Ok(()),
    }
}

/// Coefficients `f_0, …, f_{n-1}` of a polynomial of degree less than `n`.
///
/// Always nonempty with finite entries. Power-of-two length is checked by the
/// FFT entry points, not here, since the oracle takes any length.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector(Vec<ComplexScalar>);

impl CoefficientVector {
    pub fn new(coeffs: Vec<ComplexScalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(FftError::EmptyInput);
        }
        check_finite(&coeffs)?;
        Ok(CoefficientVector(coeffs))
    }

    /// Real coefficients with zero imaginary parts.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|&re| ComplexScalar::new(re, 0.0))
                .collect(),
        )
    }

    /// The unit vector `e_m` of length `n`.
    pub fn basis(n: usize, m: usize) -> Result<Self> {
        if m >= n {
            return Err(FftError::IndexOutOfRange {
                index: m,
                bits: usize::BITS - n.leading_zeros(),
            });
        }
        let mut v = vec![ComplexScalar::new(0.0, 0.0); n];
        v[m] = ComplexScalar::new(1.0, 0.0);
        Self::new(v)
    }

    pub fn as_slice(&self) -> &[ComplexScalar] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<ComplexScalar> {
        self.0
    }

    /// `k` with `len = 2^k`, or an error when the length is not a power of two.
    pub fn bit_width(&self) -> Result<BitWidth> {
        BitWidth::for_len(self.0.len())
    }
}

impl Deref for CoefficientVector {
    type Target = [ComplexScalar];

    fn deref(&self) -> &[ComplexScalar] {
        &self.0
    }
}

impl TryFrom<Vec<ComplexScalar>> for CoefficientVector {
    type Error = FftError;

    fn try_from(v: Vec<ComplexScalar>) -> Result<Self> {
        Self::new(v)
    }
}

/// Evaluations `f(1), f(ω), …, f(ω^{n-1})` in natural order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<ComplexScalar>);

impl Spectrum {
    pub(crate) fn from_vec(values: Vec<ComplexScalar>) -> Self {
        Spectrum(values)
    }

    pub fn values(&self) -> &[ComplexScalar] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<ComplexScalar> {
        self.0
    }

    /// Largest per-element `|a - b|`; infinite when lengths differ.
    pub fn max_abs_diff(&self, other: &[ComplexScalar]) -> f64 {
        max_abs_diff(&self.0, other)
    }
}

impl Deref for Spectrum {
    type Target = [ComplexScalar];

    fn deref(&self) -> &[ComplexScalar] {
        &self.0
    }
}

pub fn max_abs_diff(a: &[ComplexScalar], b: &[ComplexScalar]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
