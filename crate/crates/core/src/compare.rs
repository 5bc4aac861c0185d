//! Cross-checks of the fast transforms against the oracle and each other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::numerics::{max_abs_diff, CoefficientVector, ComplexScalar, Direction, TwiddleTable};
use crate::trace::Algorithm;

/// Default per-element absolute tolerance for unit-scale inputs.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `n` values with real and imaginary parts uniform in `[-1, 1]`.
pub fn random_coefficients(n: usize, seed: u64) -> Vec<ComplexScalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| ComplexScalar::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0)))
        .collect()
}

/// Oracle tolerance that grows linearly with size and input magnitude:
/// `base · max(1, max|f_i| · n)`.
pub fn scaled_tolerance(base: f64, f: &[ComplexScalar]) -> f64 {
    let scale = f.iter().map(|z| z.norm()).fold(0.0, f64::max);
    base * (scale * f.len() as f64).max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Deviation {
    pub algorithm: Algorithm,
    pub reference: Algorithm,
    pub max_abs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport {
    pub n: usize,
    pub tolerance: f64,
    pub deviations: Vec<Deviation>,
}

impl CompareReport {
    pub fn passed(&self) -> bool {
        self.deviations.iter().all(|d| d.max_abs <= self.tolerance)
    }

    pub fn worst(&self) -> f64 {
        self.deviations
            .iter()
            .map(|d| d.max_abs)
            .fold(0.0, f64::max)
    }
}

/// Runs each algorithm in `algorithms` (the oracle is always the reference)
/// and reports deviations from the oracle and between every pair.
pub fn compare_algorithms(
    f: &CoefficientVector,
    algorithms: &[Algorithm],
    direction: Direction,
    tolerance: f64,
) -> Result<CompareReport> {
    compare_with(f, algorithms, direction, tolerance, |_, _| {})
}

/// As [`compare_algorithms`], letting `tamper` edit each output before it is
/// compared. Used to confirm that a broken algorithm is caught.
pub fn compare_with(
    f: &CoefficientVector,
    algorithms: &[Algorithm],
    direction: Direction,
    tolerance: f64,
    mut tamper: impl FnMut(Algorithm, &mut Vec<ComplexScalar>),
) -> Result<CompareReport> {
    let tw = TwiddleTable::new(f.len(), direction)?;
    let reference = crate::transform(Algorithm::Naive, f, &tw)?.into_vec();

    let mut outputs: Vec<(Algorithm, Vec<ComplexScalar>)> = Vec::new();
    for &algo in algorithms {
        if algo == Algorithm::Naive || outputs.iter().any(|(a, _)| *a == algo) {
            continue;
        }
        let mut out = crate::transform(algo, f, &tw)?.into_vec();
        tamper(algo, &mut out);
        outputs.push((algo, out));
    }

    let mut deviations = Vec::new();
    for (algo, out) in &outputs {
        deviations.push(Deviation {
            algorithm: *algo,
            reference: Algorithm::Naive,
            max_abs: max_abs_diff(out, &reference),
        });
    }
    for (i, (a, out_a)) in outputs.iter().enumerate() {
        for (b, out_b) in &outputs[i + 1..] {
            deviations.push(Deviation {
                algorithm: *a,
                reference: *b,
                max_abs: max_abs_diff(out_a, out_b),
            });
        }
    }
    Ok(CompareReport {
        n: f.len(),
        tolerance,
        deviations,
    })
}
