//! Wall-clock timing with operation-count verification.

use std::time::{Duration, Instant};

use crate::compare::random_coefficients;
use crate::error::Result;
use crate::numerics::{CoefficientVector, Direction, TwiddleTable};
use crate::trace::{Algorithm, OpCounter};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub n: usize,
    pub median: Duration,
    pub ops: OpCounter,
    pub expected_additions: u64,
}

impl BenchRow {
    /// Counted additions match `k·n` (fast) or `n(n-1)` (oracle), and the
    /// oracle's multiplications match `n(n-1)`.
    pub fn counts_ok(&self) -> bool {
        let adds = self.ops.additions == self.expected_additions;
        match self.algorithm {
            Algorithm::Naive => adds && self.ops.multiplications == self.expected_additions,
            _ => adds,
        }
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 0 {
        (samples[mid - 1] + samples[mid]) / 2
    } else {
        samples[mid]
    }
}

/// Times every `(algorithm, size)` pair `repetitions` times on seeded random
/// input. Twiddle tables are built outside the timed region.
pub fn run_bench(
    sizes: &[usize],
    algorithms: &[Algorithm],
    repetitions: usize,
    seed: u64,
) -> Result<Vec<BenchRow>> {
    let repetitions = repetitions.max(1);
    let mut rows = Vec::new();
    for &n in sizes {
        crate::numerics::BitWidth::for_len(n)?;
        let f = CoefficientVector::new(random_coefficients(n, seed))?;
        let tw = TwiddleTable::new(n, Direction::Forward)?;
        for &algorithm in algorithms {
            let mut ops = OpCounter::default();
            crate::transform_counted(algorithm, &f, &tw, &mut ops)?;
            let mut samples = Vec::with_capacity(repetitions);
            for _ in 0..repetitions {
                let start = Instant::now();
                let out = crate::transform(algorithm, &f, &tw)?;
                samples.push(start.elapsed());
                std::hint::black_box(out);
            }
            rows.push(BenchRow {
                algorithm,
                n,
                median: median(samples),
                ops,
                expected_additions: algorithm.expected_additions(n),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_even_and_odd() {
        let ms = Duration::from_millis;
        assert_eq!(median(vec![ms(3), ms(1), ms(2)]), ms(2));
        assert_eq!(
            median(vec![ms(4), ms(1), ms(2), ms(3)]),
            Duration::from_micros(2500)
        );
    }

    #[test]
    fn counts_are_verified() {
        let rows = run_bench(&[256, 1024], &Algorithm::ALL, 1, 3).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(BenchRow::counts_ok));
        let naive = rows
            .iter()
            .find(|r| r.algorithm == Algorithm::Naive && r.n == 256)
            .unwrap();
        assert_eq!(naive.ops.multiplications, 65280);
        let heur = rows
            .iter()
            .find(|r| r.algorithm == Algorithm::Heuristic && r.n == 1024)
            .unwrap();
        assert_eq!(heur.ops.additions, 10240);
    }

    #[test]
    fn rejects_non_power_of_two() {
        assert!(run_bench(&[12], &[Algorithm::Heuristic], 1, 0).is_err());
    }
}
