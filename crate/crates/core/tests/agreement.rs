//! Cross-checks between the oracle and the three fast transforms, and between
//! the intermediate states of the pass-based algorithms.

use hfft::bitpass::{bitpass_step, bitpass_unordered, PassArray};
use hfft::compare::{random_coefficients, scaled_tolerance};
use hfft::heuristic::{fft_heuristic_in_place, heuristic_pass, heuristic_unordered, BlockState};
use hfft::oracle::naive_dft;
use hfft::trace::traced_transform;
use hfft::{
    bit_reverse_index, make_twiddles, transform, transform_counted, Algorithm, BitWidth,
    CoefficientVector, Direction, OpCounter,
};

fn input(n: usize, seed: u64) -> CoefficientVector {
    CoefficientVector::new(random_coefficients(n, seed)).unwrap()
}

#[test]
fn every_algorithm_matches_the_oracle() {
    for direction in [Direction::Forward, Direction::Inverse] {
        for k in 0..=10u32 {
            let n = 1usize << k;
            let tw = make_twiddles(n, direction).unwrap();
            for seed in 0..8 {
                let f = input(n, seed);
                let reference = naive_dft(&f, direction).unwrap();
                let tol = scaled_tolerance(1e-9, &f);
                for algo in Algorithm::FAST {
                    let out = transform(algo, &f, &tw).unwrap();
                    let dev = out.max_abs_diff(&reference);
                    assert!(dev <= tol, "{algo} n={n} {direction}: {dev:e}");
                }
            }
        }
    }
}

#[test]
fn fast_algorithms_agree_closely() {
    for k in 0..=12u32 {
        let n = 1usize << k;
        let tw = make_twiddles(n, Direction::Forward).unwrap();
        let f = input(n, 1000 + k as u64);
        let outs: Vec<_> = Algorithm::FAST
            .iter()
            .map(|&a| transform(a, &f, &tw).unwrap())
            .collect();
        for i in 0..outs.len() {
            for j in i + 1..outs.len() {
                let dev = outs[i].max_abs_diff(&outs[j]);
                assert!(dev <= 1e-12, "n={n} pair ({i},{j}): {dev:e}");
            }
        }
    }
}

/// Heuristic block `b` of pass `p` is the bit-pass slice with leading bits `b`
/// twisted by `ω^{r·t}`, where `r` is `b` reversed over `p` bits.
#[test]
fn heuristic_blocks_are_twisted_bitpass_slices() {
    for k in 0..=6u32 {
        let n = 1usize << k;
        let tw = make_twiddles(n, Direction::Forward).unwrap();
        let f = input(n, 7 + k as u64);
        let mut array = PassArray::load(&f).unwrap();
        let mut state = BlockState::load(&f).unwrap();
        for p in 1..=k as usize {
            array = bitpass_step(&array, p, &tw).unwrap();
            state = heuristic_pass(state, p, &tw).unwrap();
            let m = n >> p;
            for (b, block) in state.blocks().enumerate() {
                let r = bit_reverse_index(b, BitWidth::new(p as u32)).unwrap();
                for (t, &g) in block.iter().enumerate() {
                    let a = array.get((b << (k as usize - p)) | t).unwrap();
                    let want = a * tw.power(r * t);
                    assert!((g - want).norm() <= 1e-12, "n={n} p={p} block={b} t={t}");
                }
                assert_eq!(block.len(), m);
            }
        }
    }
}

#[test]
fn unordered_outputs_are_bit_reversed_spectra() {
    for k in 0..=8u32 {
        let n = 1usize << k;
        let w = BitWidth::new(k);
        let tw = make_twiddles(n, Direction::Forward).unwrap();
        let f = input(n, 99);
        for (algo, raw) in [
            (Algorithm::Bitpass, bitpass_unordered(&f, &tw).unwrap()),
            (Algorithm::Heuristic, heuristic_unordered(&f, &tw).unwrap()),
        ] {
            let spectrum = transform(algo, &f, &tw).unwrap();
            for (i, v) in raw.iter().enumerate() {
                assert_eq!(
                    *v,
                    spectrum[bit_reverse_index(i, w).unwrap()],
                    "{algo} n={n} i={i}"
                );
            }
        }
    }
}

#[test]
fn in_place_heuristic_is_bit_exact() {
    for k in 0..=10u32 {
        let n = 1usize << k;
        let tw = make_twiddles(n, Direction::Forward).unwrap();
        let f = input(n, 5);
        let mut buf = f.to_vec();
        let mut ops = OpCounter::default();
        fft_heuristic_in_place(&mut buf, &tw, &mut ops).unwrap();
        assert_eq!(
            buf,
            transform(Algorithm::Heuristic, &f, &tw).unwrap().into_vec()
        );
        assert_eq!(ops.additions, k as u64 * n as u64);
    }
}

#[test]
fn tracing_does_not_change_results() {
    for case in 0..100u64 {
        let k = (case % 9) as u32;
        let n = 1usize << k;
        let f = input(n, 300 + case);
        for direction in [Direction::Forward, Direction::Inverse] {
            let tw = make_twiddles(n, direction).unwrap();
            for algo in Algorithm::FAST {
                let plain = transform(algo, &f, &tw).unwrap();
                let (traced, _) = traced_transform(&f, algo, &tw).unwrap();
                assert_eq!(traced, plain, "{algo} n={n}");
            }
        }
    }
}

#[test]
fn trace_structure() {
    for k in 0..=8u32 {
        let n = 1usize << k;
        let tw = make_twiddles(n, Direction::Forward).unwrap();
        let f = input(n, 11);
        for algo in Algorithm::FAST {
            let (spectrum, trace) = traced_transform(&f, algo, &tw).unwrap();
            assert_eq!(trace.passes(), k as usize);
            assert_eq!(trace.snapshots[0], f.to_vec());
            assert!(trace.write_once.iter().all(|&w| w), "{algo}");
            for ops in &trace.counters {
                assert_eq!(ops.additions, n as u64, "{algo} n={n}");
            }
            let mut total = OpCounter::default();
            transform_counted(algo, &f, &tw, &mut total).unwrap();
            assert_eq!(trace.total(), total);
            assert_eq!(trace.reordered_final(), spectrum.into_vec(), "{algo}");
        }
    }
}

#[test]
fn counts_are_deterministic() {
    let tw = make_twiddles(512, Direction::Forward).unwrap();
    for algo in Algorithm::ALL {
        let counts: Vec<_> = (0..3)
            .map(|seed| {
                let mut ops = OpCounter::default();
                transform_counted(algo, &input(512, seed), &tw, &mut ops).unwrap();
                ops
            })
            .collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{algo}");
    }
}
