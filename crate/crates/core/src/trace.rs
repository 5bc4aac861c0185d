//! Operation counters, per-pass snapshots and the n = 8 golden check.
//!
//! Counting granularity: one complex addition or subtraction is one addition,
//! one complex-by-complex product is one multiplication (including products
//! with `ω^0 = 1`). Real scalings such as the inverse `1/n` are not counted.
//! Counters are passed explicitly; there is no global state.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitpass;
use crate::error::{FftError, Result};
use crate::heuristic;
use crate::numerics::{
    make_twiddles, permute_in_place, CoefficientVector, ComplexScalar, Direction, Spectrum,
    TwiddleTable,
};
use crate::recursive::{self, RecursionLog};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpCounter {
    pub additions: u64,
    pub multiplications: u64,
}

impl OpCounter {
    #[inline]
    pub fn tally_add(&mut self, count: u64) {
        self.additions += count;
    }

    #[inline]
    pub fn tally_mul(&mut self, count: u64) {
        self.multiplications += count;
    }

    pub fn reset(&mut self) {
        *self = OpCounter::default();
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.additions += rhs.additions;
        self.multiplications += rhs.multiplications;
    }
}

impl Add for OpCounter {
    type Output = OpCounter;

    fn add(mut self, rhs: Self) -> OpCounter {
        self += rhs;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Naive,
    Recursive,
    Bitpass,
    Heuristic,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Naive,
        Algorithm::Recursive,
        Algorithm::Bitpass,
        Algorithm::Heuristic,
    ];

    pub const FAST: [Algorithm; 3] = [
        Algorithm::Recursive,
        Algorithm::Bitpass,
        Algorithm::Heuristic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Recursive => "recursive",
            Algorithm::Bitpass => "bitpass",
            Algorithm::Heuristic => "heuristic",
        }
    }

    /// Expected complex additions for size `n` (`n = 2^k` for the fast variants).
    pub fn expected_additions(self, n: usize) -> u64 {
        let n = n as u64;
        match self {
            Algorithm::Naive => n * n.saturating_sub(1),
            _ => n * u64::from(n.max(1).trailing_zeros()),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown algorithm `{s}` (expected naive, recursive, bitpass or heuristic)")
            })
    }
}

/// Intermediate values of one traced transform.
///
/// `snapshots[0]` is the input and `snapshots[p]` the state after pass `p`
/// (for the recursive algorithm: the concatenated subproblem inputs at depth
/// `p`, ordered by recursion path). The last snapshot, bit-reversed, is the
/// unscaled spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct PassTrace {
    pub algorithm: Algorithm,
    pub n: usize,
    pub snapshots: Vec<Vec<ComplexScalar>>,
    /// Tally of pass `p` at index `p - 1`.
    pub counters: Vec<OpCounter>,
    /// Whether pass `p` wrote every output slot exactly once (index `p - 1`).
    pub write_once: Vec<bool>,
}

/// One slot of one pass, in the stable serialized layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub algorithm: String,
    pub n: usize,
    pub pass: usize,
    pub slot_label: String,
    pub value_re: f64,
    pub value_im: f64,
}

fn bits_string(value: usize, width: usize) -> String {
    if width == 0 {
        String::new()
    } else {
        format!("{value:0width$b}")
    }
}

impl PassTrace {
    pub fn bits(&self) -> u32 {
        self.n.trailing_zeros()
    }

    pub fn passes(&self) -> usize {
        self.snapshots.len() - 1
    }

    /// Label of flat slot `i` in snapshot `pass`.
    ///
    /// Bit-pass and heuristic slots are labelled by their `k`-bit address.
    /// Recursive slots are `path/offset`: the `pass` branch bits (`0` = r0,
    /// `1` = r1*) followed by the offset within that subproblem.
    pub fn slot_label(&self, pass: usize, i: usize) -> String {
        let k = self.bits() as usize;
        match self.algorithm {
            Algorithm::Recursive => {
                let offset_bits = k - pass;
                format!(
                    "{}/{}",
                    bits_string(i >> offset_bits, pass),
                    bits_string(i & ((1 << offset_bits) - 1), offset_bits)
                )
            }
            _ => bits_string(i, k),
        }
    }

    /// The final snapshot moved to natural order.
    pub fn reordered_final(&self) -> Vec<ComplexScalar> {
        let mut last = self.snapshots.last().cloned().unwrap_or_default();
        permute_in_place(&mut last, self.bits());
        last
    }

    pub fn total(&self) -> OpCounter {
        self.counters
            .iter()
            .fold(OpCounter::default(), |acc, &c| acc + c)
    }

    pub fn records(&self) -> Vec<TraceRecord> {
        self.snapshots
            .iter()
            .enumerate()
            .flat_map(|(pass, values)| {
                values.iter().enumerate().map(move |(i, v)| TraceRecord {
                    algorithm: self.algorithm.name().to_string(),
                    n: self.n,
                    pass,
                    slot_label: self.slot_label(pass, i),
                    value_re: v.re,
                    value_im: v.im,
                })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.records()).expect("trace records serialize")
    }
}

/// Runs `algorithm` while capturing every pass; the spectrum is bit-identical
/// to the untraced run.
pub fn traced_transform(
    f: &CoefficientVector,
    algorithm: Algorithm,
    tw: &TwiddleTable,
) -> Result<(Spectrum, PassTrace)> {
    let n = f.len();
    let k = f.bit_width()?.bits();
    let mut ops = OpCounter::default();
    let mut snapshots = vec![f.to_vec()];
    let mut counters = Vec::with_capacity(k as usize);
    let mut write_once = Vec::with_capacity(k as usize);

    let spectrum = match algorithm {
        Algorithm::Naive => return Err(FftError::Untraceable("naive")),
        Algorithm::Recursive => {
            let mut log = RecursionLog::new(n, k);
            let s = recursive::run(f, tw, &mut ops, Some(&mut log))?;
            snapshots = log.levels;
            counters = log.counters;
            write_once = vec![true; k as usize];
            s
        }
        Algorithm::Bitpass => {
            let mut observe =
                |_p: usize, values: &[ComplexScalar], pass_ops: OpCounter, once: bool| {
                    snapshots.push(values.to_vec());
                    counters.push(pass_ops);
                    write_once.push(once);
                };
            let (width, mut values) = bitpass::run_passes(f, tw, &mut ops, Some(&mut observe))?;
            permute_in_place(&mut values, width.bits());
            scale(&mut values, tw);
            Spectrum::from_vec(values)
        }
        Algorithm::Heuristic => {
            let mut buf = f.to_vec();
            let mut observe = |_p: usize, values: &[ComplexScalar], pass_ops: OpCounter| {
                snapshots.push(values.to_vec());
                counters.push(pass_ops);
            };
            let width = heuristic::passes_in_place(&mut buf, tw, &mut ops, Some(&mut observe))?;
            write_once = vec![true; k as usize];
            permute_in_place(&mut buf, width.bits());
            scale(&mut buf, tw);
            Spectrum::from_vec(buf)
        }
    };

    let trace = PassTrace {
        algorithm,
        n,
        snapshots,
        counters,
        write_once,
    };
    Ok((spectrum, trace))
}

fn scale(values: &mut [ComplexScalar], tw: &TwiddleTable) {
    if let Some(s) = tw.scale() {
        values.iter_mut().for_each(|v| *v *= s);
    }
}

/// Renders a basis-probe coefficient as `0`, `±1` or `±ω^e` (with `e < n/2`)
/// when it is numerically a signed power of `ω = e^{2πi/n}`, otherwise as a
/// plain complex number.
pub fn describe_coefficient(z: ComplexScalar, n: usize) -> String {
    const TOL: f64 = 1e-9;
    if z.norm() < TOL {
        return "0".to_string();
    }
    let half = (n / 2).max(1);
    for e in 0..half {
        let t = 2.0 * PI * e as f64 / n as f64;
        let w = ComplexScalar::new(t.cos(), t.sin());
        for (sign, target) in [("+", w), ("-", -w)] {
            if (z - target).norm() < TOL {
                return match e {
                    0 => format!("{sign}1"),
                    1 => format!("{sign}ω"),
                    _ => format!("{sign}ω^{e}"),
                };
            }
        }
    }
    format!("{:+}{:+}i", z.re, z.im)
}

/// A polynomial in `f_0 … f_7` with complex coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Sym([ComplexScalar; 8]);

/// A power of `ω = e^{2πi/8}`, evaluated directly from its angle.
#[derive(Debug, Clone, Copy)]
struct Root(usize);

fn var(i: usize) -> Sym {
    let mut c = [ComplexScalar::default(); 8];
    c[i] = ComplexScalar::new(1.0, 0.0);
    Sym(c)
}

impl Root {
    fn value(self) -> ComplexScalar {
        let t = 2.0 * PI * (self.0 % 8) as f64 / 8.0;
        ComplexScalar::new(t.cos(), t.sin())
    }
}

impl Add for Sym {
    type Output = Sym;
    fn add(self, rhs: Sym) -> Sym {
        Sym(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Sym {
    type Output = Sym;
    fn sub(self, rhs: Sym) -> Sym {
        Sym(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Mul<Sym> for Root {
    type Output = Sym;
    fn mul(self, rhs: Sym) -> Sym {
        let w = self.value();
        Sym(rhs.0.map(|c| c * w))
    }
}

/// The worked size-8 expansions of the bit-indexed passes, slot by slot
/// (`[pass - 1][label]`), plus the evaluation exponent realized by each
/// final slot.
fn worked_example() -> ([[Sym; 8]; 3], [usize; 8]) {
    let f = var;
    let w = Root;

    let pass1 = [
        f(0) + f(4), // 000
        f(1) + f(5), // 001
        f(2) + f(6), // 010
        f(3) + f(7), // 011
        f(0) - f(4), // 100
        f(1) - f(5), // 101
        f(2) - f(6), // 110
        f(3) - f(7), // 111
    ];

    let pass2 = [
        (f(0) + f(4)) + (f(2) + f(6)),
        (f(1) + f(5)) + (f(3) + f(7)),
        (f(0) + f(4)) - (f(2) + f(6)),
        (f(1) + f(5)) - (f(3) + f(7)),
        (f(0) - f(4)) + w(2) * (f(2) - f(6)),
        (f(1) - f(5)) + w(2) * (f(3) - f(7)),
        (f(0) - f(4)) - w(2) * (f(2) - f(6)),
        (f(1) - f(5)) - w(2) * (f(3) - f(7)),
    ];

    let pass3 = [
        ((f(0) + f(4)) + (f(2) + f(6))) + ((f(1) + f(5)) + (f(3) + f(7))),
        ((f(0) + f(4)) + (f(2) + f(6))) - ((f(1) + f(5)) + (f(3) + f(7))),
        ((f(0) + f(4)) - (f(2) + f(6))) + w(2) * ((f(1) + f(5)) - (f(3) + f(7))),
        ((f(0) + f(4)) - (f(2) + f(6))) - w(2) * ((f(1) + f(5)) - (f(3) + f(7))),
        ((f(0) - f(4)) + w(2) * (f(2) - f(6))) + w(1) * ((f(1) - f(5)) + w(2) * (f(3) - f(7))),
        ((f(0) - f(4)) + w(2) * (f(2) - f(6))) - w(1) * ((f(1) - f(5)) + w(2) * (f(3) - f(7))),
        ((f(0) - f(4)) - w(2) * (f(2) - f(6))) + w(3) * ((f(1) - f(5)) - w(2) * (f(3) - f(7))),
        ((f(0) - f(4)) - w(2) * (f(2) - f(6))) - w(3) * ((f(1) - f(5)) - w(2) * (f(3) - f(7))),
    ];

    // A[3](000) = f(1), A[3](001) = f(ω^4), …
    let points = [0, 4, 2, 6, 1, 5, 3, 7];

    ([pass1, pass2, pass3], points)
}

/// The two remainders of the size-8 example as coefficient lists.
fn worked_remainders() -> [Sym; 8] {
    let f = var;
    let w = Root;
    [
        f(0) + f(4),
        f(1) + f(5),
        f(2) + f(6),
        f(3) + f(7),
        f(0) - f(4),
        w(1) * (f(1) - f(5)),
        w(2) * (f(2) - f(6)),
        w(3) * (f(3) - f(7)),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenMismatch {
    /// `m` of the basis probe `e_m`.
    pub probe: usize,
    /// `A1`, `A2`, `A3`, `readout` or `H1` (heuristic pass 1).
    pub stage: String,
    pub slot_label: String,
    pub expected: ComplexScalar,
    pub actual: ComplexScalar,
}

impl fmt::Display for GoldenMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "probe e_{} {}({}): expected {}, got {}",
            self.probe, self.stage, self.slot_label, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GoldenReport {
    pub probes: usize,
    pub checks: usize,
    pub failures: usize,
    pub first_mismatch: Option<GoldenMismatch>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }

    fn check(
        &mut self,
        probe: usize,
        stage: &str,
        label: String,
        expected: ComplexScalar,
        actual: ComplexScalar,
    ) {
        const TOL: f64 = 1e-12;
        self.checks += 1;
        if (expected - actual).norm() > TOL {
            self.failures += 1;
            self.first_mismatch.get_or_insert(GoldenMismatch {
                probe,
                stage: stage.to_string(),
                slot_label: label,
                expected,
                actual,
            });
        }
    }
}

impl fmt::Display for GoldenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} probes, {} slot checks, {} failures",
            self.probes, self.checks, self.failures
        )?;
        if let Some(m) = &self.first_mismatch {
            write!(f, "; first mismatch: {m}")?;
        }
        Ok(())
    }
}

/// Probes the size-8 bit-pass trace with every unit vector `e_m` and checks each
/// pass-1..3 slot against the coefficient of `f_m` in the worked expansions,
/// each final slot against its evaluation point, and the heuristic pass-1
/// blocks against the two remainders.
pub fn golden_trace_check() -> GoldenReport {
    golden_trace_check_with(|f, algorithm, tw| traced_transform(f, algorithm, tw).map(|(_, t)| t))
}

pub(crate) fn golden_trace_check_with(
    mut trace_of: impl FnMut(&CoefficientVector, Algorithm, &TwiddleTable) -> Result<PassTrace>,
) -> GoldenReport {
    const N: usize = 8;
    let tw = make_twiddles(N, Direction::Forward).expect("size 8 is valid");
    let (passes, points) = worked_example();
    let remainders = worked_remainders();
    let mut report = GoldenReport {
        probes: N,
        ..GoldenReport::default()
    };

    for m in 0..N {
        let probe = CoefficientVector::basis(N, m).expect("basis probe");
        let label = |i: usize| bits_string(i, 3);

        match trace_of(&probe, Algorithm::Bitpass, &tw) {
            Ok(trace) => {
                for (p, slots) in passes.iter().enumerate() {
                    for (i, expr) in slots.iter().enumerate() {
                        let actual = trace.snapshots[p + 1][i];
                        report.check(m, &format!("A{}", p + 1), label(i), expr.0[m], actual);
                    }
                }
                for (i, &point) in points.iter().enumerate() {
                    let expected = Root(point * m).value();
                    report.check(m, "readout", label(i), expected, trace.snapshots[3][i]);
                }
            }
            Err(_) => report.failures += 1,
        }

        match trace_of(&probe, Algorithm::Heuristic, &tw) {
            Ok(trace) => {
                for (i, expr) in remainders.iter().enumerate() {
                    report.check(m, "H1", label(i), expr.0[m], trace.snapshots[1][i]);
                }
            }
            Err(_) => report.failures += 1,
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn counter_arithmetic() {
        let mut a = OpCounter::default();
        a.tally_add(3);
        a.tally_mul(2);
        let b = a + a;
        assert_eq!(
            b,
            OpCounter {
                additions: 6,
                multiplications: 4
            }
        );
        a.reset();
        assert_eq!(a, OpCounter::default());
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>(), Ok(a));
        }
        assert_eq!("HEURISTIC".parse::<Algorithm>(), Ok(Algorithm::Heuristic));
        assert!("radix4".parse::<Algorithm>().is_err());
        assert_eq!(Algorithm::Naive.expected_additions(256), 65280);
        assert_eq!(Algorithm::Heuristic.expected_additions(1024), 10240);
        assert_eq!(Algorithm::Bitpass.expected_additions(1), 0);
    }

    #[test]
    fn bitpass_trace_shape_and_slot() {
        let f = CoefficientVector::new((0..8).map(|i| c(i as f64, 0.0)).collect()).unwrap();
        let tw = make_twiddles(8, Direction::Forward).unwrap();
        let (_, trace) = traced_transform(&f, Algorithm::Bitpass, &tw).unwrap();
        assert_eq!(trace.snapshots.len(), 4);
        assert_eq!(trace.snapshots[0], f.to_vec());
        assert_eq!(trace.snapshots[1][0b100], f[0] - f[4]);
        assert!(trace.write_once.iter().all(|&w| w));
        assert_eq!(trace.slot_label(1, 0b100), "100");
    }

    #[test]
    fn heuristic_trace_of_single_point() {
        let f = CoefficientVector::new(vec![c(2.0, 3.0)]).unwrap();
        let tw = make_twiddles(1, Direction::Forward).unwrap();
        let (s, trace) = traced_transform(&f, Algorithm::Heuristic, &tw).unwrap();
        assert_eq!(trace.snapshots, vec![vec![c(2.0, 3.0)]]);
        assert_eq!(s.values(), &[c(2.0, 3.0)]);
        assert_eq!(trace.records().len(), 1);
        assert_eq!(trace.records()[0].slot_label, "");
    }

    #[test]
    fn recursive_labels() {
        let f = CoefficientVector::new(vec![c(1.0, 0.0); 8]).unwrap();
        let tw = make_twiddles(8, Direction::Forward).unwrap();
        let (_, trace) = traced_transform(&f, Algorithm::Recursive, &tw).unwrap();
        assert_eq!(trace.slot_label(0, 5), "/101");
        assert_eq!(trace.slot_label(1, 5), "1/01");
        assert_eq!(trace.slot_label(3, 5), "101/");
    }

    #[test]
    fn naive_is_not_traceable() {
        let f = CoefficientVector::new(vec![c(1.0, 0.0); 2]).unwrap();
        let tw = make_twiddles(2, Direction::Forward).unwrap();
        assert_eq!(
            traced_transform(&f, Algorithm::Naive, &tw).unwrap_err(),
            FftError::Untraceable("naive")
        );
    }

    #[test]
    fn coefficient_descriptions() {
        assert_eq!(describe_coefficient(c(1.0, 0.0), 8), "+1");
        assert_eq!(describe_coefficient(c(-1.0, 0.0), 8), "-1");
        assert_eq!(describe_coefficient(c(0.0, -1.0), 8), "-ω^2");
        assert_eq!(describe_coefficient(c(0.0, 0.0), 8), "0");
        let h = 0.5f64.sqrt();
        assert_eq!(describe_coefficient(c(h, h), 8), "+ω");
        assert_eq!(describe_coefficient(c(-h, h), 8), "+ω^3");
        assert_eq!(describe_coefficient(c(0.3, 0.0), 8), "+0.3+0i");
    }

    #[test]
    fn worked_example_expansions_spot_checks() {
        let (passes, _) = worked_example();
        // A[3](011): coefficient of f0 is +1
        assert!((passes[2][0b011].0[0] - c(1.0, 0.0)).norm() < 1e-15);
        // A[2](100) = (f0-f4) + ω²(f2-f6): coefficient of f6 is -ω² = -i
        assert!((passes[1][0b100].0[6] - c(0.0, -1.0)).norm() < 1e-15);
        // A[3](110): coefficient of f2 is -ω²
        assert!((passes[2][0b110].0[2] - c(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn golden_check_passes() {
        let report = golden_trace_check();
        assert!(report.passed(), "{report}");
        // 8 probes × (24 pass slots + 8 readout slots + 8 heuristic slots)
        assert_eq!(report.checks, 8 * 40);
    }

    #[test]
    fn golden_check_reports_first_mismatch() {
        let report = golden_trace_check_with(|f, a, tw| {
            let (_, mut trace) = traced_transform(f, a, tw)?;
            if a == Algorithm::Bitpass {
                trace.snapshots[2][0b110] += c(0.5, 0.0);
            }
            Ok(trace)
        });
        assert!(!report.passed());
        let m = report.first_mismatch.unwrap();
        assert_eq!(
            (m.probe, m.stage.as_str(), m.slot_label.as_str()),
            (0, "A2", "110")
        );
    }
}
