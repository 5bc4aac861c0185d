//! Command-line front end for the hfft transforms.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hfft::bench::run_bench;
use hfft::compare::{compare_with, random_coefficients, DEFAULT_TOLERANCE};
use hfft::io::{self as vio, Format};
use hfft::trace::{describe_coefficient, traced_transform};
use hfft::{
    Algorithm, BitWidth, CoefficientVector, ComplexScalar, Direction, FftError, TwiddleTable,
};

const AFTER_HELP: &str = "\
Sign convention: the forward transform evaluates at powers of w = e^{+2*pi*i/n}.
This is the opposite of FFTW, numpy and most numerical references, which use
e^{-2*pi*i/n}. Pass --conjugate to follow that convention instead.
The inverse direction uses the conjugate root and scales by 1/n.

Exit codes: 0 success, 1 verification failure, 2 input parse error,
3 constraint violation (e.g. a size that is not a power of two).";

#[derive(Parser, Debug)]
#[command(name = "hfft", version, about = "Radix-2 FFT variants, a Horner-rule DFT oracle, tracing and benchmarks", after_help = AFTER_HELP)]
struct Cli {
    /// Vector file format; inferred from the input extension when omitted.
    #[arg(long, global = true)]
    format: Option<Format>,

    /// Per-element absolute tolerance for comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Seed for generated inputs.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Use w = e^{-2*pi*i/n} for the forward direction.
    #[arg(long, global = true)]
    conjugate: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Transform a vector file.
    Dft(DftArgs),
    /// Check algorithms against the oracle and each other.
    Compare(CompareArgs),
    /// Print every pass of one algorithm.
    Trace(TraceArgs),
    /// Time algorithms and verify their operation counts.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct DftArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, default_value = "heuristic")]
    algo: Algorithm,
    #[arg(long, default_value = "forward", value_parser = parse_direction)]
    direction: Direction,
    /// Output file; stdout when omitted or `-`.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CompareArgs {
    #[arg(
        long,
        short,
        conflicts_with = "random",
        required_unless_present = "random"
    )]
    input: Option<PathBuf>,
    /// Generate `N` random values in [-1, 1] instead of reading a file.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, value_delimiter = ',', default_values = ["recursive", "bitpass", "heuristic"])]
    algos: Vec<Algorithm>,
    #[arg(long, default_value = "forward", value_parser = parse_direction)]
    direction: Direction,
    /// Perturb one algorithm's output (negative control for the checker).
    #[arg(long, hide = true)]
    corrupt: Option<Algorithm>,
}

#[derive(Args, Debug)]
struct TraceArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "bitpass")]
    algo: Algorithm,
    #[arg(long, short, conflicts_with = "basis")]
    input: Option<PathBuf>,
    /// Trace the unit vector e_M and print each slot as its coefficient of f_M.
    #[arg(long, value_name = "M")]
    basis: Option<usize>,
    /// Allow sizes above 64.
    #[arg(long)]
    force: bool,
    /// Emit JSON trace records instead of the slot table.
    #[arg(long)]
    records: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values = ["256", "1024", "4096"])]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_values = ["naive", "recursive", "bitpass", "heuristic"])]
    algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 5)]
    repetitions: usize,
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    match s.to_ascii_lowercase().as_str() {
        "forward" => Ok(Direction::Forward),
        "inverse" => Ok(Direction::Inverse),
        _ => Err(format!(
            "unknown direction `{s}` (expected forward or inverse)"
        )),
    }
}

/// A command failure and the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Verification(String),
    Parse(String),
    Constraint(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Constraint(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Parse(m) | Failure::Constraint(m) => m,
        }
    }
}

impl From<FftError> for Failure {
    fn from(e: FftError) -> Self {
        match e {
            FftError::NonFinite { .. } | FftError::EmptyInput => Failure::Parse(e.to_string()),
            _ => Failure::Constraint(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Appends one formatted line to a report buffer.
macro_rules! emit {
    ($buf:expr, $($arg:tt)*) => {{
        $buf.push_str(&format!($($arg)*));
        $buf.push('\n');
    }};
}

fn read_vector(
    path: &Path,
    format: Option<Format>,
) -> Result<(Vec<ComplexScalar>, Format), Failure> {
    let format = format.unwrap_or_else(|| Format::from_path(path));
    let mut text = String::new();
    let read = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
    let values = vio::parse(&text, format)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    if values.is_empty() {
        return Err(Failure::Parse(format!(
            "{}: vector is empty",
            path.display()
        )));
    }
    Ok((values, format))
}

fn write_output(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text)
            .map_err(|e| Failure::Constraint(format!("cannot write {}: {e}", p.display()))),
        _ => {
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn require_power_of_two(n: usize, algo: Algorithm) -> CmdResult {
    if algo != Algorithm::Naive && !(n >= 1 && n.is_power_of_two()) {
        return Err(Failure::Constraint(format!(
            "{algo} requires a power-of-two length n = 2^k, got {n}"
        )));
    }
    Ok(())
}

fn conj_all(v: &mut [ComplexScalar]) {
    v.iter_mut().for_each(|z| *z = z.conj());
}

/// Runs `algo`, honouring `--conjugate` by conjugating input and output.
fn run_transform(
    algo: Algorithm,
    mut values: Vec<ComplexScalar>,
    direction: Direction,
    conjugate: bool,
) -> Result<Vec<ComplexScalar>, Failure> {
    if conjugate {
        conj_all(&mut values);
    }
    let f = CoefficientVector::new(values)?;
    let tw = TwiddleTable::new(f.len(), direction)?;
    let mut out = hfft::transform(algo, &f, &tw)?.into_vec();
    if conjugate {
        conj_all(&mut out);
    }
    Ok(out)
}

fn cmd_dft(cli: &Cli, args: &DftArgs) -> CmdResult {
    let (values, format) = read_vector(&args.input, cli.format)?;
    require_power_of_two(values.len(), args.algo)?;
    let out = run_transform(args.algo, values, args.direction, cli.conjugate)?;
    write_output(args.output.as_deref(), &vio::serialize(&out, format))
}

fn cmd_compare(cli: &Cli, args: &CompareArgs) -> CmdResult {
    let values = match (&args.input, args.random) {
        (Some(path), _) => read_vector(path, cli.format)?.0,
        (None, Some(n)) => {
            if n == 0 {
                return Err(Failure::Constraint("--random needs n >= 1".into()));
            }
            random_coefficients(n, cli.seed)
        }
        (None, None) => unreachable!("clap requires --input or --random"),
    };
    let n = values.len();
    for &algo in &args.algos {
        require_power_of_two(n, algo)?;
    }
    let mut values = values;
    if cli.conjugate {
        conj_all(&mut values);
    }
    let f = CoefficientVector::new(values)?;
    let mut out = String::new();
    let report = compare_with(
        &f,
        &args.algos,
        args.direction,
        cli.tolerance,
        |algo, out| {
            if Some(algo) == args.corrupt {
                if let Some(z) = out.last_mut() {
                    *z += ComplexScalar::new(1e-3, 0.0);
                }
            }
        },
    )?;

    emit!(
        out,
        "n = {n}, seed = {}, direction = {}, tolerance = {:e}",
        cli.seed,
        args.direction,
        cli.tolerance
    );
    for d in &report.deviations {
        let status = if d.max_abs <= report.tolerance {
            "ok"
        } else {
            "FAIL"
        };
        emit!(
            out,
            "{:>10} vs {:<10} max |diff| = {:.3e}  {status}",
            d.algorithm.name(),
            d.reference.name(),
            d.max_abs
        );
    }
    let passed = report.passed();
    emit!(out, "{}", if passed { "PASS" } else { "FAIL" });
    write_output(None, &out)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "deviation {:.3e} exceeds tolerance {:e}",
            report.worst(),
            report.tolerance
        )))
    }
}

fn format_value(z: ComplexScalar) -> String {
    format!("{} {:+}i", z.re, z.im)
}

fn cmd_trace(cli: &Cli, args: &TraceArgs) -> CmdResult {
    if args.algo == Algorithm::Naive {
        return Err(Failure::Constraint(
            "trace supports recursive, bitpass and heuristic".into(),
        ));
    }
    let values = match (&args.input, args.basis) {
        (Some(path), _) => {
            let values = read_vector(path, cli.format)?.0;
            if let Some(n) = args.n.filter(|&n| n != values.len()) {
                return Err(Failure::Constraint(format!(
                    "--n {n} does not match input length {}",
                    values.len()
                )));
            }
            values
        }
        (None, basis) => {
            let n = args
                .n
                .ok_or_else(|| Failure::Constraint("--n is required without --input".into()))?;
            require_power_of_two(n, args.algo)?;
            let m = basis.unwrap_or(0);
            if m >= n {
                return Err(Failure::Constraint(format!(
                    "--basis {m} must be below n = {n}"
                )));
            }
            CoefficientVector::basis(n, m)?.into_vec()
        }
    };
    let n = values.len();
    require_power_of_two(n, args.algo)?;
    if n > 64 && !args.force {
        return Err(Failure::Constraint(format!(
            "n = {n} exceeds 64; pass --force for large traces"
        )));
    }

    let direction = if cli.conjugate {
        Direction::Inverse
    } else {
        Direction::Forward
    };
    let f = CoefficientVector::new(values)?;
    let tw = TwiddleTable::new(n, direction)?;
    let (_, trace) = traced_transform(&f, args.algo, &tw)?;

    if args.records {
        return write_output(None, &format!("{}\n", trace.to_json()));
    }

    let mut out = String::new();
    let symbolic = args.basis.is_some();
    let show = |z: ComplexScalar| {
        if symbolic {
            describe_coefficient(z, n)
        } else {
            format_value(z)
        }
    };
    let label = |s: String| if s.is_empty() { "-".to_string() } else { s };

    emit!(out, "# {} n = {n}", args.algo);
    for (p, snapshot) in trace.snapshots.iter().enumerate() {
        match p.checked_sub(1).map(|i| trace.counters[i]) {
            None => emit!(out, "pass 0 (load)"),
            Some(ops) => emit!(
                out,
                "pass {p} (additions {}, multiplications {})",
                ops.additions,
                ops.multiplications
            ),
        }
        for (i, &z) in snapshot.iter().enumerate() {
            emit!(out, "  {}: {}", label(trace.slot_label(p, i)), show(z));
        }
    }

    let k = BitWidth::for_len(n)?;
    emit!(out, "reversal");
    let last = trace.snapshots.last().expect("at least the load snapshot");
    for (i, &z) in last.iter().enumerate() {
        let j = hfft::bit_reverse_index(i, k)?;
        emit!(out, "  flat {i} -> spectrum {j}: {}", show(z));
    }
    let total = trace.total();
    emit!(
        out,
        "total additions {}, multiplications {}",
        total.additions,
        total.multiplications
    );
    write_output(None, &out)
}

fn cmd_bench(cli: &Cli, args: &BenchArgs) -> CmdResult {
    for &n in &args.sizes {
        if !(n >= 1 && n.is_power_of_two()) {
            return Err(Failure::Constraint(format!(
                "bench sizes must be powers of two, got {n}"
            )));
        }
    }
    if args.repetitions == 0 {
        return Err(Failure::Constraint(
            "--repetitions must be at least 1".into(),
        ));
    }
    let mut out = String::new();
    let rows = run_bench(&args.sizes, &args.algos, args.repetitions, cli.seed)?;
    emit!(
        out,
        "seed = {}, repetitions = {}",
        cli.seed,
        args.repetitions
    );
    emit!(
        out,
        "{:>10} {:>7} {:>14} {:>12} {:>12} {:>14}  counts",
        "algorithm",
        "n",
        "median",
        "additions",
        "expected",
        "multiplications"
    );
    let mut all_ok = true;
    for row in &rows {
        let ok = row.counts_ok();
        all_ok &= ok;
        emit!(
            out,
            "{:>10} {:>7} {:>14?} {:>12} {:>12} {:>14}  {}",
            row.algorithm.name(),
            row.n,
            row.median,
            row.ops.additions,
            row.expected_additions,
            row.ops.multiplications,
            if ok { "ok" } else { "MISMATCH" }
        );
    }
    write_output(None, &out)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verification(
            "operation counts differ from k*n / n(n-1)".into(),
        ))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Dft(a) => cmd_dft(&cli, a),
        Command::Compare(a) => cmd_compare(&cli, a),
        Command::Trace(a) => cmd_trace(&cli, a),
        Command::Bench(a) => cmd_bench(&cli, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
