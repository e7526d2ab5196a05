//! Command line front end for the hybrid code toolkit.
//!
//! Every command prints human-oriented detail lines first and finishes with
//! a single machine-readable `RESULT ok=<bool> ...` line (see
//! [`report::ResultLine`]).  Exit codes: `0` when the command ran and its
//! mathematical verdict is positive, `1` when it ran and the verdict is
//! negative (a condition violated, a bound broken, a sweep failure, an
//! empty search), `2` for anything that prevented a verdict — usage
//! errors, unparseable input, capacity guards, failed preconditions.
//!
//! The entry point [`run_with_output`] takes the argument list and output
//! streams explicitly so the whole interface is testable in-process.

pub mod report;

use std::io::Write;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use hyqec::circuit::{
    self, decode_circuit, decode_circuit_corrected, encode_circuit, DecoderSet,
};
use hyqec::code::{demo_code, simple_code, HybridCode};
use hyqec::pauli::PauliString;
use hyqec::search::{self, SearchSpec};
use hyqec::state::StateVector;
use hyqec::verify::{self, check_operator_form, check_vector_form, ErrorSetSpec, Verdict};
use hyqec::{bounds, CHECK_TOL};
use report::ResultLine;

#[derive(Parser)]
#[command(
    name = "hyqec",
    version,
    about = "Verify, bound, simulate and discover hybrid quantum-classical codes",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the error-correction conditions of a code against an error set.
    Verify(VerifyArgs),
    /// Evaluate packing bounds in exact integer arithmetic.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Find the smallest error weight a code fails to detect.
    Distance(DistanceArgs),
    /// Report whether a code corrects an error set degenerately.
    Degeneracy(DegeneracyArgs),
    /// Run the built-in encoder and decoders with injected errors.
    #[command(subcommand)]
    Simulate(SimulateCommand),
    /// Enumerate small codes satisfying an error-correction spec.
    Search(SearchArgs),
    /// Print a built-in circuit in the line format.
    DumpCircuit(DumpCircuitArgs),
}

/// `--code` accepts the built-in names `demo` (the four-qubit hybrid code)
/// and `simple` (the two-qubit basis split), or a path to a code file.
fn load_code(name: &str) -> anyhow::Result<HybridCode> {
    match name {
        "demo" => Ok(demo_code()),
        "simple" => Ok(simple_code()),
        path => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading code file '{path}'"))?;
            Ok(HybridCode::parse_str(&text)?)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormChoice {
    Vector,
    Operator,
    Both,
}

#[derive(Args)]
struct VerifyArgs {
    /// Code to check: `demo`, `simple`, or a file path.
    #[arg(long)]
    code: String,
    /// Error set, e.g. `detect:single,Z1Z2` or `correct:X1,Z1`.
    #[arg(long)]
    errors: String,
    /// Which formulation of the condition to evaluate.
    #[arg(long, value_enum, default_value = "vector")]
    form: FormChoice,
    /// Also print every block scalar that was extracted.
    #[arg(long)]
    show_alphas: bool,
}

#[derive(Args)]
struct DistanceArgs {
    /// Code to measure: `demo`, `simple`, or a file path.
    #[arg(long)]
    code: String,
}

#[derive(Args)]
struct DegeneracyArgs {
    /// Code to analyse: `demo`, `simple`, or a file path.
    #[arg(long)]
    code: String,
    /// Error set the code must first satisfy.
    #[arg(long)]
    errors: String,
}

#[derive(Subcommand)]
enum BoundCommand {
    /// One quantum block: `2^k * volume <= 2^n`.
    Quantum {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(short = 't', long)]
        t: u32,
    },
    /// `M` blocks of `2^k` dimensions: `M * 2^k * volume <= 2^n`.
    Hybrid {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        /// Block count; any non-negative integer, arbitrarily large.
        #[arg(short = 'M', long)]
        m: String,
        #[arg(short = 't', long)]
        t: u32,
    },
    /// Largest block count for which the hybrid bound still holds.
    MaxClassical {
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'k', long)]
        k: u32,
        #[arg(short = 't', long)]
        t: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetChoice {
    Published,
    Corrected,
}

impl From<SetChoice> for DecoderSet {
    fn from(value: SetChoice) -> Self {
        match value {
            SetChoice::Published => DecoderSet::Published,
            SetChoice::Corrected => DecoderSet::Corrected,
        }
    }
}

#[derive(Subcommand)]
enum SimulateCommand {
    /// Encode a basis-of-Bloch input and check it lands in the right block.
    Encode {
        /// Logical input: one of `0`, `1`, `+`, `-`, `+i`, `-i`.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        qin: String,
        /// Classical input bit.
        #[arg(long, default_value_t = 0)]
        cin: u8,
    },
    /// Encode, inject one error, decode, and measure recovery.
    Roundtrip {
        /// Injected Pauli, e.g. `X3`, `Y1`, `Z4`, or `I` for no error.
        #[arg(long)]
        error: String,
        /// Error location 1..4; inferred from the error's support when
        /// omitted, mandatory for the identity.
        #[arg(long)]
        loc: Option<usize>,
        /// Logical input: one of `0`, `1`, `+`, `-`, `+i`, `-i`.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        qin: String,
        /// Classical input bit.
        #[arg(long, default_value_t = 0)]
        cin: u8,
        /// Decoder transcription to use.
        #[arg(long, value_enum, default_value = "corrected")]
        set: SetChoice,
    },
    /// Run the full error-location grid and report failures.
    Sweep {
        /// Decoder transcription to use.
        #[arg(long, value_enum, default_value = "corrected")]
        set: SetChoice,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DisjointChoice {
    /// Restrict to disjoint supports when the slots fit.
    Auto,
    /// Always restrict.
    On,
    /// Search the full space.
    Off,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoeffChoice {
    /// Coefficients from `{+1, -1}`.
    Pm1,
    /// Coefficients from `{+1, -1, +i, -i}`.
    Pmi,
}

#[derive(Args)]
struct SearchArgs {
    /// Physical qubits.
    #[arg(short = 'n', long)]
    n: usize,
    /// Logical qubits per block; the block dimension is `2^k`.
    #[arg(short = 'k', long)]
    k: u32,
    /// Number of blocks.
    #[arg(short = 'M', long)]
    m: usize,
    /// Error set every reported code must satisfy.
    #[arg(long)]
    errors: String,
    /// Largest number of basis states per codeword.
    #[arg(long, default_value_t = 1)]
    max_terms: usize,
    /// Stop after this many equivalence classes.
    #[arg(long)]
    limit: Option<usize>,
    /// Directory to write one code file per class into.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Disjoint-support restriction.
    #[arg(long, value_enum, default_value = "auto")]
    disjoint: DisjointChoice,
    /// Coefficient alphabet.
    #[arg(long, value_enum, default_value = "pm1")]
    coeffs: CoeffChoice,
    /// Ceiling on the pre-run candidate estimate.
    #[arg(long, default_value_t = search::DEFAULT_ESTIMATE_CAP)]
    cap: u128,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CircuitChoice {
    Encode,
    Decode1,
    Decode2,
    Decode3,
    Decode4,
}

#[derive(Args)]
struct DumpCircuitArgs {
    /// Which circuit to print.
    #[arg(value_enum)]
    circuit: CircuitChoice,
    /// Decoder transcription (ignored for the encoder).
    #[arg(long, value_enum, default_value = "corrected")]
    set: SetChoice,
}

/// Runs the interface against explicit streams and returns the exit code.
pub fn run_with_output<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

/// Runs the interface on the process arguments and standard streams.
pub fn run() -> i32 {
    run_with_output(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    )
}

fn dispatch(command: Command, out: &mut dyn Write) -> anyhow::Result<bool> {
    match command {
        Command::Verify(args) => cmd_verify(args, out),
        Command::Bound(args) => cmd_bound(args, out),
        Command::Distance(args) => cmd_distance(args, out),
        Command::Degeneracy(args) => cmd_degeneracy(args, out),
        Command::Simulate(args) => cmd_simulate(args, out),
        Command::Search(args) => cmd_search(args, out),
        Command::DumpCircuit(args) => cmd_dump_circuit(args, out),
    }
}

fn print_violations(verdict: &Verdict, label: &str, out: &mut dyn Write) -> anyhow::Result<()> {
    const SHOWN: usize = 10;
    for v in verdict.violations.iter().take(SHOWN) {
        writeln!(out, "VIOLATION form={label} {v}")?;
    }
    if verdict.violations.len() > SHOWN {
        writeln!(
            out,
            "... {} further violations suppressed",
            verdict.violations.len() - SHOWN
        )?;
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    let code = load_code(&args.code)?;
    let spec = ErrorSetSpec::parse(&args.errors, code.n())?;
    let pairs = spec.expand_pairs().len();

    let vector = match args.form {
        FormChoice::Vector | FormChoice::Both => Some(check_vector_form(&code, &spec)?),
        FormChoice::Operator => None,
    };
    let operator = match args.form {
        FormChoice::Operator | FormChoice::Both => Some(check_operator_form(&code, &spec)?),
        FormChoice::Vector => None,
    };

    let mut ok = true;
    let mut violations = 0;
    let mut max_deviation: f64 = 0.0;
    for (label, verdict) in [("vector", &vector), ("operator", &operator)] {
        if let Some(v) = verdict {
            ok &= v.ok;
            violations += v.violations.len();
            max_deviation = max_deviation.max(v.max_deviation);
            print_violations(v, label, out)?;
        }
    }

    // With both formulations in hand, their block scalars must agree too.
    let mut alpha_gap: Option<f64> = None;
    if let (Some(v), Some(o)) = (&vector, &operator) {
        let gap = v
            .alphas
            .iter()
            .map(|(key, a)| (a - o.alphas[key]).norm())
            .fold(0.0, f64::max);
        ok &= gap <= CHECK_TOL;
        alpha_gap = Some(gap);
    }

    if args.show_alphas {
        let shown = vector.as_ref().or(operator.as_ref()).expect("some form ran");
        for ((a, b, block), alpha) in &shown.alphas {
            writeln!(
                out,
                "ALPHA pair=({a},{b}) block={block} value={:.11e}{:+.11e}i",
                alpha.re, alpha.im
            )?;
        }
    }

    let form = match args.form {
        FormChoice::Vector => "vector",
        FormChoice::Operator => "operator",
        FormChoice::Both => "both",
    };
    let mut line = ResultLine::new(ok)
        .with("code", &args.code)
        .with("n", code.n())
        .with("k_dim", code.k_dim())
        .with("m_blocks", code.m_blocks())
        .with("mode", spec.mode())
        .with("form", form)
        .with("pairs", pairs)
        .with("violations", violations)
        .with_float("max_deviation", max_deviation);
    if let Some(gap) = alpha_gap {
        line = line.with_float("alpha_gap", gap);
    }
    writeln!(out, "{}", line.render())?;
    Ok(ok)
}

fn cmd_bound(args: BoundCommand, out: &mut dyn Write) -> anyhow::Result<bool> {
    match args {
        BoundCommand::Quantum { n, k, t } => {
            let r = bounds::quantum_hamming(n, k, t)?;
            let line = ResultLine::new(r.holds)
                .with("n", n)
                .with("k", k)
                .with("t", t)
                .with("lhs", &r.lhs)
                .with("rhs", &r.rhs)
                .with("slack", &r.slack);
            writeln!(out, "{}", line.render())?;
            Ok(r.holds)
        }
        BoundCommand::Hybrid { n, k, m, t } => {
            let m: BigUint = m
                .parse()
                .map_err(|_| anyhow::anyhow!("block count '{m}' is not a non-negative integer"))?;
            let r = bounds::hybrid_hamming(n, k, &m, t)?;
            let line = ResultLine::new(r.holds)
                .with("n", n)
                .with("k", k)
                .with("m", &m)
                .with("t", t)
                .with("lhs", &r.lhs)
                .with("rhs", &r.rhs)
                .with("slack", &r.slack);
            writeln!(out, "{}", line.render())?;
            Ok(r.holds)
        }
        BoundCommand::MaxClassical { n, k, t } => {
            let v = bounds::max_classical(n, k, t)?;
            let line = ResultLine::new(true)
                .with("n", n)
                .with("k", k)
                .with("t", t)
                .with("max_m", &v);
            writeln!(out, "{}", line.render())?;
            Ok(true)
        }
    }
}

fn cmd_distance(args: DistanceArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    let code = load_code(&args.code)?;
    let d = verify::hybrid_distance(&code)?;
    let line = ResultLine::new(true)
        .with("code", &args.code)
        .with("n", code.n())
        .with("k_dim", code.k_dim())
        .with("m_blocks", code.m_blocks())
        .with("distance", d);
    writeln!(out, "{}", line.render())?;
    Ok(true)
}

fn cmd_degeneracy(args: DegeneracyArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    let code = load_code(&args.code)?;
    let spec = ErrorSetSpec::parse(&args.errors, code.n())?;
    let report = verify::degeneracy(&code, &spec)?;
    let ranks: Vec<String> = report.per_block_rank.iter().map(usize::to_string).collect();
    let line = ResultLine::new(true)
        .with("code", &args.code)
        .with("mode", spec.mode())
        .with("degenerate", report.degenerate)
        .with("ranks", ranks.join(","))
        .with("pairs", report.pair_count);
    writeln!(out, "{}", line.render())?;
    Ok(true)
}

/// Looks up one of the six cardinal logical inputs by label.
fn parse_qin(label: &str) -> anyhow::Result<StateVector> {
    circuit::cardinal_states()
        .into_iter()
        .find(|(l, _)| l == label)
        .map(|(_, s)| s)
        .ok_or_else(|| anyhow::anyhow!("unknown logical input '{label}', expected 0, 1, +, -, +i or -i"))
}

fn cmd_simulate(args: SimulateCommand, out: &mut dyn Write) -> anyhow::Result<bool> {
    match args {
        SimulateCommand::Encode { qin, cin } => {
            if cin > 1 {
                bail!("classical input must be 0 or 1, got {cin}");
            }
            let qstate = parse_qin(&qin)?;
            let zero = StateVector::basis(1, 0)?;
            let cbit = StateVector::basis(1, usize::from(cin))?;
            let input = zero.kron(&qstate)?.kron(&zero)?.kron(&cbit)?;
            let encoded = encode_circuit().simulate(&input)?;
            for (idx, amp) in encoded.amplitudes().iter().enumerate() {
                if amp.norm() > 1e-12 {
                    writeln!(
                        out,
                        "STATE {:04b} {:.11e} {:.11e}",
                        idx, amp.re, amp.im
                    )?;
                }
            }
            // The encoded state must lie in the block selected by the
            // classical bit.
            let code = demo_code();
            let mut overlap = 0.0;
            for i in 0..code.k_dim() {
                overlap += code
                    .word(usize::from(cin), i)
                    .inner(&encoded)?
                    .norm_sqr();
            }
            let ok = overlap >= 1.0 - CHECK_TOL;
            let line = ResultLine::new(ok)
                .with("qin", &qin)
                .with("cin", cin)
                .with_float("block_overlap", overlap);
            writeln!(out, "{}", line.render())?;
            Ok(ok)
        }
        SimulateCommand::Roundtrip {
            error,
            loc,
            qin,
            cin,
            set,
        } => {
            let error = if error == "I" || error == "identity" {
                PauliString::identity(4)?
            } else {
                PauliString::parse(&error, 4)?
            };
            let location = match (loc, error.support().as_slice()) {
                (Some(l), _) => l,
                (None, [single]) => *single,
                (None, []) => bail!("--loc is required when no error is injected"),
                (None, _) => bail!("error '{error}' has weight above 1"),
            };
            let qstate = parse_qin(&qin)?;
            let report = circuit::roundtrip(&qstate, cin, &error, location, set.into())?;
            let ok = report.ok();
            let line = ResultLine::new(ok)
                .with("error", &report.error)
                .with("loc", report.location)
                .with("set", DecoderSet::from(set))
                .with("qin", &qin)
                .with("cin", cin)
                .with_float("fidelity", report.fidelity_q)
                .with_float("classical_prob", report.classical_prob)
                .with("logical_wire", report.output_wires.0)
                .with("classical_wire", report.output_wires.1);
            writeln!(out, "{}", line.render())?;
            Ok(ok)
        }
        SimulateCommand::Sweep { set } => {
            let report = circuit::sweep(set.into())?;
            const SHOWN: usize = 12;
            for case in report.cases.iter().filter(|c| !c.ok).take(SHOWN) {
                writeln!(
                    out,
                    "CASE error={} loc={} qin={} cin={} fidelity={:.11e} classical_ok={}",
                    case.error, case.location, case.qin_label, case.cin,
                    case.fidelity_q, case.classical_ok
                )?;
            }
            if report.failures > SHOWN {
                writeln!(out, "... {} further failures suppressed", report.failures - SHOWN)?;
            }
            let line = ResultLine::new(report.ok)
                .with("set", DecoderSet::from(set))
                .with("cases", report.cases.len())
                .with("failures", report.failures)
                .with_float("min_fidelity", report.min_fidelity);
            writeln!(out, "{}", line.render())?;
            Ok(report.ok)
        }
    }
}

fn cmd_search(args: SearchArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    if args.k >= 16 {
        bail!("logical qubit count {} is far beyond search capacity", args.k);
    }
    let mut spec = SearchSpec::new(
        args.n,
        1usize << args.k,
        args.m,
        ErrorSetSpec::parse(&args.errors, args.n)?,
        args.max_terms,
    );
    spec.allow_imaginary = args.coeffs == CoeffChoice::Pmi;
    spec.disjoint = match args.disjoint {
        DisjointChoice::Auto => None,
        DisjointChoice::On => Some(true),
        DisjointChoice::Off => Some(false),
    };
    spec.limit = args.limit;
    spec.estimate_cap = args.cap;

    let outcome = search::search(&spec)?;
    const SHOWN: usize = 20;
    for (idx, class) in outcome.canonical.iter().enumerate().take(SHOWN) {
        writeln!(out, "CLASS idx={idx} key={:016x}", class.key)?;
    }
    if outcome.canonical.len() > SHOWN {
        writeln!(
            out,
            "... {} further classes suppressed",
            outcome.canonical.len() - SHOWN
        )?;
    }
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("creating output directory '{}'", dir.display()))?;
        for (idx, class) in outcome.canonical.iter().enumerate() {
            let path = dir.join(format!("code_{idx:04}_{:016x}.code", class.key));
            let mut text = format!("# class {idx}, key {:016x}\n", class.key);
            text.push_str(&class.code.serialize());
            std::fs::write(&path, text)
                .with_context(|| format!("writing '{}'", path.display()))?;
            writeln!(out, "WROTE {}", path.display())?;
        }
    }
    let found = !outcome.canonical.is_empty();
    let line = ResultLine::new(found)
        .with("n", args.n)
        .with("k_dim", spec.k_dim)
        .with("m_blocks", spec.m_blocks)
        .with("mode", spec.errors.mode())
        .with("max_terms", spec.max_terms)
        .with("disjoint", spec.effective_disjoint())
        .with("estimate", outcome.estimate)
        .with("nodes", outcome.nodes_visited)
        .with("survivors", outcome.survivors)
        .with("classes", outcome.canonical.len())
        .with("truncated", outcome.truncated);
    writeln!(out, "{}", line.render())?;
    Ok(found)
}

fn cmd_dump_circuit(args: DumpCircuitArgs, out: &mut dyn Write) -> anyhow::Result<bool> {
    let (name, circuit) = match (args.circuit, args.set) {
        (CircuitChoice::Encode, _) => ("encode".to_string(), encode_circuit()),
        (which, set) => {
            let loc = match which {
                CircuitChoice::Decode1 => 1,
                CircuitChoice::Decode2 => 2,
                CircuitChoice::Decode3 => 3,
                CircuitChoice::Decode4 => 4,
                CircuitChoice::Encode => unreachable!(),
            };
            let c = match set {
                SetChoice::Published => decode_circuit(loc)?,
                SetChoice::Corrected => decode_circuit_corrected(loc)?,
            };
            (format!("decode{loc}"), c)
        }
    };
    write!(out, "{}", circuit.serialize())?;
    let mut line = ResultLine::new(true)
        .with("circuit", &name)
        .with("gates", circuit.len());
    if name != "encode" {
        line = line.with("set", DecoderSet::from(args.set));
    }
    writeln!(out, "{}", line.render())?;
    Ok(true)
}
