mod input;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use evenpair_core::basic_classes::{classify_basic, favorability};
use evenpair_core::berge::is_even_pair;
use evenpair_core::canon::canonical_code;
use evenpair_core::class_f::in_class_f;
use evenpair_core::contraction::{derive_coloring, run_contraction_sequence, ContractionError, Strategy};
use evenpair_core::decomposition::{build_block, find_balanced_skew_partition, two_joins};
use evenpair_core::engine::{check_preconditions, verify_main_theorem, Engine, InstanceRecord, Outcome, Scope};
use evenpair_core::{Parity, Trigraph};

use input::{parse_input, InputFormat};

const WORKERS_VAR: &str = "EVENPAIR_WORKERS";

#[derive(Parser)]
#[command(name = "evenpair", version, about = "Even pairs, 2-joins and certificates for small Berge trigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report which hypotheses of the even-pair engine hold.
    Analyze(InputArgs),
    /// Run the even-pair engine.
    EvenPair {
        #[command(flatten)]
        input: InputArgs,
        /// Require the pair to avoid the switchable component.
        #[arg(long)]
        need_disjoint: bool,
    },
    /// Contract even pairs until none remain and colour from the result.
    ContractColor(InputArgs),
    /// List 2-joins, their blocks and a balanced skew partition.
    Decompose(InputArgs),
    /// Find the first basic class and its certificate.
    Classify(InputArgs),
    /// Run the engine over every instance up to a given order.
    Verify {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = ScopeArg::Graphs)]
        scope: ScopeArg,
        /// Write one JSON record per instance to this file.
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// File path, inline graph6 string or inline trigraph text.
    input: String,
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    /// Write JSON-lines certificates to this file.
    #[arg(long)]
    emit_cert: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Graphs,
    #[value(name = "trigraphs_in_F")]
    TrigraphsInF,
}

/// Outcome category; the exit status is a function of this alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    PreconditionFailed,
    InputError,
    Contradiction,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::PreconditionFailed => 1,
            Status::InputError => 2,
            Status::Contradiction => 3,
        }
    }
}

/// One line of a certificate file.
#[derive(Serialize)]
struct Cert {
    kind: &'static str,
    vertices: Vec<usize>,
    parity: Option<Parity>,
    detail: Value,
}

impl Cert {
    fn new(kind: &'static str, vertices: Vec<usize>, parity: Option<Parity>, detail: impl Serialize) -> Cert {
        Cert { kind, vertices, parity, detail: serde_json::to_value(detail).expect("serializable") }
    }
}

struct Output {
    status: Status,
    report: Value,
    certs: Vec<Cert>,
}

fn write_lines<T: Serialize>(path: &PathBuf, items: impl IntoIterator<Item = T>) -> std::io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for item in items {
        serde_json::to_writer(&mut w, &item)?;
        writeln!(w)?;
    }
    w.flush()
}

fn analyze(t: &Trigraph) -> Output {
    let report = check_preconditions(t);
    let mut certs = Vec::new();
    if let Some(h) = &report.odd_hole_or_antihole {
        let kind = if h.kind == evenpair_core::berge::HoleKind::Hole { "odd_hole" } else { "odd_antihole" };
        certs.push(Cert::new(kind, h.cycle.clone(), Some(h.parity()), h));
    }
    if let Some(p) = &report.odd_prism {
        certs.push(Cert::new("odd_prism", p.vertex_set().iter().collect(), Some(Parity::Odd), p));
    }
    if let Some(h) = &report.long_antihole {
        certs.push(Cert::new("long_antihole", h.cycle.clone(), Some(h.parity()), h));
    }
    if let Some(s) = &report.balanced_skew_partition {
        certs.push(Cert::new("balanced_skew_partition", (s.a | s.b).iter().collect(), None, s));
    }
    if let Some(v) = &report.class_f {
        certs.push(Cert::new("class_f_violation", Vec::new(), None, v));
    }
    let status = if report.passes() { Status::Ok } else { Status::PreconditionFailed };
    let report = json!({ "n": t.n(), "passes": report.passes(), "failures": report.failures(), "report": report });
    Output { status, report, certs }
}

fn even_pair(t: &Trigraph, need_disjoint: bool) -> Output {
    let result = match Engine::with_memo().find_even_pair(t, need_disjoint) {
        Ok(r) => r,
        Err(e) => {
            return Output { status: Status::Contradiction, report: json!({ "error": e.to_string() }), certs: Vec::new() }
        }
    };
    let mut certs = Vec::new();
    let status = match &result.outcome {
        Outcome::PreconditionFailed { .. } => Status::PreconditionFailed,
        Outcome::Complete => Status::Ok,
        Outcome::EvenPair { u, v } => match is_even_pair(t, *u, *v) {
            Ok(r) if r.is_even_pair() => {
                certs.push(Cert::new("even_pair", vec![*u, *v], Some(Parity::Even), r));
                Status::Ok
            }
            _ => Status::Contradiction,
        },
    };
    Output { status, report: serde_json::to_value(&result).expect("serializable"), certs }
}

fn contract_color(t: &Trigraph) -> Output {
    let seq = match run_contraction_sequence(t, Strategy::FirstFound) {
        Ok(seq) => seq,
        Err(e @ (ContractionError::NotAGraph | ContractionError::NotBerge { .. })) => {
            let report = json!({ "error": e.to_string(), "detail": format!("{e:?}") });
            return Output { status: Status::PreconditionFailed, report, certs: Vec::new() };
        }
        Err(e) => return Output { status: Status::Contradiction, report: json!({ "error": e.to_string() }), certs: Vec::new() },
    };
    let coloring = derive_coloring(&seq).ok();
    if coloring.as_ref().is_some_and(|c| !c.is_proper(t)) {
        return Output { status: Status::Contradiction, report: json!({ "error": "derived colouring is improper" }), certs: Vec::new() };
    }
    let mut certs: Vec<Cert> = seq
        .steps
        .iter()
        .map(|s| Cert::new("contraction", vec![s.pair.0, s.pair.1], Some(Parity::Even), json!({ "n": s.graph_before.n() })))
        .collect();
    if let Some(c) = &coloring {
        certs.push(Cert::new("coloring", (0..t.n()).collect(), None, c));
    }
    let report = json!({
        "steps": seq.steps.iter().map(|s| [s.pair.0, s.pair.1]).collect::<Vec<_>>(),
        "outcome": seq.outcome,
        "terminal": seq.terminal,
        "coloring": coloring,
    });
    Output { status: Status::Ok, report, certs }
}

fn decompose(t: &Trigraph) -> Output {
    let joins = two_joins(t);
    let mut certs = Vec::new();
    let mut blocks = Vec::new();
    for s in &joins {
        certs.push(Cert::new("two_join", s.x1().iter().collect(), s.parity, s));
        if !s.proper {
            continue;
        }
        for side in [1, 2] {
            match build_block(t, s, side) {
                Ok(b) => {
                    certs.push(Cert::new("block", b.parent_map.iter().flatten().copied().collect(), s.parity, &b));
                    blocks.push(b);
                }
                Err(e) => {
                    let report = json!({ "error": e.to_string() });
                    return Output { status: Status::Contradiction, report, certs: Vec::new() };
                }
            }
        }
    }
    let skew = find_balanced_skew_partition(t);
    if let Some(s) = &skew {
        certs.push(Cert::new("balanced_skew_partition", (s.a | s.b).iter().collect(), None, s));
    }
    let report = json!({ "two_joins": joins, "blocks": blocks, "balanced_skew_partition": skew });
    Output { status: Status::Ok, report, certs }
}

fn classify(t: &Trigraph) -> Output {
    let c = classify_basic(t);
    let favourable = in_class_f(t).is_member().then(|| favorability(t).ok().flatten());
    let mut certs = Vec::new();
    if let (Some(class), Some(cert)) = (&c.class, &c.certificate) {
        certs.push(Cert::new("basic_class", (0..t.n()).collect(), None, json!({ "class": class, "certificate": cert })));
    }
    let report = json!({
        "class": c.class,
        "certificate": c.certificate,
        "in_class_f": favourable.is_some(),
        "favorability_failure": favourable.flatten(),
    });
    Output { status: Status::Ok, report, certs }
}

#[derive(Serialize)]
struct LogRecord<'a> {
    canonical: String,
    #[serde(flatten)]
    record: &'a InstanceRecord,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn verify(nmax: usize, scope: ScopeArg, emit: Option<&PathBuf>) -> Output {
    let scope = match scope {
        ScopeArg::Graphs => Scope::Graphs,
        ScopeArg::TrigraphsInF => Scope::TrigraphsInF,
    };
    let run = match verify_main_theorem(nmax, scope) {
        Ok(run) => run,
        Err(e) => return Output { status: Status::InputError, report: json!({ "error": e.to_string() }), certs: Vec::new() },
    };
    if let Some(path) = emit {
        let log = run.records.iter().map(|r| {
            let t = Trigraph::from_entries(r.n, &r.trigraph.iter().map(|&(u, v, a)| (u, v, a as i64)).collect::<Vec<_>>())
                .expect("harness records are valid");
            LogRecord { canonical: hex(canonical_code(&t).as_bytes()), record: r }
        });
        if let Err(e) = write_lines(path, log) {
            return Output { status: Status::InputError, report: json!({ "error": e.to_string() }), certs: Vec::new() };
        }
    }
    let failed: Vec<_> = run.failed_records().map(|r| json!({ "n": r.n, "trigraph": r.trigraph, "error": r.error })).collect();
    let status = if run.summary.failures == 0 { Status::Ok } else { Status::Contradiction };
    Output { status, report: json!({ "summary": run.summary, "failed": failed }), certs: Vec::new() }
}

fn configure_workers() -> Result<(), String> {
    let Ok(value) = std::env::var(WORKERS_VAR) else { return Ok(()) };
    let n: usize = value.parse().ok().filter(|&n| n > 0).ok_or(format!("{WORKERS_VAR} must be a positive integer"))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Status {
    if let Err(e) = configure_workers() {
        eprintln!("error: {e}");
        return Status::InputError;
    }
    let (output, emit) = match cli.command {
        Command::Verify { nmax, scope, emit_cert } => (verify(nmax, scope, emit_cert.as_ref()), None),
        Command::Analyze(args) => with_input(args, analyze),
        Command::EvenPair { input, need_disjoint } => with_input(input, |t| even_pair(t, need_disjoint)),
        Command::ContractColor(args) => with_input(args, contract_color),
        Command::Decompose(args) => with_input(args, decompose),
        Command::Classify(args) => with_input(args, classify),
    };
    // A closed stdout (e.g. piped into `head`) is not an error.
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&output.report).expect("serializable"));
    if let Some(path) = emit {
        if let Err(e) = write_lines(&path, &output.certs) {
            eprintln!("error: {}: {e}", path.display());
            return Status::InputError;
        }
    }
    output.status
}

fn with_input(args: InputArgs, f: impl FnOnce(&Trigraph) -> Output) -> (Output, Option<PathBuf>) {
    match parse_input(&args.input, args.format) {
        Ok(t) => (f(&t), args.emit_cert),
        Err(e) => {
            eprintln!("error: {e}");
            (Output { status: Status::InputError, report: json!({ "error": e.to_string() }), certs: Vec::new() }, None)
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()).code())
}
