//! `ensketch`: batch checks over finite enhanced 2-categories.
//!
//! Every run prints one JSON report on stdout (or to `--output`) and a
//! one-line summary on stderr. Exit status: 0 certified, 1 mathematical
//! failure, 2 bound exhausted, 3 unreadable input or bad usage.

mod input;
mod jobs;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use ensketch::fincat::DEFAULT_BOUND;
use ensketch::Error;

#[derive(Parser, Debug)]
#[command(name = "ensketch", version, about = "Exhaustive checks for finite enhanced 2-categories, sketches and 2-monads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Maximum number of candidates any single enumeration may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: usize,
    /// Largest test apex (in objects) used by universal-property certification.
    #[arg(long, global = true, default_value_t = 3)]
    apex_bound: usize,
    /// Maximum number of words generated while gluing colimits.
    #[arg(long, global = true, default_value_t = 2_000)]
    colimit_bound: usize,
    /// Class of comparison maps: iso or equiv.
    #[arg(long, global = true, default_value = "iso")]
    r: String,
    /// Weakness: s, p, l or c.
    #[arg(long, global = true, default_value = "l")]
    w: String,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a category, F-object, F-category or F-map given as JSON.
    Validate { file: String },
    /// Compute a limit of a named diagram and certify it.
    Limit {
        #[arg(long, value_enum)]
        kind: LimitKind,
        #[arg(long)]
        fixture: String,
    },
    /// Check that a named model sends its cones to limits, or that a
    /// candidate transformation is a morphism of models.
    ModelCheck {
        #[arg(long)]
        fixture: String,
    },
    /// Classify loose transformations between two named models.
    NatCheck {
        #[arg(long)]
        fixture: String,
    },
    /// Check the laws of a named 2-monad and list its algebras.
    MonadCheck {
        #[arg(long)]
        fixture: String,
    },
    /// Build the mate of a named adjunction and check that it lifts.
    Mate {
        #[arg(long)]
        fixture: String,
    },
    /// Compare models with algebras for a named monad fixture.
    EquivWitness {
        #[arg(long)]
        fixture: String,
    },
    /// Orthogonality, lifting, the generator audit, or a generalized adjunction.
    Orthogonal {
        /// Object K (F-object or category JSON).
        #[arg(long)]
        k: Option<String>,
        /// Map m (F-map JSON).
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_enum, default_value = "f")]
        base: BaseArg,
        /// Run the randomized generator audit this many times.
        #[arg(long)]
        wfs_audit: Option<usize>,
        /// Check a named generalized adjunction.
        #[arg(long)]
        adjunction: Option<String>,
    },
    /// Enumerate functors between categories or maps between F-objects.
    Enumerate {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value = "functors")]
        what: EnumerateWhat,
    },
    /// List the named fixtures each subcommand accepts.
    Fixtures,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LimitKind {
    Weighted,
    MarkedLax,
    DottedLax,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseArg {
    Cat,
    F,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumerateWhat {
    Functors,
    Fmaps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Verdict {
    Certified,
    Failed,
    BoundExhausted,
    InputError,
}

impl Verdict {
    fn code(self) -> u8 {
        match self {
            Verdict::Certified => 0,
            Verdict::Failed => 1,
            Verdict::BoundExhausted => 2,
            Verdict::InputError => 3,
        }
    }
}

/// What a job produced: a verdict-bearing result and a one-line summary.
pub struct Outcome {
    pub ok: bool,
    pub result: Value,
    pub summary: String,
}

#[derive(Serialize)]
struct Bounds {
    bound: usize,
    apex_bound: usize,
    colimit_bound: usize,
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs: BTreeMap<&'static str, Value>,
    bounds: Bounds,
    r: String,
    w: String,
    seed: u64,
    verdict: Verdict,
    result: Value,
}

/// Parsed global options handed to every job.
pub struct Job {
    pub bound: usize,
    pub apex_bound: usize,
    pub colimit_bound: usize,
    pub r: ensketch::sketch::RClass,
    pub w: ensketch::fcat::Weakness,
    pub seed: u64,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Limit { .. } => "limit",
        Command::ModelCheck { .. } => "model-check",
        Command::NatCheck { .. } => "nat-check",
        Command::MonadCheck { .. } => "monad-check",
        Command::Mate { .. } => "mate",
        Command::EquivWitness { .. } => "equiv-witness",
        Command::Orthogonal { .. } => "orthogonal",
        Command::Enumerate { .. } => "enumerate",
        Command::Fixtures => "fixtures",
    }
}

fn inputs(c: &Command) -> BTreeMap<&'static str, Value> {
    let mut m = BTreeMap::new();
    let mut put = |k: &'static str, v: Value| {
        m.insert(k, v);
    };
    match c {
        Command::Validate { file } => put("file", file.as_str().into()),
        Command::Limit { kind, fixture } => {
            put("kind", serde_json::to_value(kind).unwrap_or(Value::Null));
            put("fixture", fixture.as_str().into());
        }
        Command::ModelCheck { fixture }
        | Command::NatCheck { fixture }
        | Command::MonadCheck { fixture }
        | Command::Mate { fixture }
        | Command::EquivWitness { fixture } => put("fixture", fixture.as_str().into()),
        Command::Orthogonal { k, m, base, wfs_audit, adjunction } => {
            put("k", k.as_deref().into());
            put("m", m.as_deref().into());
            put("base", serde_json::to_value(base).unwrap_or(Value::Null));
            put("wfs_audit", (*wfs_audit).into());
            put("adjunction", adjunction.as_deref().into());
        }
        Command::Enumerate { source, target, what } => {
            put("source", source.as_str().into());
            put("target", target.as_str().into());
            put("what", serde_json::to_value(what).unwrap_or(Value::Null));
        }
        Command::Fixtures => {}
    }
    m
}

fn dispatch(c: &Command, job: &Job) -> ensketch::Result<Outcome> {
    match c {
        Command::Validate { file } => jobs::validate(file),
        Command::Limit { kind, fixture } => jobs::limit(*kind, fixture, job),
        Command::ModelCheck { fixture } => jobs::model_check(fixture, job),
        Command::NatCheck { fixture } => jobs::nat_check(fixture, job),
        Command::MonadCheck { fixture } => jobs::monad_check(fixture, job),
        Command::Mate { fixture } => jobs::mate(fixture),
        Command::EquivWitness { fixture } => jobs::equiv_witness(fixture, job),
        Command::Orthogonal { k, m, base, wfs_audit, adjunction } => {
            jobs::orthogonal(k.as_deref(), m.as_deref(), *base, *wfs_audit, adjunction.as_deref(), job)
        }
        Command::Enumerate { source, target, what } => jobs::enumerate(source, target, *what, job),
        Command::Fixtures => Ok(jobs::fixtures()),
    }
}

fn classify(e: &Error) -> Verdict {
    if e.is_bound_exhaustion() {
        Verdict::BoundExhausted
    } else if matches!(e, Error::Parse(_)) {
        Verdict::InputError
    } else {
        Verdict::Failed
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Verdict::InputError.code() } else { 0 });
        }
    };
    let c = &cli.common;
    let parsed = ensketch::sketch::RClass::parse(&c.r).and_then(|r| Ok((r, ensketch::fcat::Weakness::parse(&c.w)?)));
    let (verdict, result, summary) = match parsed {
        Err(e) => (Verdict::InputError, serde_json::json!({ "error": e.to_string() }), e.to_string()),
        Ok((r, w)) => {
            let job = Job { bound: c.bound, apex_bound: c.apex_bound, colimit_bound: c.colimit_bound, r, w, seed: c.seed };
            match dispatch(&cli.command, &job) {
                Ok(o) => (if o.ok { Verdict::Certified } else { Verdict::Failed }, o.result, o.summary),
                Err(e) => (classify(&e), serde_json::json!({ "error": e.to_string() }), e.to_string()),
            }
        }
    };
    let report = Report {
        command: command_name(&cli.command),
        inputs: inputs(&cli.command),
        bounds: Bounds { bound: c.bound, apex_bound: c.apex_bound, colimit_bound: c.colimit_bound },
        r: c.r.clone(),
        w: c.w.clone(),
        seed: c.seed,
        verdict,
        result,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    match &c.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(Verdict::InputError.code());
            }
        }
        None => print!("{text}"),
    }
    eprintln!("{}: {summary}", report.command);
    ExitCode::from(verdict.code())
}
