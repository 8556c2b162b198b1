//! The `tgraph` command-line driver.
//!
//! Exit codes:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | success                                             |
//! | 1    | `diff`: the models differ                           |
//! | 2    | usage error                                         |
//! | 3    | the transformation's main unit did not apply        |
//! | 4    | step limit exceeded                                 |
//! | 5    | evaluation or rewriting error during execution      |
//! | 65   | an input file does not parse or does not validate   |
//! | 74   | I/O error                                           |

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use tgraph::engine::{execute, ExecConfig, ExecError, Outcome, Transformation, DEFAULT_STEP_LIMIT};
use tgraph::formats::{load_transformation, parse_metamodel, parse_model, serialize_model};
use tgraph::rules::ParamValue;
use tgraph::{InstanceGraph, Metamodel};
use tgraph_reeng::{
    diff_statemachines, generate_model, oracle_extract, parse_java, read_java_dir,
    statemachine_metamodel, write_java_dir, Case, GenConfig,
};
use thiserror::Error;

pub mod exit {
    pub const OK: u8 = 0;
    pub const DIFFERENT: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const FAILED: u8 = 3;
    pub const STEP_LIMIT: u8 = 4;
    pub const RUNTIME: u8 = 5;
    pub const INVALID_INPUT: u8 = 65;
    pub const IO: u8 = 74;
}

#[derive(Debug, Parser)]
#[command(
    name = "tgraph",
    version,
    about = "Typed graph transformations and state machine extraction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a transformation on a model, or the state machine case on Java sources.
    Transform(TransformArgs),
    /// Compare two state machine models; exits with 1 if they differ.
    Diff(DiffArgs),
    /// Extract the state machine from Java sources without the transformation.
    Oracle(OracleArgs),
    /// Write a synthetic state-pattern program.
    Generate(GenerateArgs),
    /// Time parsing and transformation of a generated program.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Metamodel files the transformation may import (with --model).
    #[arg(long, num_args = 1.., conflicts_with = "java")]
    pub metamodel: Vec<PathBuf>,
    /// Input model (`.gm` or canonical text).
    #[arg(long, required_unless_present = "java", conflicts_with = "java")]
    pub model: Option<PathBuf>,
    /// Directory of Java sources; the output is the extracted state machine.
    #[arg(long)]
    pub java: Option<PathBuf>,
    /// Transformation file. Defaults to the bundled case with --java.
    #[arg(long, required_unless_present = "java")]
    pub tfm: Option<PathBuf>,
    /// Unit or rule to run instead of the main unit.
    #[arg(long)]
    pub main: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_STEP_LIMIT)]
    pub step_limit: u64,
    /// Output model; stdout if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write one line per rule application.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Write the run report as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiffArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    /// Metamodel of both models; the bundled state machine metamodel if absent.
    #[arg(long)]
    pub metamodel: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub java: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub states: usize,
    #[arg(long)]
    pub methods: usize,
    #[arg(long, default_value_t = 2)]
    pub nesting: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    pub states: usize,
    #[arg(long, default_value_t = 10)]
    pub methods: usize,
    #[arg(long, default_value_t = 3)]
    pub nesting: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", .path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {message}", .path.display())]
    Invalid { path: PathBuf, message: String },
    #[error("transformation failed: unit `{0}` did not apply")]
    Failed(String),
    #[error(transparent)]
    Exec(#[from] ExecError),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io { .. } => exit::IO,
            CliError::Invalid { .. } => exit::INVALID_INPUT,
            CliError::Failed(_) => exit::FAILED,
            CliError::Exec(ExecError::StepLimitExceeded(_)) => exit::STEP_LIMIT,
            CliError::Exec(_) | CliError::Runtime(_) => exit::RUNTIME,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_owned(),
        source,
    }
}

fn invalid<E: std::fmt::Display>(path: &Path) -> impl FnOnce(E) -> CliError + '_ {
    move |e| CliError::Invalid {
        path: path.to_owned(),
        message: e.to_string(),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(io_err(path))
}

fn write_or_stdout(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(io_err(p)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(io_err(Path::new("<stdout>"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhaseTime {
    pub name: String,
    pub millis: f64,
}

/// Summary of one `transform` run, written by `--report`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub seed: u64,
    pub exit_status: u8,
    pub steps: u64,
    /// Applications per rule; the sum equals the number of trace lines.
    pub rule_counts: BTreeMap<String, u64>,
    /// Parsing, then one entry per direct child of the started unit.
    pub phases: Vec<PhaseTime>,
    pub total_millis: f64,
}

impl RunReport {
    fn new(seed: u64) -> Self {
        RunReport {
            seed,
            exit_status: exit::OK,
            steps: 0,
            rule_counts: BTreeMap::new(),
            phases: Vec::new(),
            total_millis: 0.0,
        }
    }

    fn phase(&mut self, name: &str, d: Duration) {
        self.phases.push(PhaseTime {
            name: name.to_owned(),
            millis: millis(d),
        });
    }

    fn record(&mut self, outcome: &Outcome) {
        self.steps = outcome.steps;
        for line in &outcome.log {
            if let Some((rule, _)) = line.strip_prefix("apply ").and_then(|r| r.split_once(' ')) {
                *self.rule_counts.entry(rule.to_owned()).or_insert(0) += 1;
            }
        }
        for (name, d) in &outcome.phases {
            self.phase(name, *d);
        }
    }

    /// Human-readable form, printed to stderr.
    pub fn text(&self) -> String {
        let mut s = format!(
            "exit {} after {} steps, {:.1} ms\n",
            self.exit_status, self.steps, self.total_millis
        );
        let width = self
            .phases
            .iter()
            .map(|p| p.name.len())
            .chain(self.rule_counts.keys().map(String::len))
            .max()
            .unwrap_or(0);
        for p in &self.phases {
            s += &format!("  {:width$}  {:>10.1} ms\n", p.name, p.millis);
        }
        for (rule, n) in &self.rule_counts {
            s += &format!("  {rule:width$}  {n:>10}\n");
        }
        s
    }
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1000.0
}

fn lookup_unit(
    t: &Transformation,
    name: Option<&str>,
) -> Result<Option<tgraph::engine::Callable>, CliError> {
    match name {
        None if t.main().is_none() => Err(CliError::Usage(
            "the transformation has no main unit; pass --main".into(),
        )),
        None => Ok(None),
        Some(n) => t
            .lookup(n)
            .map(Some)
            .ok_or_else(|| CliError::Usage(format!("no unit or rule named `{n}`"))),
    }
}

struct Loaded {
    transformation: Transformation,
    graph: InstanceGraph,
    /// Set for Java input: the result is the `sm` node's machine.
    extract_to: Option<Arc<Metamodel>>,
}

fn load_java(a: &TransformArgs, dir: &Path, report: &mut RunReport) -> Result<Loaded, CliError> {
    let case = match &a.tfm {
        Some(p) => Case::from_source(&read(p)?).map_err(invalid(p))?,
        None => Case::load(),
    };
    let t0 = Instant::now();
    let files = read_java_dir(dir).map_err(io_err(dir))?;
    if files.is_empty() {
        return Err(CliError::Invalid {
            path: dir.to_owned(),
            message: "no .java files".into(),
        });
    }
    let graph = parse_java(&files, &case.metamodel).map_err(invalid(dir))?;
    report.phase("parse", t0.elapsed());
    Ok(Loaded {
        transformation: case.transformation,
        graph,
        extract_to: Some(case.statemachine),
    })
}

fn load_model(a: &TransformArgs, model: &Path, report: &mut RunReport) -> Result<Loaded, CliError> {
    let tfm = a
        .tfm
        .as_deref()
        .ok_or_else(|| CliError::Usage("--model needs --tfm".into()))?;
    let mut mms = Vec::new();
    for p in &a.metamodel {
        mms.push(parse_metamodel(&read(p)?).map_err(invalid(p))?);
    }
    let refs: Vec<&Metamodel> = mms.iter().collect();
    let (mm, transformation) = load_transformation(&read(tfm)?, &refs).map_err(invalid(tfm))?;
    let t0 = Instant::now();
    let graph = parse_model(&read(model)?, mm).map_err(invalid(model))?;
    report.phase("parse", t0.elapsed());
    Ok(Loaded {
        transformation,
        graph,
        extract_to: None,
    })
}

fn transform(a: &TransformArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let mut report = RunReport::new(a.seed);
    let res = run_transform(a, &mut report);
    report.total_millis = millis(t0.elapsed());
    report.exit_status = match &res {
        Ok(()) => exit::OK,
        Err(e) => e.code(),
    };
    eprint!("{}", report.text());
    if let Some(p) = &a.report {
        let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        fs::write(p, json).map_err(io_err(p))?;
    }
    res
}

fn run_transform(a: &TransformArgs, report: &mut RunReport) -> Result<(), CliError> {
    let mut loaded = match (&a.java, &a.model) {
        (Some(dir), _) => load_java(a, dir, report)?,
        (None, Some(model)) => load_model(a, model, report)?,
        (None, None) => return Err(CliError::Usage("need --java or --model".into())),
    };
    let t = &loaded.transformation;
    let unit = lookup_unit(t, a.main.as_deref())?;
    let cfg = ExecConfig {
        seed: a.seed,
        step_limit: a.step_limit,
        trace: true,
        ..ExecConfig::default()
    };
    let outcome = execute(t, unit, &mut loaded.graph, &[], &cfg)?;
    report.record(&outcome);
    if let Some(p) = &a.trace {
        let mut text = outcome.log.join("\n");
        if !text.is_empty() {
            text.push('\n');
        }
        fs::write(p, text).map_err(io_err(p))?;
    }
    if !outcome.success {
        let name = unit.or(t.main()).map(|c| t.name_of(c)).unwrap_or("?");
        return Err(CliError::Failed(name.to_owned()));
    }
    let result = match loaded.extract_to {
        Some(sm_mm) => {
            let Some(ParamValue::Node(sm)) = outcome.param("sm") else {
                return Err(CliError::Runtime(
                    "the transformation did not return a state machine in `sm`".into(),
                ));
            };
            loaded
                .graph
                .extract(*sm, sm_mm)
                .map_err(|e| CliError::Runtime(format!("result is not a state machine: {e}")))?
        }
        None => loaded.graph,
    };
    write_or_stdout(a.out.as_deref(), &serialize_model(&result))
}

fn diff(a: &DiffArgs) -> Result<u8, CliError> {
    let mm = Arc::new(match &a.metamodel {
        Some(p) => parse_metamodel(&read(p)?).map_err(invalid(p))?,
        None => statemachine_metamodel(),
    });
    let load = |p: &Path| parse_model(&read(p)?, mm.clone()).map_err(invalid(p));
    let d = diff_statemachines(&load(&a.left)?, &load(&a.right)?);
    print!("{d}");
    Ok(if d.is_empty() {
        exit::OK
    } else {
        exit::DIFFERENT
    })
}

fn oracle(a: &OracleArgs) -> Result<(), CliError> {
    let case = Case::load();
    let files = read_java_dir(&a.java).map_err(io_err(&a.java))?;
    let g = parse_java(&files, &case.metamodel).map_err(invalid(&a.java))?;
    let sm = oracle_extract(&g, &case.statemachine).map_err(invalid(&a.java))?;
    write_or_stdout(a.out.as_deref(), &serialize_model(&sm))
}

fn generate(a: &GenerateArgs) -> Result<(), CliError> {
    if a.states == 0 || a.methods == 0 {
        return Err(CliError::Usage(
            "--states and --methods must be positive".into(),
        ));
    }
    let files = generate_model(&GenConfig {
        states: a.states,
        methods: a.methods,
        nesting: a.nesting,
        seed: a.seed,
    });
    write_java_dir(&a.out, &files).map_err(io_err(&a.out))?;
    eprintln!("wrote {} files to {}", files.len(), a.out.display());
    Ok(())
}

/// Timings of one benchmark run: parsing, then the case's phases.
pub fn bench_once(cfg: &GenConfig) -> Result<Vec<(String, Duration)>, CliError> {
    let case = Case::load();
    let files = generate_model(cfg);
    let t0 = Instant::now();
    let mut g = parse_java(&files, &case.metamodel)
        .map_err(|e| CliError::Runtime(format!("generated program does not parse: {e}")))?;
    let mut phases = vec![("parse".to_owned(), t0.elapsed())];
    let outcome = execute(
        &case.transformation,
        None,
        &mut g,
        &[],
        &ExecConfig::default(),
    )?;
    if !outcome.success {
        return Err(CliError::Failed("main".into()));
    }
    phases.extend(outcome.phases);
    Ok(phases)
}

fn bench(a: &BenchArgs) -> Result<(), CliError> {
    let cfg = GenConfig {
        states: a.states,
        methods: a.methods,
        nesting: a.nesting,
        seed: a.seed,
    };
    for run in 1..=a.repeat.max(1) {
        let phases = bench_once(&cfg)?;
        let total: Duration = phases.iter().map(|(_, d)| *d).sum();
        println!("run {run}");
        for (name, d) in &phases {
            println!("  {name:16} {:>10.1} ms", millis(*d));
        }
        println!("  {:16} {:>10.1} ms", "total", millis(total));
    }
    Ok(())
}

pub fn run_command(cmd: &Command) -> Result<u8, CliError> {
    match cmd {
        Command::Transform(a) => transform(a).map(|()| exit::OK),
        Command::Diff(a) => diff(a),
        Command::Oracle(a) => oracle(a).map(|()| exit::OK),
        Command::Generate(a) => generate(a).map(|()| exit::OK),
        Command::Bench(a) => bench(a).map(|()| exit::OK),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            });
        }
    };
    match run_command(&cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
