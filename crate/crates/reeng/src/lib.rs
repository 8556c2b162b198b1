//! Reverse engineering of state machines from Java code that follows the
//! state pattern.
//!
//! The pipeline is [`parse_java`] (restricted Java to a model of the
//! `java` metamodel), [`run_case`] (the shipped transformation) and
//! [`diff_statemachines`]. [`oracle_extract`] computes the same result by
//! direct traversal and [`generate_model`] produces synthetic inputs.

use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};
use std::{fs, io};

use tgraph::engine::{execute, Callable, ExecConfig, ExecError, Outcome, Transformation};
use tgraph::formats::{load_transformation, parse_metamodel};
use tgraph::rules::ParamValue;
use tgraph::{GraphError, InstanceGraph, Metamodel};
use thiserror::Error;

mod diff;
mod generate;
mod java;
mod oracle;

pub use diff::{diff_statemachines, DiffReport, TransitionKey};
pub use generate::{generate_model, GenConfig};
pub use java::{parse_java, JavaError, SourceFile};
pub use oracle::{oracle_extract, OracleError};

pub const JAVA_MM: &str = include_str!("../assets/java.mm");
pub const STATEMACHINE_MM: &str = include_str!("../assets/statemachine.mm");
pub const REENG_TFM: &str = include_str!("../assets/reeng.tfm");

/// The bundled hand-written corpus.
pub const SMALL_CORPUS: &[(&str, &str)] = &[
    ("Buffer.java", include_str!("../assets/small/Buffer.java")),
    ("Closed.java", include_str!("../assets/small/Closed.java")),
    (
        "ConnectionState.java",
        include_str!("../assets/small/ConnectionState.java"),
    ),
    (
        "Established.java",
        include_str!("../assets/small/Established.java"),
    ),
    (
        "Listening.java",
        include_str!("../assets/small/Listening.java"),
    ),
    ("State.java", include_str!("../assets/small/State.java")),
];

/// Reviewed transformation output for [`SMALL_CORPUS`], in `.gm` form.
pub const SMALL_GOLDEN: &str = include_str!("../assets/small.golden.gm");

pub fn small_corpus() -> Vec<SourceFile> {
    SMALL_CORPUS
        .iter()
        .map(|(n, t)| SourceFile::new(*n, *t))
        .collect()
}

/// Reads every `*.java` file directly inside `dir`.
pub fn read_java_dir(dir: &Path) -> io::Result<Vec<SourceFile>> {
    let mut files = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "java") && path.is_file() {
            let name = path.file_name().unwrap_or_default().to_string_lossy();
            files.push(SourceFile::new(name, fs::read_to_string(&path)?));
        }
    }
    files.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(files)
}

/// Writes `files` into `dir`, creating it if needed.
pub fn write_java_dir(dir: &Path, files: &[SourceFile]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    for f in files {
        fs::write(dir.join(&f.name), &f.text)?;
    }
    Ok(())
}

/// Default value of `Transition.action` when no send() call is found.
pub const DEFAULT_ACTION: &str = "";

pub fn java_metamodel() -> Metamodel {
    parse_metamodel(JAVA_MM).expect("bundled metamodel is valid")
}

pub fn statemachine_metamodel() -> Metamodel {
    parse_metamodel(STATEMACHINE_MM).expect("bundled metamodel is valid")
}

/// The loaded case: the transformation, the metamodel its graphs use
/// (Java, state machine and trace types composed) and the state machine
/// metamodel results are extracted to.
pub struct Case {
    pub metamodel: Arc<Metamodel>,
    pub transformation: Transformation,
    pub statemachine: Arc<Metamodel>,
}

impl Case {
    pub fn load() -> Case {
        Case::from_source(REENG_TFM).expect("bundled transformation is valid")
    }

    /// Loads a transformation over the bundled metamodels from `tfm`.
    pub fn from_source(tfm: &str) -> Result<Case, tgraph::formats::TfmError> {
        let (java, sm) = (java_metamodel(), statemachine_metamodel());
        let (metamodel, transformation) = load_transformation(tfm, &[&java, &sm])?;
        Ok(Case {
            metamodel,
            transformation,
            statemachine: Arc::new(sm),
        })
    }
}

#[derive(Debug, Error)]
pub enum CaseError {
    #[error("transformation failed: unit `{0}` did not apply (is there a class named `State`?)")]
    Failed(String),
    #[error(transparent)]
    Exec(#[from] ExecError),
    #[error("result is not a state machine: {0}")]
    Extract(#[from] GraphError),
    #[error("the transformation did not return a state machine")]
    NoMachine,
}

pub struct CaseRun {
    pub machine: InstanceGraph,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

/// Runs the main unit on `model` in place, then extracts the created
/// state machine into a graph over the state machine metamodel.
pub fn run_case(
    case: &Case,
    model: &mut InstanceGraph,
    cfg: &ExecConfig,
) -> Result<CaseRun, CaseError> {
    run_case_unit(case, None, model, cfg)
}

/// Like [`run_case`], starting from `unit` instead of the main unit. The
/// unit must have a node parameter `sm` holding the created machine.
pub fn run_case_unit(
    case: &Case,
    unit: Option<Callable>,
    model: &mut InstanceGraph,
    cfg: &ExecConfig,
) -> Result<CaseRun, CaseError> {
    let t0 = Instant::now();
    let outcome = execute(&case.transformation, unit, model, &[], cfg)?;
    if !outcome.success {
        let name = unit
            .or(case.transformation.main())
            .map(|c| case.transformation.name_of(c))
            .unwrap_or("?");
        return Err(CaseError::Failed(name.to_owned()));
    }
    let Some(ParamValue::Node(sm)) = outcome.param("sm") else {
        return Err(CaseError::NoMachine);
    };
    let machine = model.extract(*sm, case.statemachine.clone())?;
    Ok(CaseRun {
        machine,
        outcome,
        elapsed: t0.elapsed(),
    })
}
