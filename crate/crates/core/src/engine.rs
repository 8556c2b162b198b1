//! Transformation units and their interpreter.
//!
//! Every invocation (rule or unit) takes a checkpoint on entry and rolls
//! back on failure or error, so a failed unit leaves the graph as it found
//! it. Each invocation gets a fresh parameter frame; values travel between
//! frames only through declared mappings.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::expr::EvalError;
use crate::graph::{GraphError, InstanceGraph, NodeId};
use crate::matcher::{find_matches, find_matches_anchored, Match, MatchError};
use crate::metamodel::Metamodel;
use crate::rules::{compile, CompiledRule, End, ParamEnv, ParamValue, Parameter, Rule, RuleErrors};

pub const DEFAULT_STEP_LIMIT: u64 = 10_000_000;

/// A parameter frame: one slot per declared parameter.
pub type Frame = Vec<Option<ParamValue>>;

// ---- declarative units ---------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitKindDef {
    Sequential(Vec<String>),
    Priority(Vec<String>),
    Counted {
        child: String,
        count: i64,
    },
    Conditional {
        cond: String,
        then: String,
        otherwise: Option<String>,
    },
    Independent(Vec<String>),
    /// Multi rules with their embedding `(kernel pnode id, multi pnode id)`.
    Amalgamation {
        kernel: String,
        multis: Vec<(String, Vec<(String, String)>)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitDef {
    pub name: String,
    pub params: Vec<Parameter>,
    pub kind: UnitKindDef,
    /// `(source path, target path)`; a path is `param` or `child.param`.
    pub mappings: Vec<(String, String)>,
}

// ---- resolved units ----------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Callable {
    Rule(usize),
    Unit(usize),
}

#[derive(Clone, Debug)]
pub enum UnitKind {
    Sequential(Vec<Callable>),
    Priority(Vec<Callable>),
    Counted {
        child: Callable,
        count: i64,
    },
    Conditional {
        cond: Callable,
        then: Callable,
        otherwise: Option<Callable>,
    },
    Independent(Vec<Callable>),
    Amalgamation {
        kernel: usize,
        multis: Vec<(usize, Vec<(usize, usize)>)>,
    },
}

impl UnitKind {
    pub fn children(&self) -> Vec<Callable> {
        match self {
            UnitKind::Sequential(c) | UnitKind::Priority(c) | UnitKind::Independent(c) => c.clone(),
            UnitKind::Counted { child, .. } => vec![*child],
            UnitKind::Conditional {
                cond,
                then,
                otherwise,
            } => {
                let mut v = vec![*cond, *then];
                v.extend(otherwise);
                v
            }
            UnitKind::Amalgamation { kernel, multis } => {
                let mut v = vec![Callable::Rule(*kernel)];
                v.extend(multis.iter().map(|(m, _)| Callable::Rule(*m)));
                v
            }
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            UnitKind::Sequential(_) => "sequential",
            UnitKind::Priority(_) => "priority",
            UnitKind::Counted { .. } => "counted",
            UnitKind::Conditional { .. } => "conditional",
            UnitKind::Independent(_) => "independent",
            UnitKind::Amalgamation { .. } => "amalgamation",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamPath {
    Own(usize),
    Child(Callable, usize),
}

#[derive(Clone, Debug)]
pub struct Unit {
    pub name: String,
    pub params: Vec<Parameter>,
    pub kind: UnitKind,
    pub mappings: Vec<(ParamPath, ParamPath)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("`{0}` is defined more than once")]
    Duplicate(String),
    #[error("unit `{unit}` refers to unknown rule or unit `{name}`")]
    UnknownCallable { unit: String, name: String },
    #[error("amalgamation unit `{unit}`: `{name}` is not a rule")]
    NotARule { unit: String, name: String },
    #[error("amalgamation unit `{unit}`: embedding of `{multi}` names unknown pnode `{pnode}`")]
    UnknownEmbedding {
        unit: String,
        multi: String,
        pnode: String,
    },
    #[error("unit `{unit}`: mapping `{path}` names an unknown parameter")]
    UnknownParameter { unit: String, path: String },
    #[error("unit `{unit}`: mapping `{path}` names `{child}`, which is not a child of the unit")]
    NotAChild {
        unit: String,
        path: String,
        child: String,
    },
    #[error("unit `{unit}`: mapping `{src} -> {trg}` must connect an own parameter with a child parameter")]
    MappingShape {
        unit: String,
        src: String,
        trg: String,
    },
    #[error("unit `{unit}`: count must be -1 or non-negative, got {count}")]
    BadCount { unit: String, count: i64 },
    #[error("recursive cycle {} does not pass through a conditional or sequential unit", .0.join(" -> "))]
    ForbiddenCycle(Vec<String>),
    #[error("main unit `{0}` is not defined")]
    UnknownMain(String),
    #[error(transparent)]
    Rule(#[from] RuleErrors),
}

/// Compiled rules and resolved units over one metamodel.
#[derive(Clone, Debug)]
pub struct Transformation {
    metamodel: Arc<Metamodel>,
    rules: Vec<CompiledRule>,
    units: Vec<Unit>,
    main: Option<Callable>,
}

impl Transformation {
    pub fn new(
        metamodel: Arc<Metamodel>,
        rules: &[Rule],
        units: &[UnitDef],
        main: Option<&str>,
    ) -> Result<Self, Vec<ResolveError>> {
        let mut errors = Vec::new();
        let mut names: HashMap<&str, Callable> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            if names.insert(&r.name, Callable::Rule(i)).is_some() {
                errors.push(ResolveError::Duplicate(r.name.clone()));
            }
        }
        for (i, u) in units.iter().enumerate() {
            if names.insert(&u.name, Callable::Unit(i)).is_some() {
                errors.push(ResolveError::Duplicate(u.name.clone()));
            }
        }
        let mut compiled = Vec::new();
        for r in rules {
            match compile(r, &metamodel) {
                Ok(c) => compiled.push(c),
                Err(e) => {
                    errors.push(e.into());
                    compiled.push(placeholder(r));
                }
            }
        }
        let mut t = Transformation {
            metamodel,
            rules: compiled,
            units: Vec::new(),
            main: None,
        };
        for u in units {
            let kind = t.resolve_kind(u, &names, &mut errors);
            t.units.push(Unit {
                name: u.name.clone(),
                params: u.params.clone(),
                kind,
                mappings: Vec::new(),
            });
        }
        // Mappings can name parameters of units declared later.
        for (i, u) in units.iter().enumerate() {
            let mappings = t.resolve_mappings(&t.units[i], u, &names, &mut errors);
            t.units[i].mappings = mappings;
        }
        if let Some(m) = main {
            match names.get(m) {
                Some(c) => t.main = Some(*c),
                None => errors.push(ResolveError::UnknownMain(m.to_owned())),
            }
        }
        if errors.is_empty() {
            errors.extend(t.check_cycles());
        }
        if errors.is_empty() {
            Ok(t)
        } else {
            Err(errors)
        }
    }

    fn resolve_kind(
        &self,
        u: &UnitDef,
        names: &HashMap<&str, Callable>,
        errors: &mut Vec<ResolveError>,
    ) -> UnitKind {
        let empty = UnitKind::Sequential(Vec::new());
        let look = |name: &str, errors: &mut Vec<ResolveError>| match names.get(name) {
            Some(c) => Some(*c),
            None => {
                errors.push(ResolveError::UnknownCallable {
                    unit: u.name.clone(),
                    name: name.to_owned(),
                });
                None
            }
        };
        let list = |c: &[String], errors: &mut Vec<ResolveError>| {
            c.iter().filter_map(|n| look(n, errors)).collect()
        };
        match &u.kind {
            UnitKindDef::Sequential(c) => UnitKind::Sequential(list(c, errors)),
            UnitKindDef::Priority(c) => UnitKind::Priority(list(c, errors)),
            UnitKindDef::Independent(c) => UnitKind::Independent(list(c, errors)),
            UnitKindDef::Counted { child, count } => {
                if *count < -1 {
                    errors.push(ResolveError::BadCount {
                        unit: u.name.clone(),
                        count: *count,
                    });
                }
                match look(child, errors) {
                    Some(child) => UnitKind::Counted {
                        child,
                        count: *count,
                    },
                    None => empty,
                }
            }
            UnitKindDef::Conditional {
                cond,
                then,
                otherwise,
            } => {
                let c = look(cond, errors);
                let t = look(then, errors);
                let o = otherwise.as_deref().map(|n| look(n, errors));
                match (c, t, o) {
                    (Some(cond), Some(then), None) => UnitKind::Conditional {
                        cond,
                        then,
                        otherwise: None,
                    },
                    (Some(cond), Some(then), Some(Some(o))) => UnitKind::Conditional {
                        cond,
                        then,
                        otherwise: Some(o),
                    },
                    _ => empty,
                }
            }
            UnitKindDef::Amalgamation { kernel, multis } => {
                let rule_of = |name: &str, errors: &mut Vec<ResolveError>| match look(name, errors)
                {
                    Some(Callable::Rule(i)) => Some(i),
                    Some(Callable::Unit(_)) => {
                        errors.push(ResolveError::NotARule {
                            unit: u.name.clone(),
                            name: name.to_owned(),
                        });
                        None
                    }
                    None => None,
                };
                let k = rule_of(kernel, errors);
                let mut ms = Vec::new();
                for (m, emb) in multis {
                    let Some(mi) = rule_of(m, errors) else {
                        continue;
                    };
                    let Some(ki) = k else { continue };
                    let mut pairs = Vec::new();
                    for (kp, mp) in emb {
                        let kidx = self.rules[ki]
                            .source
                            .lhs
                            .nodes
                            .iter()
                            .position(|n| &n.id == kp);
                        let midx = self.rules[mi]
                            .source
                            .lhs
                            .nodes
                            .iter()
                            .position(|n| &n.id == mp);
                        match (kidx, midx) {
                            (Some(a), Some(b)) => pairs.push((a, b)),
                            _ => errors.push(ResolveError::UnknownEmbedding {
                                unit: u.name.clone(),
                                multi: m.clone(),
                                pnode: if kidx.is_none() {
                                    kp.clone()
                                } else {
                                    mp.clone()
                                },
                            }),
                        }
                    }
                    ms.push((mi, pairs));
                }
                match k {
                    Some(kernel) => UnitKind::Amalgamation { kernel, multis: ms },
                    None => empty,
                }
            }
        }
    }

    fn resolve_mappings(
        &self,
        unit: &Unit,
        u: &UnitDef,
        names: &HashMap<&str, Callable>,
        errors: &mut Vec<ResolveError>,
    ) -> Vec<(ParamPath, ParamPath)> {
        let children = unit.kind.children();
        let mut out = Vec::new();
        for (src, trg) in &u.mappings {
            let s = self.resolve_path(unit, &children, src, names);
            let t = self.resolve_path(unit, &children, trg, names);
            match (s, t) {
                (Ok(s @ ParamPath::Own(_)), Ok(t @ ParamPath::Child(..)))
                | (Ok(s @ ParamPath::Child(..)), Ok(t @ ParamPath::Own(_))) => out.push((s, t)),
                (Ok(_), Ok(_)) => errors.push(ResolveError::MappingShape {
                    unit: u.name.clone(),
                    src: src.clone(),
                    trg: trg.clone(),
                }),
                (s, t) => errors.extend(s.err().into_iter().chain(t.err())),
            }
        }
        out
    }

    fn resolve_path(
        &self,
        unit: &Unit,
        children: &[Callable],
        path: &str,
        names: &HashMap<&str, Callable>,
    ) -> Result<ParamPath, ResolveError> {
        let unknown = || ResolveError::UnknownParameter {
            unit: unit.name.clone(),
            path: path.to_owned(),
        };
        match path.split_once('.') {
            None => unit
                .params
                .iter()
                .position(|p| p.name == path)
                .map(ParamPath::Own)
                .ok_or_else(unknown),
            Some((child, param)) => {
                let c = names
                    .get(child)
                    .copied()
                    .filter(|c| children.contains(c))
                    .ok_or_else(|| ResolveError::NotAChild {
                        unit: unit.name.clone(),
                        path: path.to_owned(),
                        child: child.to_owned(),
                    })?;
                let params = match c {
                    Callable::Rule(i) => &self.rules[i].params,
                    Callable::Unit(i) => &self.units[i].params,
                };
                params
                    .iter()
                    .position(|p| p.name == param)
                    .map(|i| ParamPath::Child(c, i))
                    .ok_or_else(unknown)
            }
        }
    }

    /// Units may recurse only through conditional or sequential units: the
    /// call graph without their outgoing edges must be acyclic.
    fn check_cycles(&self) -> Vec<ResolveError> {
        let n = self.units.len();
        let mut state = vec![0u8; n];
        let mut errors = Vec::new();
        fn visit(
            t: &Transformation,
            i: usize,
            state: &mut [u8],
            path: &mut Vec<usize>,
            errors: &mut Vec<ResolveError>,
        ) {
            state[i] = 1;
            path.push(i);
            let u = &t.units[i];
            if !matches!(
                u.kind,
                UnitKind::Conditional { .. } | UnitKind::Sequential(_)
            ) {
                for c in u.kind.children() {
                    if let Callable::Unit(j) = c {
                        if matches!(
                            t.units[j].kind,
                            UnitKind::Conditional { .. } | UnitKind::Sequential(_)
                        ) {
                            continue;
                        }
                        match state[j] {
                            0 => visit(t, j, state, path, errors),
                            1 => {
                                let start = path.iter().position(|&p| p == j).expect("on path");
                                let mut names: Vec<String> = path[start..]
                                    .iter()
                                    .map(|&p| t.units[p].name.clone())
                                    .collect();
                                names.push(t.units[j].name.clone());
                                errors.push(ResolveError::ForbiddenCycle(names));
                            }
                            _ => {}
                        }
                    }
                }
            }
            path.pop();
            state[i] = 2;
        }
        for i in 0..n {
            if state[i] == 0 {
                visit(self, i, &mut state, &mut Vec::new(), &mut errors);
            }
        }
        errors
    }

    pub fn metamodel(&self) -> &Arc<Metamodel> {
        &self.metamodel
    }

    pub fn rules(&self) -> &[CompiledRule] {
        &self.rules
    }

    pub fn units(&self) -> &[Unit] {
        &self.units
    }

    pub fn main(&self) -> Option<Callable> {
        self.main
    }

    pub fn lookup(&self, name: &str) -> Option<Callable> {
        if let Some(i) = self.units.iter().position(|u| u.name == name) {
            return Some(Callable::Unit(i));
        }
        self.rules
            .iter()
            .position(|r| r.name == name)
            .map(Callable::Rule)
    }

    pub fn name_of(&self, c: Callable) -> &str {
        match c {
            Callable::Rule(i) => &self.rules[i].name,
            Callable::Unit(i) => &self.units[i].name,
        }
    }

    pub fn params_of(&self, c: Callable) -> &[Parameter] {
        match c {
            Callable::Rule(i) => &self.rules[i].params,
            Callable::Unit(i) => &self.units[i].params,
        }
    }
}

fn placeholder(r: &Rule) -> CompiledRule {
    CompiledRule {
        name: r.name.clone(),
        params: r.params.clone(),
        lhs: Default::default(),
        condition: crate::rules::CCondition::True,
        injective: true,
        rewrite: Default::default(),
        source: r.clone(),
    }
}

// ---- execution -------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct ExecConfig {
    pub seed: u64,
    pub step_limit: u64,
    /// Record one `apply <rule> {...}` line per rule application.
    pub trace: bool,
    /// Apply multi-rule matches of amalgamation units in shuffled order.
    pub shuffle_multi_matches: bool,
}

impl Default for ExecConfig {
    fn default() -> Self {
        ExecConfig {
            seed: 0,
            step_limit: DEFAULT_STEP_LIMIT,
            trace: false,
            shuffle_multi_matches: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExecError {
    #[error("step limit of {0} invocations exceeded")]
    StepLimitExceeded(u64),
    #[error(
        "graph metamodel `{graph}` does not match transformation metamodel `{transformation}`"
    )]
    MetamodelMismatch {
        graph: String,
        transformation: String,
    },
    #[error("`{callable}` has no parameter `{param}`")]
    UnknownParameter { callable: String, param: String },
    #[error("no main unit and no unit given")]
    NoMain,
    #[error("rule `{rule}`: {source}")]
    Match { rule: String, source: MatchError },
    #[error("rule `{rule}`: {source}")]
    Eval { rule: String, source: EvalError },
    #[error("rule `{rule}`: {source}")]
    Graph { rule: String, source: GraphError },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub success: bool,
    /// Final values of the invoked callable's parameters, in declaration
    /// order (all unset on failure).
    pub params: Vec<(String, Option<ParamValue>)>,
    pub log: Vec<String>,
    pub steps: u64,
    /// Wall time per direct child of the invoked unit, in order of first
    /// invocation.
    pub phases: Vec<(String, Duration)>,
}

impl Outcome {
    pub fn param(&self, name: &str) -> Option<&ParamValue> {
        self.params
            .iter()
            .find(|(n, _)| n == name)
            .and_then(|(_, v)| v.as_ref())
    }
}

/// Runs `callable` (or the main unit) on `g`. On failure or error the graph
/// is left as it was on entry.
pub fn execute(
    t: &Transformation,
    callable: Option<Callable>,
    g: &mut InstanceGraph,
    inputs: &[(&str, ParamValue)],
    cfg: &ExecConfig,
) -> Result<Outcome, ExecError> {
    if !Arc::ptr_eq(g.metamodel(), &t.metamodel) && !g.metamodel().same_layout(&t.metamodel) {
        return Err(ExecError::MetamodelMismatch {
            graph: g.metamodel().name().to_owned(),
            transformation: t.metamodel.name().to_owned(),
        });
    }
    let c = callable.or(t.main).ok_or(ExecError::NoMain)?;
    let params = t.params_of(c);
    let mut frame = vec![None; params.len()];
    for (name, v) in inputs {
        let i = params.iter().position(|p| p.name == *name).ok_or_else(|| {
            ExecError::UnknownParameter {
                callable: t.name_of(c).to_owned(),
                param: (*name).to_owned(),
            }
        })?;
        frame[i] = Some(v.clone());
    }
    let mut ex = Exec {
        t,
        cfg,
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
        steps: 0,
        depth: 0,
        log: Vec::new(),
        phases: Vec::new(),
    };
    let res = ex.call(g, c, frame)?;
    let success = res.is_some();
    let values = res.unwrap_or_else(|| vec![None; params.len()]);
    Ok(Outcome {
        success,
        params: params.iter().map(|p| p.name.clone()).zip(values).collect(),
        log: ex.log,
        steps: ex.steps,
        phases: ex.phases,
    })
}

/// Applies `rule` once at its first match. Returns the parameter values
/// after application, or `None` if there is no match (graph untouched).
pub fn apply_rule(
    g: &mut InstanceGraph,
    rule: &CompiledRule,
    inputs: &[Option<ParamValue>],
) -> Result<Option<Frame>, ExecError> {
    let pre = mode_filter(&rule.params, inputs);
    let m = first_match(g, rule, &pre)?;
    let Some(m) = m else { return Ok(None) };
    let cp = g.checkpoint();
    match rewrite(g, &[(rule, m)]) {
        Ok(mut out) => {
            g.release(cp).expect("own checkpoint");
            Ok(out.pop())
        }
        Err(e) => {
            g.rollback_to(cp).expect("own checkpoint");
            Err(e)
        }
    }
}

fn mode_filter(params: &[Parameter], inputs: &[Option<ParamValue>]) -> Frame {
    params
        .iter()
        .zip(inputs.iter().chain(std::iter::repeat(&None)))
        .map(|(p, v)| {
            if p.mode.accepts_input() {
                v.clone()
            } else {
                None
            }
        })
        .collect()
}

fn first_match(
    g: &InstanceGraph,
    rule: &CompiledRule,
    pre: &[Option<ParamValue>],
) -> Result<Option<Match>, ExecError> {
    let wrap = |source| ExecError::Match {
        rule: rule.name.clone(),
        source,
    };
    find_matches(g, rule, pre)
        .map_err(wrap)?
        .next()
        .transpose()
        .map_err(wrap)
}

/// Applies several matches as one step: all deletions first, then node
/// creations, edge creations and attribute assignments.
fn rewrite(
    g: &mut InstanceGraph,
    apps: &[(&CompiledRule, Match)],
) -> Result<Vec<Frame>, ExecError> {
    for (rule, m) in apps {
        for e in &rule.rewrite.delete_edges {
            let (s, t) = (m.nodes[e.src], m.nodes[e.trg]);
            if g.contains(s) && g.targets(s, e.reference).contains(&t) {
                g.remove(s, e.reference, t)
                    .map_err(|source| ExecError::Graph {
                        rule: rule.name.clone(),
                        source,
                    })?;
            }
        }
    }
    for (rule, m) in apps {
        for &p in &rule.rewrite.delete_nodes {
            if g.contains(m.nodes[p]) {
                g.delete_node(m.nodes[p])
                    .map_err(|source| ExecError::Graph {
                        rule: rule.name.clone(),
                        source,
                    })?;
            }
        }
    }
    let mut created: Vec<Vec<NodeId>> = Vec::new();
    let mut frames: Vec<Frame> = Vec::new();
    for (rule, m) in apps {
        let mut params = m.params.clone();
        let mut ids = Vec::new();
        for &(ty, binding) in &rule.rewrite.create_nodes {
            let id = g.create(ty).map_err(|source| ExecError::Graph {
                rule: rule.name.clone(),
                source,
            })?;
            if let Some(b) = binding {
                params[b] = Some(ParamValue::Node(id));
            }
            ids.push(id);
        }
        created.push(ids);
        frames.push(params);
    }
    for (i, (rule, m)) in apps.iter().enumerate() {
        let end = |e: End| match e {
            End::Matched(p) => m.nodes[p],
            End::Created(c) => created[i][c],
        };
        let gerr = |source| ExecError::Graph {
            rule: rule.name.clone(),
            source,
        };
        for &(s, r, t) in &rule.rewrite.create_edges {
            g.add(end(s), r, end(t)).map_err(gerr)?;
        }
        let env = ParamEnv {
            params: &rule.params,
            values: &frames[i],
            this: None,
        };
        let mut values = Vec::new();
        for (n, attr, expr) in &rule.rewrite.assignments {
            let v = expr.eval(&env).map_err(|source| ExecError::Eval {
                rule: rule.name.clone(),
                source,
            })?;
            values.push((end(*n), *attr, v));
        }
        for (n, attr, v) in values {
            g.set_attr(n, attr, v).map_err(gerr)?;
        }
    }
    Ok(frames)
}

fn log_line(rule: &CompiledRule, frame: &Frame) -> String {
    let mut s = format!("apply {} {{", rule.name);
    for (i, (p, v)) in rule.params.iter().zip(frame).enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        match v {
            Some(v) => {
                let _ = write!(s, "{}={v}", p.name);
            }
            None => {
                let _ = write!(s, "{}=_", p.name);
            }
        }
    }
    s.push('}');
    s
}

struct Exec<'a> {
    t: &'a Transformation,
    cfg: &'a ExecConfig,
    rng: ChaCha8Rng,
    steps: u64,
    depth: usize,
    log: Vec<String>,
    phases: Vec<(String, Duration)>,
}

impl Exec<'_> {
    fn call(
        &mut self,
        g: &mut InstanceGraph,
        c: Callable,
        input: Frame,
    ) -> Result<Option<Frame>, ExecError> {
        self.steps += 1;
        if self.steps > self.cfg.step_limit {
            return Err(ExecError::StepLimitExceeded(self.cfg.step_limit));
        }
        let started = (self.depth == 1).then(Instant::now);
        self.depth += 1;
        let cp = g.checkpoint();
        let res = match c {
            Callable::Rule(i) => self.rule(g, i, input),
            Callable::Unit(i) => self.unit(g, i, input),
        };
        self.depth -= 1;
        match &res {
            Ok(Some(_)) => g.release(cp),
            _ => g.rollback_to(cp),
        }
        .expect("checkpoints are strictly nested");
        if let Some(t0) = started {
            let name = self.t.name_of(c);
            let dt = t0.elapsed();
            match self.phases.iter_mut().find(|(n, _)| n == name) {
                Some((_, d)) => *d += dt,
                None => self.phases.push((name.to_owned(), dt)),
            }
        }
        res
    }

    fn rule(
        &mut self,
        g: &mut InstanceGraph,
        i: usize,
        input: Frame,
    ) -> Result<Option<Frame>, ExecError> {
        let rule = &self.t.rules[i];
        let pre = mode_filter(&rule.params, &input);
        let Some(m) = first_match(g, rule, &pre)? else {
            return Ok(None);
        };
        let mut out = rewrite(g, &[(rule, m)])?;
        let frame = out.pop().expect("one application");
        if self.cfg.trace {
            self.log.push(log_line(rule, &frame));
        }
        Ok(Some(frame))
    }

    fn unit(
        &mut self,
        g: &mut InstanceGraph,
        i: usize,
        input: Frame,
    ) -> Result<Option<Frame>, ExecError> {
        let t = self.t;
        let unit = &t.units[i];
        let mut frame = mode_filter(&unit.params, &input);
        let ok = match &unit.kind {
            UnitKind::Sequential(children) => {
                let mut ok = true;
                for &c in children {
                    if !self.child(g, unit, &mut frame, c)? {
                        ok = false;
                        break;
                    }
                }
                ok
            }
            UnitKind::Priority(children) => {
                let mut ok = false;
                for &c in children {
                    if self.child(g, unit, &mut frame, c)? {
                        ok = true;
                        break;
                    }
                }
                ok
            }
            UnitKind::Independent(children) => {
                let mut order = children.clone();
                order.shuffle(&mut self.rng);
                let mut ok = false;
                for c in order {
                    if self.child(g, unit, &mut frame, c)? {
                        ok = true;
                        break;
                    }
                }
                ok
            }
            UnitKind::Counted { child, count } => {
                if *count < 0 {
                    while self.child(g, unit, &mut frame, *child)? {}
                    true
                } else {
                    let mut ok = true;
                    for _ in 0..*count {
                        if !self.child(g, unit, &mut frame, *child)? {
                            ok = false;
                            break;
                        }
                    }
                    ok
                }
            }
            UnitKind::Conditional {
                cond,
                then,
                otherwise,
            } => {
                if self.child(g, unit, &mut frame, *cond)? {
                    self.child(g, unit, &mut frame, *then)?
                } else {
                    match otherwise {
                        Some(o) => self.child(g, unit, &mut frame, *o)?,
                        None => false,
                    }
                }
            }
            UnitKind::Amalgamation { kernel, multis } => {
                self.amalgamate(g, unit, &mut frame, *kernel, multis)?
            }
        };
        Ok(ok.then_some(frame))
    }

    fn child_input(&self, unit: &Unit, frame: &Frame, c: Callable) -> Frame {
        let mut input = vec![None; self.t.params_of(c).len()];
        for (s, t) in &unit.mappings {
            if let (ParamPath::Own(src), ParamPath::Child(tc, p)) = (s, t) {
                if *tc == c {
                    input[*p] = frame[*src].clone();
                }
            }
        }
        input
    }

    fn child_output(unit: &Unit, frame: &mut Frame, c: Callable, out: &Frame) {
        for (s, t) in &unit.mappings {
            if let (ParamPath::Child(sc, p), ParamPath::Own(trg)) = (s, t) {
                if *sc == c {
                    if let Some(v) = &out[*p] {
                        frame[*trg] = Some(v.clone());
                    }
                }
            }
        }
    }

    fn child(
        &mut self,
        g: &mut InstanceGraph,
        unit: &Unit,
        frame: &mut Frame,
        c: Callable,
    ) -> Result<bool, ExecError> {
        let input = self.child_input(unit, frame, c);
        match self.call(g, c, input)? {
            None => Ok(false),
            Some(out) => {
                Self::child_output(unit, frame, c, &out);
                Ok(true)
            }
        }
    }

    fn amalgamate(
        &mut self,
        g: &mut InstanceGraph,
        unit: &Unit,
        frame: &mut Frame,
        kernel: usize,
        multis: &[(usize, Vec<(usize, usize)>)],
    ) -> Result<bool, ExecError> {
        let t = self.t;
        let kc = Callable::Rule(kernel);
        let krule = &t.rules[kernel];
        let pre = mode_filter(&krule.params, &self.child_input(unit, frame, kc));
        let Some(km) = first_match(g, krule, &pre)? else {
            return Ok(false);
        };
        let mut apps: Vec<(&CompiledRule, Match)> = vec![(krule, km.clone())];
        let mut multi_apps = Vec::new();
        for (m, embedding) in multis {
            let mrule = &t.rules[*m];
            let mpre: Frame = mrule
                .params
                .iter()
                .map(|p| {
                    let kv = krule
                        .param_index(&p.name)
                        .and_then(|k| km.params[k].clone());
                    kv.filter(|_| p.mode.accepts_input())
                })
                .collect();
            let mut anchored = vec![None; mrule.lhs.nodes.len()];
            for &(kp, mp) in embedding {
                anchored[mp] = Some(km.nodes[kp]);
            }
            let wrap = |source| ExecError::Match {
                rule: mrule.name.clone(),
                source,
            };
            for mm in find_matches_anchored(g, mrule, &mpre, anchored).map_err(wrap)? {
                multi_apps.push((mrule, mm.map_err(wrap)?));
            }
        }
        if self.cfg.shuffle_multi_matches {
            multi_apps.shuffle(&mut self.rng);
        }
        apps.extend(multi_apps);
        let frames = rewrite(g, &apps)?;
        if self.cfg.trace {
            for ((rule, _), f) in apps.iter().zip(&frames) {
                self.log.push(log_line(rule, f));
            }
        }
        Self::child_output(unit, frame, kc, &frames[0]);
        Ok(true)
    }
}
