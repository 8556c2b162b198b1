//! Rules: LHS/RHS pattern graphs, a partial LHS→RHS mapping, nested
//! application conditions, parameters and attribute assignments.
//!
//! [`Rule`] is the declarative, name-based form (what the transformation
//! file describes). [`CompiledRule`] resolves every name against a
//! metamodel and precomputes the rewrite steps; the matcher and the engine
//! only ever see the compiled form.

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::expr::{Env, Expr};
use crate::graph::NodeId;
use crate::metamodel::{AttrId, Metamodel, RefId, TypeId};
use crate::value::Value;

/// Name under which a `check(...)` expression sees the attribute it guards.
pub const SELF_VALUE: &str = "self";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamMode {
    In,
    Out,
    InOut,
}

impl ParamMode {
    pub fn accepts_input(self) -> bool {
        matches!(self, ParamMode::In | ParamMode::InOut)
    }

    pub fn produces_output(self) -> bool {
        matches!(self, ParamMode::Out | ParamMode::InOut)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parameter {
    pub name: String,
    pub mode: ParamMode,
}

impl Parameter {
    pub fn new(name: impl Into<String>, mode: ParamMode) -> Self {
        Parameter {
            name: name.into(),
            mode,
        }
    }
}

/// Parameters are typeless: they hold either a node or an attribute value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamValue {
    Node(NodeId),
    Value(Value),
}

impl ParamValue {
    pub fn as_node(&self) -> Option<NodeId> {
        match self {
            ParamValue::Node(n) => Some(*n),
            ParamValue::Value(_) => None,
        }
    }

    pub fn as_value(&self) -> Option<&Value> {
        match self {
            ParamValue::Value(v) => Some(v),
            ParamValue::Node(_) => None,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Node(n) => write!(f, "#{n}"),
            ParamValue::Value(v) => f.write_str(&v.literal()),
        }
    }
}

impl From<NodeId> for ParamValue {
    fn from(n: NodeId) -> Self {
        ParamValue::Node(n)
    }
}

impl From<Value> for ParamValue {
    fn from(v: Value) -> Self {
        ParamValue::Value(v)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AttrPattern {
    Constant(Value),
    Param(String),
    Check(Expr),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PatternNode {
    pub id: String,
    pub ty: String,
    pub binding: Option<String>,
    pub attrs: Vec<(String, AttrPattern)>,
}

impl PatternNode {
    pub fn new(id: impl Into<String>, ty: impl Into<String>) -> Self {
        PatternNode {
            id: id.into(),
            ty: ty.into(),
            binding: None,
            attrs: Vec::new(),
        }
    }

    pub fn bind(mut self, param: impl Into<String>) -> Self {
        self.binding = Some(param.into());
        self
    }

    pub fn attr(mut self, name: impl Into<String>, pattern: AttrPattern) -> Self {
        self.attrs.push((name.into(), pattern));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEdge {
    pub src: String,
    pub reference: String,
    pub trg: String,
}

impl PatternEdge {
    pub fn new(
        src: impl Into<String>,
        reference: impl Into<String>,
        trg: impl Into<String>,
    ) -> Self {
        PatternEdge {
            src: src.into(),
            reference: reference.into(),
            trg: trg.into(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PatternGraph {
    pub nodes: Vec<PatternNode>,
    pub edges: Vec<PatternEdge>,
}

impl PatternGraph {
    pub fn node(&self, id: &str) -> Option<&PatternNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    fn index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ConditionFormula {
    True,
    Graph(Box<GraphCondition>),
    Not(Box<ConditionFormula>),
    And(Box<ConditionFormula>, Box<ConditionFormula>),
    Or(Box<ConditionFormula>, Box<ConditionFormula>),
}

impl ConditionFormula {
    pub fn negate(f: ConditionFormula) -> Self {
        ConditionFormula::Not(Box::new(f))
    }

    pub fn and(a: ConditionFormula, b: ConditionFormula) -> Self {
        match (a, b) {
            (ConditionFormula::True, b) => b,
            (a, ConditionFormula::True) => a,
            (a, b) => ConditionFormula::And(Box::new(a), Box::new(b)),
        }
    }

    pub fn or(a: ConditionFormula, b: ConditionFormula) -> Self {
        ConditionFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn graph(
        extension: PatternGraph,
        anchor: Vec<(String, String)>,
        nested: ConditionFormula,
    ) -> Self {
        ConditionFormula::Graph(Box::new(GraphCondition {
            extension,
            anchor,
            nested,
        }))
    }
}

/// "There is an extension of the current match into `extension`, agreeing
/// with it on `anchor`, that satisfies `nested`."
#[derive(Clone, Debug, PartialEq)]
pub struct GraphCondition {
    pub extension: PatternGraph,
    /// `(host pnode id, extension pnode id)`
    pub anchor: Vec<(String, String)>,
    pub nested: ConditionFormula,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Assignment {
    /// RHS pnode id.
    pub node: String,
    pub attr: String,
    pub expr: Expr,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub name: String,
    pub params: Vec<Parameter>,
    pub lhs: PatternGraph,
    pub rhs: PatternGraph,
    /// `(lhs id, rhs id)`
    pub mapping: Vec<(String, String)>,
    pub condition: ConditionFormula,
    pub assignments: Vec<Assignment>,
    pub injective: bool,
}

impl Rule {
    pub fn new(name: impl Into<String>) -> Self {
        Rule {
            name: name.into(),
            params: Vec::new(),
            lhs: PatternGraph::default(),
            rhs: PatternGraph::default(),
            mapping: Vec::new(),
            condition: ConditionFormula::True,
            assignments: Vec::new(),
            injective: true,
        }
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p.name == name)
    }
}

// ---- classification --------------------------------------------------------

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    /// `(lhs id, rhs id)`
    pub preserved_nodes: Vec<(String, String)>,
    pub deleted_nodes: Vec<String>,
    pub created_nodes: Vec<String>,
    /// Edges as `(src, reference, trg)` in LHS ids (preserved, deleted) or
    /// RHS ids (created).
    pub preserved_edges: Vec<(String, String, String)>,
    pub deleted_edges: Vec<(String, String, String)>,
    pub created_edges: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("mapping names unknown pnode `{0}`")]
    UnknownNode(String),
    #[error("mapping `{lhs}` -> `{rhs}` changes type from `{lhs_ty}` to `{rhs_ty}`")]
    TypeMismatch {
        lhs: String,
        rhs: String,
        lhs_ty: String,
        rhs_ty: String,
    },
    #[error("mapping is not injective at `{0}`")]
    NotInjective(String),
}

fn edge_key(e: &PatternEdge) -> (String, String, String) {
    (e.src.clone(), e.reference.clone(), e.trg.clone())
}

/// Partitions the rule's pattern elements into created, deleted and
/// preserved ones.
pub fn classify(rule: &Rule) -> Result<Classification, ClassifyError> {
    let mut fwd: HashMap<&str, &str> = HashMap::new();
    let mut seen_rhs = HashSet::new();
    for (l, r) in &rule.mapping {
        let ln = rule
            .lhs
            .node(l)
            .ok_or_else(|| ClassifyError::UnknownNode(l.clone()))?;
        let rn = rule
            .rhs
            .node(r)
            .ok_or_else(|| ClassifyError::UnknownNode(r.clone()))?;
        if ln.ty != rn.ty {
            return Err(ClassifyError::TypeMismatch {
                lhs: l.clone(),
                rhs: r.clone(),
                lhs_ty: ln.ty.clone(),
                rhs_ty: rn.ty.clone(),
            });
        }
        if fwd.insert(l, r).is_some() {
            return Err(ClassifyError::NotInjective(l.clone()));
        }
        if !seen_rhs.insert(r.as_str()) {
            return Err(ClassifyError::NotInjective(r.clone()));
        }
    }
    let mut c = Classification::default();
    for n in &rule.lhs.nodes {
        match fwd.get(n.id.as_str()) {
            Some(r) => c.preserved_nodes.push((n.id.clone(), (*r).to_owned())),
            None => c.deleted_nodes.push(n.id.clone()),
        }
    }
    for n in &rule.rhs.nodes {
        if !seen_rhs.contains(n.id.as_str()) {
            c.created_nodes.push(n.id.clone());
        }
    }
    let mut rhs_unused: Vec<Option<&PatternEdge>> = rule.rhs.edges.iter().map(Some).collect();
    for e in &rule.lhs.edges {
        let image = match (fwd.get(e.src.as_str()), fwd.get(e.trg.as_str())) {
            (Some(s), Some(t)) => rhs_unused.iter().position(|r| {
                r.is_some_and(|r| r.src == *s && r.trg == *t && r.reference == e.reference)
            }),
            _ => None,
        };
        match image {
            Some(i) => {
                rhs_unused[i] = None;
                c.preserved_edges.push(edge_key(e));
            }
            None => c.deleted_edges.push(edge_key(e)),
        }
    }
    c.created_edges = rhs_unused.into_iter().flatten().map(edge_key).collect();
    Ok(c)
}

// ---- validation --------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
}

impl Diagnostic {
    fn error(message: String) -> Self {
        Diagnostic {
            severity: Severity::Error,
            message,
        }
    }

    fn warning(message: String) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            message,
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

struct Validator<'a> {
    rule: &'a Rule,
    mm: &'a Metamodel,
    diags: Vec<Diagnostic>,
    used: HashSet<String>,
}

impl Validator<'_> {
    fn err(&mut self, msg: String) {
        self.diags.push(Diagnostic::error(format!(
            "rule `{}`: {msg}",
            self.rule.name
        )));
    }

    fn param(&mut self, name: &str, context: &str) {
        if self.rule.param_index(name).is_none() {
            self.err(format!("{context} uses undeclared parameter `{name}`"));
        }
        self.used.insert(name.to_owned());
    }

    fn graph(&mut self, g: &PatternGraph, what: &str, allow_abstract: bool) {
        let mut ids = HashSet::new();
        for n in &g.nodes {
            if !ids.insert(n.id.as_str()) {
                self.err(format!("duplicate {what} pnode `{}`", n.id));
            }
            let Some(ty) = self.mm.type_id(&n.ty) else {
                self.err(format!(
                    "{what} pnode `{}` has unknown type `{}`",
                    n.id, n.ty
                ));
                continue;
            };
            if !allow_abstract && self.mm.is_abstract(ty) {
                self.err(format!(
                    "created pnode `{}` has abstract type `{}`",
                    n.id, n.ty
                ));
            }
            if let Some(b) = &n.binding {
                self.param(b, &format!("pnode `{}`", n.id));
            }
            for (attr, pat) in &n.attrs {
                let Some(aid) = self.mm.attribute(ty, attr) else {
                    self.err(format!(
                        "pnode `{}`: type `{}` has no attribute `{attr}`",
                        n.id, n.ty
                    ));
                    continue;
                };
                match pat {
                    AttrPattern::Constant(v) => {
                        let kind = self.mm.attr_info(aid).kind;
                        if v.kind() != kind {
                            self.err(format!(
                                "pnode `{}`: attribute `{attr}` is {kind}, constant is {}",
                                n.id,
                                v.kind()
                            ));
                        }
                    }
                    AttrPattern::Param(p) => self.param(p, &format!("pnode `{}`", n.id)),
                    AttrPattern::Check(e) => {
                        for p in e.params() {
                            if p != SELF_VALUE {
                                self.param(p, &format!("check on `{}.{attr}`", n.id));
                            }
                        }
                    }
                }
            }
        }
        for e in &g.edges {
            let src = g.node(&e.src);
            let trg = g.node(&e.trg);
            if src.is_none() {
                self.err(format!("{what} edge names unknown pnode `{}`", e.src));
            }
            if trg.is_none() {
                self.err(format!("{what} edge names unknown pnode `{}`", e.trg));
            }
            let (Some(src), Some(trg)) = (src, trg) else {
                continue;
            };
            let (Some(st), Some(tt)) = (self.mm.type_id(&src.ty), self.mm.type_id(&trg.ty)) else {
                continue;
            };
            match self.mm.reference(st, &e.reference) {
                None => self.err(format!(
                    "{what} edge from pnode `{}`: type `{}` has no reference `{}`",
                    e.src, src.ty, e.reference
                )),
                Some(r) => {
                    let target = self.mm.ref_info(r).target;
                    if !self.compatible(tt, target) {
                        self.err(format!(
                            "{what} edge `{}` -{}-> `{}`: `{}` can never conform to `{}`",
                            e.src,
                            e.reference,
                            e.trg,
                            trg.ty,
                            self.mm.type_name(target)
                        ));
                    }
                }
            }
        }
    }

    /// Some concrete type conforms to both.
    fn compatible(&self, a: TypeId, b: TypeId) -> bool {
        self.mm
            .concrete_subtypes(a)
            .iter()
            .any(|t| self.mm.conforms(*t, b))
    }

    fn condition(&mut self, host: &PatternGraph, f: &ConditionFormula, depth: usize) {
        match f {
            ConditionFormula::True => {}
            ConditionFormula::Not(a) => self.condition(host, a, depth),
            ConditionFormula::And(a, b) | ConditionFormula::Or(a, b) => {
                self.condition(host, a, depth);
                self.condition(host, b, depth);
            }
            ConditionFormula::Graph(gc) => {
                self.graph(&gc.extension, &format!("condition (level {depth})"), true);
                let mut anchored = HashSet::new();
                for (h, x) in &gc.anchor {
                    let (Some(hn), Some(xn)) = (host.node(h), gc.extension.node(x)) else {
                        self.err(format!(
                            "condition anchor `{h}` -> `{x}` names an unknown pnode"
                        ));
                        continue;
                    };
                    if !anchored.insert(x.as_str()) {
                        self.err(format!("condition pnode `{x}` anchored twice"));
                    }
                    if let (Some(ht), Some(xt)) = (self.mm.type_id(&hn.ty), self.mm.type_id(&xn.ty))
                    {
                        if !self.compatible(ht, xt) {
                            self.err(format!(
                                "condition anchor `{h}` -> `{x}` joins incompatible types"
                            ));
                        }
                    }
                }
                self.condition(&gc.extension, &gc.nested, depth + 1);
            }
        }
    }
}

/// Checks types, features, parameters and mappings. Returns every problem
/// found; an empty list means the rule is well formed.
pub fn validate_rule(rule: &Rule, mm: &Metamodel) -> Vec<Diagnostic> {
    let mut v = Validator {
        rule,
        mm,
        diags: Vec::new(),
        used: HashSet::new(),
    };
    let mut names = HashSet::new();
    for p in &rule.params {
        if !names.insert(p.name.as_str()) {
            v.err(format!("duplicate parameter `{}`", p.name));
        }
        if p.name == SELF_VALUE {
            v.err(format!("parameter name `{SELF_VALUE}` is reserved"));
        }
    }
    v.graph(&rule.lhs, "LHS", true);
    v.graph(&rule.rhs, "RHS", true);
    let mut bound_by: HashMap<&str, &str> = HashMap::new();
    for n in rule.lhs.nodes.iter() {
        if let Some(b) = &n.binding {
            if let Some(prev) = bound_by.insert(b, &n.id) {
                v.err(format!(
                    "parameter `{b}` binds both `{prev}` and `{}`",
                    n.id
                ));
            }
        }
    }
    match classify(rule) {
        Err(e) => v.err(e.to_string()),
        Ok(c) => {
            for id in &c.created_nodes {
                let n = rule.rhs.node(id).expect("classified");
                if let Some(ty) = mm.type_id(&n.ty) {
                    if mm.is_abstract(ty) {
                        v.err(format!("created pnode `{id}` has abstract type `{}`", n.ty));
                    }
                }
                if !n.attrs.is_empty() {
                    v.err(format!(
                        "created pnode `{id}` carries attribute patterns; use assignments"
                    ));
                }
                if let Some(b) = &n.binding {
                    if let Some(prev) = bound_by.insert(b, id) {
                        v.err(format!("parameter `{b}` binds both `{prev}` and `{id}`"));
                    }
                }
            }
            for a in &rule.assignments {
                let Some(n) = rule.rhs.node(&a.node) else {
                    v.err(format!("assignment to unknown RHS pnode `{}`", a.node));
                    continue;
                };
                match mm.type_id(&n.ty) {
                    Some(ty) if mm.attribute(ty, &a.attr).is_none() => v.err(format!(
                        "assignment: type `{}` has no attribute `{}`",
                        n.ty, a.attr
                    )),
                    _ => {}
                }
                for p in a.expr.params() {
                    v.param(p, &format!("assignment to `{}.{}`", a.node, a.attr));
                }
            }
        }
    }
    v.condition(&rule.lhs, &rule.condition, 1);
    for p in &rule.params {
        if !v.used.contains(&p.name) {
            v.diags.push(Diagnostic::warning(format!(
                "rule `{}`: parameter `{}` is never used",
                rule.name, p.name
            )));
        }
    }
    v.diags
}

// ---- compiled form -----------------------------------------------------------

#[derive(Clone, Debug)]
pub enum CAttrPattern {
    Const(Value),
    Param(usize),
    /// Expression plus the parameter indices it reads (excluding `self`).
    Check(Expr, Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct CNode {
    pub ty: TypeId,
    pub binding: Option<usize>,
    pub attrs: Vec<(AttrId, CAttrPattern)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CEdge {
    pub src: usize,
    pub reference: RefId,
    pub trg: usize,
}

#[derive(Clone, Debug, Default)]
pub struct CPattern {
    pub nodes: Vec<CNode>,
    pub edges: Vec<CEdge>,
}

#[derive(Clone, Debug)]
pub enum CCondition {
    True,
    Graph(Box<CGraphCondition>),
    Not(Box<CCondition>),
    And(Box<CCondition>, Box<CCondition>),
    Or(Box<CCondition>, Box<CCondition>),
}

#[derive(Clone, Debug)]
pub struct CGraphCondition {
    pub pattern: CPattern,
    /// `(host pnode index, extension pnode index)`
    pub anchors: Vec<(usize, usize)>,
    pub nested: CCondition,
}

impl CCondition {
    /// Host pnodes the formula inspects directly (anchors of its top-level
    /// graph conditions).
    pub fn anchored_host_nodes(&self, out: &mut Vec<usize>) {
        match self {
            CCondition::True => {}
            CCondition::Graph(g) => out.extend(g.anchors.iter().map(|(h, _)| *h)),
            CCondition::Not(a) => a.anchored_host_nodes(out),
            CCondition::And(a, b) | CCondition::Or(a, b) => {
                a.anchored_host_nodes(out);
                b.anchored_host_nodes(out);
            }
        }
    }

    /// Parameters read anywhere in the formula.
    pub fn params(&self, out: &mut Vec<usize>) {
        match self {
            CCondition::True => {}
            CCondition::Graph(g) => {
                for n in &g.pattern.nodes {
                    out.extend(n.binding);
                    for (_, p) in &n.attrs {
                        match p {
                            CAttrPattern::Param(i) => out.push(*i),
                            CAttrPattern::Check(_, ps) => out.extend(ps),
                            CAttrPattern::Const(_) => {}
                        }
                    }
                }
                g.nested.params(out);
            }
            CCondition::Not(a) => a.params(out),
            CCondition::And(a, b) | CCondition::Or(a, b) => {
                a.params(out);
                b.params(out);
            }
        }
    }

    /// Top-level conjuncts.
    pub fn conjuncts(&self) -> Vec<&CCondition> {
        match self {
            CCondition::True => Vec::new(),
            CCondition::And(a, b) => {
                let mut v = a.conjuncts();
                v.extend(b.conjuncts());
                v
            }
            other => vec![other],
        }
    }
}

/// A node touched by the rewrite: either a matched LHS node or a node the
/// rewrite creates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Matched(usize),
    Created(usize),
}

#[derive(Clone, Debug, Default)]
pub struct Rewrite {
    pub delete_edges: Vec<CEdge>,
    pub delete_nodes: Vec<usize>,
    /// Type and optional binding parameter of each created node.
    pub create_nodes: Vec<(TypeId, Option<usize>)>,
    pub create_edges: Vec<(End, RefId, End)>,
    pub assignments: Vec<(End, AttrId, Expr)>,
}

#[derive(Clone, Debug)]
pub struct CompiledRule {
    pub name: String,
    pub params: Vec<Parameter>,
    pub lhs: CPattern,
    pub condition: CCondition,
    pub injective: bool,
    pub rewrite: Rewrite,
    pub source: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n"))]
pub struct RuleErrors(pub Vec<Diagnostic>);

impl CompiledRule {
    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|p| p.name == name)
    }
}

/// Validates and resolves `rule` against `mm`. Warnings are ignored here;
/// use [`validate_rule`] to see them.
pub fn compile(rule: &Rule, mm: &Metamodel) -> Result<CompiledRule, RuleErrors> {
    let errors: Vec<_> = validate_rule(rule, mm)
        .into_iter()
        .filter(Diagnostic::is_error)
        .collect();
    if !errors.is_empty() {
        return Err(RuleErrors(errors));
    }
    let param = |name: &str| rule.param_index(name).expect("validated");
    let lhs = compile_pattern(&rule.lhs, mm, &param);
    let condition = compile_condition(&rule.condition, &rule.lhs, mm, &param);
    let c = classify(rule).expect("validated");

    let mut rewrite = Rewrite::default();
    let lhs_idx = |id: &str| rule.lhs.index(id).expect("validated");
    let ty_of = |g: &PatternGraph, id: &str| {
        mm.type_id(&g.node(id).expect("validated").ty)
            .expect("validated")
    };
    for (s, r, t) in &c.deleted_edges {
        let reference = mm.reference(ty_of(&rule.lhs, s), r).expect("validated");
        rewrite.delete_edges.push(CEdge {
            src: lhs_idx(s),
            reference,
            trg: lhs_idx(t),
        });
    }
    rewrite.delete_nodes = c.deleted_nodes.iter().map(|id| lhs_idx(id)).collect();
    let mut rhs_end: HashMap<&str, End> = HashMap::new();
    for (l, r) in &c.preserved_nodes {
        rhs_end.insert(r, End::Matched(lhs_idx(l)));
    }
    for id in &c.created_nodes {
        let n = rule.rhs.node(id).expect("classified");
        rhs_end.insert(id, End::Created(rewrite.create_nodes.len()));
        rewrite
            .create_nodes
            .push((ty_of(&rule.rhs, id), n.binding.as_deref().map(param)));
    }
    for (s, r, t) in &c.created_edges {
        let reference = mm.reference(ty_of(&rule.rhs, s), r).expect("validated");
        rewrite
            .create_edges
            .push((rhs_end[s.as_str()], reference, rhs_end[t.as_str()]));
    }
    for a in &rule.assignments {
        let attr = mm
            .attribute(ty_of(&rule.rhs, &a.node), &a.attr)
            .expect("validated");
        rewrite
            .assignments
            .push((rhs_end[a.node.as_str()], attr, a.expr.clone()));
    }
    Ok(CompiledRule {
        name: rule.name.clone(),
        params: rule.params.clone(),
        lhs,
        condition,
        injective: rule.injective,
        rewrite,
        source: rule.clone(),
    })
}

fn compile_pattern(g: &PatternGraph, mm: &Metamodel, param: &dyn Fn(&str) -> usize) -> CPattern {
    let nodes = g
        .nodes
        .iter()
        .map(|n| {
            let ty = mm.type_id(&n.ty).expect("validated");
            let attrs = n
                .attrs
                .iter()
                .map(|(a, p)| {
                    let attr = mm.attribute(ty, a).expect("validated");
                    let pat = match p {
                        AttrPattern::Constant(v) => CAttrPattern::Const(v.clone()),
                        AttrPattern::Param(name) => CAttrPattern::Param(param(name)),
                        AttrPattern::Check(e) => CAttrPattern::Check(
                            e.clone(),
                            e.params()
                                .into_iter()
                                .filter(|p| *p != SELF_VALUE)
                                .map(param)
                                .collect(),
                        ),
                    };
                    (attr, pat)
                })
                .collect();
            CNode {
                ty,
                binding: n.binding.as_deref().map(param),
                attrs,
            }
        })
        .collect();
    let edges = g
        .edges
        .iter()
        .map(|e| {
            let src = g.index(&e.src).expect("validated");
            let ty = mm.type_id(&g.nodes[src].ty).expect("validated");
            CEdge {
                src,
                reference: mm.reference(ty, &e.reference).expect("validated"),
                trg: g.index(&e.trg).expect("validated"),
            }
        })
        .collect();
    CPattern { nodes, edges }
}

fn compile_condition(
    f: &ConditionFormula,
    host: &PatternGraph,
    mm: &Metamodel,
    param: &dyn Fn(&str) -> usize,
) -> CCondition {
    match f {
        ConditionFormula::True => CCondition::True,
        ConditionFormula::Not(a) => {
            CCondition::Not(Box::new(compile_condition(a, host, mm, param)))
        }
        ConditionFormula::And(a, b) => CCondition::And(
            Box::new(compile_condition(a, host, mm, param)),
            Box::new(compile_condition(b, host, mm, param)),
        ),
        ConditionFormula::Or(a, b) => CCondition::Or(
            Box::new(compile_condition(a, host, mm, param)),
            Box::new(compile_condition(b, host, mm, param)),
        ),
        ConditionFormula::Graph(gc) => CCondition::Graph(Box::new(CGraphCondition {
            pattern: compile_pattern(&gc.extension, mm, param),
            anchors: gc
                .anchor
                .iter()
                .map(|(h, x)| {
                    (
                        host.index(h).expect("validated"),
                        gc.extension.index(x).expect("validated"),
                    )
                })
                .collect(),
            nested: compile_condition(&gc.nested, &gc.extension, mm, param),
        })),
    }
}

/// Expression environment over a parameter frame, plus the guarded
/// attribute value as `self` inside checks.
pub struct ParamEnv<'a> {
    pub params: &'a [Parameter],
    pub values: &'a [Option<ParamValue>],
    pub this: Option<&'a Value>,
}

impl Env for ParamEnv<'_> {
    fn lookup(&self, name: &str) -> Option<Value> {
        if name == SELF_VALUE {
            if let Some(v) = self.this {
                return Some(v.clone());
            }
        }
        let i = self.params.iter().position(|p| p.name == name)?;
        match self.values.get(i)? {
            Some(ParamValue::Value(v)) => Some(v.clone()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metamodel::NodeTypeDef;
    use crate::value::AttrKind;

    fn mm() -> Metamodel {
        Metamodel::new(
            "t",
            vec![
                NodeTypeDef::new("Class")
                    .attr("name", AttrKind::String)
                    .attr("abstract", AttrKind::Boolean),
                NodeTypeDef::new("StateMachine").contains("states", "State", true),
                NodeTypeDef::new("State").attr("name", AttrKind::String),
                NodeTypeDef::new("Trace")
                    .reference("source", crate::ANY, true)
                    .reference("target", crate::ANY, true),
                NodeTypeDef::new("Stmt").abstract_(),
            ],
        )
        .unwrap()
    }

    fn init_rule() -> Rule {
        let mut r = Rule::new("init");
        r.params = vec![
            Parameter::new("sm", ParamMode::Out),
            Parameter::new("class", ParamMode::Out),
        ];
        let class = PatternNode::new("class", "Class")
            .bind("class")
            .attr("name", AttrPattern::Constant("State".into()));
        r.lhs.nodes.push(class.clone());
        r.rhs.nodes.push(class);
        r.rhs
            .nodes
            .push(PatternNode::new("sm", "StateMachine").bind("sm"));
        r.mapping.push(("class".into(), "class".into()));
        r
    }

    #[test]
    fn classify_init() {
        let c = classify(&init_rule()).unwrap();
        assert_eq!(c.created_nodes, ["sm"]);
        assert_eq!(
            c.preserved_nodes,
            [("class".to_string(), "class".to_string())]
        );
        assert!(c.deleted_nodes.is_empty() && c.deleted_edges.is_empty());
    }

    #[test]
    fn classify_trace_deletion() {
        let mut r = Rule::new("del");
        for n in [
            PatternNode::new("t", "Trace"),
            PatternNode::new("s", "State"),
            PatternNode::new("c", "Class"),
        ] {
            r.lhs.nodes.push(n);
        }
        r.rhs.nodes.push(PatternNode::new("s", "State"));
        r.rhs.nodes.push(PatternNode::new("c", "Class"));
        r.mapping = vec![("s".into(), "s".into()), ("c".into(), "c".into())];
        r.lhs.edges = vec![
            PatternEdge::new("t", "source", "s"),
            PatternEdge::new("t", "target", "c"),
        ];
        let c = classify(&r).unwrap();
        assert_eq!(c.deleted_nodes, ["t"]);
        assert_eq!(c.deleted_edges.len(), 2);
        assert_eq!(c.preserved_nodes.len(), 2);
    }

    #[test]
    fn classify_identity_preserves_everything() {
        let mut r = Rule::new("id");
        r.lhs.nodes = vec![
            PatternNode::new("a", "State"),
            PatternNode::new("m", "StateMachine"),
        ];
        r.lhs.edges = vec![PatternEdge::new("m", "states", "a")];
        r.rhs = r.lhs.clone();
        r.mapping = vec![("a".into(), "a".into()), ("m".into(), "m".into())];
        let c = classify(&r).unwrap();
        assert_eq!(c.preserved_nodes.len(), 2);
        assert_eq!(c.preserved_edges.len(), 1);
        assert!(
            c.created_nodes.is_empty() && c.deleted_nodes.is_empty() && c.created_edges.is_empty()
        );
    }

    #[test]
    fn classify_rejects_type_change() {
        let mut r = Rule::new("bad");
        r.lhs.nodes.push(PatternNode::new("a", "State"));
        r.rhs.nodes.push(PatternNode::new("a", "Class"));
        r.mapping.push(("a".into(), "a".into()));
        assert!(matches!(
            classify(&r),
            Err(ClassifyError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn validate_reports_undeclared_reference_and_unused_param() {
        assert!(validate_rule(&init_rule(), &mm()).is_empty());

        let mut r = init_rule();
        r.lhs.nodes.push(PatternNode::new("s", "State"));
        r.lhs.edges.push(PatternEdge::new("class", "states", "s"));
        let d = validate_rule(&r, &mm());
        assert_eq!(d.len(), 1, "{d:?}");
        assert!(d[0].is_error());
        assert!(d[0].message.contains("`class`") && d[0].message.contains("`states`"));

        let mut r = init_rule();
        r.params.push(Parameter::new("unused", ParamMode::In));
        let d = validate_rule(&r, &mm());
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].severity, Severity::Warning);
    }

    #[test]
    fn validate_catches_abstract_creation_and_bad_constants() {
        let mut r = Rule::new("r");
        r.rhs.nodes.push(PatternNode::new("x", "Stmt"));
        r.lhs.nodes.push(
            PatternNode::new("c", "Class").attr("name", AttrPattern::Constant(Value::Int(1))),
        );
        let d = validate_rule(&r, &mm());
        assert_eq!(d.iter().filter(|d| d.is_error()).count(), 2, "{d:?}");
    }

    #[test]
    fn compile_builds_rewrite() {
        let c = compile(&init_rule(), &mm()).unwrap();
        assert_eq!(c.lhs.nodes.len(), 1);
        assert_eq!(c.rewrite.create_nodes.len(), 1);
        assert_eq!(c.rewrite.create_nodes[0].1, Some(0));
        assert!(c.rewrite.delete_nodes.is_empty());
    }
}
