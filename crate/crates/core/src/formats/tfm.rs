//! Transformation text format (`.tfm`).
//!
//! Rules are written in integrated notation: every node and edge carries a
//! stereotype (`<<create>>`, `<<delete>>`, `<<forbid>>`, `<<require>>`, or
//! none for preserved elements) and the parser splits them into LHS, RHS,
//! mapping and application conditions.
//!
//! ```text
//! import statemachine;
//! main Start;
//!
//! rule createState(in sm, inout class, out name) {
//!   node sm : StateMachine;
//!   node class : Class bind class { attr name = name; attr abstract = false; }
//!   node state : State <<create>> { attr name = name; }
//!   edge sm -states-> state;
//!   node other : State <<forbid>> { attr name = name; }
//! }
//!
//! unit counted StatesLoop(sm) { CreateState; count -1; map sm -> CreateState.sm; }
//! ```
//!
//! Edges inherit the stereotype of a created, deleted, forbidden or
//! required endpoint unless they state their own. Untagged `<<forbid>>`
//! elements form one negative condition per connected component;
//! `<<forbid[g]>>` puts elements into the named condition `g`. The same
//! holds for `<<require>>`. A `<<forbid>>` on an attribute line of a
//! preserved node forbids that attribute value.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use thiserror::Error;

use crate::engine::{ResolveError, Transformation, UnitDef, UnitKindDef};
use crate::expr::{self, Expr};
use crate::lex::{Cursor, Pos, SyntaxError, Tok};
use crate::metamodel::{Metamodel, MetamodelError};
use crate::rules::{
    Assignment, AttrPattern, ConditionFormula, GraphCondition, ParamMode, Parameter, PatternEdge,
    PatternGraph, PatternNode, Rule,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TfmError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("{}", .0.iter().map(|(p, m)| format!("{p}: {m}")).collect::<Vec<_>>().join("\n"))]
    Invalid(Vec<(Pos, String)>),
    #[error("import of unknown metamodel `{0}`")]
    UnknownImport(String),
    #[error("imported metamodels do not compose: {0}")]
    Compose(#[from] MetamodelError),
    #[error("{}", .0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n"))]
    Resolve(Vec<ResolveError>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransformationFile {
    pub imports: Vec<String>,
    pub rules: Vec<Rule>,
    pub units: Vec<UnitDef>,
    pub main: Option<String>,
}

/// Parses and resolves a transformation against the metamodels it imports,
/// looked up by name in `available` (`trace` is built in). The result
/// works on graphs typed by the composition of the imports, which is
/// returned alongside.
pub fn load_transformation(
    text: &str,
    available: &[&Metamodel],
) -> Result<(Arc<Metamodel>, Transformation), TfmError> {
    let file = parse_transformation(text)?;
    let trace = super::trace_metamodel();
    let mut parts = Vec::new();
    for name in &file.imports {
        let mm = if name == super::TRACE {
            &trace
        } else {
            available
                .iter()
                .copied()
                .find(|m| m.name() == name)
                .ok_or_else(|| TfmError::UnknownImport(name.clone()))?
        };
        parts.push(mm);
    }
    let mm = Arc::new(Metamodel::compose(file.imports.join("+"), &parts)?);
    let t = Transformation::new(mm.clone(), &file.rules, &file.units, file.main.as_deref())
        .map_err(TfmError::Resolve)?;
    Ok((mm, t))
}

pub fn parse_transformation(text: &str) -> Result<TransformationFile, TfmError> {
    let mut cur = Cursor::new(text)?;
    let mut file = TransformationFile {
        imports: Vec::new(),
        rules: Vec::new(),
        units: Vec::new(),
        main: None,
    };
    let mut problems = Vec::new();
    while !cur.at_eof() {
        if cur.eat_kw("import") {
            file.imports.push(cur.ident()?.0);
            cur.expect_sym(";")?;
        } else if cur.is_kw("main") {
            let pos = cur.bump().pos;
            let (name, _) = cur.ident()?;
            cur.expect_sym(";")?;
            if file.main.replace(name).is_some() {
                problems.push((pos, "more than one `main` declaration".to_owned()));
            }
        } else if cur.eat_kw("rule") {
            let decl = rule_decl(&mut cur)?;
            match desugar(decl) {
                Ok(r) => file.rules.push(r),
                Err(mut e) => problems.append(&mut e),
            }
        } else if cur.eat_kw("unit") {
            match unit_decl(&mut cur)? {
                Ok(u) => file.units.push(u),
                Err(e) => problems.push(e),
            }
        } else {
            return Err(cur.error("`import`, `main`, `rule` or `unit`").into());
        }
    }
    if !problems.is_empty() {
        problems.sort_by_key(|(p, _)| *p);
        return Err(TfmError::Invalid(problems));
    }
    Ok(file)
}

fn params(cur: &mut Cursor) -> Result<Vec<Parameter>, SyntaxError> {
    let mut out = Vec::new();
    if !cur.eat_sym("(") {
        return Ok(out);
    }
    if cur.eat_sym(")") {
        return Ok(out);
    }
    loop {
        let (first, _) = cur.ident()?;
        let mode = match first.as_str() {
            "in" => Some(ParamMode::In),
            "out" => Some(ParamMode::Out),
            "inout" => Some(ParamMode::InOut),
            _ => None,
        };
        // `in` alone would be a parameter named `in`; a mode is only a mode
        // when another identifier follows.
        match (mode, cur.peek()) {
            (Some(mode), Tok::Ident(_)) => out.push(Parameter::new(cur.ident()?.0, mode)),
            _ => out.push(Parameter::new(first, ParamMode::InOut)),
        }
        if cur.eat_sym(")") {
            return Ok(out);
        }
        cur.expect_sym(",")?;
    }
}

// ---- rules ----------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
enum Stereo {
    Preserve,
    Create,
    Delete,
    Forbid(Option<String>),
    Require(Option<String>),
}

impl Stereo {
    fn label(&self) -> String {
        match self {
            Stereo::Preserve => "<<preserve>>".into(),
            Stereo::Create => "<<create>>".into(),
            Stereo::Delete => "<<delete>>".into(),
            Stereo::Forbid(None) => "<<forbid>>".into(),
            Stereo::Require(None) => "<<require>>".into(),
            Stereo::Forbid(Some(g)) => format!("<<forbid[{g}]>>"),
            Stereo::Require(Some(g)) => format!("<<require[{g}]>>"),
        }
    }

    fn is_condition(&self) -> bool {
        matches!(self, Stereo::Forbid(_) | Stereo::Require(_))
    }
}

struct NodeDecl {
    id: String,
    ty: String,
    stereo: Stereo,
    binding: Option<String>,
    attrs: Vec<AttrDecl>,
    pos: Pos,
}

struct AttrDecl {
    name: String,
    value: AttrValue,
    stereo: Option<Stereo>,
    pos: Pos,
}

enum AttrValue {
    Check(Expr),
    Expr(Expr),
}

struct EdgeDecl {
    src: String,
    reference: String,
    trg: String,
    stereo: Option<Stereo>,
    pos: Pos,
}

struct RuleDecl {
    name: String,
    params: Vec<Parameter>,
    nodes: Vec<NodeDecl>,
    edges: Vec<EdgeDecl>,
    assigns: Vec<(Assignment, Pos)>,
    injective: bool,
}

fn stereo(cur: &mut Cursor) -> Result<Option<Stereo>, SyntaxError> {
    if !cur.eat_sym("<<") {
        return Ok(None);
    }
    let (kw, pos) = cur.ident()?;
    let group = if cur.eat_sym("[") {
        let (g, _) = cur.ident()?;
        cur.expect_sym("]")?;
        Some(g)
    } else {
        None
    };
    let s = match (kw.as_str(), group) {
        ("preserve", None) => Stereo::Preserve,
        ("create", None) => Stereo::Create,
        ("delete", None) => Stereo::Delete,
        ("forbid", g) => Stereo::Forbid(g),
        ("require", g) => Stereo::Require(g),
        (k, Some(_)) if matches!(k, "preserve" | "create" | "delete") => {
            return Err(SyntaxError::new(pos, format!("`{k}` takes no group")))
        }
        (k, _) => {
            return Err(SyntaxError::new(
                pos,
                format!(
                "unknown stereotype `{k}`; expected create, delete, forbid, require or preserve"
            ),
            ))
        }
    };
    cur.expect_sym(">>")?;
    Ok(Some(s))
}

fn rule_decl(cur: &mut Cursor) -> Result<RuleDecl, SyntaxError> {
    let (name, _) = cur.ident()?;
    let params = params(cur)?;
    let mut r = RuleDecl {
        name,
        params,
        nodes: Vec::new(),
        edges: Vec::new(),
        assigns: Vec::new(),
        injective: true,
    };
    cur.expect_sym("{")?;
    while !cur.eat_sym("}") {
        if cur.is_kw("node") {
            let pos = cur.bump().pos;
            let (id, _) = cur.ident()?;
            cur.expect_sym(":")?;
            let (ty, _) = cur.ident()?;
            let st = stereo(cur)?.unwrap_or(Stereo::Preserve);
            let binding = if cur.eat_kw("bind") {
                Some(cur.ident()?.0)
            } else {
                None
            };
            let mut attrs = Vec::new();
            if cur.eat_sym("{") {
                while !cur.eat_sym("}") {
                    let pos = cur.expect_kw("attr")?;
                    let (name, _) = cur.ident()?;
                    cur.expect_sym("=")?;
                    let value = if cur.is_kw("check") && matches!(cur.peek_at(1), Tok::Sym("(")) {
                        cur.bump();
                        cur.expect_sym("(")?;
                        let e = expr::parse(cur)?;
                        cur.expect_sym(")")?;
                        AttrValue::Check(e)
                    } else {
                        AttrValue::Expr(expr::parse(cur)?)
                    };
                    let st = stereo(cur)?;
                    cur.expect_sym(";")?;
                    attrs.push(AttrDecl {
                        name,
                        value,
                        stereo: st,
                        pos,
                    });
                }
            } else {
                cur.expect_sym(";")?;
            }
            r.nodes.push(NodeDecl {
                id,
                ty,
                stereo: st,
                binding,
                attrs,
                pos,
            });
        } else if cur.is_kw("edge") {
            let pos = cur.bump().pos;
            let (src, _) = cur.ident()?;
            cur.expect_sym("-")?;
            let (reference, _) = cur.ident()?;
            cur.expect_sym("->")?;
            let (trg, _) = cur.ident()?;
            let st = stereo(cur)?;
            cur.expect_sym(";")?;
            r.edges.push(EdgeDecl {
                src,
                reference,
                trg,
                stereo: st,
                pos,
            });
        } else if cur.is_kw("assign") {
            let pos = cur.bump().pos;
            let (node, _) = cur.ident()?;
            cur.expect_sym(".")?;
            let (attr, _) = cur.ident()?;
            cur.expect_sym("=")?;
            let e = expr::parse(cur)?;
            cur.expect_sym(";")?;
            r.assigns.push((
                Assignment {
                    node,
                    attr,
                    expr: e,
                },
                pos,
            ));
        } else if cur.is_kw("injective") {
            cur.bump();
            r.injective = match cur.ident()?.0.as_str() {
                "true" => true,
                "false" => false,
                _ => return Err(cur.error("`true` or `false`")),
            };
            cur.expect_sym(";")?;
        } else {
            return Err(cur.error("`node`, `edge`, `assign`, `injective` or `}`"));
        }
    }
    Ok(r)
}

/// Condition group key: kind (true = forbid) plus group identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum GroupKey {
    Named(bool, String),
    Anon(bool, usize),
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn desugar(d: RuleDecl) -> Result<Rule, Vec<(Pos, String)>> {
    let mut errs: Vec<(Pos, String)> = Vec::new();
    let mut by_id: HashMap<&str, usize> = HashMap::new();
    for (i, n) in d.nodes.iter().enumerate() {
        if by_id.insert(&n.id, i).is_some() {
            errs.push((
                n.pos,
                format!("rule `{}`: duplicate node `{}`", d.name, n.id),
            ));
        }
    }

    // Effective edge stereotypes.
    let mut edge_st = Vec::new();
    for e in &d.edges {
        let ends: Vec<Option<&Stereo>> = [&e.src, &e.trg]
            .iter()
            .map(|id| by_id.get(id.as_str()).map(|&i| &d.nodes[i].stereo))
            .collect();
        if ends.iter().any(Option::is_none) {
            let missing = if ends[0].is_none() { &e.src } else { &e.trg };
            errs.push((
                e.pos,
                format!("rule `{}`: edge names unknown node `{missing}`", d.name),
            ));
            edge_st.push(Stereo::Preserve);
            continue;
        }
        let ends: Vec<&Stereo> = ends.into_iter().flatten().collect();
        let inferred = e.stereo.clone().unwrap_or_else(|| {
            [Stereo::Create, Stereo::Delete]
                .into_iter()
                .find(|s| ends.contains(&s))
                .or_else(|| ends.iter().find(|s| s.is_condition()).map(|s| (*s).clone()))
                .unwrap_or(Stereo::Preserve)
        });
        let ok = ends.iter().all(|s| match &inferred {
            Stereo::Preserve => **s == Stereo::Preserve,
            Stereo::Create => matches!(s, Stereo::Preserve | Stereo::Create),
            Stereo::Delete => matches!(s, Stereo::Preserve | Stereo::Delete),
            cond => matches!(s, Stereo::Preserve | Stereo::Delete) || *s == cond,
        });
        if !ok {
            errs.push((
                e.pos,
                format!(
                    "rule `{}`: edge `{}` -{}-> `{}` cannot be {} given its endpoints",
                    d.name,
                    e.src,
                    e.reference,
                    e.trg,
                    inferred.label()
                ),
            ));
        }
        edge_st.push(inferred);
    }

    let mut rule = Rule::new(d.name.clone());
    rule.params = d.params.clone();
    rule.injective = d.injective;
    let pattern_node = |n: &NodeDecl, errs: &mut Vec<(Pos, String)>, attrs: &[&AttrDecl]| {
        let mut p = PatternNode::new(n.id.clone(), n.ty.clone());
        p.binding = n.binding.clone();
        for a in attrs {
            let pat = match &a.value {
                AttrValue::Check(e) => AttrPattern::Check(e.clone()),
                AttrValue::Expr(Expr::Lit(v)) => AttrPattern::Constant(v.clone()),
                AttrValue::Expr(Expr::Param(x)) => AttrPattern::Param(x.clone()),
                AttrValue::Expr(_) => {
                    errs.push((
                        a.pos,
                        format!(
                            "attribute `{}`: use check(...) for computed constraints",
                            a.name
                        ),
                    ));
                    continue;
                }
            };
            p.attrs.push((a.name.clone(), pat));
        }
        p
    };

    // Attribute lines carrying their own stereotype become condition items.
    let mut attr_conditions: Vec<(usize, &AttrDecl)> = Vec::new();
    for (i, n) in d.nodes.iter().enumerate() {
        for a in &n.attrs {
            match &a.stereo {
                None | Some(Stereo::Preserve) => {}
                Some(s)
                    if s.is_condition()
                        && matches!(n.stereo, Stereo::Preserve | Stereo::Delete) =>
                {
                    attr_conditions.push((i, a))
                }
                Some(_) => errs.push((
                    a.pos,
                    format!(
                        "rule `{}`: attribute stereotypes are only forbid/require on matched nodes",
                        d.name
                    ),
                )),
            }
        }
    }

    for n in &d.nodes {
        let plain: Vec<&AttrDecl> = n
            .attrs
            .iter()
            .filter(|a| matches!(a.stereo, None | Some(Stereo::Preserve)))
            .collect();
        match n.stereo {
            Stereo::Preserve => {
                rule.lhs.nodes.push(pattern_node(n, &mut errs, &plain));
                rule.rhs
                    .nodes
                    .push(PatternNode::new(n.id.clone(), n.ty.clone()));
                rule.mapping.push((n.id.clone(), n.id.clone()));
            }
            Stereo::Delete => rule.lhs.nodes.push(pattern_node(n, &mut errs, &plain)),
            Stereo::Create => {
                let mut r = PatternNode::new(n.id.clone(), n.ty.clone());
                r.binding = n.binding.clone();
                rule.rhs.nodes.push(r);
                for a in &plain {
                    match &a.value {
                        AttrValue::Expr(e) => rule.assignments.push(Assignment {
                            node: n.id.clone(),
                            attr: a.name.clone(),
                            expr: e.clone(),
                        }),
                        AttrValue::Check(_) => errs.push((
                            a.pos,
                            format!("rule `{}`: check(...) on a created node", d.name),
                        )),
                    }
                }
            }
            Stereo::Forbid(_) | Stereo::Require(_) => {}
        }
    }
    for (e, st) in d.edges.iter().zip(&edge_st) {
        let pe = PatternEdge::new(e.src.clone(), e.reference.clone(), e.trg.clone());
        match st {
            Stereo::Preserve => {
                rule.lhs.edges.push(pe.clone());
                rule.rhs.edges.push(pe);
            }
            Stereo::Delete => rule.lhs.edges.push(pe),
            Stereo::Create => rule.rhs.edges.push(pe),
            _ => {}
        }
    }
    for (a, _) in &d.assigns {
        rule.assignments.push(a.clone());
    }

    // Condition groups. Anonymous items are grouped by connectivity through
    // anonymous condition nodes of the same kind.
    let n = d.nodes.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for (e, st) in d.edges.iter().zip(&edge_st) {
        if matches!(st, Stereo::Forbid(None) | Stereo::Require(None)) {
            if let (Some(&a), Some(&b)) = (by_id.get(e.src.as_str()), by_id.get(e.trg.as_str())) {
                if d.nodes[a].stereo == *st && d.nodes[b].stereo == *st {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut anon = n;
    let mut key_of = |st: &Stereo, node: Option<usize>, parent: &mut Vec<usize>| -> GroupKey {
        let (forbid, name) = match st {
            Stereo::Forbid(g) => (true, g),
            Stereo::Require(g) => (false, g),
            _ => unreachable!("condition stereotype"),
        };
        match (name, node) {
            (Some(g), _) => GroupKey::Named(forbid, g.clone()),
            (None, Some(i)) => GroupKey::Anon(forbid, find(parent, i)),
            (None, None) => {
                anon += 1;
                GroupKey::Anon(forbid, anon)
            }
        }
    };
    // Group -> (first position, member node indices, edges, anchored attrs).
    type Group<'a> = (Pos, Vec<usize>, Vec<usize>, Vec<(usize, &'a AttrDecl)>);
    let mut groups: BTreeMap<GroupKey, Group> = BTreeMap::new();
    for (i, nd) in d.nodes.iter().enumerate() {
        if nd.stereo.is_condition() {
            let k = key_of(&nd.stereo, Some(i), &mut parent);
            let g = groups
                .entry(k)
                .or_insert_with(|| (nd.pos, Vec::new(), Vec::new(), Vec::new()));
            g.1.push(i);
        }
    }
    for (j, (e, st)) in d.edges.iter().zip(&edge_st).enumerate() {
        if !st.is_condition() {
            continue;
        }
        let member = [&e.src, &e.trg]
            .iter()
            .filter_map(|id| by_id.get(id.as_str()).copied())
            .find(|&i| d.nodes[i].stereo == *st);
        let k = key_of(st, member, &mut parent);
        groups
            .entry(k)
            .or_insert_with(|| (e.pos, Vec::new(), Vec::new(), Vec::new()))
            .2
            .push(j);
    }
    for (i, a) in &attr_conditions {
        let st = a.stereo.as_ref().expect("condition attr");
        let k = key_of(st, None, &mut parent);
        groups
            .entry(k)
            .or_insert_with(|| (a.pos, Vec::new(), Vec::new(), Vec::new()))
            .3
            .push((*i, *a));
    }
    let mut named_kinds: HashMap<String, bool> = HashMap::new();
    let mut ordered: Vec<_> = groups.into_iter().collect();
    ordered.sort_by_key(|(_, g)| g.0);
    let mut condition = ConditionFormula::True;
    for (key, (pos, members, edges, attrs)) in ordered {
        let forbid = match &key {
            GroupKey::Named(f, name) => {
                if named_kinds
                    .insert(name.clone(), *f)
                    .is_some_and(|prev| prev != *f)
                {
                    errs.push((
                        pos,
                        format!(
                            "rule `{}`: group `{name}` used for both forbid and require",
                            d.name
                        ),
                    ));
                }
                *f
            }
            GroupKey::Anon(f, _) => *f,
        };
        let mut ext = PatternGraph::default();
        let mut anchor = Vec::new();
        let mut anchored_attrs: HashMap<usize, Vec<&AttrDecl>> = HashMap::new();
        for (i, a) in attrs {
            anchored_attrs.entry(i).or_default().push(a);
        }
        let mut touched: Vec<usize> = anchored_attrs.keys().copied().collect();
        for &j in &edges {
            for id in [&d.edges[j].src, &d.edges[j].trg] {
                if let Some(&i) = by_id.get(id.as_str()) {
                    if !d.nodes[i].stereo.is_condition() {
                        touched.push(i);
                    }
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        for i in touched {
            let nd = &d.nodes[i];
            let attrs = anchored_attrs.get(&i).cloned().unwrap_or_default();
            let mut p = pattern_node(nd, &mut errs, &attrs);
            p.binding = None;
            ext.nodes.push(p);
            anchor.push((nd.id.clone(), nd.id.clone()));
        }
        for &i in &members {
            let nd = &d.nodes[i];
            let plain: Vec<&AttrDecl> = nd.attrs.iter().collect();
            ext.nodes.push(pattern_node(nd, &mut errs, &plain));
        }
        for &j in &edges {
            let e = &d.edges[j];
            ext.edges.push(PatternEdge::new(
                e.src.clone(),
                e.reference.clone(),
                e.trg.clone(),
            ));
        }
        let g = ConditionFormula::Graph(Box::new(GraphCondition {
            extension: ext,
            anchor,
            nested: ConditionFormula::True,
        }));
        condition = ConditionFormula::and(
            condition,
            if forbid {
                ConditionFormula::negate(g)
            } else {
                g
            },
        );
    }
    rule.condition = condition;
    if errs.is_empty() {
        Ok(rule)
    } else {
        Err(errs)
    }
}

// ---- units -----------------------------------------------------------------

fn path(cur: &mut Cursor) -> Result<String, SyntaxError> {
    let (mut p, _) = cur.ident()?;
    if cur.eat_sym(".") {
        p.push('.');
        p.push_str(&cur.ident()?.0);
    }
    Ok(p)
}

fn unit_decl(cur: &mut Cursor) -> Result<Result<UnitDef, (Pos, String)>, SyntaxError> {
    let (kind, kpos) = cur.ident()?;
    if !matches!(
        kind.as_str(),
        "sequential" | "priority" | "counted" | "conditional" | "independent" | "amalgamation"
    ) {
        return Err(SyntaxError::new(
            kpos,
            format!("unknown unit kind `{kind}`; expected sequential, priority, counted, conditional, independent or amalgamation"),
        ));
    }
    let (name, pos) = cur.ident()?;
    let params = params(cur)?;
    cur.expect_sym("{")?;
    let mut children = Vec::new();
    let mut mappings = Vec::new();
    let mut count = None;
    let (mut cond, mut then, mut otherwise, mut kernel) = (None, None, None, None);
    let mut multis: Vec<(String, Vec<(String, String)>)> = Vec::new();
    loop {
        if cur.eat_sym("}") {
            break;
        }
        if cur.eat_kw("map") {
            let s = path(cur)?;
            cur.expect_sym("->")?;
            mappings.push((s, path(cur)?));
        } else if cur.is_kw("count") && !matches!(cur.peek_at(1), Tok::Sym(";")) {
            cur.bump();
            count = Some(cur.int()?);
        } else if cur.is_kw("if") && matches!(cur.peek_at(1), Tok::Ident(_)) {
            cur.bump();
            cond = Some(cur.ident()?.0);
        } else if cur.is_kw("then") && matches!(cur.peek_at(1), Tok::Ident(_)) {
            cur.bump();
            then = Some(cur.ident()?.0);
        } else if cur.is_kw("else") && matches!(cur.peek_at(1), Tok::Ident(_)) {
            cur.bump();
            otherwise = Some(cur.ident()?.0);
        } else if cur.is_kw("kernel") && matches!(cur.peek_at(1), Tok::Ident(_)) {
            cur.bump();
            kernel = Some(cur.ident()?.0);
        } else if cur.is_kw("multi") && matches!(cur.peek_at(1), Tok::Ident(_)) {
            cur.bump();
            let (m, _) = cur.ident()?;
            let mut emb = Vec::new();
            if cur.eat_kw("embed") {
                loop {
                    let (a, _) = cur.ident()?;
                    cur.expect_sym("->")?;
                    let (b, _) = cur.ident()?;
                    emb.push((a, b));
                    if !cur.eat_sym(",") {
                        break;
                    }
                }
            }
            multis.push((m, emb));
        } else {
            children.push(cur.ident()?.0);
        }
        if !cur.eat_sym(";") {
            cur.expect_sym("}")?;
            break;
        }
    }
    let bad = |msg: &str| Ok(Err((pos, format!("unit `{name}`: {msg}"))));
    let kind = match kind.as_str() {
        "sequential" | "priority" | "independent" => {
            if count.is_some()
                || cond.is_some()
                || then.is_some()
                || otherwise.is_some()
                || kernel.is_some()
                || !multis.is_empty()
            {
                return bad("only child names and mappings are allowed here");
            }
            match kind.as_str() {
                "sequential" => UnitKindDef::Sequential(children),
                "priority" => UnitKindDef::Priority(children),
                _ => UnitKindDef::Independent(children),
            }
        }
        "counted" => {
            if children.len() != 1 {
                return bad("a counted unit has exactly one child");
            }
            let Some(count) = count else {
                return bad("missing `count`");
            };
            UnitKindDef::Counted {
                child: children.remove(0),
                count,
            }
        }
        "conditional" => {
            if !children.is_empty() {
                return bad("use `if`, `then` and `else` instead of plain children");
            }
            match (cond, then) {
                (Some(cond), Some(then)) => UnitKindDef::Conditional {
                    cond,
                    then,
                    otherwise,
                },
                _ => return bad("a conditional unit needs `if` and `then`"),
            }
        }
        _ => {
            if !children.is_empty() {
                return bad("use `kernel` and `multi` instead of plain children");
            }
            let Some(kernel) = kernel else {
                return bad("missing `kernel`");
            };
            UnitKindDef::Amalgamation { kernel, multis }
        }
    };
    Ok(Ok(UnitDef {
        name,
        params,
        kind,
        mappings,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::classify;

    #[test]
    fn stereotypes_split_lhs_rhs() {
        let f = parse_transformation(
            "rule r(in sm, out n) {
               node sm : StateMachine;
               node c : Class { attr name = n; attr abstract = false; }
               node s : State <<create>> { attr name = n; }
               edge sm -states-> s;
               node old : State <<delete>>;
               node t : Trace <<forbid>>;
               edge t -source-> c;
               node other : State <<forbid>> { attr name = n; }
             }",
        )
        .unwrap();
        let r = &f.rules[0];
        let c = classify(r).unwrap();
        assert_eq!(c.created_nodes, ["s"]);
        assert_eq!(c.deleted_nodes, ["old"]);
        assert_eq!(c.created_edges.len(), 1);
        assert_eq!(r.assignments.len(), 1);
        // Two independent forbid components: the trace and the equal-named state.
        let ConditionFormula::And(a, b) = &r.condition else {
            panic!("{:?}", r.condition)
        };
        for (f, ext_nodes) in [(a, 2), (b, 1)] {
            let ConditionFormula::Not(g) = &**f else {
                panic!()
            };
            let ConditionFormula::Graph(g) = &**g else {
                panic!()
            };
            assert_eq!(g.extension.nodes.len(), ext_nodes);
        }
    }

    #[test]
    fn named_groups_and_attribute_forbid() {
        let f = parse_transformation(
            "rule r() {
               node c : Class { attr abstract = true <<forbid>>; }
               node a : Trace <<forbid[g]>>;
               node b : Trace <<forbid[g]>>;
             }",
        )
        .unwrap();
        let r = &f.rules[0];
        assert!(r.lhs.nodes[0].attrs.is_empty());
        let ConditionFormula::And(a, b) = &r.condition else {
            panic!("{:?}", r.condition)
        };
        let ext = |f: &ConditionFormula| match f {
            ConditionFormula::Not(g) => match &**g {
                ConditionFormula::Graph(g) => g.extension.nodes.len(),
                _ => panic!(),
            },
            _ => panic!(),
        };
        assert_eq!((ext(a), ext(b)), (1, 2));
    }

    #[test]
    fn units() {
        let f = parse_transformation(
            "main L;
             unit counted L { body; count -1 }
             unit conditional C(x) { if a; then b; else c; map x -> a.y; }
             unit amalgamation A { kernel k; multi m embed sm -> sm; }",
        )
        .unwrap();
        assert_eq!(
            f.units[0].kind,
            UnitKindDef::Counted {
                child: "body".into(),
                count: -1
            }
        );
        assert_eq!(f.main.as_deref(), Some("L"));
        assert_eq!(f.units[1].mappings, [("x".to_string(), "a.y".to_string())]);
        assert!(
            matches!(&f.units[2].kind, UnitKindDef::Amalgamation { multis, .. } if multis[0].1.len() == 1)
        );
    }

    #[test]
    fn errors_are_positioned() {
        let e = parse_transformation("rule r {\n node x : A <<frob>>; }").unwrap_err();
        assert!(e.to_string().starts_with("2:"), "{e}");
        let e = parse_transformation("unit counted L { a; b; count 1; }").unwrap_err();
        assert!(e.to_string().contains("exactly one child"));
        let e = parse_transformation(
            "rule r { node a : A <<create>>; node b : B <<delete>>; edge a -x-> b; }",
        )
        .unwrap_err();
        assert!(e.to_string().contains("cannot be"), "{e}");
    }
}
