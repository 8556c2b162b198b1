//! Test support: a brute-force match enumerator used as an oracle for the
//! backtracking matcher, and random generators for graphs, rules and unit
//! trees over a small fixed metamodel.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tgraph::engine::{Transformation, UnitDef, UnitKindDef};
use tgraph::expr::{parse_expr, EvalError};
use tgraph::formats::{load_transformation, parse_metamodel};
use tgraph::matcher::Match;
use tgraph::rules::{
    AttrPattern, CAttrPattern, CCondition, CPattern, CompiledRule, ConditionFormula, ParamEnv,
    ParamMode, ParamValue, Parameter, PatternEdge, PatternGraph, PatternNode, Rule,
};
use tgraph::{InstanceGraph, Metamodel, NodeId, Value};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---- brute-force matching ----------------------------------------------------

type Frame = Vec<Option<ParamValue>>;

fn bind(params: &mut Frame, i: usize, v: ParamValue) -> bool {
    match &params[i] {
        Some(cur) => *cur == v,
        None => {
            params[i] = Some(v);
            true
        }
    }
}

/// Checks one complete assignment of `pat`. Anchored pnodes may coincide
/// with `image`; the others must avoid it when matching is injective.
#[allow(clippy::too_many_arguments)]
fn assignment_ok(
    g: &InstanceGraph,
    decl: &[Parameter],
    pat: &CPattern,
    assign: &[NodeId],
    anchored: &[bool],
    params: &mut Frame,
    injective: bool,
    image: &[NodeId],
) -> Result<bool, EvalError> {
    let mm = g.metamodel();
    if injective {
        for (i, a) in assign.iter().enumerate() {
            if assign[..i].contains(a) || (!anchored[i] && image.contains(a)) {
                return Ok(false);
            }
        }
    }
    for (node, p) in assign.iter().zip(&pat.nodes) {
        if !mm.conforms(g.type_of(*node).expect("live"), p.ty) {
            return Ok(false);
        }
    }
    for (node, p) in assign.iter().zip(&pat.nodes) {
        if let Some(b) = p.binding {
            if !bind(params, b, ParamValue::Node(*node)) {
                return Ok(false);
            }
        }
        for (attr, ap) in &p.attrs {
            let v = g.attr(*node, *attr).expect("conforming");
            let ok = match ap {
                CAttrPattern::Const(c) => c == v,
                CAttrPattern::Param(i) => bind(params, *i, ParamValue::Value(v.clone())),
                CAttrPattern::Check(..) => true,
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    for e in &pat.edges {
        if !g
            .targets(assign[e.src], e.reference)
            .contains(&assign[e.trg])
        {
            return Ok(false);
        }
    }
    for (node, p) in assign.iter().zip(&pat.nodes) {
        for (attr, ap) in &p.attrs {
            if let CAttrPattern::Check(e, _) = ap {
                let v = g.attr(*node, *attr).expect("conforming");
                let env = ParamEnv {
                    params: decl,
                    values: params,
                    this: Some(v),
                };
                if e.eval(&env)? != Value::Bool(true) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Calls `f` for every assignment of `k` slots to `nodes` in lexicographic
/// order, with slots in `fixed` pinned. Stops when `f` returns `Ok(true)`.
fn for_each_assignment<E>(
    nodes: &[NodeId],
    fixed: &[Option<NodeId>],
    f: &mut dyn FnMut(&[NodeId]) -> Result<bool, E>,
) -> Result<bool, E> {
    let mut cur = vec![NodeId(0); fixed.len()];
    fn rec<E>(
        d: usize,
        nodes: &[NodeId],
        fixed: &[Option<NodeId>],
        cur: &mut Vec<NodeId>,
        f: &mut dyn FnMut(&[NodeId]) -> Result<bool, E>,
    ) -> Result<bool, E> {
        if d == fixed.len() {
            return f(cur);
        }
        let choices: Vec<NodeId> = match fixed[d] {
            Some(n) => vec![n],
            None => nodes.to_vec(),
        };
        for n in choices {
            cur[d] = n;
            if rec(d + 1, nodes, fixed, cur, f)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
    rec(0, nodes, fixed, &mut cur, f)
}

fn condition_holds(
    g: &InstanceGraph,
    rule: &CompiledRule,
    cond: &CCondition,
    host: &[NodeId],
    params: &Frame,
    image: &[NodeId],
) -> Result<bool, EvalError> {
    Ok(match cond {
        CCondition::True => true,
        CCondition::Not(a) => !condition_holds(g, rule, a, host, params, image)?,
        CCondition::And(a, b) => {
            condition_holds(g, rule, a, host, params, image)?
                && condition_holds(g, rule, b, host, params, image)?
        }
        CCondition::Or(a, b) => {
            condition_holds(g, rule, a, host, params, image)?
                || condition_holds(g, rule, b, host, params, image)?
        }
        CCondition::Graph(gc) => {
            let nodes: Vec<NodeId> = g.node_ids().collect();
            let mut fixed = vec![None; gc.pattern.nodes.len()];
            for &(h, x) in &gc.anchors {
                fixed[x] = Some(host[h]);
            }
            let anchored: Vec<bool> = fixed.iter().map(Option::is_some).collect();
            for_each_assignment(&nodes, &fixed, &mut |assign| {
                let mut p = params.clone();
                if !assignment_ok(
                    g,
                    &rule.params,
                    &gc.pattern,
                    assign,
                    &anchored,
                    &mut p,
                    rule.injective,
                    image,
                )? {
                    return Ok(false);
                }
                let mut inner = image.to_vec();
                inner.extend_from_slice(assign);
                condition_holds(g, rule, &gc.nested, assign, &p, &inner)
            })?
        }
    })
}

/// Every match of `rule` under `pre`, found by trying all assignments of
/// LHS pnodes to graph nodes, in lexicographic order.
pub fn brute_force_matches(
    g: &InstanceGraph,
    rule: &CompiledRule,
    pre: &[Option<ParamValue>],
) -> Result<Vec<Match>, EvalError> {
    let nodes: Vec<NodeId> = g.node_ids().collect();
    let k = rule.lhs.nodes.len();
    let anchored = vec![false; k];
    let mut out = Vec::new();
    for_each_assignment(&nodes, &vec![None; k], &mut |assign| {
        let mut params = pre.to_vec();
        if assignment_ok(
            g,
            &rule.params,
            &rule.lhs,
            assign,
            &anchored,
            &mut params,
            rule.injective,
            &[],
        )? && condition_holds(g, rule, &rule.condition, assign, &params, assign)?
        {
            out.push(Match {
                nodes: assign.to_vec(),
                params,
            });
        }
        Ok(false)
    })?;
    Ok(out)
}

// ---- random instances ----------------------------------------------------------

pub const RANDOM_MM: &str = "metamodel rnd;
abstract class A { attr name : string; attr n : int; ref r : A*; ref s : D*; contains k : D*; }
class B : A;
class C : A;
class D { attr flag : bool; ref t : A*; }
";

pub fn random_metamodel() -> Arc<Metamodel> {
    Arc::new(parse_metamodel(RANDOM_MM).expect("valid"))
}

const NAMES: [&str; 2] = ["x", "y"];

/// Random graph with up to `max_nodes` nodes and random attributes and
/// edges.
pub fn random_graph<R: Rng>(rng: &mut R, mm: &Arc<Metamodel>, max_nodes: usize) -> InstanceGraph {
    let mut g = InstanceGraph::new(mm.clone());
    let n = rng.gen_range(1..=max_nodes);
    let mut ids = Vec::new();
    for _ in 0..n {
        let ty = *["B", "C", "D"].choose(rng).expect("non-empty");
        let id = g.create_node(ty).expect("concrete");
        if ty == "D" {
            g.set_attribute(id, "flag", rng.gen::<bool>().into())
                .expect("declared");
        } else {
            g.set_attribute(id, "name", (*NAMES.choose(rng).expect("non-empty")).into())
                .expect("declared");
            g.set_attribute(id, "n", Value::Int(rng.gen_range(0..3)))
                .expect("declared");
        }
        ids.push((id, ty));
    }
    let edges = rng.gen_range(0..=2 * n);
    for _ in 0..edges {
        let (s, sty) = *ids.choose(rng).expect("non-empty");
        let (t, tty) = *ids.choose(rng).expect("non-empty");
        let reference = match (sty, tty) {
            ("D", "D") => continue,
            ("D", _) => "t",
            (_, "D") => "s",
            _ => "r",
        };
        g.add_edge(s, reference, t).expect("well typed");
    }
    g.clear_journal();
    g
}

/// Applies one random mutation to `g`. Mutations the graph rejects (for
/// example a second container for a node) are skipped.
pub fn random_op<R: Rng>(rng: &mut R, g: &mut InstanceGraph) {
    let ids: Vec<NodeId> = g.node_ids().collect();
    let pick = |rng: &mut R| ids.choose(rng).copied();
    match rng.gen_range(0..7) {
        0 => {
            let ty = *["B", "C", "D"].choose(rng).expect("non-empty");
            g.create_node(ty).expect("concrete");
        }
        1 => {
            if let Some(n) = pick(rng) {
                g.delete_node(n).expect("live");
            }
        }
        2 | 3 => {
            if let (Some(s), Some(t)) = (pick(rng), pick(rng)) {
                let reference = *["r", "s", "k", "t"].choose(rng).expect("non-empty");
                let _ = g.add_edge(s, reference, t);
            }
        }
        4 => {
            if let Some(s) = pick(rng) {
                let reference = *["r", "s", "k", "t"].choose(rng).expect("non-empty");
                if let Ok(targets) = g
                    .resolve_ref(s, reference)
                    .map(|r| g.targets(s, r).to_vec())
                {
                    if let Some(t) = targets.choose(rng) {
                        g.remove_edge(s, reference, *t).expect("present");
                    }
                }
            }
        }
        _ => {
            if let Some(n) = pick(rng) {
                let (attr, v) = match rng.gen_range(0..3) {
                    0 => ("name", Value::from(*NAMES.choose(rng).expect("non-empty"))),
                    1 => ("n", Value::Int(rng.gen_range(-2..5))),
                    _ => ("flag", Value::Bool(rng.gen())),
                };
                let _ = g.set_attribute(n, attr, v);
            }
        }
    }
}

const PNODE_TYPES: [&str; 4] = ["A", "B", "C", "D"];

fn is_d(ty: &str) -> bool {
    ty == "D"
}

/// Parameters of random rules: two node parameters and one string and one
/// integer value parameter.
pub fn random_rule_params() -> Vec<Parameter> {
    ["p0", "p1", "vs", "vi"]
        .iter()
        .map(|p| Parameter::new(*p, ParamMode::InOut))
        .collect()
}

fn random_node<R: Rng>(rng: &mut R, id: String, ty: &str, value_checks: bool) -> PatternNode {
    let mut p = PatternNode::new(id, ty);
    if is_d(ty) {
        match rng.gen_range(0..4) {
            0 => p = p.attr("flag", AttrPattern::Constant(rng.gen::<bool>().into())),
            1 => {
                p = p.attr(
                    "flag",
                    AttrPattern::Check(parse_expr("!self").expect("valid")),
                )
            }
            _ => {}
        }
        return p;
    }
    match rng.gen_range(0..6) {
        0 => {
            p = p.attr(
                "name",
                AttrPattern::Constant((*NAMES.choose(rng).expect("non-empty")).into()),
            )
        }
        1 => p = p.attr("name", AttrPattern::Param("vs".into())),
        2 if value_checks => {
            p = p.attr(
                "name",
                AttrPattern::Check(parse_expr("self != vs").expect("valid")),
            )
        }
        2 => {
            p = p.attr(
                "name",
                AttrPattern::Check(parse_expr("self != \"x\"").expect("valid")),
            )
        }
        _ => {}
    }
    match rng.gen_range(0..6) {
        0 => p = p.attr("n", AttrPattern::Constant(Value::Int(rng.gen_range(0..3)))),
        1 => p = p.attr("n", AttrPattern::Param("vi".into())),
        2 if value_checks => {
            p = p.attr(
                "n",
                AttrPattern::Check(parse_expr("self + 1 > vi").expect("valid")),
            )
        }
        2 => {
            p = p.attr(
                "n",
                AttrPattern::Check(parse_expr("self < 2").expect("valid")),
            )
        }
        _ => {}
    }
    p
}

fn random_edges<R: Rng>(
    rng: &mut R,
    nodes: &[PatternNode],
    from: usize,
    out: &mut Vec<PatternEdge>,
) {
    // Edges touch at least one pnode with index >= from.
    if nodes.len() <= from {
        return;
    }
    let count = rng.gen_range(0..=nodes.len());
    for _ in 0..count {
        let s = rng.gen_range(0..nodes.len());
        let t = if s >= from {
            rng.gen_range(0..nodes.len())
        } else {
            rng.gen_range(from..nodes.len())
        };
        let (sty, tty) = (nodes[s].ty.as_str(), nodes[t].ty.as_str());
        let reference = match (is_d(sty), is_d(tty)) {
            (true, true) => continue,
            (true, false) => "t",
            (false, true) => "s",
            (false, false) => "r",
        };
        out.push(PatternEdge::new(
            nodes[s].id.clone(),
            reference,
            nodes[t].id.clone(),
        ));
    }
}

fn random_formula<R: Rng>(
    rng: &mut R,
    host: &[PatternNode],
    depth: usize,
    counter: &mut usize,
) -> ConditionFormula {
    if depth == 0 {
        return ConditionFormula::True;
    }
    match rng.gen_range(0..8) {
        0 => ConditionFormula::True,
        1 => ConditionFormula::negate(random_formula(rng, host, depth - 1, counter)),
        2 => ConditionFormula::And(
            Box::new(random_formula(rng, host, depth - 1, counter)),
            Box::new(random_formula(rng, host, depth - 1, counter)),
        ),
        3 => ConditionFormula::or(
            random_formula(rng, host, depth - 1, counter),
            random_formula(rng, host, depth - 1, counter),
        ),
        _ => {
            let mut ext = PatternGraph::default();
            let mut anchor = Vec::new();
            let mut chosen: Vec<&PatternNode> = host.iter().collect();
            chosen.shuffle(rng);
            chosen.truncate(rng.gen_range(0..=host.len().min(2)));
            for h in chosen {
                *counter += 1;
                let id = format!("a{counter}");
                ext.nodes.push(PatternNode::new(id.clone(), h.ty.clone()));
                anchor.push((h.id.clone(), id));
            }
            let anchored = ext.nodes.len();
            for _ in 0..rng.gen_range(0..=2) {
                *counter += 1;
                let ty = *PNODE_TYPES.choose(rng).expect("non-empty");
                ext.nodes
                    .push(random_node(rng, format!("x{counter}"), ty, false));
            }
            let mut edges = Vec::new();
            random_edges(
                rng,
                &ext.nodes,
                if anchored == ext.nodes.len() {
                    0
                } else {
                    anchored
                },
                &mut edges,
            );
            ext.edges = edges;
            let nested = if rng.gen_bool(0.3) {
                random_formula(rng, &ext.nodes, depth - 1, counter)
            } else {
                ConditionFormula::True
            };
            let g = ConditionFormula::graph(ext, anchor, nested);
            if rng.gen_bool(0.5) {
                ConditionFormula::negate(g)
            } else {
                g
            }
        }
    }
}

/// Random matching-only rule (RHS equals LHS) with up to `max_pnodes`
/// pnodes and a condition formula of depth up to `cond_depth`.
pub fn random_rule<R: Rng>(rng: &mut R, name: &str, max_pnodes: usize, cond_depth: usize) -> Rule {
    let mut r = Rule::new(name);
    r.params = random_rule_params();
    r.injective = rng.gen_bool(0.85);
    let k = rng.gen_range(0..=max_pnodes);
    let mut free_bindings = vec!["p0", "p1"];
    for i in 0..k {
        let ty = *PNODE_TYPES.choose(rng).expect("non-empty");
        let mut p = random_node(rng, format!("n{i}"), ty, false);
        if !free_bindings.is_empty() && rng.gen_bool(0.25) {
            p = p.bind(free_bindings.remove(0));
        }
        r.lhs.nodes.push(p);
    }
    // Value checks need their parameter bound by some LHS attribute.
    let binds = |attr: &str, param: &str, r: &Rule| {
        r.lhs.nodes.iter().any(|n| {
            n.attrs
                .iter()
                .any(|(a, p)| a == attr && *p == AttrPattern::Param(param.into()))
        })
    };
    if binds("name", "vs", &r) && k > 0 && rng.gen_bool(0.5) {
        let i = rng.gen_range(0..k);
        if !is_d(&r.lhs.nodes[i].ty) {
            let check = parse_expr("self != vs").expect("valid");
            r.lhs.nodes[i]
                .attrs
                .push(("name".into(), AttrPattern::Check(check)));
        }
    }
    if binds("n", "vi", &r) && k > 0 && rng.gen_bool(0.5) {
        let i = rng.gen_range(0..k);
        if !is_d(&r.lhs.nodes[i].ty) {
            let check = parse_expr("self + 1 > vi").expect("valid");
            r.lhs.nodes[i]
                .attrs
                .push(("n".into(), AttrPattern::Check(check)));
        }
    }
    let mut edges = Vec::new();
    random_edges(rng, &r.lhs.nodes, 0, &mut edges);
    r.lhs.edges = edges;
    let mut counter = 0;
    r.condition = random_formula(rng, &r.lhs.nodes, cond_depth, &mut counter);
    r.rhs = r.lhs.clone();
    for n in &mut r.rhs.nodes {
        n.attrs.clear();
        n.binding = None;
    }
    r.mapping = r
        .lhs
        .nodes
        .iter()
        .map(|n| (n.id.clone(), n.id.clone()))
        .collect();
    r
}

/// Random pre-binding for [`random_rule_params`]: each slot is set with
/// some probability, node slots to live nodes of `g`.
pub fn random_prebinding<R: Rng>(rng: &mut R, g: &InstanceGraph) -> Vec<Option<ParamValue>> {
    let nodes: Vec<NodeId> = g.node_ids().collect();
    let mut out = Vec::new();
    for slot in 0..4 {
        let v = if rng.gen_bool(0.3) {
            Some(match slot {
                0 | 1 => ParamValue::Node(*nodes.choose(rng).expect("non-empty graph")),
                2 => ParamValue::Value((*NAMES.choose(rng).expect("non-empty")).into()),
                _ => ParamValue::Value(Value::Int(rng.gen_range(0..3))),
            })
        } else {
            None
        };
        out.push(v);
    }
    out
}

// ---- random unit trees -----------------------------------------------------------

/// Rules over [`RANDOM_MM`] for unit-tree tests: mutating rules that may or
/// may not match, and one that never matches.
pub const UNIT_RULES: &str = "import rnd;
rule mkB() { node b : B <<create>> { attr name = \"x\"; } }
rule link() { node a : A; node d : D; edge a -s-> d <<create>>; }
rule delD() { node d : D <<delete>>; }
rule rename() { node a : A { attr name = \"x\"; } assign a.name = \"y\"; }
rule flip() { node d : D { attr flag = false; } assign d.flag = true; }
rule unlink() { node a : A; node b : A; edge a -r-> b <<delete>>; }
rule grow(out c) { node a : A { attr n = 0; } node c : C <<create>> bind c { attr n = 1; } edge a -r-> c; }
rule fail() { node a : A { attr n = 99; } }
rule ok() {}
";

pub const UNIT_RULE_NAMES: [&str; 9] = [
    "mkB", "link", "delD", "rename", "flip", "unlink", "grow", "fail", "ok",
];

/// Random acyclic unit tree of the given depth over [`UNIT_RULES`]; the
/// root unit is named `U0`. Returns the unit definitions.
pub fn random_unit_tree<R: Rng>(rng: &mut R, depth: usize) -> Vec<UnitDef> {
    let mut units = Vec::new();
    build_unit(rng, depth, &mut units);
    units
}

fn child<R: Rng>(rng: &mut R, depth: usize, units: &mut Vec<UnitDef>) -> String {
    if depth > 0 && rng.gen_bool(0.4) {
        build_unit(rng, depth - 1, units)
    } else {
        (*UNIT_RULE_NAMES.choose(rng).expect("non-empty")).to_owned()
    }
}

fn build_unit<R: Rng>(rng: &mut R, depth: usize, units: &mut Vec<UnitDef>) -> String {
    let name = format!("U{}", units.len());
    let idx = units.len();
    units.push(UnitDef {
        name: name.clone(),
        params: Vec::new(),
        kind: UnitKindDef::Sequential(Vec::new()),
        mappings: Vec::new(),
    });
    let n = rng.gen_range(1..=3);
    let kind = match rng.gen_range(0..5) {
        0 => UnitKindDef::Sequential((0..n).map(|_| child(rng, depth, units)).collect()),
        1 => UnitKindDef::Priority((0..n).map(|_| child(rng, depth, units)).collect()),
        2 => UnitKindDef::Independent((0..n).map(|_| child(rng, depth, units)).collect()),
        3 => UnitKindDef::Counted {
            child: child(rng, depth, units),
            count: rng.gen_range(-1..=3),
        },
        _ => UnitKindDef::Conditional {
            cond: child(rng, depth, units),
            then: child(rng, depth, units),
            otherwise: rng.gen_bool(0.5).then(|| child(rng, depth, units)),
        },
    };
    units[idx].kind = kind;
    name
}

/// Resolves [`UNIT_RULES`] plus `units` into a transformation over the
/// random metamodel.
pub fn unit_transformation(units: &[UnitDef]) -> (Arc<Metamodel>, Transformation) {
    let mm = parse_metamodel(RANDOM_MM).expect("valid");
    let (composed, base) = load_transformation(UNIT_RULES, &[&mm]).expect("valid rules");
    let rules: Vec<Rule> = base.rules().iter().map(|r| r.source.clone()).collect();
    let t = Transformation::new(composed.clone(), &rules, units, Some("U0"))
        .expect("generated units resolve");
    (composed, t)
}
