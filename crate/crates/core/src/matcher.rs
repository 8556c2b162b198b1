//! Backtracking pattern matching with parameter pre-binding, attribute
//! constraints and nested application conditions.
//!
//! Matches are produced lazily in lexicographic order of the bound node ids
//! taken in pnode declaration order. To keep that order the search places
//! pnodes fixed by pre-bound parameters first (they have one candidate) and
//! then the remaining pnodes in declaration order; a pnode connected to an
//! already placed one takes its candidates from the adjacency lists, any
//! other pnode walks the type index.

use std::collections::btree_set;
use std::iter::Peekable;

use thiserror::Error;

use crate::expr::EvalError;
use crate::graph::{InstanceGraph, NodeId};
use crate::metamodel::{RefId, TypeId};
use crate::rules::{
    CAttrPattern, CCondition, CPattern, CompiledRule, ParamEnv, ParamValue, Parameter,
};
use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Match {
    /// Image of each LHS pnode, by pnode index.
    pub nodes: Vec<NodeId>,
    /// Parameter values after matching, by parameter index.
    pub params: Vec<Option<ParamValue>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    #[error("rule `{rule}` has no parameter `{param}`")]
    UnknownParameter { rule: String, param: String },
    #[error("rule `{rule}` expects {expected} parameter slots, got {got}")]
    Arity {
        rule: String,
        expected: usize,
        got: usize,
    },
    #[error("parameter `{param}` is bound to missing node {node}")]
    DanglingNode { param: String, node: NodeId },
    #[error("check on attribute `{attr}` returned {value} instead of a boolean")]
    CheckNotBoolean { attr: String, value: String },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Builds a parameter frame for `rule` from named values.
pub fn prebind(
    rule: &CompiledRule,
    values: &[(&str, ParamValue)],
) -> Result<Vec<Option<ParamValue>>, MatchError> {
    let mut out = vec![None; rule.params.len()];
    for (name, v) in values {
        let i = rule
            .param_index(name)
            .ok_or_else(|| MatchError::UnknownParameter {
                rule: rule.name.clone(),
                param: (*name).to_owned(),
            })?;
        out[i] = Some(v.clone());
    }
    Ok(out)
}

/// Enumerates the matches of `rule` in `g` that agree with `pre`, which has
/// one slot per rule parameter.
pub fn find_matches<'a>(
    g: &'a InstanceGraph,
    rule: &'a CompiledRule,
    pre: &[Option<ParamValue>],
) -> Result<Matches<'a>, MatchError> {
    find_matches_anchored(g, rule, pre, vec![None; rule.lhs.nodes.len()])
}

/// Like [`find_matches`], with some LHS pnodes fixed to given nodes (used to
/// extend a kernel match into a multi rule).
pub fn find_matches_anchored<'a>(
    g: &'a InstanceGraph,
    rule: &'a CompiledRule,
    pre: &[Option<ParamValue>],
    anchored: Vec<Option<NodeId>>,
) -> Result<Matches<'a>, MatchError> {
    if pre.len() != rule.params.len() {
        return Err(MatchError::Arity {
            rule: rule.name.clone(),
            expected: rule.params.len(),
            got: pre.len(),
        });
    }
    for (p, v) in rule.params.iter().zip(pre) {
        if let Some(ParamValue::Node(n)) = v {
            if !g.contains(*n) {
                return Err(MatchError::DanglingNode {
                    param: p.name.clone(),
                    node: *n,
                });
            }
        }
    }
    assert_eq!(
        anchored.len(),
        rule.lhs.nodes.len(),
        "one anchor slot per LHS pnode"
    );
    let ctx = Ctx {
        g,
        params: &rule.params,
        injective: rule.injective,
    };
    Ok(Matches {
        search: Search::new(
            ctx,
            &rule.lhs,
            anchored,
            pre.to_vec(),
            Vec::new(),
            &rule.condition,
        ),
    })
}

/// Evaluates `cond` for a match of `host` given by `nodes`.
pub fn check_condition(
    g: &InstanceGraph,
    rule: &CompiledRule,
    cond: &CCondition,
    nodes: &[NodeId],
    params: &[Option<ParamValue>],
) -> Result<bool, MatchError> {
    let ctx = Ctx {
        g,
        params: &rule.params,
        injective: rule.injective,
    };
    let host: Vec<Option<NodeId>> = nodes.iter().copied().map(Some).collect();
    eval_condition(ctx, cond, &host, params, nodes)
}

pub struct Matches<'a> {
    search: Search<'a>,
}

impl Iterator for Matches<'_> {
    type Item = Result<Match, MatchError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.search.next().map(|r| {
            r.map(|()| Match {
                nodes: self
                    .search
                    .nodes
                    .iter()
                    .map(|n| n.expect("complete match"))
                    .collect(),
                params: self.search.params.clone(),
            })
        })
    }
}

#[derive(Clone, Copy)]
struct Ctx<'a> {
    g: &'a InstanceGraph,
    params: &'a [Parameter],
    injective: bool,
}

enum Candidates<'a> {
    List(Vec<NodeId>, usize),
    /// A sorted, duplicate-free adjacency list borrowed from the graph.
    Slice(&'a [NodeId], usize),
    Scan(Vec<Peekable<btree_set::Iter<'a, NodeId>>>),
}

impl Candidates<'_> {
    fn next(&mut self) -> Option<NodeId> {
        match self {
            Candidates::List(v, i) => {
                let n = v.get(*i).copied();
                *i += 1;
                n
            }
            Candidates::Slice(v, i) => {
                let n = v.get(*i).copied();
                *i += 1;
                n
            }
            Candidates::Scan(iters) => {
                let (k, _) = iters
                    .iter_mut()
                    .enumerate()
                    .filter_map(|(k, it)| it.peek().map(|n| (k, **n)))
                    .min_by_key(|(_, n)| *n)?;
                iters[k].next().copied()
            }
        }
    }
}

/// An edge between the pnode placed at some depth and an earlier one.
struct PatternLink {
    other: usize,
    reference: RefId,
    /// The edge runs from `other` to the pnode being placed.
    outgoing_from_other: bool,
}

struct Level<'a> {
    cands: Candidates<'a>,
    /// Length of the parameter undo log before this level's placement.
    mark: usize,
}

/// Work scheduled after a given number of pnodes has been placed.
#[derive(Default)]
struct Stage<'a> {
    edges: Vec<usize>,
    checks: Vec<(usize, usize)>,
    conditions: Vec<&'a CCondition>,
}

struct Search<'a> {
    ctx: Ctx<'a>,
    pattern: &'a CPattern,
    /// Nodes forced by condition anchors.
    anchored: Vec<Option<NodeId>>,
    order: Vec<usize>,
    stages: Vec<Stage<'a>>,
    /// Per depth, the edges to pnodes placed at smaller depths.
    links: Vec<Vec<PatternLink>>,
    nodes: Vec<Option<NodeId>>,
    params: Vec<Option<ParamValue>>,
    undo: Vec<usize>,
    /// Nodes already bound outside this pattern (enclosing matches).
    image: Vec<NodeId>,
    stack: Vec<Level<'a>>,
    started: bool,
    done: bool,
}

impl<'a> Search<'a> {
    fn new(
        ctx: Ctx<'a>,
        pattern: &'a CPattern,
        anchored: Vec<Option<NodeId>>,
        params: Vec<Option<ParamValue>>,
        image: Vec<NodeId>,
        condition: &'a CCondition,
    ) -> Self {
        let n = pattern.nodes.len();
        let fixed = |p: usize| {
            anchored[p].is_some()
                || pattern.nodes[p]
                    .binding
                    .is_some_and(|b| params[b].is_some())
        };
        let mut order: Vec<usize> = (0..n).filter(|&p| fixed(p)).collect();
        order.extend((0..n).filter(|&p| !fixed(p)));
        let mut pos = vec![0; n];
        for (d, &p) in order.iter().enumerate() {
            pos[p] = d;
        }

        // Stage (number of placed pnodes) at which each parameter is bound.
        let mut bound_at: Vec<Option<usize>> =
            params.iter().map(|v| v.as_ref().map(|_| 0)).collect();
        for (d, &p) in order.iter().enumerate() {
            let node = &pattern.nodes[p];
            let mut bind = |i: usize| {
                if bound_at[i].is_none() {
                    bound_at[i] = Some(d + 1);
                }
            };
            if let Some(b) = node.binding {
                bind(b);
            }
            for (_, pat) in &node.attrs {
                if let CAttrPattern::Param(i) = pat {
                    bind(*i);
                }
            }
        }
        let param_stage = |ps: &[usize]| ps.iter().filter_map(|&i| bound_at[i]).max().unwrap_or(0);

        let mut links: Vec<Vec<PatternLink>> = (0..n).map(|_| Vec::new()).collect();
        for e in &pattern.edges {
            if e.src == e.trg {
                continue;
            }
            let (s, t) = (pos[e.src], pos[e.trg]);
            if t > s {
                links[t].push(PatternLink {
                    other: e.src,
                    reference: e.reference,
                    outgoing_from_other: true,
                });
            } else {
                links[s].push(PatternLink {
                    other: e.trg,
                    reference: e.reference,
                    outgoing_from_other: false,
                });
            }
        }

        let mut stages: Vec<Stage> = (0..=n).map(|_| Stage::default()).collect();
        for (i, e) in pattern.edges.iter().enumerate() {
            stages[pos[e.src].max(pos[e.trg]) + 1].edges.push(i);
        }
        for (p, node) in pattern.nodes.iter().enumerate() {
            for (k, (_, pat)) in node.attrs.iter().enumerate() {
                if let CAttrPattern::Check(_, ps) = pat {
                    let never = ps.iter().any(|&i| bound_at[i].is_none());
                    let s = if never {
                        n
                    } else {
                        (pos[p] + 1).max(param_stage(ps))
                    };
                    stages[s].checks.push((p, k));
                }
            }
        }
        for c in condition.conjuncts() {
            let mut hosts = Vec::new();
            c.anchored_host_nodes(&mut hosts);
            let mut ps = Vec::new();
            c.params(&mut ps);
            // Under injective matching, unanchored condition nodes must avoid
            // the whole match image, which is only known once every pnode is placed.
            let s = if ctx.injective {
                n
            } else {
                hosts
                    .iter()
                    .map(|&h| pos[h] + 1)
                    .max()
                    .unwrap_or(0)
                    .max(param_stage(&ps))
            };
            stages[s].conditions.push(c);
        }

        Search {
            ctx,
            pattern,
            anchored,
            order,
            stages,
            links,
            nodes: vec![None; n],
            params,
            undo: Vec::new(),
            image,
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    /// Advances to the next complete match; the result is left in
    /// `self.nodes` / `self.params`.
    fn next(&mut self) -> Option<Result<(), MatchError>> {
        if self.done {
            return None;
        }
        let res = self.advance();
        if !matches!(res, Some(Ok(()))) {
            self.done = true;
        }
        res
    }

    fn advance(&mut self) -> Option<Result<(), MatchError>> {
        let n = self.order.len();
        if !self.started {
            self.started = true;
            match self.run_stage(0) {
                Err(e) => return Some(Err(e)),
                Ok(false) => return None,
                Ok(true) if n == 0 => {
                    self.done = true;
                    return Some(Ok(()));
                }
                Ok(true) => {
                    let level = self.level(0);
                    self.stack.push(level);
                }
            }
        }
        while let Some(d) = self.stack.len().checked_sub(1) {
            let p = self.order[d];
            if self.nodes[p].take().is_some() {
                let mark = self.stack[d].mark;
                self.undo_to(mark);
            }
            let Some(node) = self.stack[d].cands.next() else {
                self.stack.pop();
                continue;
            };
            self.stack[d].mark = self.undo.len();
            match self.place(d, p, node) {
                Err(e) => return Some(Err(e)),
                Ok(false) => {
                    self.nodes[p] = None;
                    let mark = self.stack[d].mark;
                    self.undo_to(mark);
                }
                Ok(true) if d + 1 == n => return Some(Ok(())),
                Ok(true) => {
                    let level = self.level(d + 1);
                    self.stack.push(level);
                }
            }
        }
        None
    }

    fn undo_to(&mut self, mark: usize) {
        for i in self.undo.drain(mark..) {
            self.params[i] = None;
        }
    }

    fn bind(&mut self, i: usize, v: ParamValue) -> bool {
        match &self.params[i] {
            Some(cur) => *cur == v,
            None => {
                self.params[i] = Some(v);
                self.undo.push(i);
                true
            }
        }
    }

    fn level(&self, d: usize) -> Level<'a> {
        let p = self.order[d];
        let node = &self.pattern.nodes[p];
        let g = self.ctx.g;
        let mut cands = None;
        if let Some(a) = self.anchored[p] {
            cands = Some(Candidates::List(vec![a], 0));
        } else if let Some(v) = node.binding.and_then(|b| self.params[b].as_ref()) {
            cands = Some(Candidates::List(v.as_node().into_iter().collect(), 0));
        } else {
            // Smallest adjacency list from a placed neighbour.
            let mut best: Option<(usize, &PatternLink)> = None;
            for link in &self.links[d] {
                let other = self.nodes[link.other].expect("placed earlier");
                let len = match link.outgoing_from_other {
                    true => g.targets(other, link.reference).len(),
                    false => g.sources(other, link.reference).count(),
                };
                if best.is_none_or(|(l, _)| len < l) {
                    best = Some((len, link));
                }
            }
            if let Some((_, link)) = best {
                let other = self.nodes[link.other].expect("placed earlier");
                cands = Some(if link.outgoing_from_other {
                    let targets = g.targets(other, link.reference);
                    if targets.windows(2).all(|w| w[0] < w[1]) {
                        Candidates::Slice(targets, 0)
                    } else {
                        let mut list = targets.to_vec();
                        list.sort_unstable();
                        list.dedup();
                        Candidates::List(list, 0)
                    }
                } else {
                    let mut list: Vec<NodeId> = g.sources(other, link.reference).collect();
                    list.sort_unstable();
                    list.dedup();
                    Candidates::List(list, 0)
                });
            }
        }
        let cands = cands.unwrap_or_else(|| {
            let mm = g.metamodel();
            let iters = mm
                .concrete_subtypes(node.ty)
                .iter()
                .map(|t| g.nodes_of_exact_type(*t).iter().peekable())
                .collect();
            Candidates::Scan(iters)
        });
        Level {
            cands,
            mark: self.undo.len(),
        }
    }

    fn conforms(&self, node: NodeId, ty: TypeId) -> bool {
        self.ctx
            .g
            .type_of(node)
            .is_some_and(|t| self.ctx.g.metamodel().conforms(t, ty))
    }

    /// Tries `node` as the image of pnode `p` at depth `d`.
    fn place(&mut self, d: usize, p: usize, node: NodeId) -> Result<bool, MatchError> {
        let pn = &self.pattern.nodes[p];
        if !self.conforms(node, pn.ty) {
            return Ok(false);
        }
        if self.ctx.injective {
            if self.order[..d].iter().any(|&q| self.nodes[q] == Some(node)) {
                return Ok(false);
            }
            if self.anchored[p].is_none() && self.image.contains(&node) {
                return Ok(false);
            }
        }
        self.nodes[p] = Some(node);
        if let Some(b) = pn.binding {
            if !self.bind(b, ParamValue::Node(node)) {
                return Ok(false);
            }
        }
        let g = self.ctx.g;
        for (attr, pat) in &pn.attrs {
            let value = g
                .attr(node, *attr)
                .expect("conforming node has the attribute");
            let ok = match pat {
                CAttrPattern::Const(c) => c == value,
                CAttrPattern::Param(i) => self.bind(*i, ParamValue::Value(value.clone())),
                CAttrPattern::Check(..) => true,
            };
            if !ok {
                return Ok(false);
            }
        }
        self.run_stage(d + 1)
    }

    fn run_stage(&mut self, s: usize) -> Result<bool, MatchError> {
        let g = self.ctx.g;
        let stage = &self.stages[s];
        for &i in &stage.edges {
            let e = &self.pattern.edges[i];
            let (src, trg) = (
                self.nodes[e.src].expect("placed"),
                self.nodes[e.trg].expect("placed"),
            );
            if !g.targets(src, e.reference).contains(&trg) {
                return Ok(false);
            }
        }
        for &(p, k) in &stage.checks {
            let (attr, pat) = &self.pattern.nodes[p].attrs[k];
            let CAttrPattern::Check(expr, _) = pat else {
                unreachable!()
            };
            let value = g
                .attr(self.nodes[p].expect("placed"), *attr)
                .expect("conforming node has the attribute");
            let env = ParamEnv {
                params: self.ctx.params,
                values: &self.params,
                this: Some(value),
            };
            match expr.eval(&env)? {
                Value::Bool(true) => {}
                Value::Bool(false) => return Ok(false),
                other => {
                    return Err(MatchError::CheckNotBoolean {
                        attr: g.metamodel().attr_info(*attr).name.clone(),
                        value: other.literal(),
                    })
                }
            }
        }
        if stage.conditions.is_empty() {
            return Ok(true);
        }
        let mut image = self.image.clone();
        image.extend(self.nodes.iter().flatten());
        for c in &stage.conditions {
            if !eval_condition(self.ctx, c, &self.nodes, &self.params, &image)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn eval_condition(
    ctx: Ctx<'_>,
    cond: &CCondition,
    host: &[Option<NodeId>],
    params: &[Option<ParamValue>],
    image: &[NodeId],
) -> Result<bool, MatchError> {
    Ok(match cond {
        CCondition::True => true,
        CCondition::Not(a) => !eval_condition(ctx, a, host, params, image)?,
        CCondition::And(a, b) => {
            eval_condition(ctx, a, host, params, image)?
                && eval_condition(ctx, b, host, params, image)?
        }
        CCondition::Or(a, b) => {
            eval_condition(ctx, a, host, params, image)?
                || eval_condition(ctx, b, host, params, image)?
        }
        CCondition::Graph(gc) => {
            let mut anchored = vec![None; gc.pattern.nodes.len()];
            for &(h, x) in &gc.anchors {
                anchored[x] = Some(host[h].expect("anchor placed before its condition runs"));
            }
            let mut search = Search::new(
                ctx,
                &gc.pattern,
                anchored,
                params.to_vec(),
                image.to_vec(),
                &gc.nested,
            );
            match search.next() {
                None => false,
                Some(Ok(())) => true,
                Some(Err(e)) => return Err(e),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::metamodel::{Metamodel, NodeTypeDef};
    use crate::rules::{
        compile, AttrPattern, ConditionFormula, ParamMode, PatternEdge, PatternGraph, PatternNode,
        Rule,
    };
    use crate::value::AttrKind;

    fn mm() -> Arc<Metamodel> {
        Arc::new(
            Metamodel::new(
                "t",
                vec![
                    NodeTypeDef::new("Class")
                        .attr("name", AttrKind::String)
                        .reference("extends", "Class", false),
                    NodeTypeDef::new("StateMachine").contains("states", "State", true),
                    NodeTypeDef::new("State").attr("name", AttrKind::String),
                ],
            )
            .unwrap(),
        )
    }

    fn classes(names: &[&str]) -> InstanceGraph {
        let mut g = InstanceGraph::new(mm());
        for n in names {
            let c = g.create_node("Class").unwrap();
            g.set_attribute(c, "name", (*n).into()).unwrap();
        }
        g
    }

    fn all(g: &InstanceGraph, r: &CompiledRule, pre: &[Option<ParamValue>]) -> Vec<Match> {
        find_matches(g, r, pre)
            .unwrap()
            .collect::<Result<_, _>>()
            .unwrap()
    }

    #[test]
    fn init_matches_the_state_class_once() {
        let g = classes(&["A", "State", "B", "C"]);
        let mut r = Rule::new("init");
        r.params.push(Parameter::new("c", ParamMode::Out));
        r.lhs.nodes.push(
            PatternNode::new("c", "Class")
                .bind("c")
                .attr("name", AttrPattern::Constant("State".into())),
        );
        let r = compile(&r, g.metamodel()).unwrap();
        let ms = all(&g, &r, &[None]);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].nodes, [NodeId(2)]);
        assert_eq!(ms[0].params, [Some(ParamValue::Node(NodeId(2)))]);
    }

    #[test]
    fn empty_lhs_has_one_match() {
        let g = classes(&["A"]);
        let r = compile(&Rule::new("e"), g.metamodel()).unwrap();
        assert_eq!(all(&g, &r, &[]).len(), 1);
    }

    #[test]
    fn order_is_lexicographic_and_injective() {
        let g = classes(&["A", "B", "C"]);
        let mut r = Rule::new("pair");
        r.lhs.nodes = vec![
            PatternNode::new("x", "Class"),
            PatternNode::new("y", "Class"),
        ];
        let r = compile(&r, g.metamodel()).unwrap();
        let got: Vec<Vec<u64>> = all(&g, &r, &[])
            .iter()
            .map(|m| m.nodes.iter().map(|n| n.0).collect())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 1],
                vec![2, 3],
                vec![3, 1],
                vec![3, 2]
            ]
        );
    }

    #[test]
    fn nac_blocks_equal_names() {
        let mut g = classes(&["A", "B"]);
        let sm = g.create_node("StateMachine").unwrap();
        let s = g.create_node("State").unwrap();
        g.set_attribute(s, "name", "A".into()).unwrap();
        g.add_edge(sm, "states", s).unwrap();

        let mut r = Rule::new("createState");
        r.params = vec![Parameter::new("n", ParamMode::Out)];
        r.lhs
            .nodes
            .push(PatternNode::new("c", "Class").attr("name", AttrPattern::Param("n".into())));
        let ext = PatternGraph {
            nodes: vec![PatternNode::new("s", "State").attr("name", AttrPattern::Param("n".into()))],
            edges: vec![],
        };
        r.condition =
            ConditionFormula::negate(ConditionFormula::graph(ext, vec![], ConditionFormula::True));
        let r = compile(&r, g.metamodel()).unwrap();
        let ms = all(&g, &r, &[None]);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].params[0], Some(ParamValue::Value("B".into())));
    }

    #[test]
    fn not_true_never_matches() {
        let g = classes(&["A"]);
        let mut r = Rule::new("never");
        r.condition = ConditionFormula::negate(ConditionFormula::True);
        let r = compile(&r, g.metamodel()).unwrap();
        assert!(all(&g, &r, &[]).is_empty());
    }

    #[test]
    fn prebinding_and_edges() {
        let mut g = classes(&["State", "A", "B"]);
        g.add_edge(NodeId(2), "extends", NodeId(1)).unwrap();
        g.add_edge(NodeId(3), "extends", NodeId(1)).unwrap();
        let mut r = Rule::new("sub");
        r.params = vec![
            Parameter::new("sup", ParamMode::In),
            Parameter::new("sub", ParamMode::Out),
        ];
        r.lhs.nodes = vec![
            PatternNode::new("a", "Class").bind("sub"),
            PatternNode::new("b", "Class").bind("sup"),
        ];
        r.lhs.edges.push(PatternEdge::new("a", "extends", "b"));
        let r = compile(&r, g.metamodel()).unwrap();
        let ms = all(&g, &r, &prebind(&r, &[("sup", NodeId(1).into())]).unwrap());
        assert_eq!(
            ms.iter().map(|m| m.nodes[0]).collect::<Vec<_>>(),
            [NodeId(2), NodeId(3)]
        );
        let ms = all(&g, &r, &prebind(&r, &[("sup", NodeId(2).into())]).unwrap());
        assert!(ms.is_empty());
        assert!(matches!(
            find_matches(&g, &r, &prebind(&r, &[("sup", NodeId(9).into())]).unwrap()),
            Err(MatchError::DanglingNode { .. })
        ));
        assert!(matches!(
            prebind(&r, &[("zz", NodeId(1).into())]),
            Err(MatchError::UnknownParameter { .. })
        ));
    }

    #[test]
    fn check_expressions_see_self_and_params() {
        let g = classes(&["A", "Bee", "Cee"]);
        let mut r = Rule::new("long");
        r.params = vec![Parameter::new("x", ParamMode::In)];
        let check = crate::expr::parse_expr("self != x").unwrap();
        r.lhs
            .nodes
            .push(PatternNode::new("c", "Class").attr("name", AttrPattern::Check(check)));
        let r = compile(&r, g.metamodel()).unwrap();
        let ms = all(
            &g,
            &r,
            &prebind(&r, &[("x", Value::from("Bee").into())]).unwrap(),
        );
        assert_eq!(ms.iter().map(|m| m.nodes[0].0).collect::<Vec<_>>(), [1, 3]);
        let err = find_matches(&g, &r, &[None]).unwrap().next().unwrap();
        assert!(matches!(err, Err(MatchError::Eval(EvalError::Unbound(_)))));
    }
}
