//! Direct extraction of the state machine by walking the Java model,
//! without graph rewriting. Used to check [`crate::run_case`].

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use tgraph::{GraphError, InstanceGraph, Metamodel, NodeId, Value};
use thiserror::Error;

use crate::DEFAULT_ACTION;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no class named `State`")]
    NoStateClass,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

struct Walk<'a> {
    g: &'a InstanceGraph,
    translated: &'a HashSet<NodeId>,
    /// (source class, target class, trigger, action)
    found: Vec<(NodeId, NodeId, String, String)>,
}

impl Walk<'_> {
    fn str_attr(&self, n: NodeId, attr: &str) -> String {
        match self.g.attribute(n, attr) {
            Some(Value::Str(s)) => s.clone(),
            _ => String::new(),
        }
    }

    fn is(&self, n: NodeId, ty: &str) -> bool {
        let mm = self.g.metamodel();
        match (self.g.type_of(n), mm.type_id(ty)) {
            (Some(t), Some(want)) => mm.conforms(t, want),
            _ => false,
        }
    }

    fn refs(&self, n: NodeId, reference: &str) -> Vec<NodeId> {
        self.g
            .resolve_ref(n, reference)
            .map(|r| self.g.targets(n, r).to_vec())
            .unwrap_or_default()
    }

    /// Argument of the first `send("...")` statement in `container`.
    fn action(&self, container: NodeId) -> String {
        for s in self.refs(container, "statements") {
            for call in self.refs(s, "expression") {
                if self.is(call, "MethodCall") && self.str_attr(call, "methodName") == "send" {
                    if let Some(lit) = self
                        .refs(call, "argument")
                        .into_iter()
                        .find(|a| self.is(*a, "StringLiteral"))
                    {
                        return self.str_attr(lit, "value");
                    }
                }
            }
        }
        DEFAULT_ACTION.to_owned()
    }

    fn container(&mut self, base: NodeId, n: NodeId, trigger: &str) {
        for s in self.refs(n, "statements") {
            self.statement(base, n, s, trigger);
        }
    }

    fn statement(&mut self, base: NodeId, container: NodeId, s: NodeId, trigger: &str) {
        if self.is(s, "ExpressionStatement") {
            for call in self.refs(s, "expression") {
                if !self.is(call, "NewConstructorCall") {
                    continue;
                }
                for target in self.refs(call, "instantiates") {
                    if self.translated.contains(&target) {
                        let action = self.action(container);
                        self.found.push((base, target, trigger.to_owned(), action));
                    }
                }
            }
        } else if self.is(s, "Condition") {
            for b in self.refs(s, "then").into_iter().chain(self.refs(s, "else")) {
                self.container(base, b, trigger);
            }
        } else if self.is(s, "Switch") {
            for case in self.refs(s, "cases") {
                let label = self.str_attr(case, "label");
                self.container(base, case, &label);
            }
        } else if self.is(s, "TryBlock") {
            self.container(base, s, trigger);
            for c in self.refs(s, "catches") {
                let ty = self.str_attr(c, "exceptionType");
                self.container(base, c, &ty);
            }
            for f in self.refs(s, "finallyBlock") {
                self.container(base, f, trigger);
            }
        }
    }
}

/// Computes the state machine for a Java model: one state per non-abstract
/// class extending `State` (directly or not, `State` included), and one
/// transition per statement `new C();` with `C` translated, found in a
/// method of a translated class.
pub fn oracle_extract(
    g: &InstanceGraph,
    statemachine: &Arc<Metamodel>,
) -> Result<InstanceGraph, OracleError> {
    let class_ty = g.resolve_type("Class")?;
    let classes = g.nodes_of_type(class_ty);
    let name = |c: NodeId| {
        g.attribute(c, "name")
            .and_then(Value::as_str)
            .unwrap_or_default()
            .to_owned()
    };
    let root = classes
        .iter()
        .copied()
        .find(|c| name(*c) == "State")
        .ok_or(OracleError::NoStateClass)?;

    // Subclass closure of `State`.
    let extends = |c: NodeId| g.targets_by_name(c, "extends").first().copied();
    let mut family = vec![root];
    let mut changed = true;
    while changed {
        changed = false;
        for &c in &classes {
            if !family.contains(&c) && extends(c).is_some_and(|s| family.contains(&s)) {
                family.push(c);
                changed = true;
            }
        }
    }
    family.sort();
    let translated: HashSet<NodeId> = family
        .into_iter()
        .filter(|c| g.attribute(*c, "abstract") != Some(&Value::Bool(true)))
        .collect();
    let mut ordered: Vec<NodeId> = translated.iter().copied().collect();
    ordered.sort();

    let mut walk = Walk {
        g,
        translated: &translated,
        found: Vec::new(),
    };
    for &c in &ordered {
        for m in walk.refs(c, "methods") {
            let trigger = walk.str_attr(m, "name");
            walk.container(c, m, &trigger);
        }
    }

    let mut out = InstanceGraph::new(statemachine.clone());
    let sm = out.create_node("StateMachine")?;
    let mut states = BTreeMap::new();
    for &c in &ordered {
        let s = out.create_node("State")?;
        out.set_attribute(s, "name", name(c).into())?;
        out.add_edge(sm, "states", s)?;
        states.insert(c, s);
    }
    for (src, trg, trigger, action) in walk.found {
        let t = out.create_node("Transition")?;
        out.set_attribute(t, "trigger", trigger.into())?;
        out.set_attribute(t, "action", action.into())?;
        out.add_edge(t, "source", states[&src])?;
        out.add_edge(t, "target", states[&trg])?;
        out.add_edge(sm, "transitions", t)?;
    }
    out.clear_journal();
    Ok(out)
}
