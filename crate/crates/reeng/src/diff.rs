//! Structural comparison of state machines: states match by name,
//! transitions by (source name, target name, trigger, action).

use std::collections::BTreeMap;
use std::fmt;

use tgraph::{InstanceGraph, NodeId, Value};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TransitionKey {
    pub source: String,
    pub target: String,
    pub trigger: String,
    pub action: String,
}

impl fmt::Display for TransitionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} [trigger {:?}, action {:?}]",
            self.source, self.target, self.trigger, self.action
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffReport {
    pub states_only_left: Vec<String>,
    pub states_only_right: Vec<String>,
    pub transitions_only_left: Vec<TransitionKey>,
    pub transitions_only_right: Vec<TransitionKey>,
    /// Unmatched transitions with the same endpoints on both sides, with the
    /// attributes that differ. Informational: each pair is also listed in
    /// the two `transitions_only_*` fields.
    pub attribute_mismatches: Vec<(TransitionKey, TransitionKey)>,
    /// State names occurring more than once, per side.
    pub duplicate_states_left: Vec<String>,
    pub duplicate_states_right: Vec<String>,
}

impl DiffReport {
    /// True iff the machines are isomorphic under the matching above.
    pub fn is_empty(&self) -> bool {
        self.states_only_left.is_empty()
            && self.states_only_right.is_empty()
            && self.transitions_only_left.is_empty()
            && self.transitions_only_right.is_empty()
            && self.duplicate_states_left.is_empty()
            && self.duplicate_states_right.is_empty()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "no differences");
        }
        for s in &self.states_only_left {
            writeln!(f, "- state {s}")?;
        }
        for s in &self.states_only_right {
            writeln!(f, "+ state {s}")?;
        }
        for t in &self.transitions_only_left {
            writeln!(f, "- transition {t}")?;
        }
        for t in &self.transitions_only_right {
            writeln!(f, "+ transition {t}")?;
        }
        for (l, r) in &self.attribute_mismatches {
            let mut what = Vec::new();
            if l.trigger != r.trigger {
                what.push(format!("trigger {:?} vs {:?}", l.trigger, r.trigger));
            }
            if l.action != r.action {
                what.push(format!("action {:?} vs {:?}", l.action, r.action));
            }
            writeln!(
                f,
                "~ transition {} -> {}: {}",
                l.source,
                l.target,
                what.join(", ")
            )?;
        }
        for s in &self.duplicate_states_left {
            writeln!(f, "! duplicate state {s} on the left")?;
        }
        for s in &self.duplicate_states_right {
            writeln!(f, "! duplicate state {s} on the right")?;
        }
        Ok(())
    }
}

struct Summary {
    states: BTreeMap<String, usize>,
    transitions: BTreeMap<TransitionKey, usize>,
}

fn str_attr(g: &InstanceGraph, n: NodeId, attr: &str) -> String {
    g.attribute(n, attr)
        .and_then(Value::as_str)
        .unwrap_or_default()
        .to_owned()
}

fn summarize(g: &InstanceGraph) -> Summary {
    let mut states = BTreeMap::new();
    let mut transitions = BTreeMap::new();
    let of = |ty: &str| {
        g.resolve_type(ty)
            .map(|t| g.nodes_of_type(t))
            .unwrap_or_default()
    };
    for s in of("State") {
        *states.entry(str_attr(g, s, "name")).or_insert(0) += 1;
    }
    for t in of("Transition") {
        let end = |r: &str| {
            g.targets_by_name(t, r)
                .first()
                .map(|s| str_attr(g, *s, "name"))
                .unwrap_or_default()
        };
        let key = TransitionKey {
            source: end("source"),
            target: end("target"),
            trigger: str_attr(g, t, "trigger"),
            action: str_attr(g, t, "action"),
        };
        *transitions.entry(key).or_insert(0) += 1;
    }
    Summary {
        states,
        transitions,
    }
}

fn leftovers<K: Ord + Clone>(a: &BTreeMap<K, usize>, b: &BTreeMap<K, usize>) -> Vec<K> {
    let mut out = Vec::new();
    for (k, n) in a {
        let m = b.get(k).copied().unwrap_or(0);
        out.extend(std::iter::repeat_n(k.clone(), n.saturating_sub(m)));
    }
    out
}

/// Compares two state machines. Transitions are matched as a multiset, so
/// duplicated transitions must be duplicated on both sides.
pub fn diff_statemachines(a: &InstanceGraph, b: &InstanceGraph) -> DiffReport {
    let (l, r) = (summarize(a), summarize(b));
    let dups = |s: &Summary| {
        s.states
            .iter()
            .filter(|(_, n)| **n > 1)
            .map(|(k, _)| k.clone())
            .collect()
    };
    let transitions_only_left = leftovers(&l.transitions, &r.transitions);
    let transitions_only_right = leftovers(&r.transitions, &l.transitions);
    let mut attribute_mismatches = Vec::new();
    let mut used = vec![false; transitions_only_right.len()];
    for lt in &transitions_only_left {
        let partner = transitions_only_right
            .iter()
            .enumerate()
            .find(|(i, rt)| !used[*i] && rt.source == lt.source && rt.target == lt.target);
        if let Some((i, rt)) = partner {
            used[i] = true;
            attribute_mismatches.push((lt.clone(), rt.clone()));
        }
    }
    DiffReport {
        states_only_left: leftovers(&l.states, &r.states)
            .into_iter()
            .filter(|s| !r.states.contains_key(s))
            .collect(),
        states_only_right: leftovers(&r.states, &l.states)
            .into_iter()
            .filter(|s| !l.states.contains_key(s))
            .collect(),
        transitions_only_left,
        transitions_only_right,
        attribute_mismatches,
        duplicate_states_left: dups(&l),
        duplicate_states_right: dups(&r),
    }
}
