//! Mutable instance graphs conforming to a [`Metamodel`], with a change
//! journal for checkpoint/rollback.
//!
//! Node ids are monotonically increasing per graph and define canonical
//! iteration order. Every mutation appends a primitive [`Change`] to the
//! journal while at least one checkpoint is open; rolling back replays the
//! inverse of each entry, newest first, and restores the graph exactly
//! (including the id counter).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::metamodel::{AttrId, Metamodel, RefId, TypeId};
use crate::value::{AttrKind, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u64);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("type `{0}` is abstract and cannot be instantiated")]
    AbstractType(String),
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("node id {0} already in use")]
    DuplicateNode(NodeId),
    #[error("type `{ty}` has no attribute `{name}`")]
    UnknownAttribute { ty: String, name: String },
    #[error("type `{ty}` has no reference `{name}`")]
    UnknownReference { ty: String, name: String },
    #[error("attribute `{attribute}` expects {expected}, got {found}")]
    AttributeKind {
        attribute: String,
        expected: AttrKind,
        found: AttrKind,
    },
    #[error("reference `{reference}` expects targets of type `{expected}`, got `{found}`")]
    TargetType {
        reference: String,
        expected: String,
        found: String,
    },
    #[error("single-valued reference `{reference}` of node {node} is already set")]
    SingleValuedFull { reference: String, node: NodeId },
    #[error("node {node} is already contained by node {container}")]
    AlreadyContained { node: NodeId, container: NodeId },
    #[error("adding `{reference}` from {src} to {trg} would create a containment cycle")]
    ContainmentCycle {
        reference: String,
        src: NodeId,
        trg: NodeId,
    },
    #[error("no edge `{reference}` from {src} to {trg}")]
    EdgeNotFound {
        reference: String,
        src: NodeId,
        trg: NodeId,
    },
    #[error("checkpoint is stale or was already consumed")]
    StaleCheckpoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    ty: TypeId,
    attrs: Vec<Value>,
    refs: Vec<Vec<NodeId>>,
    /// One entry per incoming edge occurrence.
    incoming: Vec<(NodeId, RefId)>,
    container: Option<NodeId>,
}

impl Node {
    pub fn ty(&self) -> TypeId {
        self.ty
    }

    /// Attribute values in flattened declaration order.
    pub fn attr_values(&self) -> &[Value] {
        &self.attrs
    }

    /// Reference target lists in flattened declaration order.
    pub fn ref_lists(&self) -> &[Vec<NodeId>] {
        &self.refs
    }

    pub fn container(&self) -> Option<NodeId> {
        self.container
    }

    pub fn incoming(&self) -> &[(NodeId, RefId)] {
        &self.incoming
    }
}

/// One primitive, invertible mutation.
#[derive(Clone, Debug)]
pub enum Change {
    NodeCreated(NodeId),
    NodeDeleted {
        id: NodeId,
        node: Box<Node>,
        /// `(source, reference, position)` in removal order.
        incoming: Vec<(NodeId, RefId, usize)>,
    },
    AttrSet {
        id: NodeId,
        slot: usize,
        old: Value,
    },
    EdgeAdded {
        src: NodeId,
        slot: usize,
        pos: usize,
    },
    EdgeRemoved {
        src: NodeId,
        reference: RefId,
        slot: usize,
        trg: NodeId,
        pos: usize,
    },
}

/// Token returned by [`InstanceGraph::checkpoint`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    serial: u64,
}

#[derive(Clone, Debug, Default)]
pub struct ChangeJournal {
    entries: Vec<Change>,
    /// `(serial, entry index)`
    checkpoints: Vec<(u64, usize)>,
    next_serial: u64,
}

impl ChangeJournal {
    pub fn entries(&self) -> &[Change] {
        &self.entries
    }

    pub fn depth(&self) -> usize {
        self.checkpoints.len()
    }

    fn position(&self, token: Checkpoint) -> Option<usize> {
        self.checkpoints
            .iter()
            .rposition(|(s, _)| *s == token.serial)
    }
}

#[derive(Clone, Debug)]
pub struct InstanceGraph {
    mm: Arc<Metamodel>,
    /// Indexed by id; slot 0 unused.
    nodes: Vec<Option<Node>>,
    next_id: u64,
    live: usize,
    by_type: Vec<BTreeSet<NodeId>>,
    journal: ChangeJournal,
}

impl InstanceGraph {
    pub fn new(mm: Arc<Metamodel>) -> Self {
        let n = mm.type_count();
        InstanceGraph {
            mm,
            nodes: vec![None],
            next_id: 1,
            live: 0,
            by_type: vec![BTreeSet::new(); n],
            journal: ChangeJournal::default(),
        }
    }

    pub fn metamodel(&self) -> &Arc<Metamodel> {
        &self.mm
    }

    pub fn len(&self) -> usize {
        self.live
    }

    pub fn is_empty(&self) -> bool {
        self.live == 0
    }

    pub fn next_id(&self) -> NodeId {
        NodeId(self.next_id)
    }

    pub fn journal(&self) -> &ChangeJournal {
        &self.journal
    }

    pub fn node(&self, id: NodeId) -> Option<&Node> {
        self.nodes.get(id.0 as usize).and_then(Option::as_ref)
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.node(id).is_some()
    }

    fn node_mut(&mut self, id: NodeId) -> Result<&mut Node, GraphError> {
        self.nodes
            .get_mut(id.0 as usize)
            .and_then(Option::as_mut)
            .ok_or(GraphError::UnknownNode(id))
    }

    fn get(&self, id: NodeId) -> Result<&Node, GraphError> {
        self.node(id).ok_or(GraphError::UnknownNode(id))
    }

    pub fn type_of(&self, id: NodeId) -> Option<TypeId> {
        self.node(id).map(|n| n.ty)
    }

    /// Live node ids in ascending order.
    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.is_some())
            .map(|(i, _)| NodeId(i as u64))
    }

    /// Nodes whose exact type is `ty`, ascending.
    pub fn nodes_of_exact_type(&self, ty: TypeId) -> &BTreeSet<NodeId> {
        &self.by_type[ty.index()]
    }

    /// Nodes conforming to `ty`, ascending.
    pub fn nodes_of_type(&self, ty: TypeId) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = self
            .mm
            .concrete_subtypes(ty)
            .iter()
            .flat_map(|t| self.by_type[t.index()].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    pub fn attr(&self, id: NodeId, attr: AttrId) -> Option<&Value> {
        let node = self.node(id)?;
        let slot = self.mm.attr_slot(node.ty, attr)?;
        Some(&node.attrs[slot])
    }

    pub fn attribute(&self, id: NodeId, name: &str) -> Option<&Value> {
        let node = self.node(id)?;
        let attr = self.mm.attribute(node.ty, name)?;
        self.attr(id, attr)
    }

    pub fn targets(&self, id: NodeId, reference: RefId) -> &[NodeId] {
        self.node(id)
            .and_then(|n| {
                self.mm
                    .ref_slot(n.ty, reference)
                    .map(|s| n.refs[s].as_slice())
            })
            .unwrap_or(&[])
    }

    pub fn targets_by_name(&self, id: NodeId, name: &str) -> &[NodeId] {
        match self.node(id).and_then(|n| self.mm.reference(n.ty, name)) {
            Some(r) => self.targets(id, r),
            None => &[],
        }
    }

    /// Sources of incoming `reference` edges, one entry per edge occurrence.
    pub fn sources(&self, id: NodeId, reference: RefId) -> impl Iterator<Item = NodeId> + '_ {
        self.node(id).into_iter().flat_map(move |n| {
            n.incoming
                .iter()
                .filter(move |(_, r)| *r == reference)
                .map(|(s, _)| *s)
        })
    }

    pub fn resolve_type(&self, name: &str) -> Result<TypeId, GraphError> {
        self.mm
            .type_id(name)
            .ok_or_else(|| GraphError::UnknownType(name.to_owned()))
    }

    pub fn resolve_attr(&self, id: NodeId, name: &str) -> Result<AttrId, GraphError> {
        let node = self.get(id)?;
        self.mm
            .attribute(node.ty, name)
            .ok_or_else(|| GraphError::UnknownAttribute {
                ty: self.mm.type_name(node.ty).to_owned(),
                name: name.to_owned(),
            })
    }

    pub fn resolve_ref(&self, id: NodeId, name: &str) -> Result<RefId, GraphError> {
        let node = self.get(id)?;
        self.mm
            .reference(node.ty, name)
            .ok_or_else(|| GraphError::UnknownReference {
                ty: self.mm.type_name(node.ty).to_owned(),
                name: name.to_owned(),
            })
    }

    // ---- mutations -------------------------------------------------------

    pub fn create_node(&mut self, type_name: &str) -> Result<NodeId, GraphError> {
        let ty = self.resolve_type(type_name)?;
        self.create(ty)
    }

    pub fn create(&mut self, ty: TypeId) -> Result<NodeId, GraphError> {
        let id = NodeId(self.next_id);
        self.insert_fresh(id, ty)?;
        Ok(id)
    }

    /// Creates a node with an explicit id (used when loading files). The id
    /// must be unused and at least the current counter.
    pub fn create_with_id(&mut self, id: NodeId, ty: TypeId) -> Result<(), GraphError> {
        if id.0 < self.next_id {
            return Err(GraphError::DuplicateNode(id));
        }
        self.insert_fresh(id, ty)
    }

    fn insert_fresh(&mut self, id: NodeId, ty: TypeId) -> Result<(), GraphError> {
        if self.mm.is_abstract(ty) {
            return Err(GraphError::AbstractType(self.mm.type_name(ty).to_owned()));
        }
        let attrs = self
            .mm
            .attrs_of(ty)
            .iter()
            .map(|a| self.mm.attr_info(*a).kind.default_value())
            .collect();
        let refs = vec![Vec::new(); self.mm.refs_of(ty).len()];
        let node = Node {
            ty,
            attrs,
            refs,
            incoming: Vec::new(),
            container: None,
        };
        let idx = id.0 as usize;
        if self.nodes.len() <= idx {
            self.nodes.resize_with(idx + 1, || None);
        }
        self.nodes[idx] = Some(node);
        self.by_type[ty.index()].insert(id);
        self.live += 1;
        self.journal.entries.push(Change::NodeCreated(id));
        self.next_id = id.0 + 1;
        Ok(())
    }

    pub fn set_attribute(
        &mut self,
        id: NodeId,
        name: &str,
        value: Value,
    ) -> Result<(), GraphError> {
        let attr = self.resolve_attr(id, name)?;
        self.set_attr(id, attr, value)
    }

    pub fn set_attr(&mut self, id: NodeId, attr: AttrId, value: Value) -> Result<(), GraphError> {
        let mm = Arc::clone(&self.mm);
        let node = self.node_mut(id)?;
        let info = mm.attr_info(attr);
        let slot = mm
            .attr_slot(node.ty, attr)
            .ok_or_else(|| GraphError::UnknownAttribute {
                ty: mm.type_name(node.ty).to_owned(),
                name: info.name.clone(),
            })?;
        if value.kind() != info.kind {
            return Err(GraphError::AttributeKind {
                attribute: info.name.clone(),
                expected: info.kind,
                found: value.kind(),
            });
        }
        let old = std::mem::replace(&mut node.attrs[slot], value);
        self.journal.entries.push(Change::AttrSet { id, slot, old });
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        src: NodeId,
        reference: &str,
        trg: NodeId,
    ) -> Result<(), GraphError> {
        let r = self.resolve_ref(src, reference)?;
        self.add(src, r, trg)
    }

    pub fn add(&mut self, src: NodeId, reference: RefId, trg: NodeId) -> Result<(), GraphError> {
        let mm = Arc::clone(&self.mm);
        let info = mm.ref_info(reference);
        let src_node = self.get(src)?;
        let slot =
            mm.ref_slot(src_node.ty, reference)
                .ok_or_else(|| GraphError::UnknownReference {
                    ty: mm.type_name(src_node.ty).to_owned(),
                    name: info.name.clone(),
                })?;
        if !info.many && !src_node.refs[slot].is_empty() {
            return Err(GraphError::SingleValuedFull {
                reference: info.name.clone(),
                node: src,
            });
        }
        let trg_node = self.get(trg)?;
        if !mm.conforms(trg_node.ty, info.target) {
            return Err(GraphError::TargetType {
                reference: info.name.clone(),
                expected: mm.type_name(info.target).to_owned(),
                found: mm.type_name(trg_node.ty).to_owned(),
            });
        }
        if info.containment {
            if let Some(container) = trg_node.container {
                return Err(GraphError::AlreadyContained {
                    node: trg,
                    container,
                });
            }
            // trg must not be src or an ancestor of src.
            let mut cur = Some(src);
            while let Some(c) = cur {
                if c == trg {
                    return Err(GraphError::ContainmentCycle {
                        reference: info.name.clone(),
                        src,
                        trg,
                    });
                }
                cur = self.get(c)?.container;
            }
        }
        let src_node = self.node_mut(src)?;
        let pos = src_node.refs[slot].len();
        src_node.refs[slot].push(trg);
        let trg_node = self.node_mut(trg)?;
        trg_node.incoming.push((src, reference));
        if info.containment {
            trg_node.container = Some(src);
        }
        self.journal
            .entries
            .push(Change::EdgeAdded { src, slot, pos });
        Ok(())
    }

    pub fn remove_edge(
        &mut self,
        src: NodeId,
        reference: &str,
        trg: NodeId,
    ) -> Result<(), GraphError> {
        let r = self.resolve_ref(src, reference)?;
        self.remove(src, r, trg)
    }

    /// Removes the first occurrence of `src -reference-> trg`.
    pub fn remove(&mut self, src: NodeId, reference: RefId, trg: NodeId) -> Result<(), GraphError> {
        let mm = Arc::clone(&self.mm);
        let info = mm.ref_info(reference);
        let not_found = || GraphError::EdgeNotFound {
            reference: info.name.clone(),
            src,
            trg,
        };
        let src_node = self.get(src)?;
        let slot = mm.ref_slot(src_node.ty, reference).ok_or_else(not_found)?;
        let pos = src_node.refs[slot]
            .iter()
            .position(|t| *t == trg)
            .ok_or_else(not_found)?;
        self.unlink(src, reference, slot, pos)?;
        self.journal.entries.push(Change::EdgeRemoved {
            src,
            reference,
            slot,
            trg,
            pos,
        });
        Ok(())
    }

    fn unlink(
        &mut self,
        src: NodeId,
        reference: RefId,
        slot: usize,
        pos: usize,
    ) -> Result<NodeId, GraphError> {
        let containment = self.mm.ref_info(reference).containment;
        let trg = self.node_mut(src)?.refs[slot].remove(pos);
        let trg_node = self.node_mut(trg)?;
        if let Some(i) = trg_node
            .incoming
            .iter()
            .position(|e| *e == (src, reference))
        {
            trg_node.incoming.swap_remove(i);
        }
        if containment {
            trg_node.container = None;
        }
        Ok(trg)
    }

    /// Deletes a node together with all incident edges. Contained children
    /// are not deleted; they merely lose their container.
    pub fn delete_node(&mut self, id: NodeId) -> Result<(), GraphError> {
        self.get(id)?;
        // Drop incoming edges from other nodes, recording positions.
        let mut removed = Vec::new();
        loop {
            let next = self
                .get(id)?
                .incoming
                .iter()
                .find(|(s, _)| *s != id)
                .copied();
            let Some((src, reference)) = next else { break };
            let src_ty = self.get(src)?.ty;
            let slot = self
                .mm
                .ref_slot(src_ty, reference)
                .expect("incoming index consistent");
            let pos = self.get(src)?.refs[slot]
                .iter()
                .position(|t| *t == id)
                .expect("incoming index consistent");
            self.unlink(src, reference, slot, pos)?;
            removed.push((src, reference, pos));
        }
        let node = self.nodes[id.0 as usize].take().expect("checked above");
        // Outgoing edges: drop index entries on the targets.
        let mm = Arc::clone(&self.mm);
        for (slot, targets) in node.refs.iter().enumerate() {
            let reference = mm.refs_of(node.ty)[slot];
            for t in targets {
                if *t == id {
                    continue;
                }
                let trg = self.node_mut(*t)?;
                if let Some(i) = trg.incoming.iter().position(|e| *e == (id, reference)) {
                    trg.incoming.swap_remove(i);
                }
                if mm.ref_info(reference).containment {
                    trg.container = None;
                }
            }
        }
        self.by_type[node.ty.index()].remove(&id);
        self.live -= 1;
        self.journal.entries.push(Change::NodeDeleted {
            id,
            node: Box::new(node),
            incoming: removed,
        });
        Ok(())
    }

    // ---- transactions ----------------------------------------------------

    pub fn checkpoint(&mut self) -> Checkpoint {
        let serial = self.journal.next_serial;
        self.journal.next_serial += 1;
        self.journal
            .checkpoints
            .push((serial, self.journal.entries.len()));
        Checkpoint { serial }
    }

    /// Undoes every change since `token` was taken. Consumes `token` and
    /// invalidates all checkpoints taken after it.
    pub fn rollback_to(&mut self, token: Checkpoint) -> Result<(), GraphError> {
        let pos = self
            .journal
            .position(token)
            .ok_or(GraphError::StaleCheckpoint)?;
        let (_, mark) = self.journal.checkpoints[pos];
        self.journal.checkpoints.truncate(pos);
        while self.journal.entries.len() > mark {
            let change = self.journal.entries.pop().expect("len > mark");
            self.undo(change);
        }
        self.trim_journal();
        Ok(())
    }

    /// Keeps the changes made since `token` and drops the checkpoint (and
    /// any taken after it).
    pub fn release(&mut self, token: Checkpoint) -> Result<(), GraphError> {
        let pos = self
            .journal
            .position(token)
            .ok_or(GraphError::StaleCheckpoint)?;
        self.journal.checkpoints.truncate(pos);
        self.trim_journal();
        Ok(())
    }

    /// Forgets the journal. Only legal while no checkpoint is open.
    pub fn clear_journal(&mut self) {
        if self.journal.checkpoints.is_empty() {
            self.journal.entries.clear();
        }
    }

    fn trim_journal(&mut self) {
        if self.journal.checkpoints.is_empty() {
            self.journal.entries.clear();
        }
    }

    fn undo(&mut self, change: Change) {
        match change {
            Change::NodeCreated(id) => {
                let node = self.nodes[id.0 as usize]
                    .take()
                    .expect("created node exists");
                debug_assert!(node.incoming.is_empty() && node.refs.iter().all(Vec::is_empty));
                self.by_type[node.ty.index()].remove(&id);
                self.live -= 1;
                self.next_id = id.0;
                self.nodes.truncate((id.0 as usize).max(1));
            }
            Change::NodeDeleted { id, node, incoming } => {
                let mm = Arc::clone(&self.mm);
                let ty = node.ty;
                for (slot, targets) in node.refs.iter().enumerate() {
                    let reference = mm.refs_of(ty)[slot];
                    for t in targets {
                        if *t == id {
                            continue;
                        }
                        let trg = self.nodes[t.0 as usize]
                            .as_mut()
                            .expect("target restored first");
                        trg.incoming.push((id, reference));
                        if mm.ref_info(reference).containment {
                            trg.container = Some(id);
                        }
                    }
                }
                let idx = id.0 as usize;
                if self.nodes.len() <= idx {
                    self.nodes.resize_with(idx + 1, || None);
                }
                self.nodes[idx] = Some(*node);
                self.by_type[ty.index()].insert(id);
                self.live += 1;
                for (src, reference, pos) in incoming.into_iter().rev() {
                    self.relink(src, reference, id, pos);
                }
            }
            Change::AttrSet { id, slot, old } => {
                self.nodes[id.0 as usize]
                    .as_mut()
                    .expect("node exists")
                    .attrs[slot] = old;
            }
            Change::EdgeAdded { src, slot, pos } => {
                let reference = {
                    let node = self.nodes[src.0 as usize].as_ref().expect("node exists");
                    self.mm.refs_of(node.ty)[slot]
                };
                self.unlink(src, reference, slot, pos).expect("edge exists");
            }
            Change::EdgeRemoved {
                src,
                reference,
                trg,
                pos,
                ..
            } => {
                self.relink(src, reference, trg, pos);
            }
        }
    }

    fn relink(&mut self, src: NodeId, reference: RefId, trg: NodeId, pos: usize) {
        let containment = self.mm.ref_info(reference).containment;
        let src_node = self.nodes[src.0 as usize].as_mut().expect("node exists");
        let slot = self
            .mm
            .ref_slot(src_node.ty, reference)
            .expect("slot exists");
        src_node.refs[slot].insert(pos, trg);
        let trg_node = self.nodes[trg.0 as usize].as_mut().expect("node exists");
        trg_node.incoming.push((src, reference));
        if containment {
            trg_node.container = Some(src);
        }
    }

    // ---- inspection ------------------------------------------------------

    /// Checks every structural invariant; returns one message per violation.
    pub fn validate(&self) -> Vec<String> {
        let mm = &self.mm;
        let mut problems = Vec::new();
        let mut incoming_expected: std::collections::HashMap<NodeId, Vec<(NodeId, RefId)>> =
            Default::default();
        let mut containers: std::collections::HashMap<NodeId, Vec<NodeId>> = Default::default();
        for id in self.node_ids() {
            let node = self.node(id).expect("live");
            if mm.is_abstract(node.ty) {
                problems.push(format!(
                    "node {id} has abstract type {}",
                    mm.type_name(node.ty)
                ));
            }
            if !self.by_type[node.ty.index()].contains(&id) {
                problems.push(format!("node {id} missing from type index"));
            }
            for (slot, attr) in mm.attrs_of(node.ty).iter().enumerate() {
                if node.attrs[slot].kind() != mm.attr_info(*attr).kind {
                    problems.push(format!(
                        "node {id} attribute {} has wrong kind",
                        mm.attr_info(*attr).name
                    ));
                }
            }
            for (slot, reference) in mm.refs_of(node.ty).iter().enumerate() {
                let info = mm.ref_info(*reference);
                let targets = &node.refs[slot];
                if !info.many && targets.len() > 1 {
                    problems.push(format!(
                        "node {id} single-valued {} holds {} targets",
                        info.name,
                        targets.len()
                    ));
                }
                for t in targets {
                    match self.node(*t) {
                        None => problems.push(format!("node {id} {} dangles to {t}", info.name)),
                        Some(tn) => {
                            if !mm.conforms(tn.ty, info.target) {
                                problems.push(format!(
                                    "node {id} {} targets non-conforming {t}",
                                    info.name
                                ));
                            }
                        }
                    }
                    incoming_expected
                        .entry(*t)
                        .or_default()
                        .push((id, *reference));
                    if info.containment {
                        containers.entry(*t).or_default().push(id);
                    }
                }
            }
        }
        for id in self.node_ids() {
            let node = self.node(id).expect("live");
            let mut have = node.incoming.clone();
            let mut want = incoming_expected.remove(&id).unwrap_or_default();
            have.sort();
            want.sort();
            if have != want {
                problems.push(format!("node {id} incoming index out of sync"));
            }
            let parents = containers.remove(&id).unwrap_or_default();
            if parents.len() > 1 {
                problems.push(format!("node {id} has {} containers", parents.len()));
            }
            if node.container != parents.first().copied() {
                problems.push(format!("node {id} container pointer out of sync"));
            }
            // Acyclic containment: walking up must terminate.
            let mut cur = node.container;
            let mut steps = 0;
            while let Some(c) = cur {
                steps += 1;
                if c == id || steps > self.live {
                    problems.push(format!("node {id} lies on a containment cycle"));
                    break;
                }
                cur = self.node(c).and_then(|n| n.container);
            }
        }
        problems
    }

    /// Copies the containment closure of `root` into a fresh graph over
    /// `target` (types and features matched by name), renumbering ids from 1
    /// in ascending original-id order.
    pub fn extract(
        &self,
        root: NodeId,
        target: Arc<Metamodel>,
    ) -> Result<InstanceGraph, GraphError> {
        let mut members = BTreeSet::new();
        let mut stack = vec![root];
        while let Some(id) = stack.pop() {
            let node = self.get(id)?;
            if !members.insert(id) {
                continue;
            }
            for (slot, reference) in self.mm.refs_of(node.ty).iter().enumerate() {
                if self.mm.ref_info(*reference).containment {
                    stack.extend(node.refs[slot].iter().copied());
                }
            }
        }
        let mut out = InstanceGraph::new(target);
        let mut remap = std::collections::HashMap::new();
        for id in &members {
            let ty_name = self.mm.type_name(self.get(*id)?.ty);
            let new = out.create_node(ty_name)?;
            remap.insert(*id, new);
        }
        for id in &members {
            let node = self.get(*id)?;
            let new = remap[id];
            for (slot, attr) in self.mm.attrs_of(node.ty).iter().enumerate() {
                out.set_attribute(
                    new,
                    &self.mm.attr_info(*attr).name,
                    node.attrs[slot].clone(),
                )?;
            }
            for (slot, reference) in self.mm.refs_of(node.ty).iter().enumerate() {
                let name = &self.mm.ref_info(*reference).name;
                for t in &node.refs[slot] {
                    let mapped = *remap.get(t).ok_or(GraphError::UnknownNode(*t))?;
                    out.add_edge(new, name, mapped)?;
                }
            }
        }
        out.clear_journal();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metamodel::NodeTypeDef;

    fn mm() -> Arc<Metamodel> {
        Arc::new(
            Metamodel::new(
                "t",
                vec![
                    NodeTypeDef::new("Machine")
                        .contains("states", "State", true)
                        .reference("initial", "State", false),
                    NodeTypeDef::new("State")
                        .attr("name", AttrKind::String)
                        .reference("next", "State", true),
                    NodeTypeDef::new("Statement").abstract_(),
                ],
            )
            .unwrap(),
        )
    }

    #[test]
    fn create_node_defaults_and_errors() {
        let mut g = InstanceGraph::new(mm());
        let s = g.create_node("State").unwrap();
        assert_eq!(g.attribute(s, "name"), Some(&Value::Str(String::new())));
        assert_eq!(g.len(), 1);
        assert_eq!(
            g.create_node("Statement"),
            Err(GraphError::AbstractType("Statement".into()))
        );
        assert_eq!(
            g.create_node("Nope"),
            Err(GraphError::UnknownType("Nope".into()))
        );
    }

    #[test]
    fn attribute_kind_is_checked() {
        let mut g = InstanceGraph::new(mm());
        let s = g.create_node("State").unwrap();
        assert!(matches!(
            g.set_attribute(s, "name", Value::Int(5)),
            Err(GraphError::AttributeKind { .. })
        ));
        assert!(matches!(
            g.set_attribute(s, "nope", Value::Int(5)),
            Err(GraphError::UnknownAttribute { .. })
        ));
    }

    #[test]
    fn many_and_single_valued_references() {
        let mut g = InstanceGraph::new(mm());
        let m = g.create_node("Machine").unwrap();
        let a = g.create_node("State").unwrap();
        let b = g.create_node("State").unwrap();
        g.add_edge(a, "next", b).unwrap();
        g.add_edge(a, "next", b).unwrap();
        assert_eq!(g.targets_by_name(a, "next"), &[b, b]);
        g.add_edge(m, "initial", a).unwrap();
        assert!(matches!(
            g.add_edge(m, "initial", b),
            Err(GraphError::SingleValuedFull { .. })
        ));
        assert!(matches!(
            g.add_edge(a, "next", m),
            Err(GraphError::TargetType { .. })
        ));
    }

    #[test]
    fn containment_is_exclusive() {
        let mut g = InstanceGraph::new(mm());
        let m1 = g.create_node("Machine").unwrap();
        let m2 = g.create_node("Machine").unwrap();
        let s = g.create_node("State").unwrap();
        g.add_edge(m1, "states", s).unwrap();
        assert!(matches!(
            g.add_edge(m2, "states", s),
            Err(GraphError::AlreadyContained { .. })
        ));
        g.remove_edge(m1, "states", s).unwrap();
        g.add_edge(m2, "states", s).unwrap();
        assert!(g.validate().is_empty());
    }

    #[test]
    fn delete_restores_incoming_positions() {
        let mut g = InstanceGraph::new(mm());
        let a = g.create_node("State").unwrap();
        let b = g.create_node("State").unwrap();
        let c = g.create_node("State").unwrap();
        g.add_edge(a, "next", c).unwrap();
        g.add_edge(a, "next", b).unwrap();
        g.add_edge(a, "next", c).unwrap();
        g.add_edge(b, "next", c).unwrap();
        g.add_edge(c, "next", c).unwrap();
        let before = crate::canonical::serialize(&g);
        let cp = g.checkpoint();
        g.delete_node(c).unwrap();
        assert_eq!(g.targets_by_name(a, "next"), &[b]);
        assert!(g.targets_by_name(b, "next").is_empty());
        assert!(g.validate().is_empty());
        g.rollback_to(cp).unwrap();
        assert_eq!(crate::canonical::serialize(&g), before);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn delete_unknown_node() {
        let mut g = InstanceGraph::new(mm());
        assert_eq!(
            g.delete_node(NodeId(9)),
            Err(GraphError::UnknownNode(NodeId(9)))
        );
    }

    #[test]
    fn checkpoint_stack_discipline() {
        let mut g = InstanceGraph::new(mm());
        let c1 = g.checkpoint();
        let c2 = g.checkpoint();
        g.create_node("State").unwrap();
        g.rollback_to(c1).unwrap();
        assert_eq!(g.rollback_to(c2), Err(GraphError::StaleCheckpoint));
        assert_eq!(g.rollback_to(c1), Err(GraphError::StaleCheckpoint));
        assert!(g.is_empty());
        assert_eq!(g.next_id(), NodeId(1));
    }

    #[test]
    fn empty_rollback_is_noop() {
        let mut g = InstanceGraph::new(mm());
        let s = g.create_node("State").unwrap();
        g.set_attribute(s, "name", "x".into()).unwrap();
        let before = crate::canonical::serialize(&g);
        let cp = g.checkpoint();
        g.rollback_to(cp).unwrap();
        assert_eq!(crate::canonical::serialize(&g), before);
    }

    #[test]
    fn extract_containment_closure() {
        let mut g = InstanceGraph::new(mm());
        let other = g.create_node("State").unwrap();
        let m = g.create_node("Machine").unwrap();
        let a = g.create_node("State").unwrap();
        g.add_edge(m, "states", a).unwrap();
        g.set_attribute(a, "name", "A".into()).unwrap();
        g.add_edge(a, "next", a).unwrap();
        let out = g.extract(m, mm()).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out.attribute(NodeId(2), "name"), Some(&Value::from("A")));
        g.add_edge(a, "next", other).unwrap();
        assert!(g.extract(m, mm()).is_err());
    }
}
