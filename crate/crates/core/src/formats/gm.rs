//! Structured model format (`.gm`): pretty-printed JSON.
//!
//! ```json
//! {
//!   "metamodel": "statemachine",
//!   "nodes": [
//!     { "id": 1, "type": "StateMachine", "attrs": {}, "refs": { "states": [2] } },
//!     { "id": 2, "type": "State", "attrs": { "name": "Idle" }, "refs": {} }
//!   ]
//! }
//! ```
//!
//! Nodes appear in id order, attributes and references in flattened
//! declaration order; empty references are omitted. [`parse_model`] also
//! accepts the canonical line format, so either can be fed to the tools.

use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::canonical::{self, ModelError};
use crate::graph::{GraphError, InstanceGraph, NodeId};
use crate::metamodel::Metamodel;
use crate::value::Value;

#[derive(Serialize, Deserialize)]
struct ModelFile {
    metamodel: String,
    nodes: Vec<NodeEntry>,
}

#[derive(Serialize, Deserialize)]
struct NodeEntry {
    id: u64,
    #[serde(rename = "type")]
    ty: String,
    #[serde(default)]
    attrs: IndexMap<String, serde_json::Value>,
    #[serde(default)]
    refs: IndexMap<String, Vec<u64>>,
}

pub fn serialize_model(g: &InstanceGraph) -> String {
    let mm = g.metamodel();
    let nodes = g
        .node_ids()
        .map(|id| {
            let node = g.node(id).expect("live id");
            let attrs = mm
                .attrs_of(node.ty())
                .iter()
                .zip(node.attr_values())
                .map(|(a, v)| {
                    let json = match v {
                        Value::Str(s) => serde_json::Value::from(s.as_str()),
                        Value::Int(i) => serde_json::Value::from(*i),
                        Value::Bool(b) => serde_json::Value::from(*b),
                    };
                    (mm.attr_info(*a).name.clone(), json)
                })
                .collect();
            let refs = mm
                .refs_of(node.ty())
                .iter()
                .zip(node.ref_lists())
                .filter(|(_, t)| !t.is_empty())
                .map(|(r, t)| {
                    (
                        mm.ref_info(*r).name.clone(),
                        t.iter().map(|n| n.0).collect(),
                    )
                })
                .collect();
            NodeEntry {
                id: id.0,
                ty: mm.type_name(node.ty()).to_owned(),
                attrs,
                refs,
            }
        })
        .collect();
    let file = ModelFile {
        metamodel: mm.name().to_owned(),
        nodes,
    };
    let mut out = serde_json::to_string_pretty(&file).expect("model serializes");
    out.push('\n');
    out
}

/// Parses a `.gm` JSON model, or the canonical line format if the text does
/// not start with `{`. Conformance violations are reported exhaustively.
pub fn parse_model(text: &str, mm: Arc<Metamodel>) -> Result<InstanceGraph, ModelError> {
    if !text.trim_start().starts_with('{') {
        return canonical::parse(text, mm);
    }
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))?;
    let mut g = InstanceGraph::new(mm);
    let mut errors = Vec::new();
    for n in &file.nodes {
        let res = g.resolve_type(&n.ty).and_then(|t| match n.id {
            0 => Err(GraphError::UnknownNode(NodeId(0))),
            id => g.create_with_id(NodeId(id), t),
        });
        if let Err(e) = res {
            errors.push((format!("node {}", n.id), e));
        }
    }
    for n in &file.nodes {
        let id = NodeId(n.id);
        if !g.contains(id) {
            continue;
        }
        let at = || format!("node {}", n.id);
        for (name, v) in &n.attrs {
            let value = match v {
                serde_json::Value::String(s) => Ok(Value::Str(s.clone())),
                serde_json::Value::Bool(b) => Ok(Value::Bool(*b)),
                serde_json::Value::Number(x) => {
                    x.as_i64().map(Value::Int).ok_or_else(|| format!("{x}"))
                }
                other => Err(other.to_string()),
            };
            match value {
                Ok(value) => {
                    if let Err(e) = g.set_attribute(id, name, value) {
                        errors.push((at(), e));
                    }
                }
                Err(raw) => {
                    return Err(ModelError::Json(format!(
                        "node {}: attribute `{name}` has unsupported value {raw}",
                        n.id
                    )))
                }
            }
        }
        for (name, targets) in &n.refs {
            for t in targets {
                if let Err(e) = g.add_edge(id, name, NodeId(*t)) {
                    errors.push((at(), e));
                }
            }
        }
    }
    if !errors.is_empty() {
        return Err(ModelError::Conformance(errors));
    }
    g.clear_journal();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formats::parse_metamodel;

    fn mm() -> Arc<Metamodel> {
        Arc::new(
            parse_metamodel(
                "metamodel sm; class StateMachine { contains states : State*; } class State { attr name : string; attr n : int; attr on : bool; }",
            )
            .unwrap(),
        )
    }

    #[test]
    fn json_round_trip_and_canonical_agreement() {
        let canonical_text = "node 1 : StateMachine\n  ref states -> 2, 5\nnode 2 : State\n  attr name = \"a\"\n  attr n = -3\n  attr on = true\nnode 5 : State\n  attr name = \"b\"\n  attr n = 0\n  attr on = false\n";
        let g = parse_model(canonical_text, mm()).unwrap();
        let json = serialize_model(&g);
        let g2 = parse_model(&json, mm()).unwrap();
        assert_eq!(serialize_model(&g2), json);
        assert_eq!(canonical::serialize(&g2), canonical_text);
        assert!(json.starts_with("{\n  \"metamodel\": \"sm\",\n  \"nodes\": [\n"));
    }

    #[test]
    fn unknown_type_is_named() {
        let text = r#"{"metamodel": "sm", "nodes": [{"id": 1, "type": "Gadget"}]}"#;
        let e = parse_model(text, mm()).unwrap_err();
        assert!(e.to_string().contains("Gadget"), "{e}");
        let e = parse_model("{ nope", mm()).unwrap_err();
        assert!(matches!(e, ModelError::Json(_)));
    }
}
