//! Canonical line-oriented graph text.
//!
//! ```text
//! node 1 : StateMachine
//!   ref states -> 2, 3
//! node 2 : State
//!   attr name = "Idle"
//! ```
//!
//! Nodes appear in id order; every attribute is printed in flattened
//! declaration order; references are printed in declaration order and only
//! when non-empty. The output is bit-exact and used for golden comparisons.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::graph::{GraphError, InstanceGraph, NodeId};
use crate::lex::{Cursor, Pos, SyntaxError, Tok};
use crate::metamodel::Metamodel;
use crate::value::Value;

pub fn serialize(g: &InstanceGraph) -> String {
    let mm = g.metamodel();
    let mut out = String::new();
    for id in g.node_ids() {
        let node = g.node(id).expect("live id");
        let _ = writeln!(out, "node {id} : {}", mm.type_name(node.ty()));
        for (attr, value) in mm.attrs_of(node.ty()).iter().zip(node.attr_values()) {
            let _ = writeln!(
                out,
                "  attr {} = {}",
                mm.attr_info(*attr).name,
                value.literal()
            );
        }
        for (reference, targets) in mm.refs_of(node.ty()).iter().zip(node.ref_lists()) {
            if targets.is_empty() {
                continue;
            }
            let list: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
            let _ = writeln!(
                out,
                "  ref {} -> {}",
                mm.ref_info(*reference).name,
                list.join(", ")
            );
        }
    }
    out
}

/// Errors from loading a model: a syntax error or an exhaustive list of
/// conformance violations, each with a location (`line:col` or `node <id>`).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Json(String),
    #[error("{}", .0.iter().map(|(p, e)| format!("{p}: {e}")).collect::<Vec<_>>().join("\n"))]
    Conformance(Vec<(String, GraphError)>),
}

enum Item {
    Attr(String, Value, Pos),
    Ref(String, Vec<NodeId>, Pos),
}

pub fn parse(text: &str, mm: Arc<Metamodel>) -> Result<InstanceGraph, ModelError> {
    let mut cur = Cursor::new(text)?;
    let mut decls: Vec<(NodeId, String, Pos, Vec<Item>)> = Vec::new();
    while !cur.at_eof() {
        let pos = cur.expect_kw("node")?;
        let id = node_id(&mut cur)?;
        cur.expect_sym(":")?;
        let (ty, _) = cur.ident()?;
        let mut items = Vec::new();
        loop {
            if cur.is_kw("attr") {
                let p = cur.bump().pos;
                let (name, _) = cur.ident()?;
                cur.expect_sym("=")?;
                items.push(Item::Attr(name, literal(&mut cur)?, p));
            } else if cur.is_kw("ref") {
                let p = cur.bump().pos;
                let (name, _) = cur.ident()?;
                cur.expect_sym("->")?;
                let mut targets = vec![node_id(&mut cur)?];
                while cur.eat_sym(",") {
                    targets.push(node_id(&mut cur)?);
                }
                items.push(Item::Ref(name, targets, p));
            } else {
                break;
            }
        }
        decls.push((id, ty, pos, items));
    }

    let mut g = InstanceGraph::new(mm);
    let mut errors = Vec::new();
    for (id, ty, pos, _) in &decls {
        let res = g.resolve_type(ty).and_then(|t| g.create_with_id(*id, t));
        if let Err(e) = res {
            errors.push((pos.to_string(), e));
        }
    }
    for (id, _, _, items) in &decls {
        if !g.contains(*id) {
            continue;
        }
        for item in items {
            let res = match item {
                Item::Attr(name, value, p) => g
                    .set_attribute(*id, name, value.clone())
                    .map_err(|e| (p.to_string(), e)),
                Item::Ref(name, targets, p) => targets
                    .iter()
                    .try_for_each(|t| g.add_edge(*id, name, *t))
                    .map_err(|e| (p.to_string(), e)),
            };
            if let Err(e) = res {
                errors.push(e);
            }
        }
    }
    if !errors.is_empty() {
        return Err(ModelError::Conformance(errors));
    }
    g.clear_journal();
    Ok(g)
}

fn node_id(cur: &mut Cursor) -> Result<NodeId, SyntaxError> {
    match cur.peek() {
        Tok::Int(i) if *i > 0 => {
            let i = *i;
            cur.bump();
            Ok(NodeId(i as u64))
        }
        _ => Err(cur.error("positive node id")),
    }
}

/// String, integer (optionally negative) or boolean literal.
pub(crate) fn literal(cur: &mut Cursor) -> Result<Value, SyntaxError> {
    match cur.peek().clone() {
        Tok::Str(s) => {
            cur.bump();
            Ok(Value::Str(s))
        }
        Tok::Int(_) | Tok::Sym("-") => Ok(Value::Int(cur.int()?)),
        Tok::Ident(s) if s == "true" || s == "false" => {
            cur.bump();
            Ok(Value::Bool(s == "true"))
        }
        _ => Err(cur.error("literal")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metamodel::NodeTypeDef;
    use crate::value::AttrKind;

    fn mm() -> Arc<Metamodel> {
        Arc::new(
            Metamodel::new(
                "sm",
                vec![
                    NodeTypeDef::new("StateMachine").contains("states", "State", true),
                    NodeTypeDef::new("State")
                        .attr("name", AttrKind::String)
                        .attr("n", AttrKind::Integer),
                ],
            )
            .unwrap(),
        )
    }

    const SAMPLE: &str = "node 1 : StateMachine\n  ref states -> 3, 4\nnode 3 : State\n  attr name = \"a\\\"b\"\n  attr n = -2\nnode 4 : State\n  attr name = \"\"\n  attr n = 0\n";

    #[test]
    fn round_trip_is_identity() {
        let g = parse(SAMPLE, mm()).unwrap();
        assert_eq!(serialize(&g), SAMPLE);
        assert_eq!(g.next_id(), NodeId(5));
    }

    #[test]
    fn reports_all_conformance_errors() {
        let text = "node 1 : Nope\nnode 2 : State\n  attr name = 3\n  attr zz = 1\n";
        match parse(text, mm()) {
            Err(ModelError::Conformance(errs)) => {
                assert_eq!(errs.len(), 3);
                assert_eq!(errs[0].1, GraphError::UnknownType("Nope".into()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_error_has_position() {
        match parse("node 1 State", mm()) {
            Err(ModelError::Syntax(e)) => assert_eq!(e.pos, Pos { line: 1, col: 8 }),
            other => panic!("{other:?}"),
        }
    }
}
