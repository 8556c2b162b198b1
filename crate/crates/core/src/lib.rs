//! In-place transformation of typed, attributed graphs.
//!
//! The crate is layered bottom-up:
//!
//! * [`metamodel`], [`graph`], [`canonical`]: typed graphs with a change
//!   journal for checkpoint/rollback.
//! * [`expr`]: expressions for attribute calculations and checks.
//! * [`rules`]: rules (LHS/RHS pattern graphs, mappings, nested application
//!   conditions) and their compiled form.
//! * [`matcher`]: backtracking injective pattern matching.
//! * [`engine`]: transformation units with transactional semantics.
//! * [`formats`]: the `.mm`, `.gm` and `.tfm` file formats.

pub mod canonical;
pub mod engine;
pub mod expr;
pub mod formats;
pub mod graph;
pub mod lex;
pub mod matcher;
pub mod metamodel;
pub mod rules;
pub mod value;

pub use graph::{Checkpoint, GraphError, InstanceGraph, NodeId};
pub use metamodel::{Metamodel, NodeTypeDef, TypeId, ANY};
pub use value::{AttrKind, Value};
