//! File formats: metamodels (`.mm`), instance graphs (`.gm`, structured
//! JSON; the canonical line format is accepted on input too) and
//! transformations (`.tfm`).

pub mod gm;
pub mod mm;
pub mod tfm;

pub use gm::{parse_model, serialize_model};
pub use mm::{parse_metamodel, print_metamodel, MetamodelFileError};
pub use tfm::{load_transformation, parse_transformation, TfmError, TransformationFile};

use crate::metamodel::{Metamodel, NodeTypeDef};

/// Name under which transformations import the built-in trace metamodel.
pub const TRACE: &str = "trace";

/// The built-in trace metamodel: one `Trace` type with untyped `source` and
/// `target` references, used to mark processed elements.
pub fn trace_metamodel() -> Metamodel {
    Metamodel::new(
        TRACE,
        vec![NodeTypeDef::new("Trace")
            .reference("source", crate::ANY, true)
            .reference("target", crate::ANY, true)],
    )
    .expect("built-in metamodel is valid")
}
