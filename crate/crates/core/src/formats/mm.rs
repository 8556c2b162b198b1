//! Metamodel text format.
//!
//! ```text
//! metamodel statemachine;
//!
//! class StateMachine {
//!   contains states : State*;
//! }
//! abstract class Named { attr name : string; }
//! class State : Named;
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::lex::{Cursor, SyntaxError};
use crate::metamodel::{Metamodel, MetamodelError, NodeTypeDef, ANY};
use crate::value::AttrKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetamodelFileError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Invalid(#[from] MetamodelError),
}

pub fn parse_metamodel(text: &str) -> Result<Metamodel, MetamodelFileError> {
    let mut cur = Cursor::new(text)?;
    cur.expect_kw("metamodel")?;
    let (name, _) = cur.ident()?;
    cur.expect_sym(";")?;
    let mut defs = Vec::new();
    while !cur.at_eof() {
        let is_abstract = cur.eat_kw("abstract");
        cur.expect_kw("class")?;
        let (ty, _) = cur.ident()?;
        let mut def = NodeTypeDef::new(ty);
        def.is_abstract = is_abstract;
        if cur.eat_sym(":") {
            loop {
                def.supertypes.push(cur.ident()?.0);
                if !cur.eat_sym(",") {
                    break;
                }
            }
        }
        if !cur.eat_sym(";") {
            cur.expect_sym("{")?;
            while !cur.eat_sym("}") {
                if cur.eat_kw("attr") {
                    let (a, _) = cur.ident()?;
                    cur.expect_sym(":")?;
                    let (kw, pos) = cur.ident()?;
                    let kind = match kw.as_str() {
                        "string" => AttrKind::String,
                        "int" => AttrKind::Integer,
                        "bool" => AttrKind::Boolean,
                        _ => {
                            return Err(
                                SyntaxError::new(pos, "expected `string`, `int` or `bool`").into()
                            )
                        }
                    };
                    def = def.attr(a, kind);
                } else {
                    let containment = if cur.eat_kw("contains") {
                        true
                    } else {
                        cur.expect_kw("ref")
                            .map_err(|_| cur.error("`attr`, `ref`, `contains` or `}`"))?;
                        false
                    };
                    let (r, _) = cur.ident()?;
                    cur.expect_sym(":")?;
                    let (target, _) = cur.ident()?;
                    let many = cur.eat_sym("*");
                    def = if containment {
                        def.contains(r, target, many)
                    } else {
                        def.reference(r, target, many)
                    };
                }
                cur.expect_sym(";")?;
            }
        }
        defs.push(def);
    }
    Ok(Metamodel::new(name, defs)?)
}

pub fn print_metamodel(mm: &Metamodel) -> String {
    let mut out = format!("metamodel {};\n", mm.name());
    for def in mm.type_defs().filter(|d| d.name != ANY) {
        out.push('\n');
        if def.is_abstract {
            out.push_str("abstract ");
        }
        let _ = write!(out, "class {}", def.name);
        if !def.supertypes.is_empty() {
            let _ = write!(out, " : {}", def.supertypes.join(", "));
        }
        if def.attributes.is_empty() && def.references.is_empty() {
            out.push_str(";\n");
            continue;
        }
        out.push_str(" {\n");
        for a in &def.attributes {
            let _ = writeln!(out, "  attr {} : {};", a.name, a.kind.keyword());
        }
        for r in &def.references {
            let kw = if r.containment { "contains" } else { "ref" };
            let _ = writeln!(
                out,
                "  {kw} {} : {}{};",
                r.name,
                r.target,
                if r.many { "*" } else { "" }
            );
        }
        out.push_str("}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SM: &str = "metamodel statemachine;

class StateMachine {
  contains states : State*;
  contains transitions : Transition*;
}

class State {
  attr name : string;
}

class Transition {
  attr trigger : string;
  attr action : string;
  ref source : State;
  ref target : State;
}
";

    #[test]
    fn round_trip() {
        let mm = parse_metamodel(SM).unwrap();
        assert_eq!(mm.type_count(), 4);
        assert_eq!(print_metamodel(&mm), SM);
    }

    #[test]
    fn errors() {
        let e = parse_metamodel("metamodel m; class A : B;").unwrap_err();
        assert!(matches!(
            e,
            MetamodelFileError::Invalid(MetamodelError::UnknownSupertype { .. })
        ));
        let e = parse_metamodel("metamodel m; class A { attr x : float; }").unwrap_err();
        assert!(e.to_string().contains("`string`"));
        let e = parse_metamodel("metamodel m;\nclass A { ref }").unwrap_err();
        assert!(e.to_string().starts_with("2:"), "{e}");
    }
}
