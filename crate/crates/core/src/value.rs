//! Attribute values and their kinds.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The primitive kinds an attribute may be declared with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AttrKind {
    String,
    Integer,
    Boolean,
}

impl AttrKind {
    /// Value a freshly created node carries for an attribute of this kind.
    pub fn default_value(self) -> Value {
        match self {
            AttrKind::String => Value::Str(String::new()),
            AttrKind::Integer => Value::Int(0),
            AttrKind::Boolean => Value::Bool(false),
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            AttrKind::String => "string",
            AttrKind::Integer => "int",
            AttrKind::Boolean => "bool",
        }
    }
}

impl fmt::Display for AttrKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A tagged attribute value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Str(String),
    Int(i64),
    Bool(bool),
}

impl Value {
    pub fn kind(&self) -> AttrKind {
        match self {
            Value::Str(_) => AttrKind::String,
            Value::Int(_) => AttrKind::Integer,
            Value::Bool(_) => AttrKind::Boolean,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Value::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    /// Source-level literal: strings quoted and escaped, numbers and booleans bare.
    pub fn literal(&self) -> String {
        match self {
            Value::Str(s) => quote(s),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
        }
    }
}

/// Plain text form: strings unquoted. This is what string concatenation uses.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Str(s) => f.write_str(s),
            Value::Int(i) => write!(f, "{i}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Str(s)
    }
}

impl From<i64> for Value {
    fn from(i: i64) -> Self {
        Value::Int(i)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

/// Quotes a string using the escape set shared by every text format in this crate.
pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_per_kind() {
        assert_eq!(AttrKind::String.default_value(), Value::Str(String::new()));
        assert_eq!(AttrKind::Integer.default_value(), Value::Int(0));
        assert_eq!(AttrKind::Boolean.default_value(), Value::Bool(false));
    }

    #[test]
    fn literal_escapes() {
        assert_eq!(Value::from("a\"b\\c\n").literal(), r#""a\"b\\c\n""#);
        assert_eq!(Value::Int(-3).literal(), "-3");
        assert_eq!(Value::Str("x".into()).to_string(), "x");
    }
}
