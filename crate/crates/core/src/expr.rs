//! A small side-effect-free expression language for attribute calculations
//! and attribute checks.
//!
//! Precedence, loosest first: `?:`, `||`, `&&`, `== !=`, `< > <= >=`, `+`,
//! unary `!`. `+` adds integers, concatenates strings, and when exactly one
//! operand is a string converts the other to its text form.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::lex::{Cursor, SyntaxError, Tok};
use crate::value::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Eq,
    Ne,
    And,
    Or,
    Lt,
    Gt,
    Le,
    Ge,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Eq => "==",
            BinOp::Ne => "!=",
            BinOp::And => "&&",
            BinOp::Or => "||",
            BinOp::Lt => "<",
            BinOp::Gt => ">",
            BinOp::Le => "<=",
            BinOp::Ge => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Lit(Value),
    Param(String),
    Not(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Cond(Box<Expr>, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound parameter `{0}`")]
    Unbound(String),
    #[error("operator `{op}` cannot be applied to {operands}")]
    TypeMismatch { op: &'static str, operands: String },
    #[error("integer overflow in `+`")]
    Overflow,
}

/// Read-only variable lookup for [`Expr::eval`].
pub trait Env {
    fn lookup(&self, name: &str) -> Option<Value>;
}

impl Env for HashMap<String, Value> {
    fn lookup(&self, name: &str) -> Option<Value> {
        self.get(name).cloned()
    }
}

impl Env for BTreeMap<String, Value> {
    fn lookup(&self, name: &str) -> Option<Value> {
        self.get(name).cloned()
    }
}

impl Env for [(&str, Value)] {
    fn lookup(&self, name: &str) -> Option<Value> {
        self.iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v.clone())
    }
}

impl<F: Fn(&str) -> Option<Value>> Env for F {
    fn lookup(&self, name: &str) -> Option<Value> {
        self(name)
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    let mut cur = Cursor::new(text)?;
    let e = parse(&mut cur)?;
    if !cur.at_eof() {
        return Err(cur.error("operator or end of input"));
    }
    Ok(e)
}

/// Parses one expression from `cur`, stopping at the first token that cannot
/// continue it.
pub fn parse(cur: &mut Cursor) -> Result<Expr, SyntaxError> {
    ternary(cur)
}

fn ternary(cur: &mut Cursor) -> Result<Expr, SyntaxError> {
    let c = binary(cur, 0)?;
    if cur.eat_sym("?") {
        let a = ternary(cur)?;
        cur.expect_sym(":")?;
        let b = ternary(cur)?;
        return Ok(Expr::Cond(Box::new(c), Box::new(a), Box::new(b)));
    }
    Ok(c)
}

const LEVELS: &[&[(&str, BinOp)]] = &[
    &[("||", BinOp::Or)],
    &[("&&", BinOp::And)],
    &[("==", BinOp::Eq), ("!=", BinOp::Ne)],
    &[
        ("<=", BinOp::Le),
        (">=", BinOp::Ge),
        ("<", BinOp::Lt),
        (">", BinOp::Gt),
    ],
    &[("+", BinOp::Add)],
];

fn binary(cur: &mut Cursor, level: usize) -> Result<Expr, SyntaxError> {
    if level == LEVELS.len() {
        return unary(cur);
    }
    let mut lhs = binary(cur, level + 1)?;
    'outer: loop {
        for (sym, op) in LEVELS[level] {
            if cur.is_sym(sym) {
                cur.bump();
                let rhs = binary(cur, level + 1)?;
                lhs = Expr::Binary(*op, Box::new(lhs), Box::new(rhs));
                continue 'outer;
            }
        }
        return Ok(lhs);
    }
}

fn unary(cur: &mut Cursor) -> Result<Expr, SyntaxError> {
    if cur.eat_sym("!") {
        return Ok(Expr::Not(Box::new(unary(cur)?)));
    }
    primary(cur)
}

fn primary(cur: &mut Cursor) -> Result<Expr, SyntaxError> {
    match cur.peek().clone() {
        Tok::Sym("(") => {
            cur.bump();
            let e = parse(cur)?;
            cur.expect_sym(")")?;
            Ok(e)
        }
        Tok::Str(_) | Tok::Int(_) => Ok(Expr::Lit(crate::canonical::literal(cur)?)),
        Tok::Sym("-") if matches!(cur.peek_at(1), Tok::Int(_)) => {
            Ok(Expr::Lit(crate::canonical::literal(cur)?))
        }
        Tok::Ident(s) => {
            cur.bump();
            Ok(match s.as_str() {
                "true" => Expr::Lit(Value::Bool(true)),
                "false" => Expr::Lit(Value::Bool(false)),
                _ => Expr::Param(s),
            })
        }
        _ => Err(cur.error("expression")),
    }
}

impl Expr {
    pub fn eval<E: Env + ?Sized>(&self, env: &E) -> Result<Value, EvalError> {
        match self {
            Expr::Lit(v) => Ok(v.clone()),
            Expr::Param(name) => env
                .lookup(name)
                .ok_or_else(|| EvalError::Unbound(name.clone())),
            Expr::Not(e) => match e.eval(env)? {
                Value::Bool(b) => Ok(Value::Bool(!b)),
                other => Err(mismatch("!", &[&other])),
            },
            Expr::Cond(c, a, b) => match c.eval(env)? {
                Value::Bool(true) => a.eval(env),
                Value::Bool(false) => b.eval(env),
                other => Err(mismatch("?:", &[&other])),
            },
            Expr::Binary(op @ (BinOp::And | BinOp::Or), l, r) => {
                let lv = l.eval(env)?;
                let Value::Bool(lb) = lv else {
                    return Err(mismatch(op.symbol(), &[&lv]));
                };
                if (*op == BinOp::And && !lb) || (*op == BinOp::Or && lb) {
                    return Ok(Value::Bool(lb));
                }
                match r.eval(env)? {
                    Value::Bool(rb) => Ok(Value::Bool(rb)),
                    other => Err(mismatch(op.symbol(), &[&lv, &other])),
                }
            }
            Expr::Binary(op, l, r) => {
                let lv = l.eval(env)?;
                let rv = r.eval(env)?;
                apply(*op, lv, rv)
            }
        }
    }

    /// Names of all parameters referenced, in first-occurrence order.
    pub fn params(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_params(&mut out);
        out
    }

    fn collect_params<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Lit(_) => {}
            Expr::Param(p) => {
                if !out.contains(&p.as_str()) {
                    out.push(p);
                }
            }
            Expr::Not(e) => e.collect_params(out),
            Expr::Binary(_, l, r) => {
                l.collect_params(out);
                r.collect_params(out);
            }
            Expr::Cond(c, a, b) => {
                c.collect_params(out);
                a.collect_params(out);
                b.collect_params(out);
            }
        }
    }
}

fn apply(op: BinOp, l: Value, r: Value) -> Result<Value, EvalError> {
    use Value::*;
    match (op, l, r) {
        (BinOp::Add, Int(a), Int(b)) => a.checked_add(b).map(Int).ok_or(EvalError::Overflow),
        (BinOp::Add, Str(a), b) => Ok(Str(a + &b.to_string())),
        (BinOp::Add, a @ (Int(_) | Bool(_)), Str(b)) => Ok(Str(a.to_string() + &b)),
        (BinOp::Eq, a, b) => Ok(Bool(a == b)),
        (BinOp::Ne, a, b) => Ok(Bool(a != b)),
        (op @ (BinOp::Lt | BinOp::Gt | BinOp::Le | BinOp::Ge), l, r) => {
            let ord = match (&l, &r) {
                (Int(a), Int(b)) => a.cmp(b),
                (Str(a), Str(b)) => a.cmp(b),
                _ => return Err(mismatch(op.symbol(), &[&l, &r])),
            };
            Ok(Bool(match op {
                BinOp::Lt => ord.is_lt(),
                BinOp::Gt => ord.is_gt(),
                BinOp::Le => ord.is_le(),
                _ => ord.is_ge(),
            }))
        }
        (op, l, r) => Err(mismatch(op.symbol(), &[&l, &r])),
    }
}

fn mismatch(op: &'static str, vals: &[&Value]) -> EvalError {
    let operands = vals
        .iter()
        .map(|v| v.kind().to_string())
        .collect::<Vec<_>>()
        .join(" and ");
    EvalError::TypeMismatch { op, operands }
}

/// Fully parenthesized; `parse_expr(e.to_string()) == e`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(v) => f.write_str(&v.literal()),
            Expr::Param(p) => f.write_str(p),
            Expr::Not(e) => write!(f, "!{e}"),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Cond(c, a, b) => write!(f, "({c} ? {a} : {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(src: &str, env: &[(&str, Value)]) -> Result<Value, EvalError> {
        parse_expr(src).unwrap().eval(env)
    }

    #[test]
    fn concatenation_and_coercion() {
        assert_eq!(
            ev(r#""m_" + name"#, &[("name", "doIt".into())]),
            Ok("m_doIt".into())
        );
        assert_eq!(ev(r#""a" + 1"#, &[]), Ok("a1".into()));
        assert_eq!(ev(r#"true + "x""#, &[]), Ok("truex".into()));
        assert_eq!(ev("1 + 2 + 3", &[]), Ok(Value::Int(6)));
        assert!(matches!(
            ev("true + 1", &[]),
            Err(EvalError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn trigger_selection_both_branches() {
        let e = parse_expr(r#"trigger == "" ? mName : trigger"#).unwrap();
        assert!(matches!(e, Expr::Cond(..)));
        let env1: &[(&str, Value)] = &[("trigger", "".into()), ("mName", "go".into())];
        let env2: &[(&str, Value)] = &[("trigger", "EV".into()), ("mName", "go".into())];
        assert_eq!(e.eval(env1), Ok("go".into()));
        assert_eq!(e.eval(env2), Ok("EV".into()));
    }

    #[test]
    fn logic_and_comparison() {
        assert_eq!(ev("!false", &[]), Ok(Value::Bool(true)));
        assert_eq!(
            ev("x < y", &[("x", 2.into()), ("y", 3.into())]),
            Ok(Value::Bool(true))
        );
        assert_eq!(ev("\"b\" >= \"a\" && 1 != 2", &[]), Ok(Value::Bool(true)));
        assert_eq!(ev("false && nope", &[]), Ok(Value::Bool(false)));
        assert_eq!(ev("-3 < 0", &[]), Ok(Value::Bool(true)));
    }

    #[test]
    fn precedence() {
        let e = parse_expr("a || b && c == d + e").unwrap();
        assert_eq!(e.to_string(), "(a || (b && (c == (d + e))))");
        let t = parse_expr("a ? b : c ? d : e").unwrap();
        assert_eq!(t.to_string(), "(a ? b : (c ? d : e))");
    }

    #[test]
    fn errors() {
        let err = parse_expr("1 + ").unwrap_err();
        assert_eq!(err.pos.col, 5);
        assert!(err.message.contains("end of input"));
        assert_eq!(ev("x", &[]), Err(EvalError::Unbound("x".into())));
        assert!(parse_expr("(1").is_err());
        assert!(parse_expr("1 2").is_err());
    }
}
