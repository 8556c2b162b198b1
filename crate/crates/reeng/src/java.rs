//! Parser for the restricted Java subset.
//!
//! ```text
//! file      = { class } ;
//! class     = [ "public" ] [ "abstract" ] "class" Ident [ "extends" Ident ]
//!             "{" { method } "}" ;
//! method    = [ "public" | "protected" | "private" ] "void" Ident "(" ")" block ;
//! block     = "{" { stmt } "}" ;
//! stmt      = "new" Ident "(" ")" ";"
//!           | Ident "(" [ arg ] ")" ";"
//!           | "if" "(" balanced ")" block [ "else" ( block | if ) ]
//!           | "switch" "(" balanced ")" "{" { label ":" { stmt } } "}"
//!           | "try" block { "catch" "(" QualIdent Ident ")" block } [ "finally" block ]
//!           | "break" ";" | "return" ";" ;
//! arg       = String | "new" Ident "(" ")" ;
//! label     = "case" ( Ident | String | Int ) | "default" ;
//! ```
//!
//! `balanced` is any token sequence with balanced parentheses; it is not
//! modeled. `break` and `return` are accepted and dropped. An `else if`
//! becomes an else block holding the nested condition.

use std::collections::HashMap;
use std::sync::Arc;

use tgraph::lex::{Cursor, Pos, SyntaxError, Tok};
use tgraph::{GraphError, InstanceGraph, Metamodel, NodeId, Value};
use thiserror::Error;

/// A named source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceFile {
    pub name: String,
    pub text: String,
}

impl SourceFile {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        SourceFile {
            name: name.into(),
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JavaError {
    #[error("{file}:{}:{}: {}", .error.pos.line, .error.pos.col, .error.message)]
    Syntax { file: String, error: SyntaxError },
    #[error("{file}:{}:{}: unknown class `{name}`", .pos.line, .pos.col)]
    Unresolved {
        file: String,
        pos: Pos,
        name: String,
    },
    #[error("{file}:{}:{}: class `{name}` is defined twice", .pos.line, .pos.col)]
    Duplicate {
        file: String,
        pos: Pos,
        name: String,
    },
    #[error("metamodel does not fit the Java subset: {0}")]
    Graph(#[from] GraphError),
}

#[derive(Debug)]
struct ClassAst {
    name: String,
    pos: Pos,
    is_abstract: bool,
    extends: Option<(String, Pos)>,
    methods: Vec<(String, Vec<Stmt>)>,
}

#[derive(Debug)]
enum Expr {
    New(String, Pos),
    Call(String, Option<Box<Expr>>),
    Str(String),
}

#[derive(Debug)]
enum Stmt {
    Expr(Expr),
    If(Vec<Stmt>, Option<Vec<Stmt>>),
    Switch(Vec<(String, Vec<Stmt>)>),
    Try {
        body: Vec<Stmt>,
        catches: Vec<(String, Vec<Stmt>)>,
        finally: Option<Vec<Stmt>>,
    },
}

fn parse_file(text: &str) -> Result<Vec<ClassAst>, SyntaxError> {
    let mut cur = Cursor::new(text)?;
    let mut out = Vec::new();
    while !cur.at_eof() {
        cur.eat_kw("public");
        let is_abstract = cur.eat_kw("abstract");
        cur.expect_kw("class")?;
        let (name, pos) = cur.ident()?;
        let extends = if cur.eat_kw("extends") {
            Some(cur.ident()?)
        } else {
            None
        };
        cur.expect_sym("{")?;
        let mut methods = Vec::new();
        while !cur.eat_sym("}") {
            let _ = cur.eat_kw("public") || cur.eat_kw("protected") || cur.eat_kw("private");
            cur.expect_kw("void")?;
            let (m, _) = cur.ident()?;
            cur.expect_sym("(")?;
            cur.expect_sym(")")?;
            methods.push((m, block(&mut cur)?));
        }
        out.push(ClassAst {
            name,
            pos,
            is_abstract,
            extends,
            methods,
        });
    }
    Ok(out)
}

fn block(cur: &mut Cursor) -> Result<Vec<Stmt>, SyntaxError> {
    cur.expect_sym("{")?;
    let mut out = Vec::new();
    while !cur.eat_sym("}") {
        if let Some(s) = stmt(cur)? {
            out.push(s);
        }
    }
    Ok(out)
}

fn skip_balanced(cur: &mut Cursor) -> Result<(), SyntaxError> {
    cur.expect_sym("(")?;
    let mut depth = 1;
    while depth > 0 {
        match cur.peek() {
            Tok::Eof => return Err(cur.error("`)`")),
            Tok::Sym("(") => depth += 1,
            Tok::Sym(")") => depth -= 1,
            _ => {}
        }
        cur.bump();
    }
    Ok(())
}

fn new_call(cur: &mut Cursor) -> Result<Expr, SyntaxError> {
    cur.expect_kw("new")?;
    let (name, pos) = cur.ident()?;
    cur.expect_sym("(")?;
    cur.expect_sym(")")?;
    Ok(Expr::New(name, pos))
}

fn if_stmt(cur: &mut Cursor) -> Result<Stmt, SyntaxError> {
    cur.expect_kw("if")?;
    skip_balanced(cur)?;
    let then = block(cur)?;
    let otherwise = if cur.eat_kw("else") {
        Some(if cur.is_kw("if") {
            vec![if_stmt(cur)?]
        } else {
            block(cur)?
        })
    } else {
        None
    };
    Ok(Stmt::If(then, otherwise))
}

fn stmt(cur: &mut Cursor) -> Result<Option<Stmt>, SyntaxError> {
    if cur.is_kw("new") {
        let e = new_call(cur)?;
        cur.expect_sym(";")?;
        return Ok(Some(Stmt::Expr(e)));
    }
    if cur.is_kw("if") {
        return if_stmt(cur).map(Some);
    }
    if cur.eat_kw("switch") {
        skip_balanced(cur)?;
        cur.expect_sym("{")?;
        let mut cases: Vec<(String, Vec<Stmt>)> = Vec::new();
        while !cur.eat_sym("}") {
            let label = if cur.eat_kw("case") {
                match cur.bump().tok {
                    Tok::Ident(s) | Tok::Str(s) => s,
                    Tok::Int(i) => i.to_string(),
                    _ => return Err(SyntaxError::new(cur.pos(), "expected a case label")),
                }
            } else if cur.eat_kw("default") {
                "default".to_owned()
            } else {
                return Err(cur.error("`case`, `default` or `}`"));
            };
            cur.expect_sym(":")?;
            let mut body = Vec::new();
            while !cur.is_kw("case") && !cur.is_kw("default") && !cur.is_sym("}") {
                if let Some(s) = stmt(cur)? {
                    body.push(s);
                }
            }
            cases.push((label, body));
        }
        return Ok(Some(Stmt::Switch(cases)));
    }
    if cur.eat_kw("try") {
        let body = block(cur)?;
        let mut catches = Vec::new();
        while cur.eat_kw("catch") {
            cur.expect_sym("(")?;
            let mut ty = cur.ident()?.0;
            while cur.eat_sym(".") {
                ty.push('.');
                ty.push_str(&cur.ident()?.0);
            }
            cur.ident()?;
            cur.expect_sym(")")?;
            catches.push((ty, block(cur)?));
        }
        let finally = if cur.eat_kw("finally") {
            Some(block(cur)?)
        } else {
            None
        };
        if catches.is_empty() && finally.is_none() {
            return Err(cur.error("`catch` or `finally`"));
        }
        return Ok(Some(Stmt::Try {
            body,
            catches,
            finally,
        }));
    }
    if cur.eat_kw("break") || cur.eat_kw("return") {
        cur.expect_sym(";")?;
        return Ok(None);
    }
    let (name, _) = cur.ident().map_err(|_| cur.error("a statement"))?;
    cur.expect_sym("(")?;
    let arg = if cur.eat_sym(")") {
        None
    } else {
        let a = if cur.is_kw("new") {
            new_call(cur)?
        } else {
            Expr::Str(cur.string()?)
        };
        cur.expect_sym(")")?;
        Some(Box::new(a))
    };
    cur.expect_sym(";")?;
    Ok(Some(Stmt::Expr(Expr::Call(name, arg))))
}

struct Builder<'a> {
    g: InstanceGraph,
    classes: &'a HashMap<String, NodeId>,
    file: &'a str,
}

impl Builder<'_> {
    fn node(&mut self, ty: &str, attrs: &[(&str, Value)]) -> Result<NodeId, JavaError> {
        let n = self.g.create_node(ty)?;
        for (a, v) in attrs {
            self.g.set_attribute(n, a, v.clone())?;
        }
        Ok(n)
    }

    fn class_ref(&self, name: &str, pos: Pos) -> Result<NodeId, JavaError> {
        self.classes
            .get(name)
            .copied()
            .ok_or_else(|| JavaError::Unresolved {
                file: self.file.to_owned(),
                pos,
                name: name.to_owned(),
            })
    }

    fn expr(&mut self, e: &Expr) -> Result<NodeId, JavaError> {
        match e {
            Expr::New(name, pos) => {
                let target = self.class_ref(name, *pos)?;
                let n = self.node("NewConstructorCall", &[])?;
                self.g.add_edge(n, "instantiates", target)?;
                Ok(n)
            }
            Expr::Call(name, arg) => {
                let n = self.node("MethodCall", &[("methodName", name.as_str().into())])?;
                if let Some(a) = arg {
                    let a = self.expr(a)?;
                    self.g.add_edge(n, "argument", a)?;
                }
                Ok(n)
            }
            Expr::Str(s) => self.node("StringLiteral", &[("value", s.as_str().into())]),
        }
    }

    fn statements(&mut self, container: NodeId, body: &[Stmt]) -> Result<(), JavaError> {
        for s in body {
            let n = self.stmt(s)?;
            self.g.add_edge(container, "statements", n)?;
        }
        Ok(())
    }

    fn sub_block(
        &mut self,
        owner: NodeId,
        reference: &str,
        body: &[Stmt],
    ) -> Result<(), JavaError> {
        let b = self.node("Block", &[])?;
        self.g.add_edge(owner, reference, b)?;
        self.statements(b, body)
    }

    fn stmt(&mut self, s: &Stmt) -> Result<NodeId, JavaError> {
        match s {
            Stmt::Expr(e) => {
                let n = self.node("ExpressionStatement", &[])?;
                let e = self.expr(e)?;
                self.g.add_edge(n, "expression", e)?;
                Ok(n)
            }
            Stmt::If(then, otherwise) => {
                let n = self.node("Condition", &[])?;
                self.sub_block(n, "then", then)?;
                if let Some(o) = otherwise {
                    self.sub_block(n, "else", o)?;
                }
                Ok(n)
            }
            Stmt::Switch(cases) => {
                let n = self.node("Switch", &[])?;
                for (label, body) in cases {
                    let c = self.node("SwitchCase", &[("label", label.as_str().into())])?;
                    self.g.add_edge(n, "cases", c)?;
                    self.statements(c, body)?;
                }
                Ok(n)
            }
            Stmt::Try {
                body,
                catches,
                finally,
            } => {
                let n = self.node("TryBlock", &[])?;
                self.statements(n, body)?;
                for (ty, body) in catches {
                    let c = self.node("CatchBlock", &[("exceptionType", ty.as_str().into())])?;
                    self.g.add_edge(n, "catches", c)?;
                    self.statements(c, body)?;
                }
                if let Some(f) = finally {
                    self.sub_block(n, "finallyBlock", f)?;
                }
                Ok(n)
            }
        }
    }
}

/// Parses `sources` into a graph over `mm`, which must contain the types of
/// the `java` metamodel. Files are processed in name order; node ids follow
/// the source order, classes first.
pub fn parse_java(sources: &[SourceFile], mm: &Arc<Metamodel>) -> Result<InstanceGraph, JavaError> {
    let mut files: Vec<&SourceFile> = sources.iter().collect();
    files.sort_by(|a, b| a.name.cmp(&b.name));
    let mut parsed = Vec::new();
    for f in files {
        let classes = parse_file(&f.text).map_err(|error| JavaError::Syntax {
            file: f.name.clone(),
            error,
        })?;
        parsed.push((f, classes));
    }

    let mut g = InstanceGraph::new(mm.clone());
    let mut classes = HashMap::new();
    for (f, cs) in &parsed {
        for c in cs {
            let n = g.create_node("Class")?;
            g.set_attribute(n, "name", c.name.as_str().into())?;
            g.set_attribute(n, "abstract", c.is_abstract.into())?;
            if classes.insert(c.name.clone(), n).is_some() {
                return Err(JavaError::Duplicate {
                    file: f.name.clone(),
                    pos: c.pos,
                    name: c.name.clone(),
                });
            }
        }
    }
    for (f, cs) in &parsed {
        let mut b = Builder {
            g,
            classes: &classes,
            file: &f.name,
        };
        for c in cs {
            let n = classes[&c.name];
            if let Some((sup, pos)) = &c.extends {
                let s = b.class_ref(sup, *pos)?;
                b.g.add_edge(n, "extends", s)?;
            }
            for (name, body) in &c.methods {
                let m = b.node("ClassMethod", &[("name", name.as_str().into())])?;
                b.g.add_edge(n, "methods", m)?;
                b.statements(m, body)?;
            }
        }
        g = b.g;
    }
    g.clear_journal();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mm() -> Arc<Metamodel> {
        Arc::new(crate::java_metamodel())
    }

    #[test]
    fn statement_forms() {
        let src = "class State { void m() {
            if (a > (b)) { new State(); } else if (c) { send(\"x\"); }
            switch (e) { case A: new State(); break; case 3: default: go(); }
            try { } catch (java.io.IOException e) { } finally { return; }
        } }";
        let g = parse_java(&[SourceFile::new("a.java", src)], &mm()).unwrap();
        let count = |ty: &str| {
            let t = g.resolve_type(ty).unwrap();
            g.nodes_of_exact_type(t).len()
        };
        assert_eq!(count("Condition"), 2);
        assert_eq!(count("Block"), 4);
        assert_eq!(count("SwitchCase"), 3);
        assert_eq!(count("CatchBlock"), 1);
        assert_eq!(count("ExpressionStatement"), 4);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn syntax_errors_name_file_and_line() {
        let e = parse_java(
            &[SourceFile::new(
                "b.java",
                "class A {\n void m() { x = 1; } }",
            )],
            &mm(),
        )
        .unwrap_err();
        assert_eq!(
            e.to_string().split(':').take(2).collect::<Vec<_>>(),
            ["b.java", "2"]
        );
        let e = parse_java(
            &[SourceFile::new(
                "c.java",
                "class A { void m() { try { } } }",
            )],
            &mm(),
        )
        .unwrap_err();
        assert!(e.to_string().contains("`catch` or `finally`"), "{e}");
    }

    #[test]
    fn duplicate_class() {
        let e =
            parse_java(&[SourceFile::new("a.java", "class A {} class A {}")], &mm()).unwrap_err();
        assert!(matches!(e, JavaError::Duplicate { .. }));
    }
}
