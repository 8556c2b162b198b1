//! Tokenizer shared by the metamodel, model, transformation and expression
//! grammars.

use std::fmt;

use thiserror::Error;

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {message}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

impl SyntaxError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        SyntaxError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Str(String),
    Int(i64),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Str(s) => write!(f, "{}", crate::value::quote(s)),
            Tok::Int(i) => write!(f, "`{i}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

// Longest first.
const SYMBOLS: &[&str] = &[
    "<<", ">>", "->", "==", "!=", "<=", ">=", "&&", "||", "{", "}", "(", ")", "[", "]", ":", ";",
    ",", ".", "*", "=", "!", "+", "-", "<", ">", "?",
];

pub fn tokenize(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1u32;
    let mut line_start = 0usize;
    let pos_at = |i: usize, line: u32, line_start: usize| Pos {
        line,
        col: (src[line_start..i].chars().count() + 1) as u32,
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c == b'\n' {
            i += 1;
            line += 1;
            line_start = i;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'/' && bytes.get(i + 1) == Some(&b'/') {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let pos = pos_at(i, line, line_start);
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(src[start..i].to_owned()),
                pos,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v = src[start..i]
                .parse::<i64>()
                .map_err(|_| SyntaxError::new(pos, "integer literal out of range"))?;
            out.push(Token {
                tok: Tok::Int(v),
                pos,
            });
            continue;
        }
        if c == b'"' {
            i += 1;
            let mut s = String::new();
            loop {
                let Some(ch) = src[i..].chars().next() else {
                    return Err(SyntaxError::new(pos, "unterminated string literal"));
                };
                i += ch.len_utf8();
                match ch {
                    '"' => break,
                    '\n' => return Err(SyntaxError::new(pos, "unterminated string literal")),
                    '\\' => {
                        let esc = src[i..]
                            .chars()
                            .next()
                            .ok_or_else(|| SyntaxError::new(pos, "unterminated escape"))?;
                        i += esc.len_utf8();
                        s.push(match esc {
                            'n' => '\n',
                            't' => '\t',
                            'r' => '\r',
                            '"' => '"',
                            '\\' => '\\',
                            other => {
                                return Err(SyntaxError::new(
                                    pos_at(i - 1, line, line_start),
                                    format!("unknown escape `\\{other}`"),
                                ))
                            }
                        });
                    }
                    other => s.push(other),
                }
            }
            out.push(Token {
                tok: Tok::Str(s),
                pos,
            });
            continue;
        }
        match SYMBOLS.iter().find(|s| src[i..].starts_with(**s)) {
            Some(sym) => {
                i += sym.len();
                out.push(Token {
                    tok: Tok::Sym(sym),
                    pos,
                });
            }
            None => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(SyntaxError::new(
                    pos,
                    format!("unexpected character `{ch}`"),
                ));
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: pos_at(i, line, line_start),
    });
    Ok(out)
}

/// Cursor over a token vector with the helpers every parser here needs.
#[derive(Debug)]
pub struct Cursor {
    toks: Vec<Token>,
    at: usize,
}

impl Cursor {
    pub fn new(src: &str) -> Result<Self, SyntaxError> {
        Ok(Cursor {
            toks: tokenize(src)?,
            at: 0,
        })
    }

    pub fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    pub fn peek_at(&self, n: usize) -> &Tok {
        &self.toks[(self.at + n).min(self.toks.len() - 1)].tok
    }

    pub fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    pub fn at_eof(&self) -> bool {
        matches!(self.peek(), Tok::Eof)
    }

    pub fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    pub fn error(&self, expected: &str) -> SyntaxError {
        SyntaxError::new(
            self.pos(),
            format!("expected {expected}, found {}", self.peek()),
        )
    }

    pub fn is_sym(&self, sym: &str) -> bool {
        matches!(self.peek(), Tok::Sym(s) if *s == sym)
    }

    pub fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    pub fn eat_sym(&mut self, sym: &str) -> bool {
        if self.is_sym(sym) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn eat_kw(&mut self, kw: &str) -> bool {
        if self.is_kw(kw) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, sym: &str) -> Result<Pos, SyntaxError> {
        if self.is_sym(sym) {
            Ok(self.bump().pos)
        } else {
            Err(self.error(&format!("`{sym}`")))
        }
    }

    pub fn expect_kw(&mut self, kw: &str) -> Result<Pos, SyntaxError> {
        if self.is_kw(kw) {
            Ok(self.bump().pos)
        } else {
            Err(self.error(&format!("`{kw}`")))
        }
    }

    pub fn ident(&mut self) -> Result<(String, Pos), SyntaxError> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.bump().pos))
            }
            _ => Err(self.error("identifier")),
        }
    }

    /// Integer with optional leading `-`.
    pub fn int(&mut self) -> Result<i64, SyntaxError> {
        let neg = self.eat_sym("-");
        match self.peek() {
            Tok::Int(i) => {
                let i = *i;
                self.bump();
                Ok(if neg { -i } else { i })
            }
            _ => Err(self.error("integer")),
        }
    }

    pub fn string(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Tok::Str(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error("string literal")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_and_positions() {
        let toks = tokenize("edge a -r-> b <<create>>;\n  x<=1").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Ident("edge".into()),
                Tok::Ident("a".into()),
                Tok::Sym("-"),
                Tok::Ident("r".into()),
                Tok::Sym("->"),
                Tok::Ident("b".into()),
                Tok::Sym("<<"),
                Tok::Ident("create".into()),
                Tok::Sym(">>"),
                Tok::Sym(";"),
                Tok::Ident("x".into()),
                Tok::Sym("<="),
                Tok::Int(1),
                Tok::Eof,
            ]
        );
        assert_eq!(toks[10].pos, Pos { line: 2, col: 3 });
    }

    #[test]
    fn strings_and_errors() {
        let toks = tokenize(r#""a\"b" // c"#).unwrap();
        assert_eq!(toks[0].tok, Tok::Str("a\"b".into()));
        assert!(tokenize("\"open").is_err());
        let e = tokenize("a $").unwrap_err();
        assert_eq!(e.pos, Pos { line: 1, col: 3 });
    }
}
