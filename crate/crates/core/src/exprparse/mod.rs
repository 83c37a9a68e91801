//! The element-expression language and the `.abhk` spec format.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] atom ['^' ['-'] integer]
//! atom   := integer ['/' integer] | identifier | '(' expr ')'
//! ```
//!
//! `X+` and `X-` are identifiers; `q` and `zeta` denote the field parameter
//! and the field's root of unity.

mod eval;
mod spec;

use std::fmt;

use num_bigint::BigInt;

pub use eval::{eval_ambi, eval_base, eval_in, eval_scalar, EvalRing};
pub use spec::{
    parse_spec, BaseSpec, CheckKind, ExpectSpec, ExtensionSpec, FieldSpec, GeneralFormSpec,
    Located, OptionsSpec, PiExpect, SpecDocument,
};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Int(BigInt),
    Frac(BigInt, BigInt),
    Ident(String),
    Group(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub neg: bool,
    pub atom: Atom,
    pub exp: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub factors: Vec<Factor>,
}

/// A sum of terms; the flag marks terms joined with `-`. The first flag is
/// always `false` (a leading minus belongs to the first factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(bool, Term)>,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Int(n) => write!(f, "{n}"),
            Atom::Frac(a, b) => write!(f, "{a}/{b}"),
            Atom::Ident(s) => f.write_str(s),
            Atom::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neg {
            f.write_str("-")?;
        }
        write!(f, "{}", self.atom)?;
        if let Some(e) = self.exp {
            write!(f, "^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{fac}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (minus, t)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if *minus { " - " } else { " + " })?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    col0: usize,
    end: usize,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<(Vec<(Tok, usize)>, usize)> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |i: usize, m: String| Error::Syntax {
        line,
        column: col0 + i + 1,
        message: m,
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), start));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let mut s: String = chars[start..i].iter().collect();
                if s == "X" && i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push((Tok::Ident(s), start));
                continue;
            }
            other => return Err(err(i, format!("unexpected character `{other}`"))),
        };
        out.push((tok, start));
        i += 1;
    }
    Ok((out, chars.len()))
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn err(&self, message: String) -> Error {
        let at = self.toks.get(self.pos).map_or(self.end, |(_, c)| *c);
        Error::Syntax {
            line: self.line,
            column: self.col0 + at + 1,
            message,
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(t) => format!("found {t}"),
            None => "found end of input".into(),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![(false, self.term()?)];
        loop {
            let minus = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            terms.push((minus, self.term()?));
        }
        Ok(Expr { terms })
    }

    fn term(&mut self) -> Result<Term> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(Term { factors })
    }

    fn factor(&mut self) -> Result<Factor> {
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        let atom = self.atom()?;
        let exp = if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let minus = self.peek() == Some(&Tok::Minus);
            if minus {
                self.pos += 1;
            }
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| self.err("exponent too large".into()))?;
                    self.pos += 1;
                    Some(if minus { -e } else { e })
                }
                _ => return Err(self.err(format!("expected integer exponent, {}", self.found()))),
            }
        } else {
            None
        };
        Ok(Factor { neg, atom, exp })
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            Ok(Atom::Frac(n, d))
                        }
                        _ => Err(self.err(format!("expected denominator, {}", self.found()))),
                    }
                } else {
                    Ok(Atom::Int(n))
                }
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Atom::Ident(s))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err(format!("expected `)`, {}", self.found())));
                }
                self.pos += 1;
                Ok(Atom::Group(e))
            }
            _ => Err(self.err(format!(
                "expected a literal, identifier or `(`, {}",
                self.found()
            ))),
        }
    }
}

/// Parses an expression; errors report 1-based line and column.
pub fn parse_expr(src: &str) -> Result<Expr> {
    parse_expr_at(src, 1, 0)
}

/// Parses an expression found at `line`, starting after `col0` characters.
pub fn parse_expr_at(src: &str, line: usize, col0: usize) -> Result<Expr> {
    let (toks, end) = lex(src, line, col0)?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        col0,
        end,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err(format!("unexpected {}", p.found())));
    }
    Ok(e)
}
