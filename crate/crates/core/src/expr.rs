//! A tiny expression language for building graphs by name.
//!
//! ```text
//! expr := term ("+" term)*
//! term := [count "*"] atom
//! atom := "K" int | "K" int "," int | "E" int | "P" int | "C" int
//!       | "paw" | "Y" | "diamond" | "cricket" | "dart" | "hourglass"
//! ```
//!
//! `+` is disjoint union, evaluated left to right; whitespace is ignored.
//! `K2,3` is the complete bipartite graph, `3*K2` three disjoint edges.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named;

struct Parser<'a> {
    src: &'a str,
    /// Byte offset of the next non-whitespace character.
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut p = Parser { src, pos: 0 };
        p.skip_ws();
        p
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        self.skip_ws();
        Some(c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        let mut digits = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| Error::parse(start, "integer too large"))?;
            digits += 1;
            self.bump();
        }
        if digits == 0 {
            return Err(Error::parse(start, "expected an integer"));
        }
        if value == 0 {
            return Err(Error::parse(start, "integer parameters must be at least 1"));
        }
        Ok(value)
    }

    fn word(&mut self) -> &'a str {
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(rest.len());
        self.pos += len;
        self.skip_ws();
        &rest[..len]
    }

    fn atom(&mut self) -> Result<Graph> {
        let start = self.pos;
        let at = |e: Error| match e {
            Error::Parse { .. } => e,
            other => Error::parse(start, other.to_string()),
        };
        match self.peek() {
            Some('K') => {
                self.bump();
                let m = self.int()?;
                if self.eat(',') {
                    let n = self.int()?;
                    Graph::complete_bipartite(m, n).map_err(at)
                } else {
                    Graph::complete(m).map_err(at)
                }
            }
            Some('E') => {
                self.bump();
                Graph::empty(self.int()?).map_err(at)
            }
            Some('P') => {
                self.bump();
                Graph::path(self.int()?).map_err(at)
            }
            Some('C') => {
                self.bump();
                Graph::cycle(self.int()?).map_err(at)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.word();
                named::by_name(name)
                    .ok_or_else(|| Error::parse(start, format!("unknown graph name {name:?}")))
            }
            Some(c) => Err(Error::parse(start, format!("unexpected character {c:?}"))),
            None => Err(Error::parse(start, "expected a graph atom")),
        }
    }

    fn term(&mut self) -> Result<Graph> {
        let start = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let count = self.int()?;
            if !self.eat('*') {
                return Err(Error::parse(
                    self.pos,
                    "expected '*' after repetition count",
                ));
            }
            let g = self.atom()?;
            g.copies(count)
                .map_err(|e| Error::parse(start, e.to_string()))
        } else {
            self.atom()
        }
    }

    fn expr(&mut self) -> Result<Graph> {
        let mut g = self.term()?;
        loop {
            let start = self.pos;
            if self.eat('+') {
                let rhs = self.term()?;
                g = g
                    .disjoint_union(&rhs)
                    .map_err(|e| Error::parse(start, e.to_string()))?;
            } else if self.peek().is_none() {
                return Ok(g);
            } else {
                return Err(Error::parse(self.pos, "expected '+' or end of input"));
            }
        }
    }
}

/// Parses and evaluates a graph expression such as `"K2+E1"` or `"3*K2"`.
pub fn parse_expr(text: &str) -> Result<Graph> {
    Parser::new(text).expr()
}
