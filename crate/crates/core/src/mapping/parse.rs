//! Parser for twist words such as `H1^3 * D3 * (D1*D2^-1)^2`.
//!
//! ```text
//! word := term ('*' term)*
//! term := atom ('^' int)? | '(' word ')' ('^' int)?
//! atom := H1 | H2 | H3 | D1 | D2 | D3
//! ```
//!
//! Whitespace is ignored. A blank input is the identity word.

use super::{Generator, Term, TwistWord};
use crate::error::{Result, TangleError};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(TangleError::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn word(&mut self) -> Result<TwistWord> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(TwistWord { terms })
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                self.expect(b')')?;
                let p = self.power()?;
                Ok(Term::Group(inner, p))
            }
            Some(b'H') | Some(b'D') => {
                let name =
                    std::str::from_utf8(&self.src[self.pos..(self.pos + 2).min(self.src.len())]).unwrap_or_default();
                let Some(g) = Generator::from_name(name) else {
                    return self.err(format!("unknown generator {name:?}"));
                };
                self.pos += 2;
                let p = self.power()?;
                Ok(Term::Atom(g, p))
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of word"),
        }
    }

    fn power(&mut self) -> Result<i32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') || self.src.get(self.pos) == Some(&b'+') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
        match text.parse::<i32>() {
            Ok(p) => Ok(p),
            Err(_) => {
                self.pos = start;
                self.err("expected an integer exponent")
            }
        }
    }
}

pub fn parse_word(s: &str) -> Result<TwistWord> {
    if s.trim().is_empty() {
        return Ok(TwistWord::identity());
    }
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let w = p.word()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(w)
}
