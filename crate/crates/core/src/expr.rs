//! Expression grammar for classes and pairings on the variety of lines.
//!
//! ```text
//! input     := pair-call | class-expr
//! pair-call := "pair" "(" class-expr "," class-expr ")"
//! class-expr:= ["-"] term (("+"|"-") term)*
//! term      := rational "*" symbol | rational | symbol
//! symbol    := "g2" | "c2" | "c"
//! ```
//!
//! `c2` resolves to the computed second Chern class of the model, never to a
//! literal. Parse errors carry byte positions; nesting `pair` inside a class
//! expression is a degree overflow (the pairing already lands in the top
//! degree).

use crate::error::Error;
use crate::fano::{FanoClass2, FanoModel};
use crate::rational::{parse_rational, Rational};
use num_traits::One;

/// Result of evaluating an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(Rational),
    Class(FanoClass2),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, Error> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        match b {
            b' ' | b'\t' | b'\n' => pos += 1,
            b'*' => {
                out.push((pos, Token::Star));
                pos += 1;
            }
            b'+' => {
                out.push((pos, Token::Plus));
                pos += 1;
            }
            b'-' => {
                out.push((pos, Token::Minus));
                pos += 1;
            }
            b'(' => {
                out.push((pos, Token::LParen));
                pos += 1;
            }
            b')' => {
                out.push((pos, Token::RParen));
                pos += 1;
            }
            b',' => {
                out.push((pos, Token::Comma));
                pos += 1;
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
                    pos += 1;
                }
                let r = parse_rational(&input[start..pos])
                    .map_err(|_| Error::parse(start, "invalid rational literal"))?;
                out.push((start, Token::Number(r)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                out.push((start, Token::Ident(input[start..pos].to_string())));
            }
            other => {
                return Err(Error::parse(
                    pos,
                    format!("unexpected character {:?}", other as char),
                ))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
    model: &'a FanoModel,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.cursor)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn resolve(&self, pos: usize, name: &str) -> Result<FanoClass2, Error> {
        match name {
            "g2" => Ok(FanoClass2::from_ints(1, 0)),
            "c" => Ok(FanoClass2::from_ints(0, 1)),
            "c2" => Ok(self.model.c2().clone()),
            "pair" => Err(Error::DegreeOverflow {
                pos,
                msg: "nested pairing exceeds the top intersection degree".into(),
            }),
            other => Err(Error::parse(pos, format!("unknown symbol {other:?}"))),
        }
    }

    fn class_expr(&mut self) -> Result<FanoClass2, Error> {
        let mut acc = FanoClass2::zero();
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            match self.peek() {
                Some((_, Token::Plus)) if !first => {
                    self.next();
                }
                Some((_, Token::Minus)) => {
                    sign = -sign;
                    self.next();
                }
                Some(_) if first => {}
                _ if first => return Err(Error::parse(self.here(), "empty class expression")),
                _ => break,
            }
            let term = self.term()?;
            acc = acc.add(&term.scale(&sign));
            first = false;
            match self.peek() {
                Some((_, Token::Plus)) | Some((_, Token::Minus)) => continue,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FanoClass2, Error> {
        match self.next() {
            Some((pos, Token::Number(n))) => {
                if let Some((_, Token::Star)) = self.peek() {
                    self.next();
                    match self.next() {
                        Some((ip, Token::Ident(name))) => {
                            Ok(self.resolve(ip, &name)?.scale(&n))
                        }
                        Some((p, _)) => Err(Error::parse(p, "expected symbol after '*'")),
                        None => Err(Error::parse(self.end, "expected symbol after '*'")),
                    }
                } else {
                    // bare scalar: meaningless as a surface class
                    Err(Error::parse(
                        pos,
                        "a bare rational is not a class; write it against g2, c or c2",
                    ))
                }
            }
            Some((pos, Token::Ident(name))) => self.resolve(pos, &name),
            Some((pos, _)) => Err(Error::parse(pos, "expected a term")),
            None => Err(Error::parse(self.end, "expected a term")),
        }
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), Error> {
        match self.next() {
            Some((_, t)) if t == token => Ok(()),
            Some((p, _)) => Err(Error::parse(p, format!("expected {what}"))),
            None => Err(Error::parse(self.end, format!("expected {what}"))),
        }
    }
}

/// Parses a plain class expression like `3*g2 - 5*c`.
pub fn parse_class_expr(input: &str, model: &FanoModel) -> Result<FanoClass2, Error> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end: input.len(),
        model,
    };
    let class = parser.class_expr()?;
    if let Some((pos, _)) = parser.peek() {
        return Err(Error::parse(*pos, "trailing input after class expression"));
    }
    Ok(class)
}

/// Evaluates the full grammar: either a class expression (returns the class)
/// or `pair(e1, e2)` (returns the exact intersection number).
pub fn evaluate(input: &str, model: &FanoModel) -> Result<Value, Error> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end: input.len(),
        model,
    };
    let is_pair_call = matches!(
        (parser.tokens.first(), parser.tokens.get(1)),
        (Some((_, Token::Ident(name))), Some((_, Token::LParen))) if name == "pair"
    );
    let value = if is_pair_call {
        parser.next();
        parser.expect(Token::LParen, "'('")?;
        let left = parser.class_expr()?;
        parser.expect(Token::Comma, "','")?;
        let right = parser.class_expr()?;
        parser.expect(Token::RParen, "')'")?;
        Value::Scalar(model.pair(&left, &right))
    } else {
        Value::Class(parser.class_expr()?)
    };
    if let Some((pos, _)) = parser.peek() {
        return Err(Error::parse(*pos, "trailing input after expression"));
    }
    Ok(value)
}
