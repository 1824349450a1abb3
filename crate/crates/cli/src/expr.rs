//! Series expressions: rational literals, `x`, `+ - * / ^`, parentheses and
//! `sqrt(...)`, expanded exactly to a requested order.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' exponent)?
//! exponent := integer | '(' ('+' | '-')? integer ')'
//! atom   := integer | 'x' | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication; `p/q` literals are divisions of
//! integers, which gives the same exact value.

use riordan_core::fps::{Rational, Series};
use riordan_core::{Error, Result};

/// Largest accepted `|exponent|`; bigger powers are almost surely typos and
/// would only burn time on huge exact coefficients.
pub const MAX_EXPONENT: i64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(String),
    X,
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn describe(token: Option<&Token>) -> String {
    match token {
        None => "end of input".into(),
        Some(Token::Int(s)) => format!("number {s}"),
        Some(Token::X) => "x".into(),
        Some(Token::Sqrt) => "sqrt".into(),
        Some(t) => {
            let c = match t {
                Token::Plus => '+',
                Token::Minus => '-',
                Token::Star => '*',
                Token::Slash => '/',
                Token::Caret => '^',
                Token::Open => '(',
                _ => ')',
            };
            format!("'{c}'")
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let token = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(text[start..i].to_string())));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                match &text[start..i] {
                    "x" => out.push((start, Token::X)),
                    "sqrt" => out.push((start, Token::Sqrt)),
                    word => return Err(Error::Parse(format!("unknown name {word:?} at column {}", start + 1))),
                }
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::Open,
            b')' => Token::Close,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Parse(format!("unexpected character {ch:?} at column {}", i + 1)));
            }
        };
        out.push((start, token));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    order: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(c, _)| *c) + 1
    }

    fn unexpected(&self, wanted: &str) -> Error {
        Error::Parse(format!("expected {wanted}, found {} at column {}", describe(self.peek()), self.column()))
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Token, wanted: &str) -> Result<()> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<Series> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Series> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Token::Star) {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(&Token::Slash) {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Series> {
        if self.eat(&Token::Minus) {
            Ok(-&self.unary()?)
        } else if self.eat(&Token::Plus) {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Series> {
        let base = self.atom()?;
        if !self.eat(&Token::Caret) {
            return Ok(base);
        }
        let e = self.exponent()?;
        if self.peek() == Some(&Token::Caret) {
            return Err(Error::Parse(format!("chained '^' at column {}; add parentheses", self.column())));
        }
        base.powi(e)
    }

    fn integer(&mut self) -> Result<i64> {
        match self.peek() {
            Some(Token::Int(s)) => {
                let s = s.clone();
                self.pos += 1;
                s.parse().map_err(|_| Error::Parse(format!("exponent {s} is too large")))
            }
            _ => Err(self.unexpected("an integer exponent")),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let column = self.column();
        let e = self.signed_exponent()?;
        if e.abs() > MAX_EXPONENT {
            return Err(Error::Parse(format!("exponent {e} at column {column} exceeds {MAX_EXPONENT}")));
        }
        Ok(e)
    }

    fn signed_exponent(&mut self) -> Result<i64> {
        if !self.eat(&Token::Open) {
            return self.integer();
        }
        let negative = if self.eat(&Token::Minus) {
            true
        } else {
            self.eat(&Token::Plus);
            false
        };
        let e = self.integer()?;
        self.expect(&Token::Close, "')'")?;
        Ok(if negative { -e } else { e })
    }

    fn atom(&mut self) -> Result<Series> {
        match self.peek().cloned() {
            Some(Token::Int(s)) => {
                self.pos += 1;
                let n = s.parse().map_err(|_| Error::Parse(format!("bad integer {s}")))?;
                Ok(Series::constant(Rational::from_integer(n), self.order))
            }
            Some(Token::X) => {
                self.pos += 1;
                Ok(Series::x(self.order))
            }
            Some(Token::Sqrt) => {
                self.pos += 1;
                self.expect(&Token::Open, "'(' after sqrt")?;
                let inner = self.expr()?;
                self.expect(&Token::Close, "')'")?;
                inner.sqrt()
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(&Token::Close, "')'")?;
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, x, sqrt or '('")),
        }
    }
}

/// Parses `text` and expands it exactly through `x^order`.
pub fn parse_series_expr(text: &str, order: usize) -> Result<Series> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0, order, len: text.len() };
    if parser.peek().is_none() {
        return Err(Error::Parse("empty expression".into()));
    }
    let value = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(value)
}
