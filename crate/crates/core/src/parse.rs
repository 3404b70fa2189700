//! Recursive-descent parser shared by every element type.
//!
//! Grammar:
//!
//! ```text
//! expr    := sign? term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := '-' factor | primary ('^' '-'? integer)?
//! primary := integer | identifier | '(' expr ')'
//! ```
//!
//! `q` is always the scalar indeterminate. Other identifiers are resolved by
//! [`ExprAlgebra::atom`]. `W-3` is lexed as one identifier. Division is only
//! allowed by scalars, and negative exponents only on scalars.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::RationalFunction;

/// An algebra over Q(q) that can be built from parsed expressions.
pub trait ExprAlgebra: Sized + Clone {
    fn from_scalar(c: RationalFunction) -> Self;
    /// Resolve a generator name, or `None` if it is not recognised.
    fn atom(name: &str) -> Option<Self>;
    /// The value as a scalar, if it is one.
    fn as_scalar(&self) -> Option<RationalFunction>;
    fn add(self, o: Self) -> Self;
    fn sub(self, o: Self) -> Self;
    fn mul(self, o: Self) -> Self;
    fn scale(self, c: &RationalFunction) -> Self;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Int(text.parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            i += 1;
            // W-<k> is a single token.
            if c == 'W' && i + 1 < chars.len() && chars[i].1 == '-' && chars[i + 1].1.is_ascii_digit() {
                i += 1;
            }
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Ident(text)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::parse(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.at), Some((_, Tok::Sym(s))) if *s == c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek_sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr<A: ExprAlgebra>(&mut self) -> Result<A> {
        let neg = if self.eat_sym('-') {
            true
        } else {
            self.eat_sym('+');
            false
        };
        let mut acc: A = self.term()?;
        if neg {
            acc = acc.scale(&RationalFunction::from_int(-1));
        }
        loop {
            if self.eat_sym('+') {
                acc = acc.add(self.term()?);
            } else if self.eat_sym('-') {
                acc = acc.sub(self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<A: ExprAlgebra>(&mut self) -> Result<A> {
        let mut acc: A = self.factor()?;
        loop {
            if self.eat_sym('*') {
                acc = acc.mul(self.factor()?);
            } else if self.peek_sym('/') {
                let pos = self.pos();
                self.at += 1;
                let d: A = self.factor()?;
                let d = d.as_scalar().ok_or_else(|| Error::parse(pos, "division by a non-scalar"))?;
                let inv = d.inv().map_err(|_| Error::parse(pos, "division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor<A: ExprAlgebra>(&mut self) -> Result<A> {
        if self.eat_sym('-') {
            let f: A = self.factor()?;
            return Ok(f.scale(&RationalFunction::from_int(-1)));
        }
        let base: A = self.primary()?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let neg = self.eat_sym('-');
        let e: i64 = match self.toks.get(self.at) {
            Some((_, Tok::Int(n))) => {
                let n = i64::try_from(n).map_err(|_| Error::parse(pos, "exponent too large"))?;
                self.at += 1;
                if neg {
                    -n
                } else {
                    n
                }
            }
            _ => return Err(Error::parse(pos, "expected an integer exponent")),
        };
        if let Some(c) = base.as_scalar() {
            let v = c.pow(e).map_err(|_| Error::parse(pos, "zero to a negative power"))?;
            return Ok(A::from_scalar(v));
        }
        if e < 0 {
            return Err(Error::parse(pos, "negative exponent on a non-scalar"));
        }
        let mut acc = A::from_scalar(RationalFunction::one());
        for _ in 0..e {
            acc = acc.mul(base.clone());
        }
        Ok(acc)
    }

    fn primary<A: ExprAlgebra>(&mut self) -> Result<A> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Int(n))) => {
                self.at += 1;
                Ok(A::from_scalar(RationalFunction::from_bigint(n)))
            }
            Some((_, Tok::Ident(name))) => {
                self.at += 1;
                if name == "q" {
                    return Ok(A::from_scalar(RationalFunction::q()));
                }
                A::atom(&name).ok_or_else(|| Error::parse(pos, format!("unknown symbol `{name}`")))
            }
            Some((_, Tok::Sym('('))) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat_sym(')') {
                    return Err(Error::parse(self.pos(), "expected `)`"));
                }
                Ok(e)
            }
            Some((_, t)) => Err(Error::parse(pos, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(pos, "unexpected end of input")),
        }
    }
}

/// Parse an expression into any algebra implementing [`ExprAlgebra`].
pub fn parse_expr<A: ExprAlgebra>(s: &str) -> Result<A> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser { toks, at: 0, end: s.len() };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(Error::parse(p.pos(), "trailing input"));
    }
    Ok(v)
}
