//! Human-readable polynomial syntax.
//!
//! ```text
//! expr   := ['+'|'-'] prod (('+'|'-') prod)*
//! prod   := power ('*' power | '/' integer)*
//! power  := atom ['^' integer]
//! atom   := integer | name | '(' expr ')'
//! name   := [A-Za-z_][A-Za-z0-9_]* ['[' ... ']']
//! ```
//!
//! Coordinates are written `c[i,j]`. Printing emits monomials in decreasing
//! order of their x-part, coefficients (c-block and parameter) first inside
//! each monomial.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Coeff, Polynomial, Term, Universe, VarKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        match ch {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                out.push(Tok::Plus);
                k += 1
            }
            '-' => {
                out.push(Tok::Minus);
                k += 1
            }
            '*' => {
                out.push(Tok::Star);
                k += 1
            }
            '/' => {
                out.push(Tok::Slash);
                k += 1
            }
            '^' => {
                out.push(Tok::Caret);
                k += 1
            }
            '(' => {
                out.push(Tok::LParen);
                k += 1
            }
            ')' => {
                out.push(Tok::RParen);
                k += 1
            }
            c if c.is_ascii_digit() => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    name.push(chars[k]);
                    k += 1;
                }
                if k < chars.len() && chars[k] == '[' {
                    while k < chars.len() && chars[k] != ']' {
                        if !chars[k].is_whitespace() {
                            name.push(chars[k]);
                        }
                        k += 1;
                    }
                    if k == chars.len() {
                        return Err(Error::Parse(format!("unclosed `[` in `{name}`")));
                    }
                    name.push(']');
                    k += 1;
                }
                out.push(Tok::Name(name));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    universe: &'a Arc<Universe>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.universe);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let p = self.prod()?;
            acc = if sign < 0 { &acc - &p } else { &acc + &p };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn prod(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    acc = &acc * &rhs;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(n)) if !n.is_zero() => {
                            acc = acc.scale(&Coeff::new(BigInt::one(), n));
                        }
                        _ => return Err(Error::Parse("`/` must be followed by a nonzero integer".into())),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("`^` must be followed by an integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Polynomial::constant(self.universe, Coeff::from_integer(n))),
            Some(Tok::Name(name)) => Polynomial::var_named(self.universe, &name),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected `)`".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parse a polynomial over `universe`.
pub fn parse_polynomial(s: &str, universe: &Arc<Universe>) -> Result<Polynomial> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        universe,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after position {} in `{s}`",
            p.pos
        )));
    }
    Ok(out)
}

/// Parse a comma-separated list of polynomials.
pub fn parse_polynomial_list(s: &str, universe: &Arc<Universe>) -> Result<Vec<Polynomial>> {
    split_top_level(s)
        .into_iter()
        .map(|part| parse_polynomial(part, universe))
        .collect()
}

/// Parse a comma-separated list of monomials (coefficient 1), e.g. `1, x, y, x*y`.
pub fn parse_terms(s: &str, universe: &Arc<Universe>) -> Result<Vec<Term>> {
    split_top_level(s)
        .into_iter()
        .map(|part| {
            let p = parse_polynomial(part, universe)?;
            let mut it = p.terms();
            match (it.next(), it.next()) {
                (Some((t, c)), None) if c.is_one() => Ok(t.clone()),
                _ => Err(Error::Parse(format!("`{part}` is not a monomial"))),
            }
        })
        .collect()
}

// Split on commas that are not inside brackets or parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(s[start..k].trim());
                start = k + 1;
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

fn display_cmp(u: &Universe, a: &Term, b: &Term) -> Ordering {
    let (ea, eb) = (a.exponents(), b.exponents());
    let xs: Vec<usize> = (0..u.len()).filter(|&k| u.var(k).kind == VarKind::X).collect();
    let rest: Vec<usize> = (0..u.len()).filter(|&k| u.var(k).kind != VarKind::X).collect();
    let deglex = |vars: &[usize]| {
        let da: u64 = vars.iter().map(|&v| ea[v] as u64).sum();
        let db: u64 = vars.iter().map(|&v| eb[v] as u64).sum();
        da.cmp(&db).then_with(|| {
            vars.iter()
                .map(|&v| ea[v].cmp(&eb[v]))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    };
    deglex(&xs).then_with(|| deglex(&rest))
}

/// Format a single monomial without sign.
pub fn format_term(u: &Universe, t: &Term) -> String {
    let mut order: Vec<usize> = (0..u.len()).filter(|&k| u.var(k).kind != VarKind::X).collect();
    order.extend((0..u.len()).filter(|&k| u.var(k).kind == VarKind::X));
    let factors: Vec<String> = order
        .into_iter()
        .filter(|&k| t.exp(k) > 0)
        .map(|k| match t.exp(k) {
            1 => u.name(k).to_string(),
            e => format!("{}^{}", u.name(k), e),
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

pub fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let u = self.universe().clone();
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| display_cmp(&u, b.0, a.0));
        for (k, (t, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.is_one() {
                write!(f, "{}", format_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", format_term(&u, t))?;
            } else {
                write!(f, "{}*{}", format_coeff(&abs), format_term(&u, t))?;
            }
        }
        Ok(())
    }
}

/// Parse a rational written `p` or `p/q`.
pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Coeff::new(n, d))
        }
        None => Ok(Coeff::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
