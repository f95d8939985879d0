//! Text syntax for polynomials: integer (or `a/b`) literals, declared
//! variable names, `+ - * ^` and parentheses. Juxtaposition is not allowed.

use std::fmt::Write;

use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use crate::domain::Domain;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let den_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if den_start == i {
                        return Err(Error::Parse { pos: i, msg: "expected denominator".into() });
                    }
                }
                out.push((start, Tok::Num(text[start..i].to_string())));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse { pos: start, msg: format!("unexpected character {other:?}") })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, D: Domain> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a [String],
    ring: &'a D,
}

impl<'a, D: Domain> Parser<'a, D> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<MultiPoly<D>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<D>> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly<D>> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly<D>> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            let pos = self.pos();
            match self.toks.get(self.at).cloned() {
                Some((_, Tok::Num(n))) => {
                    self.at += 1;
                    let e: u32 = n.parse().map_err(|_| Error::Parse {
                        pos,
                        msg: format!("invalid exponent {n:?}"),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse { pos, msg: "expected exponent".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly<D>> {
        let pos = self.pos();
        let nvars = self.vars.len();
        match self.toks.get(self.at).cloned() {
            Some((_, Tok::Num(n))) => {
                self.at += 1;
                let c = self
                    .ring
                    .parse_elem(&n)
                    .map_err(|e| Error::Parse { pos, msg: e.to_string() })?;
                Ok(MultiPoly::constant(self.ring, nvars, c))
            }
            Some((_, Tok::Ident(name))) => {
                self.at += 1;
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MultiPoly::var(self.ring, nvars, i)),
                    None => Err(Error::UndeclaredVariable { name, pos }),
                }
            }
            Some((_, Tok::LParen)) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::Parse { pos: self.pos(), msg: "expected ')'".into() }),
                }
            }
            Some((_, t)) => Err(Error::Parse { pos, msg: format!("unexpected token {t:?}") }),
            None => Err(Error::Parse { pos, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parses `text` as a polynomial in the declared variables over `ring`.
pub fn parse_poly<D: Domain>(text: &str, vars: &[String], ring: &D) -> Result<MultiPoly<D>> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, at: 0, end: text.len(), vars, ring };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return Err(Error::Parse { pos: p.pos(), msg: "trailing input".into() });
    }
    Ok(out)
}

fn write_monomial(out: &mut String, m: &Monomial, names: &[String]) {
    let mut first = true;
    for (e, name) in m.exponents().iter().zip(names) {
        if *e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if *e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

impl<D: Domain> MultiPoly<D> {
    /// Canonical printing, terms in descending graded-lex order.
    pub fn to_text(&self, names: &[String]) -> String {
        let ring = self.ring();
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = ring.is_negative(c);
            let abs = if neg { ring.neg(c) } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&ring.format_elem(&abs));
            } else {
                if !ring.is_one(&abs) {
                    out.push_str(&ring.format_elem(&abs));
                    out.push('*');
                }
                write_monomial(&mut out, m, names);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{Integers, PrimeField, Rationals};
    use crate::poly::Degree;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_examples() {
        let vars = names(&["X", "Y"]);
        let p = parse_poly("X^2 + 2*X*Y - 3", &vars, &Integers).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_text(&vars), "X^2 + 2*X*Y - 3");
        let z = parse_poly("0", &vars, &Integers).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), Degree::NegInfinity);
        match parse_poly("X + Z", &vars, &Integers) {
            Err(Error::UndeclaredVariable { name, pos }) => {
                assert_eq!(name, "Z");
                assert_eq!(pos, 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let vars = names(&["X"]);
        assert!(matches!(parse_poly("X +", &vars, &Integers), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly("2X", &vars, &Integers), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_poly("X $ 1", &vars, &Integers), Err(Error::Parse { pos: 2, .. })));
        assert!(parse_poly("(X + 1", &vars, &Integers).is_err());
        assert!(parse_poly("1/2*X", &vars, &Integers).is_err());
    }

    #[test]
    fn printing_examples() {
        let vars = names(&["X", "Y"]);
        let q = parse_poly("1/2*X - Y^2 + 3/4", &vars, &Rationals).unwrap();
        assert_eq!(q.to_text(&vars), "-Y^2 + 1/2*X + 3/4");
        let f5 = PrimeField::new(5).unwrap();
        let r = parse_poly("-X + 7", &vars, &f5).unwrap();
        assert_eq!(r.to_text(&vars), "4*X + 2");
        let s = parse_poly("(X + Y)^2", &vars, &Integers).unwrap();
        assert_eq!(s.to_text(&vars), "X^2 + 2*X*Y + Y^2");
    }
}
