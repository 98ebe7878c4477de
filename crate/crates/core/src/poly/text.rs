//! Canonical text form for polynomials.
//!
//! Grammar: integer or rational (`a/b`) coefficients, variables `x y z`,
//! operators `+ - * ^`, parentheses, whitespace-insensitive.  Exponents are
//! non-negative integer literals.  This is the format accepted by the CLI and
//! produced by `Display`; `parse(print(p)) == p` for every polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Mono, Polynomial, Rational, Var};
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek_byte(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_token(&mut self) -> Result<Tok> {
        while matches!(self.peek_byte(), Some(b) if b.is_ascii_whitespace()) {
            self.bump();
        }
        let Some(b) = self.peek_byte() else {
            return Ok(Tok::End);
        };
        match b {
            b'+' => { self.bump(); Ok(Tok::Plus) }
            b'-' => { self.bump(); Ok(Tok::Minus) }
            b'*' => { self.bump(); Ok(Tok::Star) }
            b'^' => { self.bump(); Ok(Tok::Caret) }
            b'/' => { self.bump(); Ok(Tok::Slash) }
            b'(' => { self.bump(); Ok(Tok::LParen) }
            b')' => { self.bump(); Ok(Tok::RParen) }
            b'x' => { self.bump(); Ok(Tok::Var(Var::X)) }
            b'y' => { self.bump(); Ok(Tok::Var(Var::Y)) }
            b'z' => { self.bump(); Ok(Tok::Var(Var::Z)) }
            b'0'..=b'9' => {
                let start = self.pos;
                while matches!(self.peek_byte(), Some(c) if c.is_ascii_digit()) {
                    self.bump();
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Tok::Int(text.parse().unwrap()))
            }
            other => Err(self.error(format!("unexpected character '{}'", other as char))),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    tok_line: usize,
    tok_col: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let (l, c) = (lexer.line, lexer.col);
        let tok = lexer.next_token()?;
        Ok(Parser { lexer, tok, tok_line: l, tok_col: c })
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.tok_line, col: self.tok_col, msg: msg.into() }
    }

    fn advance(&mut self) -> Result<()> {
        self.tok_line = self.lexer.line;
        self.tok_col = self.lexer.col;
        self.tok = self.lexer.next_token()?;
        Ok(())
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.advance()?;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.advance()?;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := ('-')* factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        while self.tok == Tok::Minus {
            negate = !negate;
            self.advance()?;
        }
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.advance()?;
            acc = &acc * &self.factor()?;
        }
        if negate {
            acc = -&acc;
        }
        Ok(acc)
    }

    // factor := atom ('^' INT)?
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.advance()?;
            let Tok::Int(ref n) = self.tok else {
                return Err(self.error("exponent must be a non-negative integer literal"));
            };
            let exp: u32 = n
                .try_into()
                .ok()
                .filter(|e| *e <= 10_000u32)
                .ok_or_else(|| self.error("exponent out of range"))?;
            self.advance()?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    // atom := INT ('/' INT)? | VAR | '(' expr ')'
    fn atom(&mut self) -> Result<Polynomial> {
        match self.tok.clone() {
            Tok::Int(n) => {
                self.advance()?;
                if self.tok == Tok::Slash {
                    self.advance()?;
                    let Tok::Int(ref d) = self.tok else {
                        return Err(self.error("expected integer denominator"));
                    };
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    let r = Rational::new(n, d.clone());
                    self.advance()?;
                    Ok(Polynomial::constant(r))
                } else {
                    Ok(Polynomial::constant(Rational::from(n)))
                }
            }
            Tok::Var(v) => {
                self.advance()?;
                Ok(Polynomial::var(v))
            }
            Tok::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.advance()?;
                Ok(inner)
            }
            Tok::End => Err(self.error("unexpected end of input")),
            _ => Err(self.error("expected a number, variable, or '('")),
        }
    }
}

/// Parse the canonical text form.
pub fn parse_polynomial(src: &str) -> Result<Polynomial> {
    let mut p = Parser::new(src)?;
    let poly = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.error("trailing input after polynomial"));
    }
    Ok(poly)
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &Rational, m: &Mono, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let abs = c.abs();
    let is_unit_mono = *m == Mono::ONE;
    let mut wrote = false;
    if !abs.is_one() || is_unit_mono {
        if abs.denom().is_one() {
            write!(f, "{}", abs.numer())?;
        } else {
            write!(f, "{}/{}", abs.numer(), abs.denom())?;
        }
        wrote = true;
    }
    for v in Var::ALL {
        let e = m.exponent(v);
        if e > 0 {
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Descending lex order: the leading term first.
        for (i, (m, c)) in self.terms().rev().enumerate() {
            write_monomial(f, c, m, i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let sphere = parse_polynomial("x^2 + y^2 + z^2 - 1").unwrap();
        assert_eq!(sphere.total_degree(), 2);
        assert_eq!(sphere.term_count(), 4);
        let ft = parse_polynomial("(x-y)*(x+y)").unwrap();
        assert_eq!(ft, parse_polynomial("x^2 - y^2").unwrap());
        assert!(parse_polynomial("x^(1/2)").is_err());
    }

    #[test]
    fn parse_rationals_and_whitespace() {
        let p = parse_polynomial(" 1/2*x \n- 3 ").unwrap();
        assert_eq!(format!("{}", p), "1/2*x - 3");
        assert!(parse_polynomial("1/0").is_err());
        assert!(parse_polynomial("x + ").is_err());
        assert!(parse_polynomial("x y").is_err());
        assert!(parse_polynomial("w").is_err());
    }

    #[test]
    fn parse_error_position() {
        match parse_polynomial("x +\n q") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 2);
            }
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn display_round_trip() {
        for src in [
            "x^2 + y^2 + z^2 - 1",
            "-x",
            "0",
            "3/4*x*y^2 - z + 1/2",
            "x^2 - y^2",
            "2*z - 2*x",
        ] {
            let p = parse_polynomial(src).unwrap();
            let printed = format!("{}", p);
            assert_eq!(parse_polynomial(&printed).unwrap(), p, "round trip of {}", src);
        }
    }
}
