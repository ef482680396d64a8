//! Input language for polynomials and their canonical printed form.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' NAT)?
//! atom   := NUMBER | VAR | '(' expr ')'
//! NUMBER := NAT ('/' NAT)?
//! ```
//!
//! `^` binds tighter than unary minus and does not chain: `x^2^3` is an
//! error, write `(x^2)^3`. Implicit multiplication (`2x`) is rejected.
//! Exponents are limited to [`MAX_EXPONENT`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bivar::BiPoly;
use crate::poly::{Rational, UniPoly};

pub const MAX_EXPONENT: u32 = 4096;
/// Largest degree in either variable an expression may produce.
pub const MAX_DEGREE: usize = 2 * MAX_EXPONENT as usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("unknown variable '{name}' at offset {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("exponent at offset {offset} must be a nonnegative integer at most {MAX_EXPONENT}")]
    BadExponent { offset: usize },
    #[error("zero denominator at offset {offset}")]
    ZeroDenominator { offset: usize },
    #[error("expression at offset {offset} exceeds degree {MAX_DEGREE}")]
    DegreeTooLarge { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownVariable { offset, .. }
            | ParseError::BadExponent { offset }
            | ParseError::ZeroDenominator { offset }
            | ParseError::DegreeTooLarge { offset } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Nat(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Eof,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token and its byte offset.
    fn next(&mut self) -> Result<(Token, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let Some(&b) = self.src.get(start) else {
            return Ok((Token::Eof, start));
        };
        let single = match b {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'^' => Some(Token::Caret),
            b'/' => Some(Token::Slash),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            self.pos += 1;
            return Ok((tok, start));
        }
        if b.is_ascii_digit() {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
            return Ok((Token::Nat(digits.parse().expect("digits")), start));
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
            return Ok((Token::Var(name.to_string()), start));
        }
        Err(ParseError::Syntax {
            offset: start,
            expected: vec!["number", "variable", "'('", "'-'"],
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Token,
    offset: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a [&'a str]) -> Result<Self, ParseError> {
        let mut lexer = Lexer {
            src: text.as_bytes(),
            pos: 0,
        };
        let (tok, offset) = lexer.next()?;
        Ok(Self {
            lexer,
            tok,
            offset,
            vars,
        })
    }

    fn bump(&mut self) -> Result<(), ParseError> {
        let (tok, offset) = self.lexer.next()?;
        self.tok = tok;
        self.offset = offset;
        Ok(())
    }

    fn fail<T>(&self, expected: Vec<&'static str>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.offset,
            expected,
        })
    }

    fn check_degree(&self, a: BiPoly, offset: usize) -> Result<BiPoly, ParseError> {
        let too_big = a.degree_x().is_some_and(|d| d > MAX_DEGREE)
            || a.degree_y().is_some_and(|d| d > MAX_DEGREE);
        if too_big {
            Err(ParseError::DegreeTooLarge { offset })
        } else {
            Ok(a)
        }
    }

    fn parse_all(&mut self) -> Result<BiPoly, ParseError> {
        let value = self.expr()?;
        if self.tok != Token::Eof {
            return self.fail(vec!["'+'", "'-'", "'*'", "end of input"]);
        }
        Ok(value)
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            let negate = match self.tok {
                Token::Plus => false,
                Token::Minus => true,
                _ => return Ok(acc),
            };
            self.bump()?;
            let rhs = self.term()?;
            acc = if negate { &acc - &rhs } else { &acc + &rhs };
        }
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let start = self.offset;
        let mut acc = self.unary()?;
        while self.tok == Token::Star {
            self.bump()?;
            let rhs = self.unary()?;
            let deg = |a: &BiPoly| (a.degree_x().unwrap_or(0), a.degree_y().unwrap_or(0));
            let (ax, ay) = deg(&acc);
            let (bx, by) = deg(&rhs);
            if ax + bx > MAX_DEGREE || ay + by > MAX_DEGREE {
                return Err(ParseError::DegreeTooLarge { offset: start });
            }
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        if self.tok == Token::Minus {
            self.bump()?;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let start = self.offset;
        let base = self.atom()?;
        if self.tok != Token::Caret {
            return Ok(base);
        }
        self.bump()?;
        let exp_offset = self.offset;
        let exp = match &self.tok {
            Token::Nat(n) => match u32::try_from(n) {
                Ok(k) if k <= MAX_EXPONENT => k,
                _ => return Err(ParseError::BadExponent { offset: exp_offset }),
            },
            Token::Minus => return Err(ParseError::BadExponent { offset: exp_offset }),
            _ => return self.fail(vec!["exponent"]),
        };
        self.bump()?;
        if self.tok == Token::Caret {
            return self.fail(vec!["parentheses around a power before '^'"]);
        }
        let k = exp as usize;
        if base.degree_x().unwrap_or(0) * k > MAX_DEGREE
            || base.degree_y().unwrap_or(0) * k > MAX_DEGREE
        {
            return Err(ParseError::DegreeTooLarge { offset: start });
        }
        self.check_degree(base.pow(exp), start)
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        match std::mem::replace(&mut self.tok, Token::Eof) {
            Token::Nat(num) => {
                self.bump()?;
                if self.tok != Token::Slash {
                    return Ok(BiPoly::constant(Rational::from_integer(num)));
                }
                self.bump()?;
                let den_offset = self.offset;
                let Token::Nat(den) = std::mem::replace(&mut self.tok, Token::Eof) else {
                    return self.fail(vec!["denominator"]);
                };
                if den.is_zero() {
                    return Err(ParseError::ZeroDenominator { offset: den_offset });
                }
                self.bump()?;
                Ok(BiPoly::constant(Rational::new(num, den)))
            }
            Token::Var(name) => {
                let offset = self.offset;
                let value = match self.vars.iter().position(|v| *v == name) {
                    Some(0) => BiPoly::x(),
                    Some(_) => BiPoly::y(),
                    None => return Err(ParseError::UnknownVariable { offset, name }),
                };
                self.bump()?;
                Ok(value)
            }
            Token::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Token::RParen {
                    return self.fail(vec!["')'"]);
                }
                self.bump()?;
                Ok(inner)
            }
            other => {
                self.tok = other;
                self.fail(vec!["number", "variable", "'('", "'-'"])
            }
        }
    }
}

/// Parse a polynomial in `x`.
pub fn parse_uni(text: &str) -> Result<UniPoly, ParseError> {
    let value = Parser::new(text, &["x"])?.parse_all()?;
    Ok(value.coeff_y(0))
}

/// Parse a polynomial in `x` and `y`.
pub fn parse_bi(text: &str) -> Result<BiPoly, ParseError> {
    Parser::new(text, &["x", "y"])?.parse_all()
}

/// Parse a rational constant such as `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let value = parse_uni(text)?;
    if value.is_constant() {
        Ok(value.coeff(0))
    } else {
        Err(ParseError::Syntax {
            offset: 0,
            expected: vec!["a constant"],
        })
    }
}

fn write_monomial(out: &mut String, vars: &[(&str, usize)]) {
    let mut first = true;
    for &(name, k) in vars {
        if k == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if k > 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
}

/// Join signed terms `c * monomial` in the given order.
fn write_terms<'a>(terms: impl Iterator<Item = (&'a Rational, Vec<(&'a str, usize)>)>) -> String {
    let mut out = String::new();
    for (c, vars) in terms {
        let is_const = vars.iter().all(|&(_, k)| k == 0);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let abs = c.abs();
        if is_const {
            out.push_str(&abs.to_string());
            continue;
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push('*');
        }
        write_monomial(&mut out, &vars);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text of a polynomial in `x`: descending degree, explicit signs.
pub fn print_uni(a: &UniPoly) -> String {
    print_uni_in(a, "x")
}

/// As [`print_uni`] with another variable name.
pub fn print_uni_in(a: &UniPoly, var: &str) -> String {
    write_terms(
        a.coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, vec![(var, i)])),
    )
}

/// Canonical text of a polynomial in `x, y`: descending total degree, ties
/// broken by descending degree in `x`.
pub fn print_bi(a: &BiPoly) -> String {
    let mut terms: Vec<_> = a.terms().collect();
    terms.sort_by(|&(i1, j1, _), &(i2, j2, _)| (i2 + j2, i2).cmp(&(i1 + j1, i1)));
    write_terms(
        terms
            .into_iter()
            .map(|(i, j, c)| (c, vec![("x", i), ("y", j)])),
    )
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_uni(self))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_bi(self))
    }
}
