//! Text grammar for polynomials and Gaussian-rational literals.
//!
//! ```text
//! poly    := [sign] term { sign term }
//! term    := factor { '*' factor }
//! factor  := rational ['i'] | 'i' | '(' literal ')' | var ['^' digits]
//! literal := [sign] item { sign item },  item := rational ['i'] | 'i'
//! ```
//!
//! Whitespace between tokens is ignored. Error positions are byte offsets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::polynomial::{QPolynomial2, UniPolynomial};
use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{want}'")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn unexpected(&mut self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos, format!("expected {wanted}, found '{c}'")),
            None => Error::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if len == 0 {
            return Err(self.unexpected("a digit"));
        }
        self.pos += len;
        Ok(self.text[start..start + len].parse().expect("ascii digits"))
    }

    pub(crate) fn integer(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        let start = self.position();
        let d = self.digits()?;
        let v: i64 = i64::try_from(&d).map_err(|_| Error::parse(start, "integer out of range"))?;
        Ok(if negative { -v } else { v })
    }

    fn rational(&mut self) -> Result<BigRational> {
        let numer = self.digits()?;
        if self.eat('/') {
            let at = self.position();
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(Error::parse(at, "zero denominator"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    /// `rational ['i'] | 'i'`
    fn item(&mut self) -> Result<GaussianRational> {
        if self.eat('i') {
            return Ok(GaussianRational::i());
        }
        let r = self.rational()?;
        if self.eat('i') {
            Ok(GaussianRational::new(BigRational::zero(), r))
        } else {
            Ok(GaussianRational::real(r))
        }
    }

    /// A signed sum of items, e.g. `-3/7+1/2i`; stops before any other
    /// character.
    pub(crate) fn literal(&mut self) -> Result<GaussianRational> {
        let mut sign = self.sign().unwrap_or(1);
        let mut total = GaussianRational::zero();
        loop {
            let item = self.item()?;
            if sign < 0 {
                total -= &item;
            } else {
                total += &item;
            }
            match self.peek() {
                Some('+') | Some('-') => sign = self.sign().unwrap(),
                _ => return Ok(total),
            }
        }
    }

    fn sign(&mut self) -> Option<i32> {
        if self.eat('+') {
            Some(1)
        } else if self.eat('-') {
            Some(-1)
        } else {
            None
        }
    }
}

/// Parses `x`/`y` polynomials such as `-3/7*x^2*y + (1/2+i)*y`.
pub fn parse_polynomial(text: &str) -> Result<QPolynomial2> {
    parse_in(text, ['x', 'y'])
}

/// Parses a polynomial in the single variable `t`, e.g. `t^3 - t`.
pub fn parse_univariate(text: &str) -> Result<UniPolynomial> {
    let p = parse_in(text, ['t', '\0'])?;
    let degree = p.terms().map(|((a, _), _)| *a).max().unwrap_or(0) as usize;
    let mut coefficients = vec![GaussianRational::zero(); degree + 1];
    for ((a, _), c) in p.terms() {
        coefficients[*a as usize] = c.clone();
    }
    Ok(UniPolynomial::new(coefficients))
}

/// Parses a Gaussian-rational literal, with or without parentheses.
pub fn parse_gaussian(text: &str) -> Result<GaussianRational> {
    let mut cur = Cursor::new(text);
    let value = if cur.eat('(') {
        let v = cur.literal()?;
        cur.expect(')')?;
        v
    } else {
        cur.literal()?
    };
    if !cur.at_end() {
        return Err(cur.unexpected("end of input"));
    }
    Ok(value)
}

fn parse_in(text: &str, vars: [char; 2]) -> Result<QPolynomial2> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut out = QPolynomial2::zero();
    let mut sign = cur.sign().unwrap_or(1);
    loop {
        let term = term(&mut cur, vars)?;
        if sign < 0 {
            out = &out - &term;
        } else {
            out = &out + &term;
        }
        if cur.at_end() {
            return Ok(out);
        }
        sign = match cur.sign() {
            Some(s) => s,
            None => return Err(cur.unexpected("'+', '-' or '*'")),
        };
    }
}

fn term(cur: &mut Cursor<'_>, vars: [char; 2]) -> Result<QPolynomial2> {
    let mut coef = GaussianRational::one();
    let mut exps = [0u32; 2];
    loop {
        match cur.peek() {
            Some('(') => {
                cur.bump();
                let v = cur.literal()?;
                cur.expect(')')?;
                coef = &coef * &v;
            }
            Some(c) if c.is_ascii_digit() || c == 'i' => {
                let v = cur.item()?;
                coef = &coef * &v;
            }
            Some(c) if c != '\0' && vars.contains(&c) => {
                cur.bump();
                let slot = vars.iter().position(|v| *v == c).unwrap();
                let e = if cur.eat('^') {
                    if cur.peek() == Some('-') {
                        return Err(Error::parse(cur.position(), "negative exponent"));
                    }
                    let at = cur.position();
                    let d = cur.digits()?;
                    u32::try_from(&d).map_err(|_| Error::parse(at, "exponent too large"))?
                } else {
                    1
                };
                exps[slot] += e;
            }
            _ => {
                let names: Vec<String> = vars
                    .iter()
                    .filter(|v| **v != '\0')
                    .map(|v| format!("'{v}'"))
                    .collect();
                return Err(cur.unexpected(&format!("a number, '(' or {}", names.join(" or "))));
            }
        }
        if !cur.eat('*') {
            return Ok(QPolynomial2::monomial(exps[0], exps[1], coef));
        }
    }
}
