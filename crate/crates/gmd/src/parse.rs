//! Text forms of fields, field elements and polynomials.
//!
//! Polynomials are written in the variables `t1, ..., ts` with `+`, `-`,
//! `*` (optional between factors), `^` and parentheses, e.g.
//! `(t1-t2)*(t1-t3)*t2^2` or `(a+1)t1 + 2t2`. Integers denote multiples of
//! one and `a` is the root of the defining polynomial of a non-prime field.

use gmd_core::{FieldElement, FieldSpec, Monomial, Polynomial};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{input:?} at position {pos}: {message}")]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub message: String,
}

/// Parses `p^k`, `p`, or a prime power `q`.
pub fn parse_field(text: &str) -> Result<FieldSpec, ParseError> {
    let err = |pos: usize, message: String| ParseError { input: text.to_string(), pos, message };
    let number = |s: &str, at: usize| -> Result<u32, ParseError> {
        s.trim().parse::<u32>().map_err(|_| err(at, format!("expected a positive integer, found {:?}", s.trim())))
    };
    let (p, k) = match text.split_once('^') {
        Some((p, k)) => (number(p, 0)?, number(k, p.len() + 1)?),
        None => {
            let q = number(text, 0)?;
            prime_power(q).ok_or_else(|| err(0, format!("{q} is not a prime power")))?
        }
    };
    FieldSpec::new(p, k).map_err(|e| err(0, e.to_string()))
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Parses a field element: a bare integer is an element index `0..q`,
/// anything else is an expression in `a`.
pub fn parse_element(field: &FieldSpec, text: &str) -> Result<FieldElement, ParseError> {
    let trimmed = text.trim();
    if !trimmed.is_empty() && trimmed.bytes().all(|b| b.is_ascii_digit()) {
        let index: u64 = trimmed.parse().unwrap_or(u64::MAX);
        if index >= field.size() as u64 {
            return Err(ParseError {
                input: text.to_string(),
                pos: text.find(trimmed).unwrap_or(0),
                message: format!("element index {trimmed} is not below q = {}", field.size()),
            });
        }
        return Ok(FieldElement(index as u32));
    }
    let p = Parser::new(field, 0, text).run()?;
    Ok(p.coefficient(&Monomial::one(0)))
}

/// Parses a polynomial in `nvars` variables.
pub fn parse_polynomial(field: &FieldSpec, nvars: usize, text: &str) -> Result<Polynomial, ParseError> {
    Parser::new(field, nvars, text).run()
}

/// Parses a variable name `t<i>` into a zero-based index.
pub fn parse_variable(nvars: usize, text: &str) -> Result<usize, ParseError> {
    let t = text.trim();
    let err = |message: String| ParseError { input: text.to_string(), pos: 0, message };
    let i: usize = t
        .strip_prefix('t')
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| err(format!("expected a variable t1..t{nvars}")))?;
    if i == 0 || i > nvars {
        return Err(err(format!("variable {t} outside t1..t{nvars}")));
    }
    Ok(i - 1)
}

struct Parser<'a> {
    field: &'a FieldSpec,
    nvars: usize,
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(field: &'a FieldSpec, nvars: usize, text: &'a str) -> Parser<'a> {
        Parser { field, nvars, text, bytes: text.as_bytes(), pos: 0 }
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError { input: self.text.to_string(), pos, message: message.into() }
    }

    fn run(mut self) -> Result<Polynomial, ParseError> {
        let p = self.expr()?;
        self.skip_ws();
        if self.pos < self.bytes.len() {
            return Err(self.error(self.pos, format!("unexpected {:?}", self.rest_char())));
        }
        Ok(p)
    }

    fn rest_char(&self) -> char {
        self.text[self.pos..].chars().next().unwrap_or(' ')
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let f = self.field;
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.scale(f.neg(f.one()), f);
        }
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { acc.add(&t, f) } else { acc.sub(&t, f) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let next = self.power()?;
                    acc = acc.mul(&next, self.field);
                }
                Some(c) if c.is_ascii_digit() || c == b'a' || c == b't' || c == b'(' => {
                    let next = self.power()?;
                    acc = acc.mul(&next, self.field);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.error(start, "exponent too large"))?;
            return Ok(base.pow(e, self.field));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected an integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| self.error(start, "integer too large"))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let f = self.field;
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.error(self.pos, "unexpected end of input")),
        };
        match self.bytes[start] {
            b'(' => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            b'a' => {
                self.pos += 1;
                if f.degree() == 1 {
                    return Err(self.error(start, "`a` denotes a root only in non-prime fields"));
                }
                Ok(Polynomial::constant(self.nvars, f.generator_root()))
            }
            b't' => {
                self.pos += 1;
                let i = self.integer()? as usize;
                if i == 0 || i > self.nvars {
                    return Err(self.error(start, format!("variable t{i} outside t1..t{}", self.nvars)));
                }
                Ok(Polynomial::var(self.nvars, i - 1))
            }
            c if c.is_ascii_digit() => {
                let n = self.integer()?;
                let c = f.from_int((n % f.characteristic() as u64) as i64);
                Ok(Polynomial::constant(self.nvars, c))
            }
            _ => Err(self.error(start, format!("unexpected {:?}", self.rest_char()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gmd_core::MonomialOrder;

    #[test]
    fn fields() {
        assert_eq!(parse_field("2^2").unwrap().size(), 4);
        assert_eq!(parse_field("9").unwrap().degree(), 2);
        assert_eq!(parse_field("7").unwrap().degree(), 1);
        assert!(parse_field("6").is_err());
        assert!(parse_field("4^1").is_err());
        assert_eq!(parse_field("2^x").unwrap_err().pos, 2);
    }

    #[test]
    fn elements_round_trip() {
        for (p, k) in [(2, 2), (3, 2), (5, 1), (2, 4)] {
            let f = FieldSpec::new(p, k).unwrap();
            for x in f.elements() {
                assert_eq!(parse_element(&f, &f.format(x)).unwrap(), x);
                assert_eq!(parse_element(&f, &x.0.to_string()).unwrap(), x);
            }
        }
        let f = FieldSpec::new(2, 2).unwrap();
        assert!(parse_element(&f, "4").is_err());
        assert!(parse_element(&FieldSpec::new(3, 1).unwrap(), "a").is_err());
    }

    #[test]
    fn polynomials_round_trip() {
        let f = FieldSpec::new(2, 2).unwrap();
        let o = MonomialOrder::grevlex(3);
        let p = parse_polynomial(&f, 3, "(t1-t2)(t1-t3)*t2^2").unwrap();
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(4));
        let q = parse_polynomial(&f, 3, &p.format(&f, &o)).unwrap();
        assert_eq!(p, q);
        let r = parse_polynomial(&f, 3, "(a+1)*t1 + a t2").unwrap();
        assert_eq!(parse_polynomial(&f, 3, &r.format(&f, &o)).unwrap(), r);
        assert!(parse_polynomial(&f, 3, "-t1+t1").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        let f = FieldSpec::new(3, 1).unwrap();
        assert_eq!(parse_polynomial(&f, 3, "t1 + t4").unwrap_err().pos, 5);
        assert_eq!(parse_polynomial(&f, 3, "t1 + ").unwrap_err().pos, 5);
        assert_eq!(parse_polynomial(&f, 3, "(t1 + t2").unwrap_err().pos, 8);
        assert_eq!(parse_polynomial(&f, 3, "t1 $ t2").unwrap_err().pos, 3);
        assert_eq!(parse_variable(3, "t3").unwrap(), 2);
        assert!(parse_variable(3, "t0").is_err());
    }
}
