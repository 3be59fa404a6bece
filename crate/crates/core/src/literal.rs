//! Small expression language for ring values on the command line:
//! integers, fractions, `Z^k`, `t^-1`, `i`, `eps`/`ε`, `Id`, products, sums and
//! bracketed matrix rows.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::ring::{Ring, RingError, RingKind, RingValue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiteralError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("cannot evaluate literal: {0}")]
    Eval(String),
}

impl From<RingError> for LiteralError {
    fn from(e: RingError) -> Self {
        LiteralError::Eval(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Sym(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    /// Negative exponents use the ambient inverse.
    Pow(Box<Expr>, i64),
    List(Vec<Expr>),
}

pub fn parse_expr(text: &str) -> Result<Expr, LiteralError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos != text.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Evaluates `text` as a single value of `ring`.
pub fn parse_value(ring: &Ring, text: &str) -> Result<RingValue, LiteralError> {
    eval(ring, &parse_expr(text)?)
}

/// A bracketed list of three values.
pub fn parse_triple(ring: &Ring, text: &str) -> Result<[RingValue; 3], LiteralError> {
    match parse_expr(text)? {
        Expr::List(items) if items.len() == 3 => {
            Ok([eval(ring, &items[0])?, eval(ring, &items[1])?, eval(ring, &items[2])?])
        }
        _ => Err(LiteralError::Eval("expected a list of three values".into())),
    }
}

/// `[[A, B], [C, D]]` with entries in `ring`.
pub fn parse_mat2(ring: &Ring, text: &str) -> Result<[RingValue; 4], LiteralError> {
    let rows = match parse_expr(text)? {
        Expr::List(rows) if rows.len() == 2 => rows,
        _ => return Err(LiteralError::Eval("expected [[A, B], [C, D]]".into())),
    };
    let mut out = Vec::with_capacity(4);
    for row in &rows {
        match row {
            Expr::List(r) if r.len() == 2 => {
                for x in r {
                    out.push(eval(ring, x)?);
                }
            }
            _ => return Err(LiteralError::Eval("each row needs two entries".into())),
        }
    }
    Ok(out.try_into().unwrap())
}

pub fn eval(ring: &Ring, e: &Expr) -> Result<RingValue, LiteralError> {
    Ok(match e {
        Expr::Num(q) => RingValue::from_rational(ring, q.clone()),
        Expr::Sym(name) if name == "Id" => RingValue::one(ring),
        Expr::Sym(name) => {
            let canonical = if name == "eps" { "ε" } else { name.as_str() };
            RingValue::symbol(ring, canonical)
                .ok_or_else(|| LiteralError::Eval(format!("symbol `{name}` is not defined in {ring}")))?
        }
        Expr::Add(a, b) => eval(ring, a)? + eval(ring, b)?,
        Expr::Sub(a, b) => eval(ring, a)? - eval(ring, b)?,
        Expr::Mul(a, b) => eval(ring, a)? * eval(ring, b)?,
        Expr::Neg(a) => -eval(ring, a)?,
        Expr::Pow(a, k) => eval(ring, a)?.pow(*k)?,
        Expr::List(rows) => {
            let (n, base) = match ring.kind() {
                RingKind::Mat { n, base } => (*n, base),
                _ => return Err(LiteralError::Eval(format!("a bracketed list is not a value of {ring}"))),
            };
            if rows.len() != n {
                return Err(LiteralError::Eval(format!("expected {n} rows")));
            }
            let mut entries = Vec::with_capacity(n * n);
            for row in rows {
                match row {
                    Expr::List(r) if r.len() == n => {
                        for x in r {
                            entries.push(eval(base, x)?);
                        }
                    }
                    _ => return Err(LiteralError::Eval(format!("each row needs {n} entries"))),
                }
            }
            RingValue::matrix(ring, entries)?
        }
    })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> LiteralError {
        LiteralError::Syntax { offset: self.pos, message: message.into() }
    }

    fn ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> char {
        let c = self.peek_raw().unwrap();
        self.pos += c.len_utf8();
        c
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '−'
    }

    fn expr(&mut self) -> Result<Expr, LiteralError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(c) if Self::is_minus(c) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, LiteralError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some('*' | '·') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some('/') => {
                    self.bump();
                    let at = self.pos;
                    match self.power()? {
                        Expr::Num(q) if q != BigRational::from_integer(0.into()) => {
                            lhs = Expr::Mul(Box::new(lhs), Box::new(Expr::Num(q.recip())))
                        }
                        _ => return Err(LiteralError::Syntax { offset: at, message: "can only divide by a nonzero number".into() }),
                    }
                }
                Some(c) if c.is_alphanumeric() || c == '(' || c == 'ε' => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, LiteralError> {
        match self.peek() {
            Some(c) if Self::is_minus(c) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, LiteralError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.bump();
            let neg = matches!(self.peek(), Some(c) if Self::is_minus(c));
            if neg {
                self.bump();
            }
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected an integer exponent"));
            }
            let k: i64 = digits.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        self.ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn atom(&mut self) -> Result<Expr, LiteralError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().unwrap();
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(e)
            }
            Some('[') => {
                self.bump();
                let mut items = Vec::new();
                if self.peek() == Some(']') {
                    return Err(self.err("empty list"));
                }
                loop {
                    items.push(self.expr()?);
                    match self.peek() {
                        Some(',') => {
                            self.bump();
                        }
                        Some(']') => {
                            self.bump();
                            return Ok(Expr::List(items));
                        }
                        _ => return Err(self.err("expected `,` or `]`")),
                    }
                }
            }
            Some('ε') => {
                self.bump();
                Ok(Expr::Sym("ε".into()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek_raw().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                Ok(Expr::Sym(self.src[start..self.pos].to_string()))
            }
            _ => Err(self.err("expected a value")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_triple() {
        let ring = Ring::parse("group:Z5:int").unwrap();
        let [a, b, c] = parse_triple(&ring, "[Z, 1-Z+Z^2, 1+Z-Z^3]").unwrap();
        assert_eq!(a.to_string(), "Z");
        assert_eq!(b.to_string(), "1 - Z + Z^2");
        assert_eq!(c.to_string(), "1 + Z - Z^3");
    }

    #[test]
    fn matrix_over_laurent() {
        let ring = Ring::parse("mat:2:laurent:t:int").unwrap();
        let m = parse_value(&ring, "[[1, t], [0, 1]]").unwrap();
        let inv = parse_value(&ring, "[[1, -t], [0, 1]]").unwrap();
        assert_eq!(m.pow(-1).unwrap(), inv);
        assert_eq!(parse_value(&ring, "2t^2 + 3").unwrap().to_string(), "[[3 + 2t^2, 0], [0, 3 + 2t^2]]");
    }

    #[test]
    fn dual_and_complex() {
        let d = Ring::parse("dual:triv").unwrap();
        assert_eq!(parse_value(&d, "1 - eps").unwrap().to_string(), "1 - ε");
        let c = Ring::parse("complex-conj").unwrap();
        assert_eq!(parse_value(&c, "-2i").unwrap().to_string(), "-2i");
        assert_eq!(parse_value(&c, "1/2 + i/2").unwrap().to_string(), "1/2 + 1/2i");
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(parse_expr("1 + "), Err(LiteralError::Syntax { offset: 4, .. })));
        let z = Ring::int();
        assert!(matches!(parse_value(&z, "Z"), Err(LiteralError::Eval(_))));
    }
}
