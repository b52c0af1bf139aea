//! Scalar literal syntax.
//!
//! Literals are sums and products of integers and the indeterminate `q`
//! with `+ - * / ^` and parentheses, e.g. `3/4`, `-2`, `(q^2 - 1)/(q)`.
//! A literal without parentheses and with exactly one `/` is read as
//! numerator over denominator, so `q^2 - 1 / q` means `(q^2 - 1)/q`.
//! A trailing `mod p` marks a prime-field residue.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::Poly;
use super::ratfun::RationalFunction;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn bad(text: &str, reason: impl Into<String>) -> Error {
    Error::BadScalar {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn tokenize(text: &str, full: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else if d.is_whitespace() {
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token::Num(digits.parse().expect("digit string")));
            continue;
        }
        out.push(match c {
            'q' => Token::Q,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            other => return Err(bad(full, format!("unexpected character {other:?}"))),
        });
        chars.next();
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.next();
                    let d = self.unary()?;
                    acc = acc.div(&d).map_err(|_| bad(self.text, "division by zero"))?;
                }
                // Juxtaposition such as `2q` or `3(q+1)` multiplies.
                Some(Token::Q | Token::Num(_) | Token::Open) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(Token::Minus) => {
                self.next();
                Ok(self.unary()?.neg())
            }
            Some(Token::Plus) => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.next();
        let negative = if self.peek() == Some(&Token::Minus) {
            self.next();
            true
        } else {
            false
        };
        let e = match self.next() {
            Some(Token::Num(n)) => i64::try_from(n).map_err(|_| bad(self.text, "exponent too large"))?,
            _ => return Err(bad(self.text, "expected integer exponent")),
        };
        base.pow(if negative { -e } else { e })
            .map_err(|_| bad(self.text, "negative power of zero"))
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.next() {
            Some(Token::Num(n)) => Ok(RationalFunction::constant(BigRational::from_integer(n))),
            Some(Token::Q) => Ok(RationalFunction::q()),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(bad(self.text, "unbalanced parenthesis")),
                }
            }
            Some(t) => Err(bad(self.text, format!("unexpected token {t:?}"))),
            None => Err(bad(self.text, "unexpected end of literal")),
        }
    }
}

fn parse_expr(text: &str, full: &str) -> Result<RationalFunction> {
    let mut p = Parser {
        tokens: tokenize(text, full)?,
        pos: 0,
        text: full,
    };
    if p.tokens.is_empty() {
        return Err(bad(full, "empty literal"));
    }
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(bad(full, "trailing input"));
    }
    Ok(value)
}

/// Parses a literal into an element of Q(q) (constants included).
pub fn parse_rational_function(text: &str) -> Result<RationalFunction> {
    let no_parens = !text.contains('(') && !text.contains(')');
    if no_parens && text.matches('/').count() == 1 {
        let (n, d) = text.split_once('/').expect("one slash");
        let n = parse_expr(n, text)?;
        let d = parse_expr(d, text)?;
        return n.div(&d).map_err(|_| bad(text, "division by zero"));
    }
    parse_expr(text, text)
}

/// Parses a scalar literal in the given field.
pub fn parse_scalar(field: Field, text: &str) -> Result<Scalar> {
    let (body, modulus) = match text.find("mod") {
        Some(at) => {
            let p: u64 = text[at + 3..]
                .trim()
                .parse()
                .map_err(|_| bad(text, "expected a prime after `mod`"))?;
            (&text[..at], Some(p))
        }
        None => (text, None),
    };
    if let Some(p) = modulus {
        if field != Field::Prime(p) {
            return Err(bad(text, format!("residue mod {p} in field {field}")));
        }
    }
    let value = parse_rational_function(body).map_err(|e| match e {
        Error::BadScalar { reason, .. } => bad(text, reason),
        other => other,
    })?;
    match field {
        Field::RationalFunction => Ok(Scalar::Function(value)),
        _ => {
            let c = value
                .as_constant()
                .ok_or_else(|| bad(text, format!("`q` is not an element of {field}")))?;
            Scalar::from_rational(field, &c).map_err(|_| bad(text, "denominator vanishes mod p"))
        }
    }
}

/// Parses a polynomial literal (denominator must be 1).
pub fn parse_poly(text: &str) -> Result<Poly> {
    let f = parse_rational_function(text)?;
    if f.denominator().is_one() {
        Ok(f.numerator().clone())
    } else {
        Err(bad(text, "not a polynomial"))
    }
}
