//! Small infix expression language shared by every textual format:
//! polynomial-fraction strings, bracket right-hand sides, and UEA elements.
//!
//! Grammar (juxtaposition is multiplication, `^` takes a literal exponent):
//!
//! ```text
//! sum     := term (("+" | "-") term)*
//! term    := "-" term | product
//! product := power (("*" | "/")? power)*
//! power   := atom ("^" integer)?
//! atom    := integer | identifier | "(" sum ")"
//! ```

use num_bigint::BigInt;

use super::rational::Rational;
use super::scalar::Scalar;
use super::CasError;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Sym(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, CasError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
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
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Int(text.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Ident(text)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((pos, Tok::Op('-')));
            i += 1;
        } else {
            return Err(CasError::Parse {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, CasError> {
        Err(CasError::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr, CasError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CasError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.term()?)));
        }
        if self.eat('+') {
            return self.term();
        }
        self.product()
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('('))
        )
    }

    fn product(&mut self) -> Result<Expr, CasError> {
        let mut lhs = self.power()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
            } else if self.starts_atom() {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr, CasError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.at += 1;
                    let k: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), k))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, CasError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr::Num(Rational::from_integer(n)))
            }
            Some(Tok::Ident(s)) => {
                self.at += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, CasError> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        len: src.len(),
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Evaluates with every identifier read as a field symbol.
pub fn eval_scalar(e: &Expr) -> Result<Scalar, CasError> {
    Ok(match e {
        Expr::Num(r) => Scalar::from_rational(r.clone()),
        Expr::Sym(s) => Scalar::var(s),
        Expr::Add(a, b) => &eval_scalar(a)? + &eval_scalar(b)?,
        Expr::Sub(a, b) => &eval_scalar(a)? - &eval_scalar(b)?,
        Expr::Mul(a, b) => &eval_scalar(a)? * &eval_scalar(b)?,
        Expr::Div(a, b) => eval_scalar(a)?.checked_div(&eval_scalar(b)?)?,
        Expr::Neg(a) => -eval_scalar(a)?,
        Expr::Pow(a, k) => eval_scalar(a)?.pow(*k),
    })
}

pub fn parse_scalar(src: &str) -> Result<Scalar, CasError> {
    eval_scalar(&parse_expr(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcas::poly::Poly;
    use crate::exactcas::rational::{int, rat};

    #[test]
    fn precedence_and_juxtaposition() {
        let s = parse_scalar("4*w2*c1*a1^2 + w1").unwrap();
        let expect = &Poly::monomial(int(4), &[("w2", 1), ("c1", 1), ("a1", 2)]) + &Poly::var("w1");
        assert_eq!(s, Scalar::from_poly(expect));
        assert_eq!(parse_scalar("2 x y").unwrap(), parse_scalar("2*x*y").unwrap());
        assert_eq!(parse_scalar("-x^2").unwrap(), -parse_scalar("x^2").unwrap());
        assert_eq!(parse_scalar("1/2*w1").unwrap(), Scalar::from_poly(Poly::var("w1").scale(&rat(1, 2))));
        assert_eq!(parse_scalar("\u{2212}1/2").unwrap(), Scalar::from_rational(rat(-1, 2)));
    }

    #[test]
    fn fractions_parse() {
        let s = parse_scalar("-w1/(4*w2*c1)").unwrap();
        let d = parse_scalar("4*w2*c1").unwrap();
        assert_eq!(&s * &d, -Scalar::var("w1"));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_scalar("x + (y") {
            Err(CasError::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("x ^ y").is_err());
        assert!(parse_scalar("x $ y").is_err());
        assert_eq!(parse_scalar("x/0"), Err(CasError::DivisionByZero));
    }
}
