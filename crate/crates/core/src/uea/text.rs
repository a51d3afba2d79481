//! Text form of enveloping-algebra elements, e.g.
//! `2*a1 * P1 K1 + 2*a1 * P2 K2 - 2*w2*a1 * H`. Factors of a monomial are
//! separated by spaces, exponents written `^k`, and a unit coefficient is
//! omitted. Parsing reads products of generators as noncommutative words, so
//! any word is accepted and normal ordered.

use std::sync::Arc;

use crate::exactcas::{parse_expr, Expr, Scalar};
use crate::liealg::LieAlgebra;

use super::element::UEAElement;
use super::monomial::PbwMonomial;
use super::UeaError;

fn format_monomial(g: &LieAlgebra, m: &PbwMonomial) -> String {
    let mut parts = Vec::new();
    for (i, e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(g.label(i).to_string()),
            _ => parts.push(format!("{}^{e}", g.label(i))),
        }
    }
    parts.join(" ")
}

fn format_magnitude(c: &Scalar) -> String {
    if c.is_one() {
        return String::new();
    }
    match c.as_poly() {
        Some(p) if p.is_monomial() => p.to_string(),
        _ => format!("({c})"),
    }
}

pub fn format_element(x: &UEAElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let g = x.algebra();
    let mut out = String::new();
    for (n, (m, c)) in x.terms().enumerate() {
        let neg = c.is_negative_leading();
        let mag = if neg { -c } else { c.clone() };
        let coeff = format_magnitude(&mag);
        let mono = format_monomial(g, m);
        let body = match (coeff.is_empty(), mono.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => mono,
            (false, true) => coeff,
            (false, false) => format!("{coeff} * {mono}"),
        };
        out.push_str(match (n, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        out.push_str(&body);
    }
    out
}

fn eval(g: &Arc<LieAlgebra>, e: &Expr) -> Result<UEAElement, UeaError> {
    Ok(match e {
        Expr::Num(r) => UEAElement::scalar(g, Scalar::from_rational(r.clone())),
        Expr::Sym(s) => match g.index_of(s) {
            Some(i) => UEAElement::generator(g, i),
            None => UEAElement::scalar(g, Scalar::var(s)),
        },
        Expr::Add(a, b) => eval(g, a)?.add(&eval(g, b)?)?,
        Expr::Sub(a, b) => eval(g, a)?.sub(&eval(g, b)?)?,
        Expr::Mul(a, b) => eval(g, a)?.mul(&eval(g, b)?)?,
        Expr::Div(a, b) => {
            let d = eval(g, b)?.as_scalar().ok_or(UeaError::NonScalarDivision)?;
            eval(g, a)?.scale(&d.inv()?)
        }
        Expr::Neg(a) => eval(g, a)?.neg(),
        Expr::Pow(a, k) => eval(g, a)?.pow(*k),
    })
}

/// Parses an element; identifiers that are not generator labels are
/// coefficient symbols.
pub fn parse_element(g: &Arc<LieAlgebra>, src: &str) -> Result<UEAElement, UeaError> {
    eval(g, &parse_expr(src)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{ck_symbolic, make_extended_galilei};

    #[test]
    fn prints_in_descending_order() {
        let g = Arc::new(ck_symbolic());
        let x = parse_element(&g, "2*a1*(K1 P1 + K2 P2 + w2 H)").unwrap();
        // K1 P1 = P1 K1 - [P1,K1] = P1 K1 - w2 H
        assert_eq!(x.to_string(), "2*a1 * P1 K1 + 2*a1 * P2 K2 - 2*w2*a1 * H");
        let y = parse_element(&g, "-J + 3 - w1/(2*w2) * H^2").unwrap();
        assert_eq!(parse_element(&g, &y.to_string()).unwrap(), y);
        assert_eq!(parse_element(&g, "0").unwrap().to_string(), "0");
        assert_eq!(parse_element(&g, "-1").unwrap().to_string(), "-1");
    }

    #[test]
    fn central_charge_round_trip() {
        let g = Arc::new(make_extended_galilei(Scalar::var("m")));
        let x = parse_element(&g, "-2*a1*m * K1 Xi").unwrap();
        assert_eq!(x.to_string(), "-2*m*a1 * K1 Xi");
        assert_eq!(parse_element(&g, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn division_by_generator_rejected() {
        let g = Arc::new(ck_symbolic());
        assert!(matches!(parse_element(&g, "H / J"), Err(UeaError::NonScalarDivision)));
        assert!(parse_element(&g, "H + ").is_err());
    }
}
