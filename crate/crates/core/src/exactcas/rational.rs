//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already keeps values reduced with a positive
//! denominator, so it is used directly as the coefficient type.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::CasError;

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-1/2"` or `"−1/2"` (typographic minus).
pub fn parse_rational(text: &str) -> Result<Rational, CasError> {
    let cleaned = text.trim().replace('\u{2212}', "-");
    let bad = || CasError::Parse {
        pos: 0,
        msg: format!("malformed rational `{text}`"),
    };
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (cleaned.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(CasError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn fmt_abs(r: &Rational) -> String {
    let a = r.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}
