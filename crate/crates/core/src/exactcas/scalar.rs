//! Rational functions: the coefficient field used by every other module.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::gcd::poly_gcd;
use super::poly::Poly;
use super::rational::Rational;
use super::CasError;

/// `num / den` with `gcd(num, den) = 1` and `den` monic in the graded-lex
/// order. Zero is stored as `0 / 1`.
///
/// Equality is decided by cross-multiplication, which agrees with structural
/// equality on canonical values.
#[derive(Clone, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(Poly::from_i64(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(Poly::var(name))
    }

    pub fn from_poly(num: Poly) -> Self {
        Scalar {
            num,
            den: Poly::one(),
        }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, CasError> {
        if den.is_zero() {
            return Err(CasError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            return Self::from_poly(num.scale(&c.recip()));
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let k = lc.recip();
            Scalar {
                num: num.scale(&k),
                den: den.scale(&k),
            }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn mentions(&self, var: &str) -> bool {
        self.num.mentions(var) || self.den.mentions(var)
    }

    pub fn scale(&self, k: &Rational) -> Scalar {
        if k.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            num: self.num.scale(k),
            den: self.den.clone(),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, CasError> {
        if other.is_zero() {
            return Err(CasError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn inv(&self) -> Result<Scalar, CasError> {
        Scalar::one().checked_div(self)
    }

    pub fn pow(&self, n: u32) -> Scalar {
        Scalar {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Substitutes `var := value` in numerator and denominator.
    pub fn substitute(&self, var: &str, value: &Scalar) -> Result<Scalar, CasError> {
        if !self.mentions(var) {
            return Ok(self.clone());
        }
        let sub = |p: &Poly| -> Result<Scalar, CasError> {
            let coeffs = p.coeffs_in(var);
            let mut acc = Scalar::zero();
            for c in coeffs.iter().rev() {
                acc = &(&acc * value) + &Scalar::from_poly(c.clone());
            }
            Ok(acc)
        };
        sub(&self.num)?.checked_div(&sub(&self.den)?)
    }

    pub fn eval_f64(&self, values: &HashMap<String, f64>) -> Option<f64> {
        Some(self.num.eval_f64(values)? / self.den.eval_f64(values)?)
    }

    /// True when the printed form would start with a minus sign.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading_coeff().is_negative()
    }

    fn fast_sum(&self, other: &Scalar, negate: bool) -> Scalar {
        let rhs = if negate { -&other.num } else { other.num.clone() };
        if self.den == other.den {
            let num = &self.num + &rhs;
            if self.den.is_one() {
                return Scalar::from_poly(num);
            }
            return Self::normalized(num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &other.den) + &(&rhs * &self.den),
            &self.den * &other.den,
        )
    }

    fn product(&self, other: &Scalar) -> Scalar {
        if self.den.is_one() && other.den.is_one() {
            return Scalar::from_poly(&self.num * &other.num);
        }
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for Scalar {}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

fn wrap(p: &Poly) -> String {
    let s = p.to_string();
    let bare = p.is_monomial() && !s.contains('*') && !s.contains('/') && !s.starts_with('-');
    if bare {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.fast_sum(rhs, false)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.fast_sum(rhs, true)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.product(rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcas::rational::int;

    fn s(name: &str) -> Scalar {
        Scalar::var(name)
    }

    #[test]
    fn casimir_ratio_keeps_its_shape() {
        let den = Scalar::from_poly(Poly::monomial(int(4), &[("w2", 1), ("c1", 1)]));
        let q = (-s("w1")).checked_div(&den).unwrap();
        assert_eq!(q.numer(), &Poly::monomial(int(-1), &[("w1", 1)]).scale(&Rational::new(1.into(), 4.into())));
        assert_eq!(q.denom(), &Poly::monomial(int(1), &[("w2", 1), ("c1", 1)]));
        assert_eq!(&q * &den, -s("w1"));
        assert_eq!(q.to_string(), "(-1/4*w1)/(w2*c1)");
    }

    #[test]
    fn self_quotient_is_one() {
        let x = &s("x") + &Scalar::from_i64(2);
        assert!(x.checked_div(&x).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(s("x").checked_div(&Scalar::zero()), Err(CasError::DivisionByZero));
        assert_eq!(Scalar::new(Poly::one(), Poly::zero()).unwrap_err(), CasError::DivisionByZero);
    }

    #[test]
    fn cancels_common_factors() {
        let a = &s("x") * &(&s("y") + &Scalar::one());
        let b = &s("x").scale(&int(2)) * &s("z");
        let q = a.checked_div(&b).unwrap();
        assert_eq!(q.denom(), &Poly::var("z"));
        assert_eq!(q.numer(), &(&Poly::var("y") + &Poly::one()).scale(&Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn substitution_into_fraction() {
        let q = s("x").checked_div(&(&s("x") + &s("y"))).unwrap();
        let r = q.substitute("y", &s("x")).unwrap();
        assert_eq!(r, Scalar::from_rational(Rational::new(1.into(), 2.into())));
        assert!(q.substitute("y", &-s("x")).is_err());
    }
}
