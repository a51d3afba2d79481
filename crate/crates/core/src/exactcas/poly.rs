//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{fmt_abs, int, Rational};

/// Print/storage order of the symbols used across the crate. Unknown symbols
/// sort after these, alphabetically.
const SYMBOL_ORDER: [&str; 8] = ["w1", "w2", "m", "xi", "c1", "c2", "a1", "a2"];

pub fn symbol_cmp(a: &str, b: &str) -> Ordering {
    let rank = |s: &str| {
        SYMBOL_ORDER
            .iter()
            .position(|k| *k == s)
            .unwrap_or(SYMBOL_ORDER.len())
    };
    rank(a).cmp(&rank(b)).then_with(|| a.cmp(b))
}

/// Exponent vector, ordered graded-lexicographically: total degree first,
/// then the exponent of the earliest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Exps(pub Vec<u32>);

impl Exps {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Exps) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Exps {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exps {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical form: `vars` holds exactly the symbols that occur, sorted by
/// [`symbol_cmp`]; no stored coefficient is zero. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Exps, Rational>,
}

fn merge_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out: Vec<String> = a.iter().chain(b).cloned().collect();
    out.sort_by(|x, y| symbol_cmp(x, y));
    out.dedup();
    out
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exps(Vec::new()), c);
        }
        Poly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `coeff * Π name^exp`; repeated names accumulate.
    pub fn monomial(coeff: Rational, factors: &[(&str, u32)]) -> Self {
        let mut vars: Vec<String> = factors.iter().map(|(n, _)| n.to_string()).collect();
        vars.sort_by(|x, y| symbol_cmp(x, y));
        vars.dedup();
        let mut exps = vec![0u32; vars.len()];
        for (name, e) in factors {
            let idx = vars.iter().position(|v| v == name).unwrap();
            exps[idx] += e;
        }
        let mut terms = BTreeMap::new();
        terms.insert(Exps(exps), coeff);
        Self::from_parts(vars, terms)
    }

    /// Builds a polynomial from raw parts, restoring the canonical form.
    pub(crate) fn from_parts(vars: Vec<String>, terms: BTreeMap<Exps, Rational>) -> Self {
        let mut terms: BTreeMap<Exps, Rational> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|e| e.0[i] > 0))
            .collect();
        if used.iter().all(|u| *u) {
            return Poly { vars, terms };
        }
        let vars = vars
            .into_iter()
            .zip(&used)
            .filter(|(_, u)| **u)
            .map(|(v, _)| v)
            .collect();
        terms = terms
            .into_iter()
            .map(|(e, c)| {
                let kept = e.0.iter().zip(&used).filter(|(_, u)| **u).map(|(x, _)| *x);
                (Exps(kept.collect()), c)
            })
            .collect();
        Poly { vars, terms }
    }

    /// Terms re-expressed over a superset of this polynomial's variables.
    fn aligned(&self, vars: &[String]) -> BTreeMap<Exps, Rational> {
        if self.vars == vars {
            return self.terms.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0u32; vars.len()];
                for (i, x) in e.0.iter().enumerate() {
                    out[map[i]] = *x;
                }
                (Exps(out), c.clone())
            })
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.vars.is_empty() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn mentions(&self, var: &str) -> bool {
        self.vars.iter().any(|v| v == var)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Exps::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|e| e.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Leading term in the graded-lex order.
    pub fn leading(&self) -> Option<(&[u32], &Rational)> {
        self.terms.iter().next_back().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * k))
                .collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Poly::zero(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn combine(&self, other: &Poly, sign: i32) -> Poly {
        let vars = merge_vars(&self.vars, &other.vars);
        let mut terms = self.aligned(&vars);
        for (e, c) in other.aligned(&vars) {
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            if sign > 0 {
                *entry += c;
            } else {
                *entry -= c;
            }
        }
        Poly::from_parts(vars, terms)
    }

    fn product(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let vars = merge_vars(&self.vars, &other.vars);
        let a = self.aligned(&vars);
        let b = other.aligned(&vars);
        let mut terms: BTreeMap<Exps, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e = Exps(ea.0.iter().zip(&eb.0).map(|(x, y)| x + y).collect());
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Poly::from_parts(vars, terms)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`;
    /// index `k` holds the coefficient of `var^k`.
    pub fn coeffs_in(&self, var: &str) -> Vec<Poly> {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<BTreeMap<Exps, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.0.clone();
            let k = rest[idx] as usize;
            rest[idx] = 0;
            buckets[k].insert(Exps(rest), c.clone());
        }
        buckets
            .into_iter()
            .map(|t| Poly::from_parts(self.vars.clone(), t))
            .collect()
    }

    pub fn from_coeffs_in(var: &str, coeffs: &[Poly]) -> Poly {
        let x = Poly::var(var);
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let vars = merge_vars(&self.vars, &d.vars);
        let mut rem = self.aligned(&vars);
        let div = d.aligned(&vars);
        let (dlm, dlc) = div.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut quot: BTreeMap<Exps, Rational> = BTreeMap::new();
        while let Some((rlm, rlc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if !dlm.divides(&rlm) {
                return None;
            }
            let shift: Vec<u32> = rlm.0.iter().zip(&dlm.0).map(|(a, b)| a - b).collect();
            let k = rlc / &dlc;
            for (e, c) in &div {
                let m = Exps(e.0.iter().zip(&shift).map(|(a, b)| a + b).collect());
                let entry = rem.entry(m.clone()).or_insert_with(Rational::zero);
                *entry -= c * &k;
                if entry.is_zero() {
                    rem.remove(&m);
                }
            }
            quot.insert(Exps(shift), k);
        }
        Some(Poly::from_parts(vars, quot))
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: &str, value: &Poly) -> Poly {
        if !self.mentions(var) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(var);
        let mut acc = Poly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Floating-point evaluation; `None` if some variable is unassigned.
    pub fn eval_f64(&self, values: &HashMap<String, f64>) -> Option<f64> {
        let vals: Option<Vec<f64>> = self.vars.iter().map(|v| values.get(v).copied()).collect();
        let vals = vals?;
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut t = c.to_f64()?;
            for (x, k) in vals.iter().zip(&e.0) {
                t *= x.powi(*k as i32);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Rational content: the positive rational `q` such that `self / q` has
    /// coprime integer coefficients.
    pub fn rational_content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    fn fmt_monomial(&self, e: &Exps) -> String {
        let mut parts = Vec::new();
        for (name, k) in self.vars.iter().zip(&e.0) {
            match k {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{k}")),
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = self.fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{}", fmt_abs(c))?;
            } else if c.abs().is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_abs(c))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                let f: fn(&Poly, &Poly) -> Poly = $body;
                f(self, rhs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.combine(b, 1));
forward_binop!(Sub, sub, |a, b| a.combine(b, -1));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
