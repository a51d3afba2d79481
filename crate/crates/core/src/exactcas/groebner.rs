//! Polynomials in a few designated unknowns (the expansion constants) with
//! coefficients in the parameter field, and Buchberger's algorithm over that
//! field.
//!
//! Monomial order: graded lexicographic, unknowns ranked in the order given
//! (`a1 > a2 > ...`). All bases are reduced and monic, so two ideals are
//! equal exactly when their bases compare equal.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use super::gcd::{poly_gcd, poly_lcm};
use super::poly::{Exps, Poly};
use super::rational::fmt_abs;
use super::scalar::Scalar;
use super::CasError;

pub const MAX_UNKNOWNS: usize = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct UnknownPoly {
    unknowns: Vec<String>,
    terms: BTreeMap<Exps, Scalar>,
}

impl UnknownPoly {
    pub fn zero(unknowns: &[String]) -> Self {
        UnknownPoly {
            unknowns: unknowns.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(unknowns: &[String], c: Scalar) -> Self {
        let mut p = Self::zero(unknowns);
        p.add_term(Exps(vec![0; unknowns.len()]), c);
        p
    }

    /// Splits every term of `p` into its unknown part and parameter part.
    pub fn from_poly(p: &Poly, unknowns: &[String]) -> Self {
        let idx: Vec<Option<usize>> = p
            .vars()
            .iter()
            .map(|v| unknowns.iter().position(|u| u == v))
            .collect();
        let mut buckets: BTreeMap<Exps, Poly> = BTreeMap::new();
        for (e, c) in p.terms() {
            let mut ue = vec![0u32; unknowns.len()];
            let mut factors: Vec<(&str, u32)> = Vec::new();
            for (k, x) in e.iter().enumerate() {
                match idx[k] {
                    Some(u) => ue[u] = *x,
                    None if *x > 0 => factors.push((p.vars()[k].as_str(), *x)),
                    None => {}
                }
            }
            let entry = buckets.entry(Exps(ue)).or_insert_with(Poly::zero);
            *entry = &*entry + &Poly::monomial(c.clone(), &factors);
        }
        let mut out = Self::zero(unknowns);
        for (e, c) in buckets {
            out.add_term(e, Scalar::from_poly(c));
        }
        out
    }

    /// Like [`Self::from_poly`] for a fraction; the denominator must be free
    /// of the unknowns.
    pub fn from_scalar(s: &Scalar, unknowns: &[String]) -> Result<Self, CasError> {
        if let Some(u) = unknowns.iter().find(|u| s.denom().mentions(u)) {
            return Err(CasError::UnknownInDenominator(u.clone()));
        }
        let mut p = Self::from_poly(s.numer(), unknowns);
        if !s.denom().is_one() {
            let d = Scalar::from_poly(s.denom().clone());
            for c in p.terms.values_mut() {
                *c = c.checked_div(&d)?;
            }
        }
        Ok(p)
    }

    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero and free of the unknowns.
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(|e| e.degree() == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Exps::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Exps, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn leading(&self) -> Option<(&Exps, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, lc)) => {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        let mut out = Self::zero(&self.unknowns);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    /// `self + k * x^shift * other`.
    fn add_shifted(&mut self, other: &Self, shift: &[u32], k: &Scalar) {
        for (e, c) in &other.terms {
            let m = Exps(e.0.iter().zip(shift).map(|(a, b)| a + b).collect());
            self.add_term(m, c * k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_shifted(other, &vec![0; self.unknowns.len()], &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_shifted(other, &vec![0; self.unknowns.len()], &-Scalar::one());
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.unknowns);
        for (e, c) in &self.terms {
            out.add_shifted(other, &e.0, c);
        }
        out
    }

    /// Back to a single polynomial over all symbols, denominators cleared and
    /// polynomial content removed; the leading rational is positive. This is
    /// the form used for display and for comparing constraints up to a unit.
    pub fn primitive_form(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den = Poly::one();
        for c in self.terms.values() {
            den = poly_lcm(&den, c.denom());
        }
        let coeffs: Vec<(Exps, Poly)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let k = den.div_exact(c.denom()).expect("lcm divides");
                (e.clone(), c.numer() * &k)
            })
            .collect();
        let mut content = Poly::zero();
        for (_, c) in &coeffs {
            content = poly_gcd(&content, c);
        }
        let mut total = Poly::zero();
        for (e, c) in coeffs {
            let c = c.div_exact(&content).expect("content divides");
            let factors: Vec<(&str, u32)> = self
                .unknowns
                .iter()
                .map(String::as_str)
                .zip(e.0.iter().copied())
                .filter(|(_, k)| *k > 0)
                .collect();
            total = &total + &(&c * &Poly::monomial(One::one(), &factors));
        }
        let q = total.rational_content();
        let total = total.scale(&q.recip());
        // sign from the leading unknown-monomial's leading coefficient
        let lead = UnknownPoly::from_poly(&total, &self.unknowns);
        let (_, lc) = lead.leading().expect("nonzero");
        if lc.numer().leading_coeff().is_negative() {
            -total
        } else {
            total
        }
    }

    /// Back to a fraction over all symbols, exactly.
    pub fn to_scalar(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let factors: Vec<(&str, u32)> = self
                .unknowns
                .iter()
                .map(String::as_str)
                .zip(e.0.iter().copied())
                .filter(|(_, k)| *k > 0)
                .collect();
            acc = &acc + &(c * &Scalar::from_poly(Poly::monomial(One::one(), &factors)));
        }
        acc
    }

    /// `"<primitive form> = 0"`, grouped by monomials in the unknowns.
    pub fn equation(&self) -> String {
        format!("{} = 0", UnknownPoly::from_poly(&self.primitive_form(), &self.unknowns))
    }
}

impl fmt::Display for UnknownPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = self
                .unknowns
                .iter()
                .zip(&e.0)
                .filter(|(_, k)| **k > 0)
                .map(|(u, k)| if *k == 1 { u.clone() } else { format!("{u}^{k}") })
                .collect();
            let mono = mono.join("*");
            // single-term polynomial coefficients print inline with their sign
            let inline = c.as_poly().filter(|p| p.is_monomial());
            let (neg, body) = match inline {
                Some(p) => {
                    let (_, lc) = p.leading().expect("nonzero");
                    let mag = p.scale(&lc.recip());
                    let mut s = if mag.is_one() { String::new() } else { mag.to_string() };
                    if !lc.abs().is_one() {
                        s = if s.is_empty() { fmt_abs(lc) } else { format!("{}*{s}", fmt_abs(lc)) };
                    }
                    (lc.is_negative(), s)
                }
                None => (false, format!("({c})")),
            };
            let sep = match (i, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = match (body.is_empty(), mono.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => mono,
                (false, true) => body,
                (false, false) => format!("{body}*{mono}"),
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

/// An ideal in the unknowns together with its reduced Gröbner basis.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationIdeal {
    unknowns: Vec<String>,
    generators: Vec<UnknownPoly>,
    groebner: Vec<UnknownPoly>,
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

fn shift(from: &Exps, to: &Exps) -> Vec<u32> {
    to.0.iter().zip(&from.0).map(|(a, b)| a - b).collect()
}

/// Full normal form of `p` against `basis` (leading terms of `basis` need not
/// be monic).
fn normal_form(p: &UnknownPoly, basis: &[UnknownPoly]) -> UnknownPoly {
    let mut work = p.clone();
    let mut rem = UnknownPoly::zero(&p.unknowns);
    while let Some((lm, lc)) = work.leading().map(|(e, c)| (e.clone(), c.clone())) {
        let reducer = basis
            .iter()
            .find(|g| g.leading().is_some_and(|(gm, _)| divides(gm, &lm)));
        match reducer {
            Some(g) => {
                let (gm, gc) = g.leading().expect("nonzero");
                let k = -lc.checked_div(gc).expect("nonzero leading coefficient");
                let s = shift(gm, &lm);
                work.add_shifted(g, &s, &k);
            }
            None => {
                work.terms.remove(&lm);
                rem.add_term(lm, lc);
            }
        }
    }
    rem
}

fn s_polynomial(f: &UnknownPoly, g: &UnknownPoly) -> UnknownPoly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let lcm = Exps(fm.0.iter().zip(&gm.0).map(|(a, b)| *a.max(b)).collect());
    let mut out = UnknownPoly::zero(&f.unknowns);
    out.add_shifted(f, &shift(fm, &lcm), &fc.inv().expect("nonzero"));
    out.add_shifted(g, &shift(gm, &lcm), &-gc.inv().expect("nonzero"));
    out
}

fn coprime(a: &Exps, b: &Exps) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| *x == 0 || *y == 0)
}

/// Reduced Gröbner basis of the ideal generated by `gens`. Zero generators
/// are dropped; more than [`MAX_UNKNOWNS`] unknowns is rejected.
pub fn groebner_basis(gens: &[UnknownPoly], unknowns: &[String]) -> Result<RelationIdeal, CasError> {
    if unknowns.len() > MAX_UNKNOWNS {
        return Err(CasError::TooManyUnknowns(unknowns.len()));
    }
    if let Some(g) = gens.iter().find(|g| g.unknowns != unknowns) {
        return Err(CasError::MismatchedUnknowns(g.unknowns.clone(), unknowns.to_vec()));
    }
    let generators: Vec<UnknownPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut basis: Vec<UnknownPoly> = generators.iter().map(UnknownPoly::monic).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, _) = basis[i].leading().expect("nonzero");
        let (mj, _) = basis[j].leading().expect("nonzero");
        if coprime(mi, mj) {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let k = basis.len() - 1;
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let groebner = reduce_basis(basis);
    Ok(RelationIdeal {
        unknowns: unknowns.to_vec(),
        generators,
        groebner,
    })
}

fn reduce_basis(mut basis: Vec<UnknownPoly>) -> Vec<UnknownPoly> {
    if let Some(unit) = basis.iter().find(|g| g.is_nonzero_constant()) {
        return vec![unit.monic()];
    }
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<UnknownPoly> = Vec::new();
    basis.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    for g in basis {
        let lm = g.leading().unwrap().0.clone();
        if !keep.iter().any(|k| divides(k.leading().unwrap().0, &lm)) {
            keep.push(g);
        }
    }
    let mut out: Vec<UnknownPoly> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<UnknownPoly> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = keep[i].leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut tail = keep[i].clone();
        tail.terms.remove(&lm);
        let mut g = normal_form(&tail, &others);
        g.add_term(lm, lc);
        out.push(g.monic());
    }
    out
}

impl RelationIdeal {
    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn generators(&self) -> &[UnknownPoly] {
        &self.generators
    }

    pub fn groebner(&self) -> &[UnknownPoly] {
        &self.groebner
    }

    pub fn is_unit(&self) -> bool {
        self.groebner.iter().any(UnknownPoly::is_nonzero_constant)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.groebner.is_empty()
    }

    pub fn reduce(&self, p: &UnknownPoly) -> UnknownPoly {
        normal_form(p, &self.groebner)
    }

    pub fn reduce_poly(&self, p: &Poly) -> UnknownPoly {
        self.reduce(&UnknownPoly::from_poly(p, &self.unknowns))
    }

    pub fn contains(&self, p: &UnknownPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &RelationIdeal) -> bool {
        other.groebner.iter().all(|g| self.contains(g))
    }

    /// Ideal equality; reduced monic bases are unique.
    pub fn same_ideal(&self, other: &RelationIdeal) -> bool {
        self.unknowns == other.unknowns && self.groebner == other.groebner
    }
}

/// Convenience: ideal generated by polynomials given over all symbols.
pub fn ideal_from_polys(polys: &[Poly], unknowns: &[String]) -> Result<RelationIdeal, CasError> {
    let gens: Vec<UnknownPoly> = polys
        .iter()
        .map(|p| UnknownPoly::from_poly(p, unknowns))
        .collect();
    groebner_basis(&gens, unknowns)
}
