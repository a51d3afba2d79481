use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::exactcas::{CasError, Scalar};
use crate::liealg::{LieAlgebra, LinComb};

use super::monomial::PbwMonomial;
use super::UeaError;

pub(crate) type Terms = BTreeMap<PbwMonomial, Scalar>;

pub(crate) fn add_term(terms: &mut Terms, m: PbwMonomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(old) => {
            let sum = &*old + &c;
            if sum.is_zero() {
                terms.remove(&m);
            } else {
                *old = sum;
            }
        }
        None => {
            terms.insert(m, c);
        }
    }
}

/// Right multiplication of PBW monomials by single generators, memoized for
/// the lifetime of one operation.
struct Normalizer<'a> {
    alg: &'a LieAlgebra,
    memo: HashMap<(PbwMonomial, usize), Terms>,
}

impl<'a> Normalizer<'a> {
    fn new(alg: &'a LieAlgebra) -> Self {
        Normalizer {
            alg,
            memo: HashMap::new(),
        }
    }

    /// `m * X_x` in normal order. With `l` the last generator of `m` and
    /// `m = m' X_l`, uses `m' X_l X_x = (m' X_x) X_l + m' [X_l, X_x]`.
    fn mono_times_gen(&mut self, m: &PbwMonomial, x: usize) -> Terms {
        let l = match m.last() {
            Some(l) if l > x => l,
            _ => return Terms::from([(m.with_inc(x), Scalar::one())]),
        };
        if let Some(hit) = self.memo.get(&(m.clone(), x)) {
            return hit.clone();
        }
        let rest = m.with_dec(l);
        let mut out = Terms::new();
        let swapped = self.mono_times_gen(&rest, x);
        for (mm, c) in swapped {
            for (mm2, c2) in self.mono_times_gen(&mm, l) {
                add_term(&mut out, mm2, &c * &c2);
            }
        }
        for (n, b) in self.alg.bracket_terms(l, x) {
            for (mm2, c2) in self.mono_times_gen(&rest, *n) {
                add_term(&mut out, mm2, b * &c2);
            }
        }
        self.memo.insert((m.clone(), x), out.clone());
        out
    }

    fn terms_times_word(&mut self, mut acc: Terms, word: &[usize]) -> Terms {
        for &x in word {
            let mut next = Terms::new();
            for (m, c) in &acc {
                for (mm, c2) in self.mono_times_gen(m, x) {
                    add_term(&mut next, mm, c * &c2);
                }
            }
            acc = next;
        }
        acc
    }
}

/// An element of the enveloping algebra: a finite sum of PBW monomials with
/// nonzero coefficients.
#[derive(Clone, Debug)]
pub struct UEAElement {
    alg: Arc<LieAlgebra>,
    terms: Terms,
}

/// The word `X_{w0} X_{w1} ...` times `coeff`, normal ordered.
pub fn pbw_normalize(alg: &Arc<LieAlgebra>, word: &[usize], coeff: Scalar) -> UEAElement {
    let mut n = Normalizer::new(alg);
    let mut start = Terms::new();
    add_term(&mut start, PbwMonomial::unit(alg.dim()), coeff);
    UEAElement {
        alg: alg.clone(),
        terms: n.terms_times_word(start, word),
    }
}

impl UEAElement {
    pub fn zero(alg: &Arc<LieAlgebra>) -> Self {
        UEAElement {
            alg: alg.clone(),
            terms: Terms::new(),
        }
    }

    pub fn scalar(alg: &Arc<LieAlgebra>, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, PbwMonomial::unit(alg.dim()), c);
        UEAElement {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn one(alg: &Arc<LieAlgebra>) -> Self {
        Self::scalar(alg, Scalar::one())
    }

    pub fn generator(alg: &Arc<LieAlgebra>, i: usize) -> Self {
        UEAElement {
            alg: alg.clone(),
            terms: Terms::from([(PbwMonomial::generator(alg.dim(), i), Scalar::one())]),
        }
    }

    pub fn from_lincomb(alg: &Arc<LieAlgebra>, comb: &LinComb) -> Self {
        let mut terms = Terms::new();
        for (i, c) in comb {
            add_term(&mut terms, PbwMonomial::generator(alg.dim(), *i), c.clone());
        }
        UEAElement {
            alg: alg.clone(),
            terms,
        }
    }

    /// Builds from monomials that are already PBW exponent vectors.
    pub fn from_terms(
        alg: &Arc<LieAlgebra>,
        terms: impl IntoIterator<Item = (PbwMonomial, Scalar)>,
    ) -> Self {
        let mut out = Terms::new();
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), alg.dim(), "monomial length");
            add_term(&mut out, m, c);
        }
        UEAElement {
            alg: alg.clone(),
            terms: out,
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<(&PbwMonomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(PbwMonomial::degree).max().unwrap_or(0)
    }

    /// The coefficient when the element is a multiple of the unit.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The generator combination when every term has degree one.
    pub fn as_lincomb(&self) -> Option<LinComb> {
        let mut out = LinComb::new();
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            out.insert(m.last().expect("degree one"), c.clone());
        }
        Some(out)
    }

    pub fn mentions(&self, var: &str) -> bool {
        self.terms.values().any(|c| c.mentions(var))
    }

    pub fn same_algebra(&self, other: &UEAElement) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg.same_structure(&other.alg)
    }

    fn check(&self, other: &UEAElement) -> Result<(), UeaError> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(UeaError::MixedAlgebras(
                self.alg.name().into(),
                other.alg.name().into(),
            ))
        }
    }

    pub fn add(&self, other: &UEAElement) -> Result<UEAElement, UeaError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(UEAElement {
            alg: self.alg.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &UEAElement) -> Result<UEAElement, UeaError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UEAElement {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, k: &Scalar) -> UEAElement {
        if k.is_zero() {
            return Self::zero(&self.alg);
        }
        self.map_coeffs(|c| c * k)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> UEAElement {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), f(c));
        }
        UEAElement {
            alg: self.alg.clone(),
            terms,
        }
    }

    pub fn substitute(&self, var: &str, value: &Scalar) -> Result<UEAElement, CasError> {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), c.substitute(var, value)?);
        }
        Ok(UEAElement {
            alg: self.alg.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &UEAElement) -> Result<UEAElement, UeaError> {
        self.check(other)?;
        let mut n = Normalizer::new(&self.alg);
        let mut out = Terms::new();
        for (mb, cb) in &other.terms {
            let word = mb.word();
            let start: Terms = self.terms.iter().map(|(m, c)| (m.clone(), c * cb)).collect();
            for (m, c) in n.terms_times_word(start, &word) {
                add_term(&mut out, m, c);
            }
        }
        Ok(UEAElement {
            alg: self.alg.clone(),
            terms: out,
        })
    }

    pub fn commutator(&self, other: &UEAElement) -> Result<UEAElement, UeaError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, k: u32) -> UEAElement {
        let mut acc = Self::one(&self.alg);
        for _ in 0..k {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    /// Renames the owning algebra handle; the generator lists must agree.
    pub fn rebase(&self, alg: &Arc<LieAlgebra>) -> UEAElement {
        assert_eq!(self.alg.generators(), alg.generators(), "same generators");
        UEAElement {
            alg: alg.clone(),
            terms: self.terms.clone(),
        }
    }
}

impl PartialEq for UEAElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.terms == other.terms
    }
}

impl fmt::Display for UEAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_element(self))
    }
}
