//! Centrality tests and reduction modulo the two-sided ideal generated by
//! `element_i - scalar_i` for central elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactcas::Scalar;
use crate::liealg::LieAlgebra;

use super::element::{add_term, Terms, UEAElement};
use super::monomial::PbwMonomial;
use super::UeaError;

#[derive(Clone, Debug, PartialEq)]
pub struct Centrality {
    pub central: bool,
    /// First generator with a nonzero commutator, and that commutator.
    pub witness: Option<(String, UEAElement)>,
}

pub fn is_central(x: &UEAElement) -> Centrality {
    let g = x.algebra();
    for k in 0..g.dim() {
        let c = x
            .commutator(&UEAElement::generator(g, k))
            .expect("same algebra");
        if !c.is_zero() {
            return Centrality {
                central: false,
                witness: Some((g.label(k).to_string(), c)),
            };
        }
    }
    Centrality {
        central: true,
        witness: None,
    }
}

/// A central element together with the scalar it is identified with, as in
/// an irreducible representation (`C1 -> c1`).
#[derive(Clone, Debug, PartialEq)]
pub struct CentralRelation {
    pub name: String,
    pub element: UEAElement,
    pub scalar: Scalar,
}

impl CentralRelation {
    pub fn new(name: impl Into<String>, element: UEAElement, scalar: Scalar) -> Result<Self, UeaError> {
        let check = is_central(&element);
        if let Some((generator, residual)) = check.witness {
            return Err(UeaError::NotCentral {
                element: element.to_string(),
                generator,
                residual: residual.to_string(),
            });
        }
        Ok(CentralRelation {
            name: name.into(),
            element,
            scalar,
        })
    }

    /// `element - scalar`.
    pub fn ideal_generator(&self) -> UEAElement {
        let s = UEAElement::scalar(self.element.algebra(), self.scalar.clone());
        self.element.sub(&s).expect("same algebra")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CentralReduction {
    pub remainder: UEAElement,
    /// One cofactor per relation: `x = remainder + sum (element_i - scalar_i) * cofactor_i`.
    pub cofactors: Vec<UEAElement>,
    pub bound: usize,
}

impl CentralReduction {
    pub fn reconstruct(&self, relations: &[CentralRelation]) -> UEAElement {
        let mut acc = self.remainder.clone();
        for (r, k) in relations.iter().zip(&self.cofactors) {
            acc = acc
                .add(&r.ideal_generator().mul(k).expect("same algebra"))
                .expect("same algebra");
        }
        acc
    }
}

/// Cofactor degree needed to reach the top degree of `x`.
pub fn default_bound(x: &UEAElement, relations: &[CentralRelation]) -> usize {
    let min = relations.iter().map(|r| r.element.degree()).min().unwrap_or(0);
    x.degree().saturating_sub(min)
}

struct Row {
    terms: Terms,
    cof: BTreeMap<(usize, PbwMonomial), Scalar>,
}

impl Row {
    fn sub_scaled(&mut self, other: &Row, k: &Scalar) {
        for (m, c) in &other.terms {
            add_term(&mut self.terms, m.clone(), -(c * k));
        }
        for (key, c) in &other.cof {
            let e = self.cof.entry(key.clone()).or_insert_with(Scalar::zero);
            *e = &*e - &(c * k);
        }
        self.cof.retain(|_, c| !c.is_zero());
    }

    fn scale(&mut self, k: &Scalar) {
        for c in self.terms.values_mut() {
            *c = &*c * k;
        }
        for c in self.cof.values_mut() {
            *c = &*c * k;
        }
    }
}

/// Elimination rows for `(element_i - scalar_i) * m` over PBW monomials `m`
/// of degree at most `bound`, pivoted on their largest monomial. Built once
/// and reused for many reductions.
pub struct CentralReducer {
    relations: Vec<CentralRelation>,
    bound: usize,
    rows: Vec<Row>,
    pivots: BTreeMap<PbwMonomial, usize>,
}

impl CentralReducer {
    pub fn new(
        alg: &Arc<LieAlgebra>,
        relations: &[CentralRelation],
        bound: usize,
    ) -> Result<Self, UeaError> {
        let mut rows: Vec<Row> = Vec::new();
        let mut pivots: BTreeMap<PbwMonomial, usize> = BTreeMap::new();
        let monomials = PbwMonomial::all_up_to(alg.dim(), bound);
        for (ri, rel) in relations.iter().enumerate() {
            if !Arc::ptr_eq(rel.element.algebra(), alg) && !rel.element.algebra().same_structure(alg) {
                return Err(UeaError::MixedAlgebras(
                    alg.name().into(),
                    rel.element.algebra().name().into(),
                ));
            }
            let gen = rel.ideal_generator();
            for m in &monomials {
                let prod = gen.mul(&UEAElement::from_terms(alg, [(m.clone(), Scalar::one())]))?;
                let mut row = Row {
                    terms: prod.terms().map(|(m, c)| (m.clone(), c.clone())).collect(),
                    cof: BTreeMap::from([((ri, m.clone()), Scalar::one())]),
                };
                while let Some((lead, c)) = row.terms.iter().next_back() {
                    match pivots.get(lead) {
                        Some(&p) => {
                            let c = c.clone();
                            row.sub_scaled(&rows[p], &c);
                        }
                        None => {
                            let lead = lead.clone();
                            let inv = c.inv()?;
                            row.scale(&inv);
                            pivots.insert(lead, rows.len());
                            rows.push(row);
                            break;
                        }
                    }
                }
            }
        }
        Ok(CentralReducer {
            relations: relations.to_vec(),
            bound,
            rows,
            pivots,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn relations(&self) -> &[CentralRelation] {
        &self.relations
    }

    /// Fails with [`UeaError::BoundExceeded`] when `x` needs cofactors of
    /// higher degree than the rows cover.
    pub fn reduce(&self, x: &UEAElement) -> Result<CentralReduction, UeaError> {
        let g = x.algebra();
        let required = default_bound(x, &self.relations);
        if self.bound < required {
            return Err(UeaError::BoundExceeded {
                bound: self.bound,
                required,
                degree: x.degree(),
            });
        }
        let mut cur = Row {
            terms: x.terms().map(|(m, c)| (m.clone(), c.clone())).collect(),
            cof: BTreeMap::new(),
        };
        let mut upper: Option<PbwMonomial> = None;
        loop {
            let next = {
                let below: Box<dyn DoubleEndedIterator<Item = (&PbwMonomial, &Scalar)>> = match &upper {
                    Some(u) => Box::new(cur.terms.range(..u.clone())),
                    None => Box::new(cur.terms.iter()),
                };
                below
                    .rev()
                    .find(|(m, _)| self.pivots.contains_key(*m))
                    .map(|(m, c)| (m.clone(), c.clone()))
            };
            let Some((m, c)) = next else { break };
            // subtracting a row only touches smaller monomials
            cur.sub_scaled(&self.rows[self.pivots[&m]], &c);
            upper = Some(m);
        }
        // x = cur + sum c * row, so the cofactors are minus what `cur` carries
        let mut cofactors: Vec<Terms> = vec![Terms::new(); self.relations.len()];
        for ((ri, m), c) in cur.cof {
            add_term(&mut cofactors[ri], m, -c);
        }
        Ok(CentralReduction {
            remainder: UEAElement::from_terms(g, cur.terms),
            cofactors: cofactors
                .into_iter()
                .map(|t| UEAElement::from_terms(g, t))
                .collect(),
            bound: self.bound,
        })
    }
}

/// Normal form of `x` modulo the span of `(element_i - scalar_i) * m` over
/// PBW monomials `m` of degree at most `bound` (default: the degree needed
/// to reach the top degree of `x`). The remainder is zero iff `x` lies in
/// that span.
pub fn central_reduce(
    x: &UEAElement,
    relations: &[CentralRelation],
    bound: Option<usize>,
) -> Result<CentralReduction, UeaError> {
    let bound = bound.unwrap_or_else(|| default_bound(x, relations));
    CentralReducer::new(x.algebra(), relations, bound)?.reduce(x)
}
