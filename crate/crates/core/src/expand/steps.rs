use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactcas::{Poly, Scalar};
use crate::liealg::{Decomposition, Family, LieAlgebra};
use crate::uea::{casimir, casimir_formula, PbwMonomial, UEAElement};

use super::problem::ExpansionProblem;
use super::{ExpandError, ALPHAS};

/// `C'_l = base + w_a * jpiece`.
#[derive(Clone, Debug, PartialEq)]
pub struct CasimirSplit {
    pub index: u8,
    pub full: UEAElement,
    pub base: UEAElement,
    pub jpiece: UEAElement,
}

/// Splits each coefficient `p0 + w_a p1` of the target Casimir formula,
/// evaluated on the initial generators.
pub fn split_casimirs(p: &ExpansionProblem) -> Result<Vec<CasimirSplit>, ExpandError> {
    let g = &p.initial;
    let sym = p.symbol.as_str();
    let mut out = Vec::new();
    for index in [1u8, 2] {
        let full = casimir_formula(g, &p.split_params.0, &p.split_params.1, index)?;
        let mut base = Vec::new();
        let mut jpiece = Vec::new();
        for (m, c) in full.terms() {
            if c.denom().mentions(sym) {
                return Err(ExpandError::NonLinearSplit(index, sym.into()));
            }
            let parts = c.numer().coeffs_in(sym);
            if parts.len() > 2 {
                return Err(ExpandError::NonLinearSplit(index, sym.into()));
            }
            let den = Scalar::from_poly(c.denom().clone());
            let part = |k: usize| -> Result<Scalar, ExpandError> {
                let num = parts.get(k).cloned().unwrap_or_else(Poly::zero);
                Ok(Scalar::from_poly(num).checked_div(&den)?)
            };
            base.push((m.clone(), part(0)?));
            jpiece.push((m.clone(), part(1)?));
        }
        let base = UEAElement::from_terms(g, base);
        let jpiece = UEAElement::from_terms(g, jpiece);
        let rebuilt = base.add(&jpiece.scale(&Scalar::var(sym)))?;
        assert_eq!(rebuilt, full, "split reproduces the Casimir");
        assert!(!base.mentions(sym) && !jpiece.mentions(sym));
        let own = match g.family() {
            Family::CayleyKlein { .. } => casimir(g, index)?,
            _ => {
                let zero = Scalar::zero();
                let (w1, w2) = if p.axis == 1 {
                    (&zero, &p.split_params.1)
                } else {
                    (&p.split_params.0, &zero)
                };
                casimir_formula(g, w1, w2, index)?
            }
        };
        assert_eq!(base, own, "base part is the initial Casimir");
        out.push(CasimirSplit {
            index,
            full,
            base,
            jpiece,
        });
    }
    Ok(out)
}

/// `J = a1 J1 + a2 J2`, with the unknowns that actually occur.
pub fn build_j(splits: &[CasimirSplit]) -> Result<(UEAElement, Vec<String>), ExpandError> {
    let g = splits[0].full.algebra();
    let mut j = UEAElement::zero(g);
    let mut unknowns = Vec::new();
    for (s, a) in splits.iter().zip(ALPHAS) {
        if !s.jpiece.is_zero() {
            j = j.add(&s.jpiece.scale(&Scalar::var(a)))?;
            unknowns.push(a.to_string());
        }
    }
    if j.is_zero() {
        return Err(ExpandError::NothingToExpand(
            "both Casimirs are independent of the expanded coefficient".into(),
        ));
    }
    Ok((j, unknowns))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub k: Vec<String>,
    pub t: Vec<String>,
    /// `[k,k] ⊂ k`.
    pub k_closes: bool,
    /// `[k,t] ⊂ t`.
    pub kt_in_t: bool,
    /// Some `[k,t]` has a component along `k`.
    pub kt_meets_k: bool,
    pub holds: bool,
    pub violations: Vec<String>,
}

/// `k` = generators commuting with `J`, `t` = the rest; checks the closure
/// hypotheses on the initial algebra.
pub fn centralizer_split(
    g: &Arc<LieAlgebra>,
    j: &UEAElement,
) -> Result<(Decomposition, HypothesisReport), ExpandError> {
    let mut k = Vec::new();
    let mut t = Vec::new();
    for x in 0..g.dim() {
        if j.commutator(&UEAElement::generator(g, x))?.is_zero() {
            k.push(x);
        } else {
            t.push(x);
        }
    }
    let d = Decomposition::new(k, t, g.dim())?;
    let mut violations = Vec::new();
    let mut k_closes = true;
    for (n, &a) in d.k.iter().enumerate() {
        for &b in &d.k[n + 1..] {
            for z in g.bracket(a, b).keys() {
                if !d.k.contains(z) {
                    k_closes = false;
                    violations.push(format!("[{},{}] has {} outside k", g.label(a), g.label(b), g.label(*z)));
                }
            }
        }
    }
    let mut kt_in_t = true;
    for &a in &d.k {
        for &b in &d.t {
            for z in g.bracket(a, b).keys() {
                if d.k.contains(z) {
                    kt_in_t = false;
                    violations.push(format!("[{},{}] has {} in k", g.label(a), g.label(b), g.label(*z)));
                }
            }
        }
    }
    let report = HypothesisReport {
        k: Decomposition::labels(g, &d.k),
        t: Decomposition::labels(g, &d.t),
        k_closes,
        kt_in_t,
        kt_meets_k: !kt_in_t,
        holds: k_closes && kt_in_t,
        violations,
    };
    Ok((d, report))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimedGenerator {
    pub index: usize,
    pub label: String,
    pub element: UEAElement,
    pub in_k: bool,
}

/// `X' = X` when `[J,X] = 0`, otherwise `X' = [J,X]`.
pub fn build_primed_generators(
    g: &Arc<LieAlgebra>,
    j: &UEAElement,
) -> Result<Vec<PrimedGenerator>, ExpandError> {
    let mut out = Vec::new();
    for x in 0..g.dim() {
        let gen = UEAElement::generator(g, x);
        let c = j.commutator(&gen)?;
        let in_k = c.is_zero();
        out.push(PrimedGenerator {
            index: x,
            label: g.label(x).into(),
            element: if in_k { gen } else { c },
            in_k,
        });
    }
    Ok(out)
}

/// Unit monomial helper for tests and callers building elements by hand.
pub fn monomial(g: &Arc<LieAlgebra>, word: &[usize]) -> UEAElement {
    UEAElement::from_terms(g, [(PbwMonomial::from_word(g.dim(), word), Scalar::one())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::ParamMode;
    use crate::uea::parse_element;

    fn problem(src: &str, dst: &str, axis: u8) -> ExpansionProblem {
        ExpansionProblem::from_keys(src, dst, axis, ParamMode::Symbolic).unwrap()
    }

    #[test]
    fn poincare_split() {
        let p = problem("poincare", "so22", 1);
        let s = split_casimirs(&p).unwrap();
        let g = &p.initial;
        assert_eq!(s[0].jpiece, parse_element(g, "K1^2 + K2^2 + w2 J^2").unwrap());
        assert!(s[1].jpiece.is_zero());
        let (j, unknowns) = build_j(&s).unwrap();
        assert_eq!(unknowns, ["a1"]);
        assert_eq!(j, parse_element(g, "a1 (K1^2 + K2^2 + w2 J^2)").unwrap());
    }

    #[test]
    fn newton_hooke_and_galilei_splits() {
        let p = problem("nh-plus", "so4", 2);
        let s = split_casimirs(&p).unwrap();
        let g = &p.initial;
        assert_eq!(s[0].jpiece, parse_element(g, "H^2 + w1 J^2").unwrap());
        assert_eq!(s[1].jpiece, parse_element(g, "J H").unwrap());
        let p = problem("galilei", "poincare", 2);
        let s = split_casimirs(&p).unwrap();
        assert_eq!(s[0].jpiece, parse_element(&p.initial, "H^2").unwrap());
        assert_eq!(s[1].jpiece, parse_element(&p.initial, "J H").unwrap());
    }

    #[test]
    fn centralizers() {
        let p = problem("poincare", "so22", 1);
        let (j, _) = build_j(&split_casimirs(&p).unwrap()).unwrap();
        let (_, h) = centralizer_split(&p.initial, &j).unwrap();
        assert_eq!(h.k, ["K1", "K2", "J"]);
        assert!(h.holds);

        let p = problem("nh-minus", "so31-ds", 2);
        let (j, _) = build_j(&split_casimirs(&p).unwrap()).unwrap();
        let (_, h) = centralizer_split(&p.initial, &j).unwrap();
        assert_eq!(h.k, ["H", "J"]);
        assert!(h.holds);

        let p = problem("galilei", "nh-plus", 1);
        let (j, _) = build_j(&split_casimirs(&p).unwrap()).unwrap();
        assert_eq!(j, parse_element(&p.initial, "a1 (K1^2 + K2^2)").unwrap());
        let (_, h) = centralizer_split(&p.initial, &j).unwrap();
        assert!(h.k_closes);
        assert!(!h.holds && h.kt_meets_k);
    }

    #[test]
    fn primed_generators_in_closed_form() {
        let p = problem("poincare", "so22", 1);
        let (j, _) = build_j(&split_casimirs(&p).unwrap()).unwrap();
        let primed = build_primed_generators(&p.initial, &j).unwrap();
        let g = &p.initial;
        assert_eq!(primed[0].element, parse_element(g, "2 a1 (K1 P1 + K2 P2 + w2 H)").unwrap());
        assert_eq!(primed[1].element, parse_element(g, "2 w2 a1 (J P2 - K1 H + P1)").unwrap());

        let p = problem("ext-galilei", "nh-plus", 1);
        let (j, _) = build_j(&split_casimirs(&p).unwrap()).unwrap();
        let primed = build_primed_generators(&p.initial, &j).unwrap();
        let g = &p.initial;
        assert_eq!(primed[0].element, parse_element(g, "2 a1 (K1 P1 + K2 P2 + m Xi)").unwrap());
        assert_eq!(primed[1].element, parse_element(g, "-2 a1 m Xi K1").unwrap());

        let p = problem("galilei", "poincare", 2);
        let (j, _) = build_j(&split_casimirs(&p).unwrap()).unwrap();
        let primed = build_primed_generators(&p.initial, &j).unwrap();
        let g = &p.initial;
        assert_eq!(primed[1].element, parse_element(g, "a2 P2 H").unwrap());
        assert_eq!(primed[3].element, parse_element(g, "-2 a1 P1 H + a2 (K2 H - J P1)").unwrap());
    }
}
