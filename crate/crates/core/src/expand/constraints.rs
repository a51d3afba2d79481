//! Bracket-by-bracket comparison of the primed generators with the target
//! structure constants: `D = [X'_i, X'_j] - sum_n C'^n_ij X'_n`, reduced
//! first modulo the central relations, then modulo the ideal in `a1`, `a2`.

use serde::{Deserialize, Serialize};

use crate::exactcas::{groebner_basis, RelationIdeal, Scalar, UnknownPoly};
use crate::uea::{default_bound, CentralReducer, CentralReduction, UEAElement};

use super::problem::{ExpandOptions, ExpansionProblem};
use super::steps::PrimedGenerator;
use super::ExpandError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BracketClass {
    #[serde(rename = "k'k'")]
    KK,
    #[serde(rename = "k't'")]
    KT,
    #[serde(rename = "t't'")]
    TT,
}

impl BracketClass {
    pub fn as_str(self) -> &'static str {
        match self {
            BracketClass::KK => "k'k'",
            BracketClass::KT => "k't'",
            BracketClass::TT => "t't'",
        }
    }
}

/// How one bracket's equations compare with those of the first bracket that
/// produced any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRelation {
    /// No equations.
    None,
    Identical,
    /// Strictly weaker: already implied by the first bracket.
    Subset,
    /// Adds equations not implied by the first bracket.
    Extends,
}

#[derive(Clone, Debug)]
pub(crate) struct PairData {
    pub i: usize,
    pub j: usize,
    pub class: BracketClass,
    pub difference: UEAElement,
    pub reduced: CentralReduction,
}

pub(crate) fn pair_data(
    p: &ExpansionProblem,
    primed: &[PrimedGenerator],
    opts: &ExpandOptions,
) -> Result<(Vec<PairData>, usize), ExpandError> {
    if p.target.generators() != p.initial.generators() {
        return Err(ExpandError::GeneratorMismatch);
    }
    let n = primed.len();
    let mut diffs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut d = primed[i].element.commutator(&primed[j].element)?;
            for (z, c) in p.target.bracket_terms(i, j) {
                d = d.sub(&primed[*z].element.scale(c))?;
            }
            let class = match (primed[i].in_k, primed[j].in_k) {
                (true, true) => BracketClass::KK,
                (false, false) => BracketClass::TT,
                _ => BracketClass::KT,
            };
            diffs.push((i, j, class, d));
        }
    }
    let needed = diffs
        .iter()
        .map(|(_, _, _, d)| default_bound(d, &p.relations))
        .max()
        .unwrap_or(0);
    let bound = opts.degree_bound.unwrap_or(needed);
    let reducer = CentralReducer::new(&p.initial, &p.relations, bound)?;
    let mut out = Vec::new();
    for (i, j, class, difference) in diffs {
        let reduced = reducer.reduce(&difference)?;
        out.push(PairData {
            i,
            j,
            class,
            difference,
            reduced,
        });
    }
    Ok((out, bound))
}

fn coefficient_equations(
    x: &UEAElement,
    unknowns: &[String],
) -> Result<Vec<UnknownPoly>, ExpandError> {
    let mut out: Vec<UnknownPoly> = Vec::new();
    for (_, c) in x.terms() {
        let up = UnknownPoly::from_scalar(c, unknowns)?;
        let up = UnknownPoly::from_poly(&up.primitive_form(), unknowns);
        if !up.is_zero() && !out.contains(&up) {
            out.push(up);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairConstraint {
    pub pair: [String; 2],
    pub class: BracketClass,
    pub equations: Vec<UnknownPoly>,
    pub relation: PairRelation,
}

/// The equations on the expansion constants and how each bracket
/// contributes to them.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintSet {
    pub unknowns: Vec<String>,
    pub ideal: RelationIdeal,
    pub pairs: Vec<PairConstraint>,
    pub first_pair: Option<[String; 2]>,
    /// Every bracket's equations are implied by the first bracket's.
    pub consistent_across_pairs: bool,
    pub degree_bound: usize,
}

pub(crate) fn collect_constraints(
    p: &ExpansionProblem,
    data: &[PairData],
    unknowns: &[String],
    bound: usize,
) -> Result<ConstraintSet, ExpandError> {
    let g = &p.initial;
    let mut per_pair = Vec::new();
    let mut all = Vec::new();
    for d in data {
        let eqs = coefficient_equations(&d.reduced.remainder, unknowns)?;
        for e in &eqs {
            if !all.contains(e) {
                all.push(e.clone());
            }
        }
        per_pair.push((d, eqs));
    }
    let ideal = groebner_basis(&all, unknowns)?;
    let mut first: Option<(usize, RelationIdeal)> = None;
    let mut pairs = Vec::new();
    for (n, (d, eqs)) in per_pair.into_iter().enumerate() {
        let relation = if eqs.is_empty() {
            PairRelation::None
        } else {
            let own = groebner_basis(&eqs, unknowns)?;
            match &first {
                None => {
                    first = Some((n, own));
                    PairRelation::Identical
                }
                Some((_, f)) if f.same_ideal(&own) => PairRelation::Identical,
                Some((_, f)) if f.contains_ideal(&own) => PairRelation::Subset,
                Some(_) => PairRelation::Extends,
            }
        };
        pairs.push(PairConstraint {
            pair: [g.label(d.i).into(), g.label(d.j).into()],
            class: d.class,
            equations: eqs,
            relation,
        });
    }
    let first_pair = first.map(|(n, _)| pairs[n].pair.clone());
    let consistent_across_pairs = pairs.iter().all(|c| c.relation != PairRelation::Extends);
    Ok(ConstraintSet {
        unknowns: unknowns.to_vec(),
        ideal,
        pairs,
        first_pair,
        consistent_across_pairs,
        degree_bound: bound,
    })
}

fn unknowns_of(primed: &[PrimedGenerator]) -> Vec<String> {
    super::ALPHAS
        .iter()
        .filter(|a| primed.iter().any(|x| x.element.mentions(a)))
        .map(|a| a.to_string())
        .collect()
}

/// The ideal in the expansion constants that makes every bracket match.
/// An unsatisfiable system (unit ideal) is an error naming the first
/// bracket that cannot be met on its own, or the last bracket otherwise.
pub fn derive_constraints(
    p: &ExpansionProblem,
    primed: &[PrimedGenerator],
    opts: &ExpandOptions,
) -> Result<ConstraintSet, ExpandError> {
    let (data, bound) = pair_data(p, primed, opts)?;
    let set = collect_constraints(p, &data, &unknowns_of(primed), bound)?;
    if set.ideal.is_unit() {
        let culprit = set
            .pairs
            .iter()
            .find(|c| {
                groebner_basis(&c.equations, &set.unknowns).is_ok_and(|i| i.is_unit())
            })
            .or_else(|| set.pairs.iter().rev().find(|c| !c.equations.is_empty()))
            .expect("a unit ideal has generators");
        let eq = culprit
            .equations
            .first()
            .map(UnknownPoly::equation)
            .unwrap_or_default();
        return Err(ExpandError::Inconsistent(
            culprit.pair[0].clone(),
            culprit.pair[1].clone(),
            eq,
        ));
    }
    Ok(set)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub pair: [String; 2],
    pub class: BracketClass,
    /// The bracket matches with no reduction at all.
    pub exact: bool,
    /// The bracket matches after central reduction alone.
    pub central_only: bool,
    pub verified: bool,
    /// What is left after both reductions; `"0"` when verified.
    pub residual: String,
}

pub(crate) fn verdicts(
    p: &ExpansionProblem,
    data: &[PairData],
    ideal: &RelationIdeal,
) -> Result<Vec<PairVerdict>, ExpandError> {
    let g = &p.initial;
    let mut out = Vec::new();
    for d in data {
        let mut residual = Vec::new();
        for (m, c) in d.reduced.remainder.terms() {
            let up = UnknownPoly::from_scalar(c, ideal.unknowns())?;
            let r: Scalar = ideal.reduce(&up).to_scalar();
            residual.push((m.clone(), r));
        }
        let residual = UEAElement::from_terms(g, residual);
        out.push(PairVerdict {
            pair: [g.label(d.i).into(), g.label(d.j).into()],
            class: d.class,
            exact: d.difference.is_zero(),
            central_only: d.reduced.remainder.is_zero(),
            verified: residual.is_zero(),
            residual: residual.to_string(),
        });
    }
    Ok(out)
}

/// Checks every bracket of the problem's target against the primed
/// generators, using a previously derived ideal.
pub fn verify_expansion(
    p: &ExpansionProblem,
    primed: &[PrimedGenerator],
    constraints: &ConstraintSet,
    opts: &ExpandOptions,
) -> Result<Vec<PairVerdict>, ExpandError> {
    let (data, _) = pair_data(p, primed, opts)?;
    verdicts(p, &data, &constraints.ideal)
}
