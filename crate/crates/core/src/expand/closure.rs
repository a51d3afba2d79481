//! Whether the primed generators close among themselves, and whether the
//! resulting bracket table can be any algebra of the family.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactcas::{groebner_basis, Scalar, UnknownPoly};
use crate::liealg::{builtin_algebra, catalog, fmt_lincomb, LinComb, ParamMode};
use crate::uea::element::{add_term, Terms};
use crate::uea::{default_bound, CentralReducer, PbwMonomial, UEAElement};

use super::problem::{ExpandOptions, ExpansionProblem};
use super::steps::PrimedGenerator;
use super::ExpandError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureEntry {
    pub pair: [String; 2],
    /// The bracket as a combination of primed generators, if it is one.
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub closes: bool,
    pub table: Vec<ClosureEntry>,
    /// Grid cells whose structure constants the table can match for some
    /// values of the expansion constants.
    pub matching_cells: Vec<String>,
    pub checked_cells: usize,
}

/// Row-echelon span of a few vectors, remembering how each row was built.
struct Span {
    rows: Vec<(Terms, BTreeMap<usize, Scalar>)>,
    pivots: BTreeMap<PbwMonomial, usize>,
}

impl Span {
    fn new(vectors: &[Terms]) -> Result<Self, ExpandError> {
        let mut span = Span {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        };
        for (n, v) in vectors.iter().enumerate() {
            let (terms, cof) = span.eliminate(v.clone(), BTreeMap::from([(n, Scalar::one())]));
            if let Some((lead, c)) = terms.iter().next_back() {
                let inv = c.inv()?;
                let lead = lead.clone();
                let terms = terms.into_iter().map(|(m, x)| (m, &x * &inv)).collect();
                let cof = cof.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                span.pivots.insert(lead, span.rows.len());
                span.rows.push((terms, cof));
            }
        }
        Ok(span)
    }

    fn eliminate(
        &self,
        mut terms: Terms,
        mut cof: BTreeMap<usize, Scalar>,
    ) -> (Terms, BTreeMap<usize, Scalar>) {
        loop {
            let hit = terms
                .iter()
                .rev()
                .find(|(m, _)| self.pivots.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else { break };
            let (rt, rc) = &self.rows[self.pivots[&m]];
            for (mm, x) in rt {
                add_term(&mut terms, mm.clone(), -(x * &c));
            }
            for (k, x) in rc {
                let e = cof.entry(*k).or_insert_with(Scalar::zero);
                *e = &*e - &(x * &c);
            }
            cof.retain(|_, x| !x.is_zero());
        }
        (terms, cof)
    }

    /// Coefficients `f` with `v = sum f_n vectors[n]`, if any.
    fn solve(&self, v: &Terms) -> Option<LinComb> {
        let (rest, cof) = self.eliminate(v.clone(), BTreeMap::new());
        rest.is_empty()
            .then(|| cof.into_iter().map(|(k, x)| (k, -x)).collect())
    }
}

fn terms_of(x: &UEAElement) -> Terms {
    x.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

pub fn closure_analysis(
    p: &ExpansionProblem,
    primed: &[PrimedGenerator],
    opts: &ExpandOptions,
) -> Result<ClosureReport, ExpandError> {
    let g = &p.initial;
    let n = primed.len();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            brackets.push((i, j, primed[i].element.commutator(&primed[j].element)?));
        }
    }
    let needed = brackets
        .iter()
        .map(|(_, _, b)| b)
        .chain(primed.iter().map(|x| &x.element))
        .map(|x| default_bound(x, &p.relations))
        .max()
        .unwrap_or(0);
    let reducer = CentralReducer::new(g, &p.relations, opts.degree_bound.unwrap_or(needed))?;
    let basis: Vec<Terms> = primed
        .iter()
        .map(|x| Ok(terms_of(&reducer.reduce(&x.element)?.remainder)))
        .collect::<Result<_, ExpandError>>()?;
    let span = Span::new(&basis)?;
    let labels: Vec<String> = primed.iter().map(|x| format!("{}'", x.label)).collect();
    let mut table = Vec::new();
    let mut derived: Vec<((usize, usize), Option<LinComb>)> = Vec::new();
    for (i, j, b) in brackets {
        let nf = terms_of(&reducer.reduce(&b)?.remainder);
        let solved = span.solve(&nf);
        table.push(ClosureEntry {
            pair: [labels[i].clone(), labels[j].clone()],
            value: solved.as_ref().map(|c| fmt_lincomb(&labels, c)),
        });
        derived.push(((i, j), solved));
    }
    let closes = derived.iter().all(|(_, s)| s.is_some());
    let unknowns: Vec<String> = super::ALPHAS
        .iter()
        .filter(|a| primed.iter().any(|x| x.element.mentions(a)))
        .map(|a| a.to_string())
        .collect();
    let mut matching_cells = Vec::new();
    let mut checked_cells = 0;
    if closes {
        for entry in catalog().into_iter().filter(|e| e.signs.is_some()) {
            let cell = builtin_algebra(&entry.key, ParamMode::Representative)?;
            if cell.generators() != g.generators() {
                continue;
            }
            checked_cells += 1;
            let mut eqs = Vec::new();
            for ((i, j), f) in &derived {
                let f = f.as_ref().expect("closes");
                let want = cell.bracket(*i, *j);
                for z in f.keys().chain(want.keys()) {
                    let zero = Scalar::zero();
                    let d = f.get(z).unwrap_or(&zero) - want.get(z).unwrap_or(&zero);
                    if !d.is_zero() {
                        eqs.push(UnknownPoly::from_poly(d.numer(), &unknowns));
                    }
                }
            }
            if !groebner_basis(&eqs, &unknowns)?.is_unit() {
                matching_cells.push(entry.key);
            }
        }
    }
    Ok(ClosureReport {
        closes,
        table,
        matching_cells,
        checked_cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::steps::{build_j, build_primed_generators, split_casimirs};

    fn run(src: &str, dst: &str, axis: u8, mode: ParamMode) -> ClosureReport {
        let p = ExpansionProblem::from_keys(src, dst, axis, mode).unwrap();
        let (j, _) = build_j(&split_casimirs(&p).unwrap()).unwrap();
        let primed = build_primed_generators(&p.initial, &j).unwrap();
        closure_analysis(&p, &primed, &ExpandOptions::default()).unwrap()
    }

    #[test]
    fn non_extended_galilei_closes_off_the_grid() {
        let r = run("galilei", "nh-plus", 1, ParamMode::Symbolic);
        assert!(r.closes);
        assert_eq!(r.checked_cells, 9);
        assert!(r.matching_cells.is_empty(), "{:?}", r.matching_cells);
        let hk = r.table.iter().find(|e| e.pair == ["H'".to_string(), "K1'".to_string()]).unwrap();
        assert_eq!(hk.value.as_deref(), Some("0"));
    }

    #[test]
    fn a_working_expansion_matches_its_cell() {
        let r = run("poincare", "so22", 1, ParamMode::Representative);
        assert!(r.closes);
        assert!(r.matching_cells.contains(&"so22".to_string()));
    }
}
