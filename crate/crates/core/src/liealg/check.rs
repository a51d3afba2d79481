//! Antisymmetry and Jacobi checks over every generator triple.

use serde::{Deserialize, Serialize};

use super::algebra::{lc_add_scaled, LieAlgebra, LinComb};
use crate::exactcas::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiResult {
    pub triple: [String; 3],
    /// `[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]]` as a generator combination.
    pub residual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    pub algebra: String,
    pub antisymmetric: bool,
    pub antisymmetry_issues: Vec<String>,
    pub jacobi: Vec<JacobiResult>,
    pub passed: bool,
}

impl StructureReport {
    pub fn failing_triples(&self) -> impl Iterator<Item = &JacobiResult> {
        self.jacobi.iter().filter(|r| !r.ok)
    }
}

pub fn jacobi_residual(g: &LieAlgebra, x: usize, y: usize, z: usize) -> LinComb {
    let one = Scalar::one();
    let single = |i: usize| -> LinComb { [(i, one.clone())].into_iter().collect() };
    let mut acc = LinComb::new();
    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
        let inner = g.bracket(b, c);
        let outer = g.bracket_lc(&single(a), &inner);
        lc_add_scaled(&mut acc, &outer, &one);
    }
    acc
}

pub fn check_structure(g: &LieAlgebra) -> StructureReport {
    let n = g.dim();
    let mut issues = Vec::new();
    for i in 0..n {
        if !g.bracket_terms(i, i).is_empty() {
            issues.push(format!("[{0},{0}] != 0", g.label(i)));
        }
        for j in i + 1..n {
            let ij = g.bracket(i, j);
            let ji: LinComb = g.bracket(j, i).into_iter().map(|(k, c)| (k, -c)).collect();
            if ij != ji {
                issues.push(format!("[{a},{b}] != -[{b},{a}]", a = g.label(i), b = g.label(j)));
            }
        }
    }
    let mut jacobi = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let r = jacobi_residual(g, i, j, k);
                jacobi.push(JacobiResult {
                    triple: [g.label(i).into(), g.label(j).into(), g.label(k).into()],
                    residual: g.fmt_lincomb(&r),
                    ok: r.is_empty(),
                });
            }
        }
    }
    let passed = issues.is_empty() && jacobi.iter().all(|r| r.ok);
    StructureReport {
        algebra: g.name().into(),
        antisymmetric: issues.is_empty(),
        antisymmetry_issues: issues,
        jacobi,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::algebra::Family;
    use crate::liealg::families::{ck_symbolic, make_extended_galilei, H, K1, P1};

    #[test]
    fn symbolic_family_passes() {
        let r = check_structure(&ck_symbolic());
        assert_eq!(r.jacobi.len(), 20);
        assert!(r.passed, "{:?}", r.failing_triples().collect::<Vec<_>>());
    }

    #[test]
    fn extension_passes() {
        let r = check_structure(&make_extended_galilei(Scalar::var("m")));
        assert_eq!(r.jacobi.len(), 35);
        assert!(r.passed);
    }

    #[test]
    fn flipped_boost_bracket_breaks_jacobi() {
        let g = ck_symbolic();
        let mut brackets: Vec<_> = g.brackets().iter().map(|(k, c)| (*k, c.clone())).collect();
        for (key, comb) in brackets.iter_mut() {
            if *key == (H, K1) {
                *comb = [(P1, Scalar::one())].into_iter().collect();
            }
        }
        let bad = LieAlgebra::new("bad", g.generators().to_vec(), brackets, Family::Custom).unwrap();
        let r = check_structure(&bad);
        assert!(!r.passed);
        assert!(r
            .failing_triples()
            .any(|t| t.triple.contains(&"H".to_string()) && t.triple.contains(&"K1".to_string())));
    }
}
