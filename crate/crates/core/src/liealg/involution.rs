//! Parity, time reversal and their product as sign maps on the generators.

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use super::LieError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InvolutionKind {
    P,
    T,
    PT,
}

impl InvolutionKind {
    pub fn all() -> [InvolutionKind; 3] {
        [InvolutionKind::P, InvolutionKind::T, InvolutionKind::PT]
    }

    pub fn as_str(self) -> &'static str {
        match self {
            InvolutionKind::P => "P",
            InvolutionKind::T => "T",
            InvolutionKind::PT => "PT",
        }
    }

    /// Sign on a generator label. `Xi` is fixed by all three by convention.
    fn sign(self, label: &str) -> Option<i8> {
        let (h, p, k) = match self {
            InvolutionKind::P => (1, -1, -1),
            InvolutionKind::T => (-1, 1, -1),
            InvolutionKind::PT => (-1, -1, 1),
        };
        match label {
            "H" => Some(h),
            "P1" | "P2" => Some(p),
            "K1" | "K2" => Some(k),
            "J" | "Xi" => Some(1),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    pub kind: InvolutionKind,
    pub signs: Vec<i8>,
}

impl Involution {
    pub fn for_algebra(kind: InvolutionKind, g: &LieAlgebra) -> Result<Self, LieError> {
        let signs = g
            .generators()
            .iter()
            .map(|l| {
                kind.sign(l)
                    .ok_or_else(|| LieError::UnsupportedInvolution(kind.as_str().into(), l.clone()))
            })
            .collect::<Result<_, _>>()?;
        Ok(Involution { kind, signs })
    }

    pub fn squares_to_identity(&self) -> bool {
        self.signs.iter().all(|s| s * s == 1)
    }
}

/// Partition of the generators into an invariant part `k` and its
/// complement `t` (indices, ascending).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub k: Vec<usize>,
    pub t: Vec<usize>,
}

impl Decomposition {
    pub fn new(mut k: Vec<usize>, mut t: Vec<usize>, dim: usize) -> Result<Self, LieError> {
        k.sort_unstable();
        t.sort_unstable();
        let mut all: Vec<usize> = k.iter().chain(&t).copied().collect();
        all.sort_unstable();
        if all != (0..dim).collect::<Vec<_>>() {
            return Err(LieError::InvalidDecomposition(format!(
                "{k:?} and {t:?} do not partition 0..{dim}"
            )));
        }
        Ok(Decomposition { k, t })
    }

    pub fn labels(g: &LieAlgebra, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|i| g.label(*i).to_string()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvolutionReport {
    pub involution: InvolutionKind,
    pub squares_to_identity: bool,
    pub automorphism: bool,
    /// Brackets whose image is not the bracket of the images.
    pub violations: Vec<String>,
    pub invariant: Vec<String>,
    pub anti_invariant: Vec<String>,
    #[serde(skip)]
    pub decomposition: Option<Decomposition>,
}

/// Checks `s([X,Y]) = [s(X),s(Y)]` on every pair and returns the +1 / -1
/// eigenspaces.
pub fn apply_involution(g: &LieAlgebra, kind: InvolutionKind) -> Result<InvolutionReport, LieError> {
    let inv = Involution::for_algebra(kind, g)?;
    let mut violations = Vec::new();
    for ((i, j), comb) in g.brackets() {
        let s = inv.signs[*i] * inv.signs[*j];
        for n in comb.keys() {
            if inv.signs[*n] != s {
                violations.push(format!(
                    "[{},{}] contains {} with the wrong sign",
                    g.label(*i),
                    g.label(*j),
                    g.label(*n)
                ));
            }
        }
    }
    let k: Vec<usize> = (0..g.dim()).filter(|i| inv.signs[*i] == 1).collect();
    let t: Vec<usize> = (0..g.dim()).filter(|i| inv.signs[*i] == -1).collect();
    let d = Decomposition::new(k, t, g.dim())?;
    Ok(InvolutionReport {
        involution: kind,
        squares_to_identity: inv.squares_to_identity(),
        automorphism: violations.is_empty(),
        violations,
        invariant: Decomposition::labels(g, &d.k),
        anti_invariant: Decomposition::labels(g, &d.t),
        decomposition: Some(d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcas::Scalar;
    use crate::liealg::families::{ck_symbolic, make_extended_galilei};

    #[test]
    fn all_three_preserve_the_family() {
        let g = ck_symbolic();
        for kind in InvolutionKind::all() {
            let r = apply_involution(&g, kind).unwrap();
            assert!(r.automorphism, "{kind:?}: {:?}", r.violations);
            assert!(r.squares_to_identity);
        }
    }

    #[test]
    fn pt_eigenspaces() {
        let r = apply_involution(&ck_symbolic(), InvolutionKind::PT).unwrap();
        assert_eq!(r.anti_invariant, ["H", "P1", "P2"]);
        assert_eq!(r.invariant, ["K1", "K2", "J"]);
        let p = apply_involution(&ck_symbolic(), InvolutionKind::P).unwrap();
        assert_eq!(p.anti_invariant, ["P1", "P2", "K1", "K2"]);
        assert_eq!(p.invariant, ["H", "J"]);
    }

    #[test]
    fn time_reversal_and_the_central_charge() {
        // With Xi fixed, T and PT flip [P_i,K_i] but not m Xi.
        let g = make_extended_galilei(Scalar::var("m"));
        assert!(apply_involution(&g, InvolutionKind::P).unwrap().automorphism);
        for kind in [InvolutionKind::T, InvolutionKind::PT] {
            let r = apply_involution(&g, kind).unwrap();
            assert!(!r.automorphism);
            assert_eq!(r.violations.len(), 2);
        }
    }

    #[test]
    fn bad_partition_rejected() {
        assert!(Decomposition::new(vec![0, 1], vec![1, 2], 3).is_err());
        assert!(Decomposition::new(vec![0], vec![1], 3).is_err());
    }
}
