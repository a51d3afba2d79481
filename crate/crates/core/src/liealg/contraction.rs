//! Structural Inönü–Wigner contractions: rescale some generators by epsilon,
//! rewrite the structure constants, keep the epsilon-free part.

use serde::{Deserialize, Serialize};

use super::algebra::{Family, LieAlgebra, LinComb};
use super::catalog::name_for_values;
use super::LieError;
use crate::exactcas::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContractionKind {
    /// `H, P_i -> eps H, eps P_i`; sends `w1` to zero.
    SpaceTime,
    /// `P_i, K_i -> eps P_i, eps K_i`; sends `w2` to zero.
    SpeedSpace,
}

impl ContractionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ContractionKind::SpaceTime => "space-time",
            ContractionKind::SpeedSpace => "speed-space",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "space-time" | "spacetime" => Some(ContractionKind::SpaceTime),
            "speed-space" | "speedspace" => Some(ContractionKind::SpeedSpace),
            _ => None,
        }
    }

    /// The curvature axis (1 or 2) this contraction kills.
    pub fn axis(self) -> u8 {
        match self {
            ContractionKind::SpaceTime => 1,
            ContractionKind::SpeedSpace => 2,
        }
    }

    pub fn for_axis(axis: u8) -> Option<Self> {
        match axis {
            1 => Some(ContractionKind::SpaceTime),
            2 => Some(ContractionKind::SpeedSpace),
            _ => None,
        }
    }

    fn scaled(self, label: &str) -> bool {
        match self {
            ContractionKind::SpaceTime => matches!(label, "H" | "P1" | "P2"),
            ContractionKind::SpeedSpace => matches!(label, "P1" | "P2" | "K1" | "K2"),
        }
    }
}

/// `[eps^a X, eps^b Y] = sum c eps^(a+b-n) (eps^n Z)`: powers above zero
/// vanish in the limit, negative powers make the contraction undefined.
pub fn contract(g: &LieAlgebra, kind: ContractionKind) -> Result<LieAlgebra, LieError> {
    let power: Vec<i32> = g
        .generators()
        .iter()
        .map(|l| kind.scaled(l) as i32)
        .collect();
    let mut brackets = Vec::new();
    for ((i, j), comb) in g.brackets() {
        let mut kept = LinComb::new();
        for (n, c) in comb {
            let p = power[*i] + power[*j] - power[*n];
            if p < 0 {
                return Err(LieError::NegativeEpsilonPower(format!(
                    "[{},{}] -> {}",
                    g.label(*i),
                    g.label(*j),
                    g.label(*n)
                )));
            }
            if p == 0 {
                kept.insert(*n, c.clone());
            }
        }
        brackets.push(((*i, *j), kept));
    }
    let (family, name) = match g.family() {
        Family::CayleyKlein { w1, w2 } => {
            let (w1, w2) = match kind {
                ContractionKind::SpaceTime => (Scalar::zero(), w2.clone()),
                ContractionKind::SpeedSpace => (w1.clone(), Scalar::zero()),
            };
            let name = name_for_values(&w1, &w2);
            (Family::CayleyKlein { w1, w2 }, name)
        }
        _ => (Family::Custom, format!("{} ({} contracted)", g.name(), kind.as_str())),
    };
    LieAlgebra::new(name, g.generators().to_vec(), brackets, family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::families::{ck_symbolic, make_ck_algebra, make_extended_galilei};

    #[test]
    fn symbolic_contractions_zero_one_axis() {
        let g = ck_symbolic();
        let st = contract(&g, ContractionKind::SpaceTime).unwrap();
        assert!(st.same_structure(&make_ck_algebra(Scalar::zero(), Scalar::var("w2"))));
        let ss = contract(&g, ContractionKind::SpeedSpace).unwrap();
        assert!(ss.same_structure(&make_ck_algebra(Scalar::var("w1"), Scalar::zero())));
    }

    #[test]
    fn anti_de_sitter_to_poincare() {
        let ads = make_ck_algebra(Scalar::one(), Scalar::from_i64(-1));
        let c = contract(&ads, ContractionKind::SpaceTime).unwrap();
        assert_eq!(c.name(), "iso(2,1)");
    }

    #[test]
    fn contracting_twice_is_idempotent() {
        let g = contract(&ck_symbolic(), ContractionKind::SpeedSpace).unwrap();
        let again = contract(&g, ContractionKind::SpeedSpace).unwrap();
        assert!(g.same_structure(&again));
    }

    #[test]
    fn negative_power_rejected() {
        // [H,K1] = -P1 has power 1 + 0 - 1 = 0 under space-time; an algebra
        // with [K1,K2] = P1 would need power 0 + 0 - 1 under space-time.
        use crate::liealg::algebra::Family;
        let labels: Vec<String> = ["P1", "K1", "K2"].iter().map(|s| s.to_string()).collect();
        let comb: LinComb = [(0usize, Scalar::one())].into_iter().collect();
        let g = LieAlgebra::new("bad", labels, vec![((1, 2), comb)], Family::Custom).unwrap();
        assert!(matches!(
            contract(&g, ContractionKind::SpaceTime),
            Err(LieError::NegativeEpsilonPower(_))
        ));
    }

    #[test]
    fn extension_survives_speed_space_only_partially() {
        let g = make_extended_galilei(Scalar::var("m"));
        // [P1,K1] = m Xi has power 1 + 1 - 0 under speed-space: dropped.
        let c = contract(&g, ContractionKind::SpeedSpace).unwrap();
        assert!(c.bracket(1, 3).is_empty());
    }
}
