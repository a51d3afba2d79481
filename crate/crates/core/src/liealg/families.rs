//! The two-parameter Cayley–Klein family and the centrally extended Galilei
//! algebra.

use crate::exactcas::Scalar;

use super::algebra::{Family, LieAlgebra, LinComb};
use super::catalog;

// Fixed global generator order.
pub const H: usize = 0;
pub const P1: usize = 1;
pub const P2: usize = 2;
pub const K1: usize = 3;
pub const K2: usize = 4;
pub const J: usize = 5;
pub const XI: usize = 6;

pub const CK_LABELS: [&str; 6] = ["H", "P1", "P2", "K1", "K2", "J"];
pub const EXT_LABELS: [&str; 7] = ["H", "P1", "P2", "K1", "K2", "J", "Xi"];

fn lc(terms: &[(usize, Scalar)]) -> LinComb {
    terms.iter().filter(|(_, c)| !c.is_zero()).cloned().collect()
}

fn one() -> Scalar {
    Scalar::one()
}

fn minus() -> Scalar {
    -Scalar::one()
}

/// Brackets shared by the whole family, for given `w1`, `w2`:
///
/// ```text
/// [J,P_i] = eps_ij P_j    [J,K_i] = eps_ij K_j    [J,H] = 0
/// [P1,P2] = w1 w2 J       [K1,K2] = w2 J          [P_i,K_j] = delta_ij w2 H
/// [H,P_i] = w1 K_i        [H,K_i] = -P_i
/// ```
fn ck_brackets(w1: &Scalar, w2: &Scalar) -> Vec<((usize, usize), LinComb)> {
    vec![
        ((P1, J), lc(&[(P2, minus())])),
        ((P2, J), lc(&[(P1, one())])),
        ((K1, J), lc(&[(K2, minus())])),
        ((K2, J), lc(&[(K1, one())])),
        ((P1, P2), lc(&[(J, w1 * w2)])),
        ((K1, K2), lc(&[(J, w2.clone())])),
        ((P1, K1), lc(&[(H, w2.clone())])),
        ((P2, K2), lc(&[(H, w2.clone())])),
        ((H, P1), lc(&[(K1, w1.clone())])),
        ((H, P2), lc(&[(K2, w1.clone())])),
        ((H, K1), lc(&[(P1, minus())])),
        ((H, K2), lc(&[(P2, minus())])),
    ]
}

/// Cayley–Klein algebra with the given curvature coefficients. Named after
/// its catalog cell when both values are numeric.
pub fn make_ck_algebra(w1: Scalar, w2: Scalar) -> LieAlgebra {
    let name = catalog::name_for_values(&w1, &w2);
    let generators = CK_LABELS.iter().map(|s| s.to_string()).collect();
    let brackets = ck_brackets(&w1, &w2);
    LieAlgebra::new(name, generators, brackets, Family::CayleyKlein { w1, w2 })
        .expect("family brackets are well formed")
}

/// The family with both coefficients symbolic (`w1`, `w2`).
pub fn ck_symbolic() -> LieAlgebra {
    make_ck_algebra(Scalar::var("w1"), Scalar::var("w2"))
}

/// Galilei algebra centrally extended by `Xi` with `[P_i,K_j] = delta_ij m Xi`.
pub fn make_extended_galilei(m: Scalar) -> LieAlgebra {
    let generators = EXT_LABELS.iter().map(|s| s.to_string()).collect();
    let zero = Scalar::zero();
    let mut brackets = ck_brackets(&zero, &zero);
    brackets.push(((P1, K1), lc(&[(XI, m.clone())])));
    brackets.push(((P2, K2), lc(&[(XI, m.clone())])));
    LieAlgebra::new(
        "iiso(2)-ext",
        generators,
        brackets,
        Family::ExtendedGalilei { m },
    )
    .expect("extended Galilei brackets are well formed")
}

/// `g` with one extra central generator appended (label `Xi`).
pub fn with_central_generator(g: &LieAlgebra, label: &str) -> LieAlgebra {
    let mut generators = g.generators().to_vec();
    generators.push(label.to_string());
    let brackets = g
        .brackets()
        .iter()
        .map(|(k, comb)| (*k, comb.clone()))
        .collect();
    LieAlgebra::new(
        format!("{} + <{label}>", g.name()),
        generators,
        brackets,
        Family::Custom,
    )
    .expect("adding a central generator keeps the table valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcas::parse_scalar;

    fn s(src: &str) -> Scalar {
        parse_scalar(src).unwrap()
    }

    #[test]
    fn galilei_has_no_curvature_brackets() {
        let g = make_ck_algebra(Scalar::zero(), Scalar::zero());
        assert!(g.bracket(H, P1).is_empty());
        assert!(g.bracket(P1, P2).is_empty());
        assert!(g.bracket(K1, K2).is_empty());
        for p in [P1, P2] {
            for k in [K1, K2] {
                assert!(g.bracket(p, k).is_empty());
            }
        }
        assert_eq!(g.name(), "iiso(2)");
    }

    #[test]
    fn symbolic_family_brackets() {
        let g = ck_symbolic();
        assert_eq!(g.bracket(P1, P2), lc(&[(J, s("w1*w2"))]));
        assert_eq!(g.bracket(H, P2), lc(&[(K2, s("w1"))]));
        assert_eq!(g.bracket(K1, K2), lc(&[(J, s("w2"))]));
        assert_eq!(g.bracket(P2, K2), lc(&[(H, s("w2"))]));
        assert!(g.bracket(P1, K2).is_empty());
        assert_eq!(g.bracket(K1, H), lc(&[(P1, one())]));
        assert_eq!(g.bracket(J, P1), lc(&[(P2, one())]));
        assert_eq!(g.bracket(J, K2), lc(&[(K1, minus())]));
        assert!(g.bracket(J, H).is_empty());
        assert_eq!(g.parameters(), ["w1".to_string(), "w2".to_string()]);
    }

    #[test]
    fn de_sitter_cell() {
        let g = make_ck_algebra(Scalar::from_i64(-1), Scalar::from_i64(-1));
        assert_eq!(g.name(), "so(3,1)");
        assert_eq!(g.bracket(P1, P2), lc(&[(J, one())]));
        assert_eq!(g.bracket(H, P1), lc(&[(K1, minus())]));
    }

    #[test]
    fn extended_galilei_brackets() {
        let g = make_extended_galilei(Scalar::var("m"));
        assert_eq!(g.bracket(P1, K1), lc(&[(XI, s("m"))]));
        assert!(g.bracket(P1, K2).is_empty());
        for x in 0..7 {
            assert!(g.bracket(XI, x).is_empty());
        }
        let at_zero = g.specialize("m", &Scalar::zero()).unwrap();
        let galilei = make_ck_algebra(Scalar::zero(), Scalar::zero());
        assert!(at_zero.same_structure(&with_central_generator(&galilei, "Xi")));
    }
}
