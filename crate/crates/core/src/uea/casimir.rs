//! The two quadratic Casimir elements of the family:
//!
//! ```text
//! C1 = w2 H^2 + P1^2 + P2^2 + w1 (K1^2 + K2^2) + w1 w2 J^2
//! C2 = w2 H J - P1 K2 + P2 K1
//! ```

use std::sync::Arc;

use crate::exactcas::Scalar;
use crate::liealg::{Family, LieAlgebra};

use super::element::UEAElement;
use super::UeaError;

/// The formula for `C_index` with the given coefficient values, built in the
/// enveloping algebra of any algebra carrying the labels H, P1, P2, K1, K2,
/// J. Every product in the formula must have commuting factors in `g`.
pub fn casimir_formula(
    g: &Arc<LieAlgebra>,
    w1: &Scalar,
    w2: &Scalar,
    index: u8,
) -> Result<UEAElement, UeaError> {
    let ix = |l: &str| g.index_of(l).ok_or_else(|| UeaError::UnknownGenerator(l.into()));
    let (h, p1, p2, k1, k2, j) = (ix("H")?, ix("P1")?, ix("P2")?, ix("K1")?, ix("K2")?, ix("J")?);
    let one = Scalar::one();
    let products: Vec<(Scalar, usize, usize)> = match index {
        1 => vec![
            (w2.clone(), h, h),
            (one.clone(), p1, p1),
            (one.clone(), p2, p2),
            (w1.clone(), k1, k1),
            (w1.clone(), k2, k2),
            (w1 * w2, j, j),
        ],
        2 => vec![(w2.clone(), h, j), (-&one, p1, k2), (one, p2, k1)],
        _ => return Err(UeaError::UnsupportedCasimir(format!("index {index}"))),
    };
    let mut acc = UEAElement::zero(g);
    for (c, a, b) in products {
        if !g.bracket_terms(a, b).is_empty() {
            return Err(UeaError::OrderingAmbiguity(format!("{}{}", g.label(a), g.label(b))));
        }
        let term = UEAElement::generator(g, a)
            .mul(&UEAElement::generator(g, b))?
            .scale(&c);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `C_index` of a family algebra with its own coefficient values.
pub fn casimir(g: &Arc<LieAlgebra>, index: u8) -> Result<UEAElement, UeaError> {
    match g.family() {
        Family::CayleyKlein { w1, w2 } => {
            let (w1, w2) = (w1.clone(), w2.clone());
            casimir_formula(g, &w1, &w2, index)
        }
        _ => Err(UeaError::UnsupportedCasimir(g.name().into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{ck_symbolic, make_ck_algebra, make_extended_galilei};
    use crate::uea::text::parse_element;

    #[test]
    fn galilei_casimirs() {
        let g = Arc::new(make_ck_algebra(Scalar::zero(), Scalar::zero()));
        assert_eq!(casimir(&g, 1).unwrap(), parse_element(&g, "P1^2 + P2^2").unwrap());
        assert_eq!(casimir(&g, 2).unwrap(), parse_element(&g, "-P1 K2 + P2 K1").unwrap());
    }

    #[test]
    fn poincare_and_newton_hooke() {
        let p = Arc::new(make_ck_algebra(Scalar::zero(), Scalar::var("w2")));
        assert_eq!(casimir(&p, 1).unwrap(), parse_element(&p, "w2 H^2 + P1^2 + P2^2").unwrap());
        let nh = Arc::new(make_ck_algebra(Scalar::var("w1"), Scalar::zero()));
        assert_eq!(casimir(&nh, 2).unwrap(), parse_element(&nh, "-P1 K2 + P2 K1").unwrap());
    }

    #[test]
    fn symbolic_family() {
        let g = Arc::new(ck_symbolic());
        let c1 = parse_element(&g, "w2 H^2 + P1^2 + P2^2 + w1 (K1^2 + K2^2) + w1 w2 J^2").unwrap();
        assert_eq!(casimir(&g, 1).unwrap(), c1);
        assert_eq!(casimir(&g, 2).unwrap().degree(), 2);
    }

    #[test]
    fn extension_unsupported() {
        let g = Arc::new(make_extended_galilei(Scalar::var("m")));
        assert!(matches!(casimir(&g, 1), Err(UeaError::UnsupportedCasimir(_))));
        // The bare formula still builds on the extended generators.
        assert!(casimir_formula(&g, &Scalar::zero(), &Scalar::zero(), 1).is_ok());
    }
}
