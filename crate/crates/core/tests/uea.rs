use std::collections::BTreeMap;
use std::sync::Arc;

use ck_core::exactcas::Scalar;
use ck_core::liealg::{builtin_algebra, builtin_names, ck_symbolic, LieAlgebra, ParamMode};
use ck_core::uea::{
    casimir, central_reduce, is_central, parse_element, pbw_normalize, CentralRelation, PbwMonomial,
    UEAElement, UeaError,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The nine grid cells plus the extended Galilei algebra, all symbolic.
fn algebras() -> Vec<Arc<LieAlgebra>> {
    builtin_names()
        .into_iter()
        .map(|k| Arc::new(builtin_algebra(k, ParamMode::Symbolic).unwrap()))
        .collect()
}

/// Normal ordering by repeated adjacent rewrites `X_b X_a -> X_a X_b + [X_b, X_a]`,
/// choosing which inversion to rewrite at random.
fn naive_normal_order(g: &LieAlgebra, word: &[usize], rng: &mut ChaCha8Rng) -> BTreeMap<Vec<usize>, Scalar> {
    let mut pending: Vec<(Vec<usize>, Scalar)> = vec![(word.to_vec(), Scalar::one())];
    let mut done: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|i| w[*i] > w[i + 1]).collect();
        if inversions.is_empty() {
            let e = done.entry(w).or_insert_with(Scalar::zero);
            *e = &*e + &c;
            continue;
        }
        let i = inversions[rng.gen_range(0..inversions.len())];
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        pending.push((swapped, c.clone()));
        for (n, k) in g.bracket(w[i], w[i + 1]) {
            let mut shorter = w[..i].to_vec();
            shorter.push(n);
            shorter.extend_from_slice(&w[i + 2..]);
            pending.push((shorter, &c * &k));
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

fn as_words(x: &UEAElement) -> BTreeMap<Vec<usize>, Scalar> {
    x.terms().map(|(m, c)| (m.word(), c.clone())).collect()
}

/// Random element: sum of up to three scaled words of length at most two.
fn random_element(g: &Arc<LieAlgebra>, rng: &mut ChaCha8Rng) -> UEAElement {
    let mut acc = UEAElement::zero(g);
    for _ in 0..rng.gen_range(1..=3) {
        let len = rng.gen_range(0..=2);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..g.dim())).collect();
        let coeff = Scalar::from_i64(rng.gen_range(-3..=3));
        acc = acc.add(&pbw_normalize(g, &word, coeff)).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// One random word per algebra per case: 200 words per algebra.
    #[test]
    fn normal_order_matches_adjacent_rewriting(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for g in algebras() {
            let len = rng.gen_range(0..=6);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..g.dim())).collect();
            let fast = pbw_normalize(&g, &word, Scalar::one());
            let slow = naive_normal_order(&g, &word, &mut rng);
            prop_assert_eq!(as_words(&fast), slow, "{} {:?}", g.name(), word);
            for (m, _) in fast.terms() {
                prop_assert!(m.degree() <= len);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalizing_a_normal_word_is_the_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for g in algebras() {
            let exps: Vec<u32> = (0..g.dim()).map(|_| rng.gen_range(0..=2)).collect();
            let m = PbwMonomial::from_exponents(exps);
            let x = pbw_normalize(&g, &m.word(), Scalar::var("q"));
            prop_assert_eq!(x, UEAElement::from_terms(&g, [(m, Scalar::var("q"))]));
        }
    }

    #[test]
    fn multiplication_is_associative_and_distributive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for g in algebras() {
            let (a, b, c) = (random_element(&g, &mut rng), random_element(&g, &mut rng), random_element(&g, &mut rng));
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&left, &right, "{}", g.name());
            let spread = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), spread);
            prop_assert!(a.commutator(&a).unwrap().is_zero());
            // [a,b] = -[b,a]
            prop_assert_eq!(a.commutator(&b).unwrap(), b.commutator(&a).unwrap().neg());
        }
    }

    /// x = remainder + sum (C_i - c_i) * cofactor_i.
    #[test]
    fn central_reduction_reconstructs_its_input(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Arc::new(ck_symbolic());
        let rels = relations(&g);
        let x = random_element(&g, &mut rng).mul(&random_element(&g, &mut rng)).unwrap();
        let r = central_reduce(&x, &rels, None).unwrap();
        prop_assert_eq!(r.reconstruct(&rels), x);
        // the remainder is already reduced
        let again = central_reduce(&r.remainder, &rels, Some(r.bound)).unwrap();
        prop_assert_eq!(again.remainder, r.remainder);
    }
}

fn relations(g: &Arc<LieAlgebra>) -> Vec<CentralRelation> {
    vec![
        CentralRelation::new("C1", casimir(g, 1).unwrap(), Scalar::var("c1")).unwrap(),
        CentralRelation::new("C2", casimir(g, 2).unwrap(), Scalar::var("c2")).unwrap(),
    ]
}

#[test]
fn degree_one_commutators_are_brackets() {
    for g in algebras() {
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let c = UEAElement::generator(&g, i)
                    .commutator(&UEAElement::generator(&g, j))
                    .unwrap();
                assert_eq!(c, UEAElement::from_lincomb(&g, &g.bracket(i, j)));
            }
        }
    }
}

#[test]
fn single_rewrite() {
    let g = Arc::new(ck_symbolic());
    // K1 H = H K1 + [K1,H] = H K1 + P1
    let x = pbw_normalize(&g, &[3, 0], Scalar::one());
    assert_eq!(x, parse_element(&g, "H*K1 + P1").unwrap());
}

#[test]
fn casimirs_are_central_and_match_the_written_formula() {
    let g = Arc::new(ck_symbolic());
    let c1 = parse_element(&g, "w2*H^2 + P1^2 + P2^2 + w1*(K1^2 + K2^2) + w1*w2*J^2").unwrap();
    let c2 = parse_element(&g, "w2*H*J - P1*K2 + P2*K1").unwrap();
    assert_eq!(casimir(&g, 1).unwrap(), c1);
    assert_eq!(casimir(&g, 2).unwrap(), c2);
    for g in algebras().into_iter().filter(|g| g.dim() == 6) {
        for i in [1, 2] {
            assert!(is_central(&casimir(&g, i).unwrap()).central, "{} C{i}", g.name());
        }
    }
    let galilei = Arc::new(builtin_algebra("galilei", ParamMode::Symbolic).unwrap());
    let h = UEAElement::generator(&galilei, 0);
    let w = is_central(&h).witness.unwrap();
    assert_eq!(w.0, "K1");
    assert_eq!(w.1, parse_element(&galilei, "-P1").unwrap());
}

#[test]
fn casimir_appears_in_a_product() {
    let g = Arc::new(builtin_algebra("poincare", ParamMode::Symbolic).unwrap());
    let rels = vec![CentralRelation::new("C1", casimir(&g, 1).unwrap(), Scalar::var("c1")).unwrap()];
    let x = parse_element(&g, "w2*K1*H^2 + K1*P1^2 + K1*P2^2").unwrap();
    let r = central_reduce(&x, &rels, None).unwrap();
    assert_eq!(r.remainder, parse_element(&g, "c1*K1").unwrap());
    assert_eq!(r.cofactors[0], parse_element(&g, "K1").unwrap());
    assert_eq!(r.reconstruct(&rels), x);
}

#[test]
fn bound_below_requirement_is_an_error() {
    let g = Arc::new(ck_symbolic());
    let rels = relations(&g);
    let x = parse_element(&g, "K1*H^2*P1").unwrap();
    assert!(matches!(
        central_reduce(&x, &rels, Some(1)),
        Err(UeaError::BoundExceeded { bound: 1, required: 2, degree: 4 })
    ));
    let not_central = UEAElement::generator(&g, 0);
    assert!(matches!(
        CentralRelation::new("H", not_central, Scalar::var("h")),
        Err(UeaError::NotCentral { .. })
    ));
}
