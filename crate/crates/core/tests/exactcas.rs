use std::collections::BTreeMap;

use ck_core::exactcas::{
    groebner_basis, ideal_from_polys, parse_scalar, CasError, Poly, Rational, Scalar, UnknownPoly,
};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [&str; 3] = ["w1", "w2", "c1"];

/// Polynomial as a plain exponent map with integer coefficients.
type Naive = BTreeMap<[u32; 3], i64>;

fn naive_mul(a: &Naive, b: &Naive) -> Naive {
    let mut out = Naive::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn naive_add(a: &Naive, b: &Naive) -> Naive {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn to_poly(n: &Naive) -> Poly {
    let mut p = Poly::zero();
    for (e, c) in n {
        let factors: Vec<(&str, u32)> = VARS.iter().copied().zip(e.iter().copied()).collect();
        p = &p + &Poly::monomial(Rational::from_integer(BigInt::from(*c)), &factors);
    }
    p
}

fn naive() -> impl Strategy<Value = Naive> {
    prop::collection::vec(([0u32..3, 0u32..3, 0u32..3], -5i64..=5), 0..=5).prop_map(|terms| {
        let mut out = Naive::new();
        for (e, c) in terms {
            *out.entry(e).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    })
}

fn nonzero_naive() -> impl Strategy<Value = Naive> {
    naive().prop_filter("nonzero", |n| !n.is_empty())
}

/// `a/b == c/d` by cross-multiplication.
fn cross_eq(x: &Scalar, y: &Scalar) -> bool {
    x.numer() * y.denom() == y.numer() * x.denom()
}

fn unknowns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_naive_multiplier(a in naive(), b in naive()) {
        prop_assert_eq!(&to_poly(&a) * &to_poly(&b), to_poly(&naive_mul(&a, &b)));
    }

    #[test]
    fn distributivity(a in naive(), b in naive(), c in naive()) {
        let (pa, pb, pc) = (to_poly(&a), to_poly(&b), to_poly(&c));
        let lhs = &pa * &(&pb + &pc);
        prop_assert_eq!(&lhs, &(&(&pa * &pb) + &(&pa * &pc)));
        prop_assert_eq!(lhs, to_poly(&naive_mul(&a, &naive_add(&b, &c))));
    }

    #[test]
    fn ring_axioms(a in naive(), b in naive(), c in naive()) {
        let (pa, pb, pc) = (to_poly(&a), to_poly(&b), to_poly(&c));
        prop_assert_eq!(&pa + &pb, &pb + &pa);
        prop_assert_eq!(&pa * &pb, &pb * &pa);
        prop_assert_eq!(&(&pa * &pb) * &pc, &pa * &(&pb * &pc));
        prop_assert_eq!(&(&pa + &pb) + &pc, &pa + &(&pb + &pc));
        prop_assert!((&pa + &(-&pa)).is_zero());
        prop_assert_eq!(&pa - &pb, &pa + &(-&pb));
    }

    #[test]
    fn fraction_times_inverse_is_one(a in nonzero_naive(), b in nonzero_naive()) {
        let x = Scalar::new(to_poly(&a), to_poly(&b)).unwrap();
        let y = Scalar::new(to_poly(&b), to_poly(&a)).unwrap();
        let one = &x * &y;
        prop_assert!(one.is_one());
        prop_assert!(cross_eq(&one, &Scalar::one()));
    }

    #[test]
    fn structural_equality_is_cross_multiplication(
        a in naive(), b in nonzero_naive(), c in naive(), d in nonzero_naive(), k in nonzero_naive()
    ) {
        let x = Scalar::new(to_poly(&a), to_poly(&b)).unwrap();
        let y = Scalar::new(to_poly(&c), to_poly(&d)).unwrap();
        prop_assert_eq!(x == y, cross_eq(&x, &y));
        // same value written with a common factor
        let scaled = Scalar::new(&to_poly(&a) * &to_poly(&k), &to_poly(&b) * &to_poly(&k)).unwrap();
        prop_assert_eq!(&scaled, &x);
        prop_assert!(cross_eq(&scaled, &x));
        // symmetric and transitive through `scaled`
        prop_assert_eq!(cross_eq(&y, &x), cross_eq(&x, &y));
        prop_assert_eq!(cross_eq(&scaled, &y), cross_eq(&x, &y));
    }

    #[test]
    fn field_operations_agree_with_cross_multiplication(
        a in nonzero_naive(), b in nonzero_naive(), c in nonzero_naive(), d in nonzero_naive()
    ) {
        let (pa, pb, pc, pd) = (to_poly(&a), to_poly(&b), to_poly(&c), to_poly(&d));
        let x = Scalar::new(pa.clone(), pb.clone()).unwrap();
        let y = Scalar::new(pc.clone(), pd.clone()).unwrap();
        let sum = Scalar::new(&(&pa * &pd) + &(&pc * &pb), &pb * &pd).unwrap();
        prop_assert!(cross_eq(&(&x + &y), &sum));
        let quotient = x.checked_div(&y).unwrap();
        prop_assert!(cross_eq(&quotient, &Scalar::new(&pa * &pd, &pb * &pc).unwrap()));
    }

    /// q = h1 g1 + h2 g2 lies in the ideal; reduction is idempotent.
    #[test]
    fn ideal_membership(
        h1 in prop::collection::vec(-3i64..=3, 6),
        h2 in prop::collection::vec(-3i64..=3, 6),
        extra in -3i64..=3,
    ) {
        let u = unknowns(&["a1", "a2"]);
        let g = quadratics();
        let ideal = ideal_from_polys(&g, &u).unwrap();
        for gen in ideal.generators() {
            prop_assert!(ideal.reduce(gen).is_zero());
        }
        let cofactor = |h: &[i64]| {
            let s = format!(
                "({}) + ({})*a1 + ({})*a2 + ({})*a1^2 + ({})*a1*a2 + ({})*w1*a2^2",
                h[0], h[1], h[2], h[3], h[4], h[5]
            );
            parse_scalar(&s).unwrap().numer().clone()
        };
        let q = &(&cofactor(&h1) * &g[0]) + &(&cofactor(&h2) * &g[1]);
        let up = UnknownPoly::from_poly(&q, &u);
        prop_assert!(ideal.reduce(&up).is_zero());
        let off = UnknownPoly::from_poly(&(&q + &parse_scalar(&format!("{extra}*a1*a2^3 + a2^3")).unwrap().numer().clone()), &u);
        let once = ideal.reduce(&off);
        prop_assert_eq!(ideal.reduce(&once), once);
    }
}

/// The two Newton-Hooke quadratics:
/// `4 w1 c1 a1^2 + c1 a2^2 + 8 w1 c2 a1 a2 + w2` and
/// `4 w1 c2 a1^2 + c2 a2^2 + 2 c1 a1 a2`.
fn quadratics() -> Vec<Poly> {
    ["4*w1*c1*a1^2 + c1*a2^2 + 8*w1*c2*a1*a2 + w2", "4*w1*c2*a1^2 + c2*a2^2 + 2*c1*a1*a2"]
        .iter()
        .map(|s| parse_scalar(s).unwrap().numer().clone())
        .collect()
}

#[test]
fn newton_hooke_reductions() {
    let u = unknowns(&["a1", "a2"]);
    let ideal = ideal_from_polys(&quadratics(), &u).unwrap();
    // 2 w1 times the second quadratic
    let p = parse_scalar("8*w1^2*c2*a1^2 + 2*w1*c2*a2^2 + 4*w1*c1*a1*a2").unwrap();
    assert!(ideal.reduce(&UnknownPoly::from_scalar(&p, &u).unwrap()).is_zero());
    // w1 times (first quadratic - w2): reduces to -w1 w2
    let p = parse_scalar("4*w1^2*c1*a1^2 + w1*c1*a2^2 + 8*w1^2*c2*a1*a2").unwrap();
    let check = &(&quadratics()[0] * &Poly::var("w1")) - &parse_scalar("w1*w2").unwrap().numer().clone();
    assert_eq!(&check, p.numer());
    let r = ideal.reduce(&UnknownPoly::from_scalar(&p, &u).unwrap());
    assert_eq!(r.to_scalar(), parse_scalar("-w1*w2").unwrap());
}

#[test]
fn small_ideals() {
    let u = unknowns(&["a1", "a2"]);
    let mono = ideal_from_polys(&[Poly::var("a1"), Poly::var("a2")], &u).unwrap();
    assert_eq!(mono.groebner().len(), 2);
    let k = parse_scalar("a1^2 - k").unwrap();
    let principal = groebner_basis(&[UnknownPoly::from_scalar(&k, &u).unwrap()], &u).unwrap();
    let a1sq = UnknownPoly::from_scalar(&parse_scalar("a1^2").unwrap(), &u).unwrap();
    assert_eq!(principal.reduce(&a1sq).to_scalar(), Scalar::var("k"));
    let s = parse_scalar("a1^2 + w1/(4*w2*c1)").unwrap();
    let single = groebner_basis(&[UnknownPoly::from_scalar(&s, &u).unwrap()], &u).unwrap();
    assert_eq!(single.groebner().len(), 1);
    assert!(!single.same_ideal(&principal));
}

#[test]
fn errors() {
    let x = Scalar::var("x");
    assert_eq!(x.checked_div(&Scalar::zero()), Err(CasError::DivisionByZero));
    assert!(matches!(parse_scalar("w1 +"), Err(CasError::Parse { .. })));
    let u = unknowns(&["a1", "a2", "a3", "a4"]);
    assert!(matches!(groebner_basis(&[], &u), Err(CasError::TooManyUnknowns(4))));
    let division = Scalar::new(Poly::var("w1"), Poly::var("w2")).unwrap();
    assert_eq!(division.numer(), &Poly::var("w1"));
    assert_eq!(division.denom(), &Poly::var("w2"));
}
