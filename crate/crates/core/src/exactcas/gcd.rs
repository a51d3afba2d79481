//! Multivariate polynomial gcd over Q by recursive primitive remainder
//! sequences. Only used to keep fraction coefficients reduced; inputs in this
//! crate have a handful of variables and low degree.

use super::poly::Poly;

/// Monic gcd (leading coefficient 1 in the graded-lex order). `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        return monomial_gcd(a, b);
    }
    // A variable the gcd cannot involve lets both sides drop to their
    // contents in it, which keeps the remainder sequences small.
    for v in a.vars() {
        if b.mentions(v) && absent_from_gcd(a, b, v) {
            return poly_gcd(&content_in(a, v), &content_in(b, v));
        }
    }
    // Main variable: the shared one of lowest degree, for short sequences.
    let var = a
        .vars()
        .iter()
        .filter(|v| b.mentions(v))
        .min_by_key(|v| a.degree_in(v).max(b.degree_in(v)))
        .cloned();
    let Some(var) = var else {
        // No shared variable: any common factor is free of every variable.
        return Poly::one();
    };
    // Variables present in only one argument are handled through contents.
    let ca = content_in(a, &var);
    let cb = content_in(b, &var);
    let c = poly_gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = subresultant_prs(pa, pb, &var);
    (&c * &g).monic()
}

/// True when the gcd of `a` and `b` provably has degree 0 in `var`. Every
/// other variable is replaced by a small integer at which the leading
/// coefficient of `a` in `var` stays nonzero; the true gcd then divides the
/// univariate gcd of the images without losing degree in `var`.
fn absent_from_gcd(a: &Poly, b: &Poly, var: &str) -> bool {
    const POINTS: [i64; 3] = [3, 7, 13];
    let lead = a.coeffs_in(var).pop().expect("nonzero");
    let mut others: Vec<&String> = a.vars().iter().chain(b.vars()).filter(|w| *w != var).collect();
    others.sort();
    others.dedup();
    for (shift, base) in POINTS.iter().enumerate() {
        let at = |p: &Poly| {
            let mut out = p.clone();
            for (i, w) in others.iter().enumerate() {
                out = out.substitute(w, &Poly::from_i64(base + 2 * (i + shift) as i64));
            }
            out
        };
        if at(&lead).is_zero() {
            continue;
        }
        let (ua, ub) = (at(a), at(b));
        if ub.is_zero() {
            return false;
        }
        return subresultant_prs(ua, ub, var).degree_in(var) == 0;
    }
    false
}

/// Gcd of a monomial with anything: the componentwise minimum exponent over
/// all terms of both.
fn monomial_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut mins: Vec<(String, u32)> = Vec::new();
    for v in a.vars() {
        if !b.mentions(v) {
            continue;
        }
        let lo = |p: &Poly| {
            let idx = p.vars().iter().position(|w| w == v).unwrap();
            p.terms().map(|(e, _)| e[idx]).min().unwrap_or(0)
        };
        let k = lo(a).min(lo(b));
        if k > 0 {
            mins.push((v.clone(), k));
        }
    }
    let factors: Vec<(&str, u32)> = mins.iter().map(|(v, k)| (v.as_str(), *k)).collect();
    Poly::monomial(num_traits::One::one(), &factors)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &Poly, var: &str) -> Poly {
    let mut acc = Poly::zero();
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = poly_gcd(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part(p: &Poly, var: &str) -> Poly {
    let c = content_in(p, var);
    if c.is_zero() {
        return Poly::zero();
    }
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` in `var`.
fn pseudo_rem(a: &Poly, b: &Poly, var: &str) -> Poly {
    let da = a.degree_in(var);
    let db = b.degree_in(var);
    if da < db {
        return a.clone();
    }
    let lb = b.coeffs_in(var).pop().expect("nonzero");
    let x = Poly::var(var);
    let mut r = a.clone();
    let mut steps = 0;
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.coeffs_in(var).pop().expect("nonzero");
        let shift = &lr * &x.pow(dr - db);
        r = &(&lb * &r) - &(&shift * b);
        steps += 1;
    }
    &r * &lb.pow(da - db + 1 - steps)
}

/// Gcd of primitive polynomials by the subresultant remainder sequence; all
/// divisions are exact so coefficients stay polynomial and small.
fn subresultant_prs(a: Poly, b: Poly, var: &str) -> Poly {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        if b.degree_in(var) == 0 {
            // b is free of var and a is primitive, so they are coprime.
            return Poly::one();
        }
        let delta = a.degree_in(var) - b.degree_in(var);
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            return primitive_part(&b, var).monic();
        }
        let d = &g * &h.pow(delta);
        a = b;
        b = r.div_exact(&d).expect("subresultant division is exact");
        g = a.coeffs_in(var).pop().expect("nonzero");
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("exact")
        };
    }
}

/// Least common multiple, monic.
pub fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = poly_gcd(a, b);
    (a * b).div_exact(&g).expect("gcd divides").monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcas::rational::int;

    fn v(s: &str) -> Poly {
        Poly::var(s)
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let f = &(&v("x") + &v("y")) * &(&v("w1") - &Poly::from_i64(2));
        let a = &f * &(&v("x") - &v("z"));
        let b = &f * &(&v("y").pow(2) + &Poly::one());
        assert_eq!(poly_gcd(&a, &b), f.monic());
    }

    #[test]
    fn coprime_inputs() {
        let a = &v("x") + &Poly::one();
        let b = &v("x") - &Poly::one();
        assert!(poly_gcd(&a, &b).is_one());
        assert!(poly_gcd(&v("x"), &v("y")).is_one());
    }

    #[test]
    fn monomial_and_constant_cases() {
        let a = Poly::monomial(int(6), &[("w1", 2), ("w2", 1)]);
        let b = &Poly::monomial(int(4), &[("w1", 1), ("c1", 1)]) + &Poly::monomial(int(2), &[("w1", 3)]);
        assert_eq!(poly_gcd(&a, &b), v("w1"));
        assert!(poly_gcd(&Poly::from_i64(3), &b).is_one());
        assert_eq!(poly_gcd(&Poly::zero(), &b.scale(&int(5))), b.monic());
    }

    #[test]
    fn lcm_is_product_over_gcd() {
        let a = &v("x") * &v("y");
        let b = &v("y") * &(&v("x") + &Poly::one());
        let l = poly_lcm(&a, &b);
        assert_eq!(l, (&(&v("x") * &v("y")) * &(&v("x") + &Poly::one())).monic());
    }
}
