use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use super::involution::Decomposition;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CartanReport {
    pub h: Vec<String>,
    pub p: Vec<String>,
    pub hh_in_h: bool,
    pub hp_in_p: bool,
    pub pp_in_h: bool,
    /// `[p,p] = 0`.
    pub p_abelian: bool,
    /// `[p,p] ⊂ p`.
    pub p_subalgebra: bool,
    pub violations: Vec<String>,
}

impl CartanReport {
    pub fn is_cartan(&self) -> bool {
        self.hh_in_h && self.hp_in_p && self.pp_in_h
    }
}

/// Checks `[h,h] ⊂ h`, `[h,p] ⊂ p`, `[p,p] ⊂ h` with `h = d.k`, `p = d.t`.
pub fn cartan_check(g: &LieAlgebra, d: &Decomposition) -> CartanReport {
    let in_h = |n: &usize| d.k.contains(n);
    let in_p = |n: &usize| d.t.contains(n);
    let mut violations = Vec::new();
    let mut check = |set_a: &[usize], set_b: &[usize], want_h: bool, tag: &str| -> bool {
        let mut ok = true;
        for &a in set_a {
            for &b in set_b {
                if a >= b && set_a == set_b {
                    continue;
                }
                for n in g.bracket(a, b).keys() {
                    let good = if want_h { in_h(n) } else { in_p(n) };
                    if !good {
                        ok = false;
                        violations.push(format!(
                            "{tag}: [{},{}] contains {}",
                            g.label(a),
                            g.label(b),
                            g.label(*n)
                        ));
                    }
                }
            }
        }
        ok
    };
    let hh_in_h = check(&d.k, &d.k, true, "[h,h]");
    let hp_in_p = check(&d.k, &d.t, false, "[h,p]");
    let pp_in_h = check(&d.t, &d.t, true, "[p,p]");
    let mut p_abelian = true;
    let mut p_subalgebra = true;
    for (x, &a) in d.t.iter().enumerate() {
        for &b in &d.t[x + 1..] {
            let br = g.bracket(a, b);
            if !br.is_empty() {
                p_abelian = false;
            }
            if br.keys().any(|n| !in_p(n)) {
                p_subalgebra = false;
            }
        }
    }
    CartanReport {
        h: Decomposition::labels(g, &d.k),
        p: Decomposition::labels(g, &d.t),
        hh_in_h,
        hp_in_p,
        pp_in_h,
        p_abelian,
        p_subalgebra,
        violations,
    }
}
