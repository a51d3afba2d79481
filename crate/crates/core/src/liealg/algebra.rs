use std::collections::BTreeMap;
use std::fmt;

use crate::exactcas::{Poly, Scalar};

use super::LieError;

/// Linear combination of generators: index -> nonzero coefficient.
pub type LinComb = BTreeMap<usize, Scalar>;

pub(crate) fn lc_add_scaled(acc: &mut LinComb, other: &LinComb, k: &Scalar) {
    for (i, c) in other {
        let term = c * k;
        match acc.get_mut(i) {
            Some(old) => {
                let sum = &*old + &term;
                if sum.is_zero() {
                    acc.remove(i);
                } else {
                    *old = sum;
                }
            }
            None => {
                if !term.is_zero() {
                    acc.insert(*i, term);
                }
            }
        }
    }
}

pub(crate) fn lc_neg(a: &LinComb) -> LinComb {
    a.iter().map(|(i, c)| (*i, -c)).collect()
}

/// Which factory built the algebra, with its parameter values. Casimirs and
/// catalog names are only known for the two built-in families.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    CayleyKlein { w1: Scalar, w2: Scalar },
    ExtendedGalilei { m: Scalar },
    Custom,
}

/// A Lie algebra given by structure constants in a fixed generator basis.
///
/// Only brackets `[X_i, X_j]` with `i < j` are stored; the rest follow from
/// antisymmetry. Equality compares generator labels and bracket tables, not
/// names.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    generators: Vec<String>,
    parameters: Vec<String>,
    brackets: BTreeMap<(usize, usize), LinComb>,
    family: Family,
    dense: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl LieAlgebra {
    /// Builds an algebra from upper-triangle brackets. Entries with `i > j`
    /// are folded in with a sign flip; giving both orders inconsistently, or
    /// a nonzero self-bracket, is an error.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        brackets: Vec<((usize, usize), LinComb)>,
        family: Family,
    ) -> Result<Self, LieError> {
        let n = generators.len();
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(LieError::DuplicateGenerator(g.clone()));
            }
        }
        let mut table: BTreeMap<(usize, usize), LinComb> = BTreeMap::new();
        for ((i, j), comb) in brackets {
            if i >= n || j >= n || comb.keys().any(|k| *k >= n) {
                return Err(LieError::IndexOutOfRange);
            }
            let comb: LinComb = comb.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if i == j {
                if !comb.is_empty() {
                    return Err(LieError::Antisymmetry(format!(
                        "[{0},{0}] must vanish",
                        generators[i]
                    )));
                }
                continue;
            }
            let (key, comb) = if i < j { ((i, j), comb) } else { ((j, i), lc_neg(&comb)) };
            if let Some(prev) = table.get(&key) {
                if *prev != comb {
                    return Err(LieError::Antisymmetry(format!(
                        "[{a},{b}] and [{b},{a}] are not opposite",
                        a = generators[key.0],
                        b = generators[key.1]
                    )));
                }
            }
            if !comb.is_empty() {
                table.insert(key, comb);
            }
        }
        let mut dense = vec![vec![Vec::new(); n]; n];
        for ((i, j), comb) in &table {
            dense[*i][*j] = comb.iter().map(|(k, c)| (*k, c.clone())).collect();
            dense[*j][*i] = comb.iter().map(|(k, c)| (*k, -c)).collect();
        }
        let mut parameters: Vec<String> = Vec::new();
        for comb in table.values() {
            for c in comb.values() {
                for v in c.numer().vars().iter().chain(c.denom().vars()) {
                    if !parameters.contains(v) {
                        parameters.push(v.clone());
                    }
                }
            }
        }
        if let Family::CayleyKlein { w1, w2 } = &family {
            for s in [w1, w2] {
                for v in s.numer().vars().iter().chain(s.denom().vars()) {
                    if !parameters.contains(v) {
                        parameters.push(v.clone());
                    }
                }
            }
        }
        parameters.sort_by(|a, b| crate::exactcas::poly::symbol_cmp(a, b));
        if let Some(clash) = parameters.iter().find(|p| generators.contains(p)) {
            return Err(LieError::NameClash(clash.clone()));
        }
        Ok(LieAlgebra {
            name: name.into(),
            generators,
            parameters,
            brackets: table,
            family,
            dense,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == label)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.generators[i]
    }

    /// Stored upper-triangle brackets (only nonzero ones).
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), LinComb> {
        &self.brackets
    }

    /// `[X_i, X_j]` as sparse terms, any order of `i`, `j`.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.dense[i][j]
    }

    pub fn bracket(&self, i: usize, j: usize) -> LinComb {
        self.dense[i][j].iter().cloned().collect()
    }

    /// Bilinear extension of the bracket to linear combinations.
    pub fn bracket_lc(&self, a: &LinComb, b: &LinComb) -> LinComb {
        let mut out = LinComb::new();
        for (i, ca) in a {
            for (j, cb) in b {
                let k = ca * cb;
                let terms: LinComb = self.bracket(*i, *j);
                lc_add_scaled(&mut out, &terms, &k);
            }
        }
        out
    }

    /// Same generators and same bracket table.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.generators == other.generators && self.brackets == other.brackets
    }

    /// Substitutes parameter values into every structure constant.
    pub fn specialize(&self, var: &str, value: &Scalar) -> Result<LieAlgebra, LieError> {
        let mut brackets = Vec::new();
        for (k, comb) in &self.brackets {
            let mut out = LinComb::new();
            for (i, c) in comb {
                out.insert(*i, c.substitute(var, value)?);
            }
            brackets.push((*k, out));
        }
        let sub = |s: &Scalar| s.substitute(var, value);
        let family = match &self.family {
            Family::CayleyKlein { w1, w2 } => Family::CayleyKlein {
                w1: sub(w1)?,
                w2: sub(w2)?,
            },
            Family::ExtendedGalilei { m } => Family::ExtendedGalilei { m: sub(m)? },
            Family::Custom => Family::Custom,
        };
        LieAlgebra::new(self.name.clone(), self.generators.clone(), brackets, family)
    }

    pub fn fmt_lincomb(&self, comb: &LinComb) -> String {
        fmt_lincomb(&self.generators, comb)
    }
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other)
    }
}

/// `"w1*w2*J"`, `"-P1"`, `"(w1 + w2)*H + 2*K1"`; `"0"` when empty.
pub fn fmt_lincomb(labels: &[String], comb: &LinComb) -> String {
    if comb.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (i, c)) in comb.iter().enumerate() {
        let label = &labels[*i];
        let single = c.as_poly().filter(|p| p.is_monomial());
        let (neg, body) = match single {
            Some(p) => {
                let neg = c.is_negative_leading();
                let mag: Poly = if neg { -p } else { p.clone() };
                if mag.is_one() {
                    (neg, label.clone())
                } else {
                    (neg, format!("{mag}*{label}"))
                }
            }
            None => (false, format!("({c})*{label}")),
        };
        let sep = match (n, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        out.push_str(&body);
    }
    out
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} <{}>", self.name, self.generators.join(", "))?;
        for ((i, j), comb) in &self.brackets {
            writeln!(
                f,
                "  [{},{}] = {}",
                self.generators[*i],
                self.generators[*j],
                self.fmt_lincomb(comb)
            )?;
        }
        Ok(())
    }
}
