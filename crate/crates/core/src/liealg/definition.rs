//! JSON algebra definitions:
//!
//! ```json
//! {"name": "...", "generators": ["H", ...], "parameters": ["w1", ...],
//!  "brackets": {"[H,P1]": "w1*K1", ...}}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::{Family, LieAlgebra, LinComb};
use super::LieError;
use crate::exactcas::{parse_scalar, UnknownPoly};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDefinition {
    pub name: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<String>,
    pub brackets: BTreeMap<String, String>,
}

fn parse_key(key: &str, labels: &[String]) -> Result<(usize, usize), LieError> {
    let inner = key
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| LieError::BadBracketKey(key.into()))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| LieError::BadBracketKey(key.into()))?;
    let find = |s: &str| {
        let s = s.trim();
        labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| LieError::UnknownGenerator(s.into()))
    };
    Ok((find(a)?, find(b)?))
}

/// Parses a right-hand side with generator labels as symbols and checks it
/// is homogeneous of degree one in them.
fn parse_rhs(key: &str, src: &str, labels: &[String], params: &[String]) -> Result<LinComb, LieError> {
    let s = parse_scalar(src)?;
    for v in s.numer().vars().iter().chain(s.denom().vars()) {
        if !labels.contains(v) && !params.contains(v) {
            return Err(LieError::UndeclaredParameter(v.clone()));
        }
    }
    let up = UnknownPoly::from_scalar(&s, labels).map_err(|_| LieError::NotLinear(key.into()))?;
    let mut comb = LinComb::new();
    for (e, c) in up.terms() {
        let deg: u32 = e.iter().sum();
        if deg != 1 {
            return Err(LieError::NotLinear(key.into()));
        }
        let idx = e.iter().position(|x| *x == 1).expect("degree one");
        comb.insert(idx, c.clone());
    }
    Ok(comb)
}

impl AlgebraDefinition {
    pub fn to_algebra(&self) -> Result<LieAlgebra, LieError> {
        let mut brackets = Vec::new();
        for (key, rhs) in &self.brackets {
            let ij = parse_key(key, &self.generators)?;
            let comb = parse_rhs(key, rhs, &self.generators, &self.parameters)?;
            brackets.push((ij, comb));
        }
        LieAlgebra::new(self.name.clone(), self.generators.clone(), brackets, Family::Custom)
    }

    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let brackets = g
            .brackets()
            .iter()
            .map(|((i, j), comb)| {
                (format!("[{},{}]", g.label(*i), g.label(*j)), g.fmt_lincomb(comb))
            })
            .collect();
        AlgebraDefinition {
            name: g.name().into(),
            generators: g.generators().to_vec(),
            parameters: g.parameters().to_vec(),
            brackets,
        }
    }
}

pub fn algebra_from_json(src: &str) -> Result<LieAlgebra, LieError> {
    let def: AlgebraDefinition =
        serde_json::from_str(src).map_err(|e| LieError::Json(e.to_string()))?;
    def.to_algebra()
}

pub fn algebra_to_json(g: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraDefinition::from_algebra(g)).expect("plain data")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcas::Scalar;
    use crate::liealg::families::{ck_symbolic, make_extended_galilei};

    #[test]
    fn round_trip_through_json() {
        for g in [ck_symbolic(), make_extended_galilei(Scalar::var("m"))] {
            let back = algebra_from_json(&algebra_to_json(&g)).unwrap();
            assert!(back.same_structure(&g));
            assert_eq!(back.parameters(), g.parameters());
        }
    }

    #[test]
    fn hand_written_definition() {
        let src = r#"{"name": "so(3)", "generators": ["A", "B", "C"],
            "brackets": {"[A,B]": "C", "[B,C]": "A", "[C,A]": "B"}}"#;
        let g = algebra_from_json(src).unwrap();
        assert_eq!(g.bracket(0, 2), [(1, -Scalar::one())].into_iter().collect());
    }

    #[test]
    fn rejects_bad_input() {
        let base = |rhs: &str| {
            format!(r#"{{"name":"x","generators":["A","B"],"parameters":["k"],"brackets":{{"[A,B]":"{rhs}"}}}}"#)
        };
        assert!(matches!(algebra_from_json(&base("A*B")), Err(LieError::NotLinear(_))));
        assert!(matches!(algebra_from_json(&base("k + A")), Err(LieError::NotLinear(_))));
        assert!(matches!(algebra_from_json(&base("A/B")), Err(LieError::NotLinear(_))));
        assert!(matches!(algebra_from_json(&base("q*A")), Err(LieError::UndeclaredParameter(_))));
        assert!(algebra_from_json(&base("k/2*A - B")).is_ok());
        assert!(matches!(algebra_from_json("{"), Err(LieError::Json(_))));
        let bad_key = r#"{"name":"x","generators":["A"],"brackets":{"A,A":"0"}}"#;
        assert!(matches!(algebra_from_json(bad_key), Err(LieError::BadBracketKey(_))));
    }
}
