//! The nine algebras of the (w1, w2) sign grid plus the centrally extended
//! Galilei algebra, with their homogeneous-space metadata and the grid's
//! contraction arrows.

use serde::{Deserialize, Serialize};

use crate::exactcas::Scalar;

use super::algebra::LieAlgebra;
use super::contraction::ContractionKind;
use super::families::{make_ck_algebra, make_extended_galilei};
use super::LieError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "-")]
    Neg,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Zero => '0',
            Sign::Neg => '-',
        }
    }

    pub fn representative(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Zero => 0,
            Sign::Neg => -1,
        }
    }

    fn of(value: &Scalar) -> Option<Sign> {
        use num_traits::{Signed, Zero};
        let r = value.as_rational()?;
        Some(if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        })
    }

    fn parse(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Pos),
            '0' => Some(Sign::Zero),
            '-' | '\u{2212}' => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// How parameter values are chosen for built-in algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamMode {
    /// Nonzero coefficients stay symbolic (`w1`, `w2`, `m`); the cell's
    /// signs are recorded as assumptions only.
    Symbolic,
    /// Nonzero coefficients are replaced by `+1` / `-1` (and `m = 1`).
    Representative,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomogeneousSpace {
    pub dim: u32,
    pub curvature: String,
    pub isotropy: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub key: String,
    /// `None` for the off-grid extended Galilei algebra.
    pub signs: Option<(Sign, Sign)>,
    pub algebra: String,
    pub space: String,
    pub kinematical: bool,
    pub space_s1: HomogeneousSpace,
    pub space_s2: HomogeneousSpace,
    pub notes: Vec<String>,
}

const CELLS: [(&str, Sign, Sign, &str, &str); 9] = [
    ("so4", Sign::Pos, Sign::Pos, "so(4)", "3d Elliptic space"),
    ("euclid3", Sign::Zero, Sign::Pos, "iso(3)", "3d Euclidean space"),
    ("so31-hyp", Sign::Neg, Sign::Pos, "so(3,1)", "3d Hyperbolic space"),
    ("nh-plus", Sign::Pos, Sign::Zero, "t4(so(2)+so(2))", "Oscillating NH (2+1)d space-time"),
    ("galilei", Sign::Zero, Sign::Zero, "iiso(2)", "Galilean (2+1)d space-time"),
    ("nh-minus", Sign::Neg, Sign::Zero, "t4(so(2)+so(1,1))", "Expanding NH (2+1)d space-time"),
    ("so22", Sign::Pos, Sign::Neg, "so(2,2)", "Anti-de Sitter (2+1)d space-time"),
    ("poincare", Sign::Zero, Sign::Neg, "iso(2,1)", "Minkowskian (2+1)d space-time"),
    ("so31-ds", Sign::Neg, Sign::Neg, "so(3,1)", "de Sitter (2+1)d space-time"),
];

pub const EXT_GALILEI_KEY: &str = "ext-galilei";
pub const EXT_GALILEI_NAME: &str = "iiso(2)-ext";

fn spaces() -> (HomogeneousSpace, HomogeneousSpace) {
    (
        HomogeneousSpace {
            dim: 3,
            curvature: "w1".into(),
            isotropy: "<K1,K2,J> (point/event)".into(),
        },
        HomogeneousSpace {
            dim: 4,
            curvature: "w2".into(),
            isotropy: "<H> + <J> (time-like line)".into(),
        },
    )
}

fn cell_entry(key: &str, s1: Sign, s2: Sign, algebra: &str, space: &str) -> CatalogEntry {
    let mut notes = vec![match s1 {
        Sign::Pos => "w1 = +1/R^2 (universe radius R)".to_string(),
        Sign::Zero => "w1 = 0 (flat)".to_string(),
        Sign::Neg => "w1 = -1/R^2 (universe radius R)".to_string(),
    }];
    notes.push(match s2 {
        Sign::Pos => "w2 > 0: riemannian, no space-time reading".to_string(),
        Sign::Zero => "w2 = 0: absolute time (c = infinity)".to_string(),
        Sign::Neg => "w2 = -1/c^2: relative time".to_string(),
    });
    let (space_s1, space_s2) = spaces();
    CatalogEntry {
        key: key.into(),
        signs: Some((s1, s2)),
        algebra: algebra.into(),
        space: space.into(),
        kinematical: s2 != Sign::Pos,
        space_s1,
        space_s2,
        notes,
    }
}

/// The nine grid cells in row order, then the extended Galilei algebra.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = CELLS
        .iter()
        .map(|(k, s1, s2, a, sp)| cell_entry(k, *s1, *s2, a, sp))
        .collect();
    let (space_s1, space_s2) = spaces();
    out.push(CatalogEntry {
        key: EXT_GALILEI_KEY.into(),
        signs: None,
        algebra: EXT_GALILEI_NAME.into(),
        space: "Galilean (2+1)d space-time, centrally extended by mass m".into(),
        kinematical: true,
        space_s1,
        space_s2,
        notes: vec![
            "off-grid: seed for the w1-expansion towards the Newton-Hooke algebras".into(),
            "[P_i,K_j] = delta_ij m Xi, Xi central".into(),
        ],
    });
    out
}

/// Looks up by built-in key (`so22`), sign pair (`(+,-)` or `+-`), or
/// algebra name when unique (`so(2,2)`; `so(3,1)` is ambiguous).
pub fn catalog_lookup(key: &str) -> Result<CatalogEntry, LieError> {
    let all = catalog();
    if let Some(e) = all.iter().find(|e| e.key == key) {
        return Ok(e.clone());
    }
    let compact: Vec<char> = key
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | ',' | ' '))
        .collect();
    if compact.len() == 2 {
        if let (Some(a), Some(b)) = (Sign::parse(compact[0]), Sign::parse(compact[1])) {
            return Ok(lookup_signs(a, b));
        }
    }
    let named: Vec<&CatalogEntry> = all.iter().filter(|e| e.algebra == key).collect();
    match named.len() {
        1 => Ok(named[0].clone()),
        0 => Err(LieError::UnknownCatalogKey(key.into())),
        _ => Err(LieError::AmbiguousCatalogKey(
            key.into(),
            named.iter().map(|e| e.key.clone()).collect(),
        )),
    }
}

pub fn lookup_signs(s1: Sign, s2: Sign) -> CatalogEntry {
    let (k, a, b, alg, sp) = CELLS
        .iter()
        .find(|(_, a, b, _, _)| *a == s1 && *b == s2)
        .expect("every sign pair is a cell");
    cell_entry(k, *a, *b, alg, sp)
}

/// Cell name for numeric values, otherwise `ck(<w1>, <w2>)`.
pub fn name_for_values(w1: &Scalar, w2: &Scalar) -> String {
    match (Sign::of(w1), Sign::of(w2)) {
        (Some(a), Some(b)) => lookup_signs(a, b).algebra,
        _ => format!("ck({w1}, {w2})"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArrowDirection {
    Contraction,
    Expansion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogArrow {
    pub source: String,
    pub target: String,
    pub kind: ContractionKind,
    pub direction: ArrowDirection,
}

/// Twelve contraction arrows (six horizontal space-time, six vertical
/// speed-space) followed by their twelve reverse expansions.
pub fn catalog_arrows() -> Vec<CatalogArrow> {
    let key = |a: Sign, b: Sign| lookup_signs(a, b).key;
    let mut contractions = Vec::new();
    for s2 in [Sign::Pos, Sign::Zero, Sign::Neg] {
        for s1 in [Sign::Pos, Sign::Neg] {
            contractions.push(CatalogArrow {
                source: key(s1, s2),
                target: key(Sign::Zero, s2),
                kind: ContractionKind::SpaceTime,
                direction: ArrowDirection::Contraction,
            });
        }
    }
    for s1 in [Sign::Pos, Sign::Zero, Sign::Neg] {
        for s2 in [Sign::Pos, Sign::Neg] {
            contractions.push(CatalogArrow {
                source: key(s1, s2),
                target: key(s1, Sign::Zero),
                kind: ContractionKind::SpeedSpace,
                direction: ArrowDirection::Contraction,
            });
        }
    }
    let expansions: Vec<CatalogArrow> = contractions
        .iter()
        .map(|a| CatalogArrow {
            source: a.target.clone(),
            target: a.source.clone(),
            kind: a.kind,
            direction: ArrowDirection::Expansion,
        })
        .collect();
    contractions.into_iter().chain(expansions).collect()
}

pub fn builtin_names() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = CELLS.iter().map(|c| c.0).collect();
    v.insert(5, EXT_GALILEI_KEY);
    v
}

/// Built-in algebra by key. In symbolic mode the result's name is the cell's
/// algebra name even though the coefficients are symbols.
pub fn builtin_algebra(key: &str, mode: ParamMode) -> Result<LieAlgebra, LieError> {
    if key == EXT_GALILEI_KEY {
        let m = match mode {
            ParamMode::Symbolic => Scalar::var("m"),
            ParamMode::Representative => Scalar::one(),
        };
        return Ok(make_extended_galilei(m));
    }
    let entry = catalog()
        .into_iter()
        .find(|e| e.key == key)
        .ok_or_else(|| LieError::UnknownCatalogKey(key.into()))?;
    let (s1, s2) = entry.signs.expect("grid cell");
    let value = |s: Sign, sym: &str| match (s, mode) {
        (Sign::Zero, _) => Scalar::zero(),
        (_, ParamMode::Symbolic) => Scalar::var(sym),
        (_, ParamMode::Representative) => Scalar::from_i64(s.representative()),
    };
    Ok(make_ck_algebra(value(s1, "w1"), value(s2, "w2")).with_name(entry.algebra))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anti_de_sitter_cell() {
        let e = catalog_lookup("(+,-)").unwrap();
        assert_eq!(e.algebra, "so(2,2)");
        assert_eq!(e.space, "Anti-de Sitter (2+1)d space-time");
        assert_eq!(e.space_s1.dim, 3);
        assert_eq!(e.space_s2.dim, 4);
        assert!(e.kinematical);
    }

    #[test]
    fn galilean_cell() {
        let e = catalog_lookup("00").unwrap();
        assert_eq!(e.algebra, "iiso(2)");
        assert!(e.space.starts_with("Galilean"));
        assert_eq!(catalog_lookup("galilei").unwrap(), e);
    }

    #[test]
    fn nine_cells_plus_extension() {
        let all = catalog();
        assert_eq!(all.len(), 10);
        assert_eq!(all.iter().filter(|e| e.signs.is_some()).count(), 9);
        assert_eq!(all.iter().filter(|e| !e.kinematical).count(), 3);
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(catalog_lookup("so(3,1)"), Err(LieError::AmbiguousCatalogKey(_, _))));
        assert!(matches!(catalog_lookup("sl(2)"), Err(LieError::UnknownCatalogKey(_))));
        assert_eq!(catalog_lookup("iso(2,1)").unwrap().key, "poincare");
    }

    #[test]
    fn twelve_arrows_each_way() {
        let arrows = catalog_arrows();
        let count = |d| arrows.iter().filter(|a| a.direction == d).count();
        assert_eq!(count(ArrowDirection::Contraction), 12);
        assert_eq!(count(ArrowDirection::Expansion), 12);
    }

    #[test]
    fn builtins_resolve() {
        for k in builtin_names() {
            builtin_algebra(k, ParamMode::Symbolic).unwrap();
            builtin_algebra(k, ParamMode::Representative).unwrap();
        }
        assert_eq!(builtin_names().len(), 10);
        let ds = builtin_algebra("so31-ds", ParamMode::Representative).unwrap();
        assert_eq!(ds.name(), "so(3,1)");
    }
}
