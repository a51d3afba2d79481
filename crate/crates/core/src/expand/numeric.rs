//! Floating-point check of a candidate choice of expansion constants: each
//! bracket's centrally reduced residual evaluated at given values.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::constraints::pair_data;
use super::problem::{ExpandOptions, ExpansionProblem};
use super::steps::PrimedGenerator;
use super::ExpandError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericResidual {
    pub pair: [String; 2],
    /// Largest absolute coefficient of the residual.
    pub max_abs: f64,
}

/// Every symbol left in the residuals (`a1`, `c1`, `w2`, ...) must have a value.
pub fn numeric_residuals(
    p: &ExpansionProblem,
    primed: &[PrimedGenerator],
    values: &HashMap<String, f64>,
    opts: &ExpandOptions,
) -> Result<Vec<NumericResidual>, ExpandError> {
    let g = &p.initial;
    let (data, _) = pair_data(p, primed, opts)?;
    let mut out = Vec::new();
    for d in data {
        let mut max_abs: f64 = 0.0;
        for (_, c) in d.reduced.remainder.terms() {
            let v = c.eval_f64(values).ok_or_else(|| {
                ExpandError::Numeric(format!("cannot evaluate {c} with the given values"))
            })?;
            max_abs = max_abs.max(v.abs());
        }
        out.push(NumericResidual {
            pair: [g.label(d.i).into(), g.label(d.j).into()],
            max_abs,
        });
    }
    Ok(out)
}
