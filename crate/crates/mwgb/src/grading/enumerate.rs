//! Enumeration of all monomials at a prescribed degree.
//!
//! Requires the first row of weights to be positive, which bounds every
//! exponent and makes the recursion complete.

use super::{MDeg, WeightMatrix};
use crate::algebra::Monomial;
use crate::error::{Error, Result};

/// All monomials whose degree under the first row of weights equals `d`,
/// in ascending lexicographic exponent order.
pub fn monomials_of_w1_degree(w: &WeightMatrix, d: i64) -> Result<Vec<Monomial>> {
    if !w.first_row_positive() {
        return Err(Error::UnboundedEnumeration);
    }
    if d < 0 {
        return Ok(Vec::new());
    }
    let weights = &w.rows()[0];
    let mut out = Vec::new();
    let mut exps = vec![0u32; w.n()];
    descend(weights, 0, d, &mut exps, &mut out);
    Ok(out)
}

fn descend(
    weights: &[i64],
    j: usize,
    remaining: i64,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if j == weights.len() {
        if remaining == 0 {
            out.push(Monomial::new(exps.clone()));
        }
        return;
    }
    let w = weights[j];
    let max_exp = remaining / w;
    for e in 0..=max_exp {
        exps[j] = e as u32;
        descend(weights, j + 1, remaining - e * w, exps, out);
    }
    exps[j] = 0;
}

/// All monomials of full degree `target`: the `w1_degree = target_1` set
/// filtered by the remaining coordinates.
pub fn monomials_of_mdeg(w: &WeightMatrix, target: &MDeg) -> Result<Vec<Monomial>> {
    if target.len() != w.k() {
        return Err(Error::DimensionMismatch {
            what: "degree",
            expected: w.k(),
            found: target.len(),
        });
    }
    let candidates = monomials_of_w1_degree(w, target.first())?;
    Ok(candidates
        .into_iter()
        .filter(|m| &w.mdeg_unchecked(m) == target)
        .collect())
}
