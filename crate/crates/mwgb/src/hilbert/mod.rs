//! Hilbert multiseries of graded algebras and their quotients, plus the
//! regularity machinery built on multiplication-map ranks.

pub mod random;
pub mod regularity;

pub use random::random_system;
pub use regularity::{
    classify_sequence, multiplication_map, DegreeWitness, DivisorClass, MultiplicationMap,
    Regularity, RegularityReport,
};

use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::grading::{monomials_of_w1_degree, MDeg, WeightMatrix};
use std::collections::{BTreeMap, BTreeSet};

/// A prefix of a formal series in k variables: integer coefficients indexed
/// by degree, stored for every degree whose first coordinate is at most
/// `bound`. Absent keys are zero; zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMultiseries {
    coeffs: BTreeMap<MDeg, i64>,
    bound: i64,
}

impl TruncatedMultiseries {
    pub fn zero(bound: i64) -> Self {
        TruncatedMultiseries {
            coeffs: BTreeMap::new(),
            bound,
        }
    }

    /// The series `1`.
    pub fn one(k: usize, bound: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if bound >= 0 {
            coeffs.insert(MDeg::zero(k), 1);
        }
        TruncatedMultiseries { coeffs, bound }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn coefficient(&self, d: &MDeg) -> i64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<MDeg, i64> {
        &self.coeffs
    }

    fn add_at(&mut self, d: MDeg, v: i64) {
        if v == 0 || d.first() > self.bound {
            return;
        }
        match self.coeffs.entry(d) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }

    /// Multiplies by `1 - T^v`, truncating at the bound.
    pub fn mul_one_minus(&self, v: &MDeg) -> Self {
        let mut out = TruncatedMultiseries::zero(self.bound);
        for (d, &c) in &self.coeffs {
            out.add_at(d.clone(), c);
            out.add_at(d.add(v), -c);
        }
        out
    }

    /// Drops every negative coefficient.
    pub fn clamped(&self) -> Self {
        TruncatedMultiseries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|&(_, &c)| c > 0)
                .map(|(d, &c)| (d.clone(), c))
                .collect(),
            bound: self.bound,
        }
    }

    /// Multiplies by the geometric series `1/(1 - T^v)`. Requires the first
    /// coordinate of `v` to be positive so the sum below the bound is finite.
    fn mul_geometric(&self, v: &MDeg) -> Self {
        debug_assert!(v.first() > 0);
        let mut candidates: BTreeSet<MDeg> = BTreeSet::new();
        for d in self.coeffs.keys() {
            let mut e = d.clone();
            while e.first() <= self.bound {
                candidates.insert(e.clone());
                e = e.add(v);
            }
        }
        let mut out = TruncatedMultiseries::zero(self.bound);
        // Ascending order guarantees out(d - v) is final before d is formed.
        for d in candidates {
            let below = out.coefficient(&d.sub(v));
            let val = self.coefficient(&d) + below;
            if val != 0 {
                out.coeffs.insert(d, val);
            }
        }
        out
    }
}

/// The multiseries of the full algebra: coefficient at `d` is the number of
/// monomials of degree `d`. Computed as the truncated product of the
/// geometric series of all variable degrees.
pub fn hs_algebra(w: &WeightMatrix, bound: i64) -> Result<TruncatedMultiseries> {
    if !w.first_row_positive() {
        return Err(Error::NonPositiveW1);
    }
    let mut hs = TruncatedMultiseries::one(w.k(), bound);
    for j in 0..w.n() {
        hs = hs.mul_geometric(&w.var_degree(j));
    }
    Ok(hs)
}

/// The multiseries of a quotient by a regular sequence with the given
/// generator degrees: the algebra series times `prod (1 - T^{d_i})`.
pub fn hs_regular(
    w: &WeightMatrix,
    gen_degrees: &[MDeg],
    bound: i64,
) -> Result<TruncatedMultiseries> {
    let mut hs = hs_algebra(w, bound)?;
    for d in gen_degrees {
        hs = hs.mul_one_minus(d);
    }
    Ok(hs)
}

/// The semi-regular prediction: after each generator factor, negative
/// coefficients are dropped before the next one is applied.
pub fn hs_semiregular(
    w: &WeightMatrix,
    gen_degrees: &[MDeg],
    bound: i64,
) -> Result<TruncatedMultiseries> {
    let mut hs = hs_algebra(w, bound)?;
    for d in gen_degrees {
        hs = hs.mul_one_minus(d).clamped();
    }
    Ok(hs)
}

/// Dimension counting against an explicit Gröbner basis: the coefficient at
/// `d` is the number of monomials of degree `d` not divisible by any leading
/// monomial of `gb`. `gb` must be a basis under the order of `w`, complete up
/// to first-row degree `bound`.
pub fn hs_quotient_oracle(
    w: &WeightMatrix,
    gb: &[Polynomial],
    bound: i64,
) -> Result<TruncatedMultiseries> {
    if !w.first_row_positive() {
        return Err(Error::NonPositiveW1);
    }
    let lms: Vec<_> = gb
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    let mut out = TruncatedMultiseries::zero(bound);
    for d1 in 0..=bound {
        for m in monomials_of_w1_degree(w, d1)? {
            if !lms.iter().any(|lm| lm.divides(&m)) {
                out.add_at(w.mdeg_unchecked(&m), 1);
            }
        }
    }
    Ok(out)
}
