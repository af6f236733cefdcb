//! The three elimination criteria: the classical signature criterion against
//! earlier generators, the syzygy criterion fed by observed zero rows, and
//! the whole-step gcd filter.

use super::signature::Signature;
use crate::algebra::Monomial;
use crate::f5::Step;

/// Divisibility stores accumulated from strictly earlier degree batches.
#[derive(Debug, Clone, Default)]
pub struct CriteriaState {
    /// Per generator index: leading monomials of pivots discovered while
    /// processing that index (the inputs' leading monomials seed the store).
    /// A signature `(m, i)` is eliminated when some monomial stored at an
    /// index `j < i` divides `m`: `m` is then a leading monomial of the ideal
    /// spanned by the first `i` generators.
    pub prior_lms: Vec<Vec<Monomial>>,
    /// Per generator index: monomials of signatures whose rows reduced to
    /// zero. Any multiple of such a signature reduces to zero as well.
    pub zero_sigs: Vec<Vec<Monomial>>,
}

impl CriteriaState {
    pub fn new(r: usize) -> Self {
        CriteriaState {
            prior_lms: vec![Vec::new(); r],
            zero_sigs: vec![Vec::new(); r],
        }
    }

    /// True iff `sig` should be eliminated because its monomial lies in the
    /// leading-monomial ideal of the earlier generators.
    pub fn f5_eliminates(&self, sig: &Signature) -> bool {
        self.prior_lms[..sig.index]
            .iter()
            .flatten()
            .any(|lm| lm.divides(&sig.monomial))
    }

    /// True iff some recorded zero signature with the same index divides
    /// `sig`.
    pub fn syzygy_eliminates(&self, sig: &Signature) -> bool {
        self.zero_sigs[sig.index]
            .iter()
            .any(|m0| m0.divides(&sig.monomial))
    }
}

/// True iff the whole step can be skipped: when all signature monomials share
/// a nontrivial common divisor, every row of the step is that divisor times a
/// row of an earlier step, so no new basis element can appear.
pub fn gcd_step_filter(step: &Step) -> bool {
    let mut sigs = step.signatures.iter();
    let Some(first) = sigs.next() else {
        return false;
    };
    let mut g = first.monomial.clone();
    for s in sigs {
        if g.is_one() {
            return false;
        }
        g = g.gcd(&s.monomial);
    }
    !g.is_one()
}
