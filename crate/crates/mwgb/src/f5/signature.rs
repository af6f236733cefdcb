//! Signatures `(m, i)` labeling how a row was derived from the input system.

use crate::algebra::{Monomial, MonomialOrder};
use crate::grading::{MDeg, WeightMatrix};
use std::cmp::Ordering;
use std::fmt;

/// A pair `(monomial, generator index)`. A polynomial has signature `(m, i)`
/// when it equals a nonzero multiple of `m·f_i` plus terms of strictly
/// smaller signature. Indices are 0-based internally and printed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub monomial: Monomial,
    pub index: usize,
}

impl Signature {
    pub fn new(monomial: Monomial, index: usize) -> Self {
        Signature { monomial, index }
    }

    /// The signature `(1, i)` of the i-th input generator.
    pub fn generator(n: usize, index: usize) -> Self {
        Signature {
            monomial: Monomial::one(n),
            index,
        }
    }

    /// The degree of the signature: `mdeg(m) + d_i`.
    pub fn degree(&self, w: &WeightMatrix, gen_degrees: &[MDeg]) -> MDeg {
        w.mdeg_unchecked(&self.monomial)
            .add(&gen_degrees[self.index])
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.monomial, self.index + 1)
    }
}

/// The degree-over-position-over-term order: degrees compared
/// lexicographically, then the generator index, then the monomial under the
/// ambient order.
pub fn signature_cmp(
    a: &Signature,
    b: &Signature,
    w: &WeightMatrix,
    gen_degrees: &[MDeg],
) -> Ordering {
    a.degree(w, gen_degrees)
        .cmp(&b.degree(w, gen_degrees))
        .then_with(|| a.index.cmp(&b.index))
        .then_with(|| w.mono_cmp(&a.monomial, &b.monomial))
}
