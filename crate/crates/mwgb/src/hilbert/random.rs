//! Seeded generation of dense homogeneous systems.

use crate::algebra::{Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::grading::{monomials_of_mdeg, MDeg, WeightMatrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// One polynomial per requested degree: a uniformly random coefficient for
/// every monomial of that degree, redrawn if all vanish, made monic. The
/// output is a pure function of the seed.
pub fn random_system(
    field: &PrimeField,
    w: &WeightMatrix,
    gen_degrees: &[MDeg],
    seed: u64,
) -> Result<Vec<Polynomial>> {
    if !w.first_row_positive() {
        return Err(Error::NonPositiveW1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let mut out = Vec::with_capacity(gen_degrees.len());
    for d in gen_degrees {
        let monomials = monomials_of_mdeg(w, d)?;
        if monomials.is_empty() {
            return Err(Error::EmptyDegree(d.to_string()));
        }
        let f = loop {
            let terms: Vec<_> = monomials
                .iter()
                .map(|m| (m.clone(), rng.gen_range(0..p)))
                .collect();
            let f = Polynomial::from_terms(terms, field, w);
            if !f.is_zero() {
                break f;
            }
        };
        out.push(f.make_monic(field));
    }
    Ok(out)
}
