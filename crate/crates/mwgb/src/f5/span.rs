//! Brute-force span computations used to verify the engine's loop
//! invariants in tests. These enumerate all admissible multiples directly and
//! are independent of the matrix engine.

use super::signature::{signature_cmp, Signature};
use crate::algebra::{Monomial, MonomialOrder, Polynomial, PrimeField};
use crate::error::Result;
use crate::grading::{monomials_of_w1_degree, WeightMatrix};
use std::cmp::Ordering;

/// The canonical basis of the span of `polys`: full reduced row echelon form
/// over the union of supports. Two sets of polynomials span the same space
/// iff this returns the same list.
pub fn poly_row_space(
    polys: &[Polynomial],
    field: &PrimeField,
    ord: &impl MonomialOrder,
) -> Vec<Polynomial> {
    let mut support: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().iter().map(|(m, _)| m.clone()))
        .collect();
    support.sort_by(|a, b| ord.mono_cmp(b, a));
    support.dedup();
    let ncols = support.len();
    let col_of = |m: &Monomial| support.iter().position(|s| s == m).unwrap();

    let mut rows: Vec<Vec<u64>> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut row = vec![0u64; ncols];
            for (m, c) in p.terms() {
                row[col_of(m)] = *c;
            }
            row
        })
        .collect();

    let nrows = rows.len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = field.inv(rows[rank][col]);
        for c in 0..ncols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        for r in 0..nrows {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in 0..ncols {
                    let delta = field.mul(f, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], delta);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }

    rows.truncate(rank);
    rows.into_iter()
        .map(|row| {
            let terms: Vec<(Monomial, u64)> = row
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(i, &c)| (support[i].clone(), c))
                .collect();
            Polynomial::from_sorted_terms(terms)
        })
        .collect()
}

/// Enumerates every multiple `μ·f_j` whose signature `(μ, j)` is at most
/// (strictly below, when `strict`) the given signature, and returns the
/// canonical basis of their span.
pub fn signature_span_oracle(
    field: &PrimeField,
    w: &WeightMatrix,
    gens: &[Polynomial],
    sig: &Signature,
    strict: bool,
) -> Result<Vec<Polynomial>> {
    let mut gen_degrees = Vec::with_capacity(gens.len());
    for (i, f) in gens.iter().enumerate() {
        gen_degrees.push(
            w.homogeneous_mdeg(f, i)?
                .expect("span oracle needs nonzero generators"),
        );
    }
    let target = sig.degree(w, &gen_degrees);
    let mut rows = Vec::new();
    for (j, f) in gens.iter().enumerate() {
        let max_d1 = target.first() - gen_degrees[j].first();
        for d1 in 0..=max_d1 {
            for mu in monomials_of_w1_degree(w, d1)? {
                let cand = Signature::new(mu, j);
                match signature_cmp(&cand, sig, w, &gen_degrees) {
                    Ordering::Less => rows.push(f.mono_mul(&cand.monomial)),
                    Ordering::Equal if !strict => rows.push(f.mono_mul(&cand.monomial)),
                    _ => {}
                }
            }
        }
    }
    Ok(poly_row_space(&rows, field, w))
}
