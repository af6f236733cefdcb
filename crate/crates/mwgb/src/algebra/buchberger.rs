//! A textbook Buchberger implementation with full interreduction.
//!
//! This is the testing oracle for the matrix-based engine: slow but simple
//! enough to trust. The product criterion (coprime leading monomials) is the
//! only pair filter.

use super::field::PrimeField;
use super::monomial::MonomialOrder;
use super::poly::{normal_form, s_polynomial, Polynomial};

/// Computes the reduced Gröbner basis of the ideal spanned by `input`.
pub fn buchberger_oracle(
    input: &[Polynomial],
    field: &PrimeField,
    ord: &impl MonomialOrder,
) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = input.iter().filter(|f| !f.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        if lm_i.gcd(lm_j).is_one() {
            // Product criterion: coprime leading monomials reduce to zero.
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], field, ord).unwrap();
        let r = normal_form(&s, &basis, field, ord);
        if !r.is_zero() {
            let k = basis.len();
            pairs.extend((0..k).map(|i| (i, k)));
            basis.push(r.make_monic(field));
        }
    }
    interreduce(basis, field, ord)
}

/// Interreduces a basis into its canonical reduced form: minimal leading
/// monomials, fully reduced tails, monic, sorted by ascending leading
/// monomial.
pub fn interreduce(
    basis: Vec<Polynomial>,
    field: &PrimeField,
    ord: &impl MonomialOrder,
) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    'next: for (i, g) in basis.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let lm = g.leading_monomial().unwrap();
        for (j, h) in basis.iter().enumerate() {
            if i == j || h.is_zero() {
                continue;
            }
            let lm_h = h.leading_monomial().unwrap();
            // Drop when another element has a strictly dividing leading
            // monomial, or an equal one appearing earlier.
            if lm_h.divides(lm) && (lm_h != lm || j < i) {
                continue 'next;
            }
        }
        minimal.push(g.clone());
    }
    let reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            normal_form(&minimal[i], &others, field, ord).make_monic(field)
        })
        .filter(|g| !g.is_zero())
        .collect();
    let mut reduced = reduced;
    reduced
        .sort_by(|a, b| ord.mono_cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    reduced
}

/// True iff every S-polynomial of pairs in `basis` reduces to zero modulo
/// `basis`.
pub fn is_groebner(basis: &[Polynomial], field: &PrimeField, ord: &impl MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = match s_polynomial(&basis[i], &basis[j], field, ord) {
                Ok(s) => s,
                Err(_) => continue,
            };
            if !normal_form(&s, basis, field, ord).is_zero() {
                return false;
            }
        }
    }
    true
}
