//! Sparse polynomials over GF(p) with terms kept sorted under an ambient
//! monomial order.

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use std::cmp::Ordering;

/// A polynomial as a strictly decreasing (under the ambient order) sequence of
/// `(monomial, coefficient)` terms with nonzero coefficients. The empty
/// sequence is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Builds a normalized polynomial from arbitrary terms: sorts under `ord`,
    /// merges equal monomials in the field, and drops zero coefficients.
    pub fn from_terms(
        terms: Vec<(Monomial, u64)>,
        field: &PrimeField,
        ord: &impl MonomialOrder,
    ) -> Self {
        let mut terms: Vec<(Monomial, u64)> = terms
            .into_iter()
            .map(|(m, c)| (m, c % field.modulus()))
            .collect();
        terms.sort_by(|a, b| ord.mono_cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Polynomial { terms: out }
    }

    /// Wraps terms that are already sorted and normalized.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, u64)>) -> Self {
        debug_assert!(terms.iter().all(|&(_, c)| c != 0));
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial, c: u64) -> Self {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.terms.first().map(|(m, _)| m.num_vars())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.terms.first().map(|&(_, c)| c)
    }

    pub fn add(
        &self,
        other: &Polynomial,
        field: &PrimeField,
        ord: &impl MonomialOrder,
    ) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.mono_cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn scale(&self, c: u64, field: &PrimeField) -> Polynomial {
        let c = c % field.modulus();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.mul(*a, c)))
                .collect(),
        }
    }

    pub fn neg(&self, field: &PrimeField) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), field.neg(*a)))
                .collect(),
        }
    }

    pub fn sub(
        &self,
        other: &Polynomial,
        field: &PrimeField,
        ord: &impl MonomialOrder,
    ) -> Polynomial {
        self.add(&other.neg(field), field, ord)
    }

    /// Multiplies every term by a monomial. Order compatibility with
    /// multiplication means the sorted term order is preserved.
    pub fn mono_mul(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect(),
        }
    }

    pub fn term_mul(&self, m: &Monomial, c: u64, field: &PrimeField) -> Polynomial {
        self.mono_mul(m).scale(c, field)
    }

    pub fn make_monic(&self, field: &PrimeField) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(field.inv(c), field),
        }
    }

    /// Renders the polynomial in the term syntax used by system files:
    /// `c e1 e2 ... en` terms joined by `; `.
    pub fn to_term_text(&self, n: usize) -> String {
        if self.is_zero() {
            return format!("0{}", " 0".repeat(n));
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let exps: Vec<String> = m.exponents().iter().map(|e| e.to_string()).collect();
                format!("{} {}", c, exps.join(" "))
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// The S-polynomial `(L/LT(f))·f − (L/LT(g))·g` with `L = lcm(LM(f), LM(g))`.
/// The leading terms cancel by construction.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    field: &PrimeField,
    ord: &impl MonomialOrder,
) -> Result<Polynomial> {
    let (lm_f, lc_f) = match f.terms.first() {
        Some((m, c)) => (m, *c),
        None => return Err(Error::ZeroPolynomial),
    };
    let (lm_g, lc_g) = match g.terms.first() {
        Some((m, c)) => (m, *c),
        None => return Err(Error::ZeroPolynomial),
    };
    let l = lm_f.lcm(lm_g);
    let uf = l.quotient(lm_f).expect("lcm divisible by both");
    let ug = l.quotient(lm_g).expect("lcm divisible by both");
    let a = f.term_mul(&uf, field.inv(lc_f), field);
    let b = g.term_mul(&ug, field.inv(lc_g), field);
    Ok(a.sub(&b, field, ord))
}

/// Full normal form of `f` modulo `G`: the result has no term divisible by any
/// leading monomial of `G`, and `f − result` lies in the ideal spanned by `G`.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    field: &PrimeField,
    ord: &impl MonomialOrder,
) -> Polynomial {
    let mut work = f.clone();
    let mut out: Vec<(Monomial, u64)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.terms.first().map(|(m, c)| (m.clone(), *c)) {
        for g in basis {
            if let Some(lm_g) = g.leading_monomial() {
                if lm_g.divides(&lm) {
                    let u = lm.quotient(lm_g).unwrap();
                    let factor = field.div(lc, g.leading_coeff().unwrap());
                    work = work.sub(&g.term_mul(&u, factor, field), field, ord);
                    continue 'outer;
                }
            }
        }
        // Leading term irreducible: move it to the output. Remaining terms
        // are strictly smaller, so `out` stays sorted.
        out.push((lm, lc));
        work.terms.remove(0);
    }
    Polynomial { terms: out }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::WeightMatrix;

    fn setup(n: usize) -> (PrimeField, WeightMatrix) {
        let field = PrimeField::new(101).unwrap();
        let grevlex = WeightMatrix::standard_grading(n);
        (field, grevlex)
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn add_of_opposite_is_zero() {
        let (field, ord) = setup(3);
        let f = Polynomial::from_terms(vec![(m(&[1, 2, 0]), 5), (m(&[2, 0, 1]), 7)], &field, &ord);
        assert!(f.add(&f.neg(&field), &field, &ord).is_zero());
    }

    #[test]
    fn add_zero_is_identity_bit_for_bit() {
        let (field, ord) = setup(2);
        let f = Polynomial::from_terms(vec![(m(&[1, 1]), 3), (m(&[0, 2]), 4)], &field, &ord);
        assert_eq!(f.add(&Polynomial::zero(), &field, &ord), f);
        assert_eq!(f.scale(1, &field), f);
    }

    #[test]
    fn mono_mul_shifts_terms() {
        let (field, ord) = setup(3);
        // (x1*x2^2 + x1^2*x3) * x3
        let f = Polynomial::from_terms(vec![(m(&[1, 2, 0]), 1), (m(&[2, 0, 1]), 1)], &field, &ord);
        let shifted = f.mono_mul(&m(&[0, 0, 1]));
        let expected =
            Polynomial::from_terms(vec![(m(&[1, 2, 1]), 1), (m(&[2, 0, 2]), 1)], &field, &ord);
        assert_eq!(shifted, expected);
    }

    #[test]
    fn s_polynomial_of_monomial_pair_vanishes() {
        let (field, ord) = setup(2);
        let f = Polynomial::monomial(m(&[2, 0]), 1);
        let g = Polynomial::monomial(m(&[1, 1]), 1);
        assert!(s_polynomial(&f, &g, &field, &ord).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_expands_as_hand_computation() {
        let (field, ord) = setup(2);
        // f = x1^2 + x2^2, g = x1*x2: S = x2*f - x1*g = x2^3
        let f = Polynomial::from_terms(vec![(m(&[2, 0]), 1), (m(&[0, 2]), 1)], &field, &ord);
        let g = Polynomial::monomial(m(&[1, 1]), 1);
        let s = s_polynomial(&f, &g, &field, &ord).unwrap();
        assert_eq!(s, Polynomial::monomial(m(&[0, 3]), 1));
    }

    #[test]
    fn s_polynomial_rejects_zero_inputs() {
        let (field, ord) = setup(2);
        let f = Polynomial::monomial(m(&[1, 0]), 1);
        assert_eq!(
            s_polynomial(&f, &Polynomial::zero(), &field, &ord),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn leading_monomial_of_s_polynomial_below_lcm() {
        let (field, ord) = setup(3);
        let f = Polynomial::from_terms(
            vec![(m(&[2, 1, 0]), 3), (m(&[0, 1, 2]), 5), (m(&[1, 0, 1]), 9)],
            &field,
            &ord,
        );
        let g = Polynomial::from_terms(vec![(m(&[1, 2, 0]), 4), (m(&[0, 0, 3]), 2)], &field, &ord);
        let s = s_polynomial(&f, &g, &field, &ord).unwrap();
        let lcm = m(&[2, 1, 0]).lcm(&m(&[1, 2, 0]));
        if let Some(lm) = s.leading_monomial() {
            assert_eq!(ord.mono_cmp(lm, &lcm), Ordering::Less);
        }
    }

    #[test]
    fn normal_form_examples() {
        let (field, ord) = setup(2);
        // f in G reduces to zero
        let f = Polynomial::from_terms(vec![(m(&[2, 0]), 1), (m(&[0, 1]), 3)], &field, &ord);
        assert!(normal_form(&f, std::slice::from_ref(&f), &field, &ord).is_zero());

        // x1^2*x2 mod {x1^2} = 0
        let g = Polynomial::monomial(m(&[2, 0]), 1);
        let h = Polynomial::monomial(m(&[2, 1]), 1);
        assert!(normal_form(&h, &[g], &field, &ord).is_zero());

        // x1*x2 + x2^2 mod {x1} = x2^2
        let h = Polynomial::from_terms(vec![(m(&[1, 1]), 1), (m(&[0, 2]), 1)], &field, &ord);
        let x1 = Polynomial::monomial(m(&[1, 0]), 1);
        let nf = normal_form(&h, &[x1], &field, &ord);
        assert_eq!(nf, Polynomial::monomial(m(&[0, 2]), 1));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let (field, ord) = setup(2);
        let g1 = Polynomial::from_terms(vec![(m(&[2, 0]), 1), (m(&[1, 1]), 7)], &field, &ord);
        let g2 = Polynomial::from_terms(vec![(m(&[0, 3]), 1), (m(&[1, 1]), 2)], &field, &ord);
        let f = Polynomial::from_terms(
            vec![(m(&[3, 1]), 5), (m(&[1, 2]), 6), (m(&[0, 1]), 8)],
            &field,
            &ord,
        );
        let basis = [g1, g2];
        let once = normal_form(&f, &basis, &field, &ord);
        let twice = normal_form(&once, &basis, &field, &ord);
        assert_eq!(once, twice);
    }
}
