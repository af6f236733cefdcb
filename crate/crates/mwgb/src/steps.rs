//! Step schedules for the matrix engine, and the variable substitution that
//! embeds a matrix-weighted ring into a multigraded one.

use crate::algebra::{Monomial, MonomialOrder, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::f5::{Signature, Step};
use crate::grading::{monomials_of_mdeg, monomials_of_w1_degree, MDeg, WeightMatrix};
use std::collections::BTreeMap;

/// An ordered list of steps, covering every degree whose first coordinate is
/// at most `d_max`. Steps appear in increasing first-row degree, and in
/// increasing lexicographic degree within a first-row degree.
#[derive(Debug, Clone)]
pub struct StepPlan {
    pub steps: Vec<Step>,
    pub d_max: i64,
}

impl StepPlan {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

fn sort_step(w: &WeightMatrix, monomials: &mut [Monomial], signatures: &mut [Signature]) {
    monomials.sort_by(|a, b| w.mono_cmp(b, a));
    signatures.sort_by(|a, b| {
        a.index
            .cmp(&b.index)
            .then_with(|| w.mono_cmp(&a.monomial, &b.monomial))
    });
}

/// The degree-by-degree schedule: one step per full degree vector occurring
/// among monomials of each first-row degree `1..=d_max`. A step at degree `d`
/// holds all monomials of degree `d` and all signatures `(m, i)` with
/// `mdeg(m) = d - d_i`.
pub fn algosteps_mwh(w: &WeightMatrix, input_degrees: &[MDeg], d_max: i64) -> Result<StepPlan> {
    if !w.first_row_positive() {
        return Err(Error::NonPositiveW1);
    }
    let mut steps = Vec::new();
    for d in 1..=d_max {
        let slice = monomials_of_w1_degree(w, d)?;
        let mut by_degree: BTreeMap<MDeg, Vec<Monomial>> = BTreeMap::new();
        for m in slice {
            let deg = w.mdeg_unchecked(&m);
            by_degree.entry(deg).or_default().push(m);
        }
        for (degree, mut monomials) in by_degree {
            let mut signatures = Vec::new();
            for (i, di) in input_degrees.iter().enumerate() {
                let shifted = degree.sub(di);
                for m in monomials_of_mdeg(w, &shifted)? {
                    signatures.push(Signature::new(m, i));
                }
            }
            sort_step(w, &mut monomials, &mut signatures);
            steps.push(Step {
                degree,
                monomials,
                signatures,
            });
        }
    }
    Ok(StepPlan { steps, d_max })
}

/// The baseline schedule following only the first row of weights: one step
/// per first-row degree, holding every monomial of that degree and every
/// signature `(m, i)` with matching first-row degree. Step degrees record
/// only the single coordinate.
pub fn algosteps_w1_default(
    w: &WeightMatrix,
    input_degrees: &[MDeg],
    d_max: i64,
) -> Result<StepPlan> {
    if !w.first_row_positive() {
        return Err(Error::NonPositiveW1);
    }
    let mut steps = Vec::new();
    for d in 1..=d_max {
        let mut monomials = monomials_of_w1_degree(w, d)?;
        let mut signatures = Vec::new();
        for (i, di) in input_degrees.iter().enumerate() {
            for m in monomials_of_w1_degree(w, d - di.first())? {
                signatures.push(Signature::new(m, i));
            }
        }
        sort_step(w, &mut monomials, &mut signatures);
        steps.push(Step {
            degree: MDeg::new(vec![d]),
            monomials,
            signatures,
        });
    }
    Ok(StepPlan { steps, d_max })
}

/// The grading on the image ring: `k` rows over `k·n` variables, where row
/// `i` selects the i-th copy of every original variable. The copies of one
/// original variable sit at adjacent indices, so the reverse lexicographic
/// tie-break of the image order mirrors the original one.
pub fn embedded_weights(w: &WeightMatrix) -> WeightMatrix {
    let (k, n) = (w.k(), w.n());
    let mut rows = vec![vec![0i64; k * n]; k];
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..n {
            row[j * k + i] = 1;
        }
    }
    WeightMatrix::new(rows).expect("block indicator rows are independent")
}

/// Index of the image variable carrying weight `w[i][j]`, i.e. the i-th copy
/// of the j-th original variable.
pub fn embedded_var(k: usize, j: usize, i: usize) -> usize {
    j * k + i
}

/// Display name of an image variable: the i-th copy of `x_{j+1}` prints as
/// `y{j+1}_{i+1}`.
pub fn embedded_var_name(k: usize, flat: usize) -> String {
    format!("y{}_{}", flat / k + 1, flat % k + 1)
}

fn format_embedded(m: &Monomial, k: usize) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.exponents()
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e > 0)
        .map(|(flat, &e)| {
            let name = embedded_var_name(k, flat);
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Substitutes each variable by the product of its `k` weighted copies:
/// `x_j` becomes the monomial with exponent `w[i][j]` on copy `i`. Sends a
/// homogeneous polynomial of degree `d` to a multihomogeneous one of
/// multidegree `d`, compatibly with the graded orders on both sides.
pub fn embed_fw(w: &WeightMatrix, f: &Polynomial) -> Result<Polynomial> {
    if !w.is_nonnegative() {
        return Err(Error::NegativeWeight);
    }
    let (k, n) = (w.k(), w.n());
    let terms: Vec<(Monomial, u64)> = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0u32; k * n];
            for (j, &e) in m.exponents().iter().enumerate() {
                for i in 0..k {
                    exps[embedded_var(k, j, i)] = e * w.rows()[i][j] as u32;
                }
            }
            (Monomial::new(exps), *c)
        })
        .collect();
    Ok(Polynomial::from_sorted_terms(terms))
}

/// The left inverse of [`embed_fw`] on its image: recovers the unique
/// preimage, or reports the first monomial whose exponents are not a
/// per-variable multiple of the weight columns. Assumes every variable has a
/// nonzero weight column.
pub fn section_fw(w: &WeightMatrix, g: &Polynomial) -> Result<Polynomial> {
    if !w.is_nonnegative() {
        return Err(Error::NegativeWeight);
    }
    let (k, n) = (w.k(), w.n());
    let mut terms: Vec<(Monomial, u64)> = Vec::with_capacity(g.terms().len());
    for (m, c) in g.terms() {
        if m.num_vars() != k * n {
            return Err(Error::DimensionMismatch {
                what: "image monomial",
                expected: k * n,
                found: m.num_vars(),
            });
        }
        let mut exps = vec![0u32; n];
        for j in 0..n {
            let column: Vec<i64> = (0..k).map(|i| w.rows()[i][j]).collect();
            let block: Vec<u32> = (0..k)
                .map(|i| m.exponents()[embedded_var(k, j, i)])
                .collect();
            let alpha = match column.iter().position(|&wij| wij != 0) {
                Some(i0) => {
                    let e = block[i0] as i64;
                    if e % column[i0] != 0 {
                        return Err(Error::NotInImage(format_embedded(m, k)));
                    }
                    (e / column[i0]) as u32
                }
                None => 0,
            };
            let consistent = (0..k).all(|i| block[i] as i64 == alpha as i64 * column[i]);
            if !consistent {
                return Err(Error::NotInImage(format_embedded(m, k)));
            }
            exps[j] = alpha;
        }
        terms.push((Monomial::new(exps), *c));
    }
    Ok(Polynomial::from_sorted_terms(terms))
}

/// Applies [`embed_fw`] to every generator.
pub fn embed_system(w: &WeightMatrix, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    gens.iter().map(|f| embed_fw(w, f)).collect()
}

/// Re-sorts a polynomial under a different ambient order. Needed when moving
/// polynomials between the original and image rings in tests and oracles.
pub fn resort(f: &Polynomial, field: &PrimeField, ord: &impl MonomialOrder) -> Polynomial {
    Polynomial::from_terms(f.terms().to_vec(), field, ord)
}
