//! Multiplication maps on graded quotients and the taxonomy of sequences by
//! the divisors of zero they produce.
//!
//! For a sequence `f_1, ..., f_r` and each `i`, multiplication by `f_i` maps
//! the degree-`d` slice of the quotient by the earlier generators into the
//! slice at `d + d_i`. Kernel elements are divisors of zero; they are
//! semi-trivial when the map is surjective at that degree, and eliminable
//! when their leading monomial is divisible by a recorded semi-trivial one.
//! All verdicts are finite statements, checked for every degree whose target
//! stays under the first-row degree bound.

use crate::algebra::{normal_form, Monomial, Polynomial, PrimeField};
use crate::error::{Error, Result};
use crate::f5::{run_matrix_f5, F5Config};
use crate::grading::{monomials_of_w1_degree, MDeg, WeightMatrix};
use crate::steps::algosteps_mwh;
use std::collections::BTreeMap;
use std::fmt;

/// The matrix of one multiplication map in standard-monomial coordinates.
#[derive(Debug, Clone)]
pub struct MultiplicationMap {
    /// Standard monomials of the source degree, strictly decreasing.
    pub source: Vec<Monomial>,
    /// Standard monomials of the target degree, strictly decreasing.
    pub target: Vec<Monomial>,
    /// `target.len() x source.len()`; column j expands `NF(source_j · f)`.
    pub matrix: Vec<Vec<u64>>,
    pub rank: usize,
    /// A basis of the kernel, as monic polynomials supported on the source
    /// monomials.
    pub kernel: Vec<Polynomial>,
}

impl MultiplicationMap {
    pub fn is_injective(&self) -> bool {
        self.kernel.is_empty()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank == self.target.len()
    }
}

/// Builds the multiplication-by-`f` map from degree `d` to `d + mdeg(f)` on
/// the quotient by the ideal with Gröbner basis `gb_prev`.
pub fn multiplication_map(
    field: &PrimeField,
    w: &WeightMatrix,
    gb_prev: &[Polynomial],
    f: &Polynomial,
    d: &MDeg,
) -> Result<MultiplicationMap> {
    let df = w
        .homogeneous_mdeg(f, 0)?
        .ok_or_else(|| Error::Validation("multiplication by zero".into()))?;
    let lms: Vec<Monomial> = gb_prev
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    let standard = |degree: &MDeg| -> Result<Vec<Monomial>> {
        let mut ms: Vec<Monomial> = crate::grading::monomials_of_mdeg(w, degree)?
            .into_iter()
            .filter(|m| !lms.iter().any(|lm| lm.divides(m)))
            .collect();
        ms.sort_by(|a, b| crate::algebra::MonomialOrder::mono_cmp(w, b, a));
        Ok(ms)
    };
    let source = standard(d)?;
    let target = standard(&d.add(&df))?;

    let col_of: BTreeMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = vec![vec![0u64; source.len()]; target.len()];
    for (j, mu) in source.iter().enumerate() {
        let image = normal_form(&f.mono_mul(mu), gb_prev, field, w);
        for (m, c) in image.terms() {
            let row = *col_of
                .get(m)
                .expect("normal form is supported on standard monomials");
            matrix[row][j] = *c;
        }
    }

    let (rank, kernel_vectors) = kernel_basis(&matrix, source.len(), field);
    let kernel: Vec<Polynomial> = kernel_vectors
        .into_iter()
        .map(|v| {
            let terms: Vec<(Monomial, u64)> = v
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(j, &c)| (source[j].clone(), c))
                .collect();
            Polynomial::from_sorted_terms(terms).make_monic(field)
        })
        .collect();

    Ok(MultiplicationMap {
        source,
        target,
        matrix,
        rank,
        kernel,
    })
}

/// Rank and null-space basis of a dense GF(p) matrix with `ncols` columns.
fn kernel_basis(matrix: &[Vec<u64>], ncols: usize, field: &PrimeField) -> (usize, Vec<Vec<u64>>) {
    let mut m: Vec<Vec<u64>> = matrix.to_vec();
    let nrows = m.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = field.inv(m[rank][col]);
        for c in 0..ncols {
            m[rank][c] = field.mul(m[rank][c], inv);
        }
        for r in 0..nrows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..ncols {
                    let delta = field.mul(f, m[rank][c]);
                    m[r][c] = field.sub(m[r][c], delta);
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_cols.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    let mut kernel = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = field.neg(m[row][free]);
        }
        kernel.push(v);
    }
    (rank, kernel)
}

/// How a kernel element of a multiplication map is accounted for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorClass {
    /// The map is surjective at this degree; the reduction to zero is forced
    /// by dimensions.
    SemiTrivial,
    /// The leading monomial is divisible by that of an earlier semi-trivial
    /// divisor, so the syzygy criterion would remove it.
    Eliminable,
    /// Neither: a genuine rank defect.
    Unexplained,
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DivisorClass::SemiTrivial => "semi-trivial",
            DivisorClass::Eliminable => "eliminable",
            DivisorClass::Unexplained => "unexplained",
        };
        write!(f, "{s}")
    }
}

/// The strongest property a sequence satisfies, as verified up to the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Regularity {
    None,
    WeaklyRegular,
    SemiRegular,
    Regular,
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regularity::Regular => "regular",
            Regularity::SemiRegular => "semi_regular",
            Regularity::WeaklyRegular => "weakly_regular",
            Regularity::None => "none",
        };
        write!(f, "{s}")
    }
}

/// One inspected degree of one multiplication map.
#[derive(Debug, Clone)]
pub struct DegreeWitness {
    /// Generator index (0-based) whose map was inspected.
    pub index: usize,
    /// Source degree.
    pub degree: MDeg,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub injective: bool,
    pub surjective: bool,
    /// One entry per kernel basis element: its leading monomial and class.
    pub kernel_classes: Vec<(Monomial, DivisorClass)>,
}

#[derive(Debug, Clone)]
pub struct RegularityReport {
    pub verdict: Regularity,
    /// First-row degree up to which the verdict was verified.
    pub bound: i64,
    pub witnesses: Vec<DegreeWitness>,
}

/// Classifies a homogeneous sequence up to the bound, by computing every
/// multiplication map whose target degree stays under it.
///
/// The quotient bases come from truncated Gröbner bases computed by the
/// matrix engine. The first generator is a unit-free element of a domain and
/// contributes no divisors of zero; inspection starts with the second.
pub fn classify_sequence(
    field: &PrimeField,
    w: &WeightMatrix,
    gens: &[Polynomial],
    bound: i64,
) -> Result<RegularityReport> {
    if !w.first_row_positive() {
        return Err(Error::NonPositiveW1);
    }
    let mut gen_degrees = Vec::with_capacity(gens.len());
    for (i, f) in gens.iter().enumerate() {
        match w.homogeneous_mdeg(f, i)? {
            Some(d) => gen_degrees.push(d),
            None => {
                return Err(Error::Validation(format!("generator {} is zero", i + 1)));
            }
        }
    }

    let mut all_injective = true;
    let mut all_inj_or_surj = true;
    let mut all_explained = true;
    let mut witnesses = Vec::new();

    for i in 1..gens.len() {
        let plan = algosteps_mwh(w, &gen_degrees[..i], bound)?;
        let result = run_matrix_f5(field, w, &gens[..i], &plan, F5Config::default())?;
        let gb = result.basis.reduced(field, w);

        let di = &gen_degrees[i];
        let mut semi_trivial_lms: Vec<Monomial> = Vec::new();
        for d1 in 0..=(bound - di.first()) {
            let mut degrees: Vec<MDeg> = monomials_of_w1_degree(w, d1)?
                .iter()
                .map(|m| w.mdeg_unchecked(m))
                .collect();
            degrees.sort();
            degrees.dedup();
            for d in degrees {
                let mm = multiplication_map(field, w, &gb, &gens[i], &d)?;
                if mm.source.is_empty() {
                    continue;
                }
                let injective = mm.is_injective();
                let surjective = mm.is_surjective();
                let mut kernel_classes = Vec::new();
                if !injective {
                    all_injective = false;
                    if !surjective {
                        all_inj_or_surj = false;
                    }
                    for kp in &mm.kernel {
                        let lm = kp.leading_monomial().unwrap().clone();
                        let class = if surjective {
                            semi_trivial_lms.push(lm.clone());
                            DivisorClass::SemiTrivial
                        } else if semi_trivial_lms.iter().any(|s| s.divides(&lm)) {
                            DivisorClass::Eliminable
                        } else {
                            all_explained = false;
                            DivisorClass::Unexplained
                        };
                        kernel_classes.push((lm, class));
                    }
                }
                witnesses.push(DegreeWitness {
                    index: i,
                    degree: d,
                    source_dim: mm.source.len(),
                    target_dim: mm.target.len(),
                    rank: mm.rank,
                    kernel_dim: mm.kernel.len(),
                    injective,
                    surjective,
                    kernel_classes,
                });
            }
        }
    }

    let verdict = if all_injective {
        Regularity::Regular
    } else if all_inj_or_surj {
        Regularity::SemiRegular
    } else if all_explained {
        Regularity::WeaklyRegular
    } else {
        Regularity::None
    };
    Ok(RegularityReport {
        verdict,
        bound,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn poly(field: &PrimeField, w: &WeightMatrix, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (m(e), field.normalize(c)))
                .collect(),
            field,
            w,
        )
    }

    #[test]
    fn monomial_multiplication_on_the_full_ring_is_injective() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
        let f = Polynomial::monomial(m(&[1, 0, 0]), 1);
        for d1 in 0..4 {
            for mono in monomials_of_w1_degree(&w, d1).unwrap() {
                let d = w.mdeg(&mono).unwrap();
                let mm = multiplication_map(&field, &w, &[], &f, &d).unwrap();
                assert!(mm.is_injective());
                assert_eq!(mm.kernel.len(), mm.source.len() - mm.rank);
            }
        }
    }

    #[test]
    fn single_nonzero_polynomial_is_regular() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
        let f = poly(&field, &w, &[(&[2, 2, 0], 1), (&[3, 0, 1], 1)]);
        let report = classify_sequence(&field, &w, &[f], 10).unwrap();
        assert_eq!(report.verdict, Regularity::Regular);
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn dependent_triple_degrades_from_semi_regular_to_weakly_regular() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
        let gens = vec![
            poly(&field, &w, &[(&[2, 2, 0], 1), (&[3, 0, 1], 1)]),
            poly(&field, &w, &[(&[2, 2, 0], 1), (&[3, 0, 1], -1)]),
            poly(&field, &w, &[(&[2, 2, 0], 1), (&[3, 0, 1], 2)]),
        ];
        // Up to bound 4 the only inspected kernel is the constant at a degree
        // whose target slice is empty, so the map is surjective there.
        let report = classify_sequence(&field, &w, &gens, 4).unwrap();
        assert_eq!(report.verdict, Regularity::SemiRegular);
        // From bound 5 on, the third generator's zero map hits nonempty
        // target slices: x*y^4 survives at (5,9) while z sits in the kernel
        // at (1,3). Those divisors are eliminable (1 is semi-trivial), not
        // semi-trivial.
        let report = classify_sequence(&field, &w, &gens, 20).unwrap();
        assert_eq!(report.verdict, Regularity::WeaklyRegular);
        let witness = report
            .witnesses
            .iter()
            .find(|wit| wit.index == 2 && wit.degree == MDeg::new(vec![1, 3]))
            .unwrap();
        assert!(!witness.injective && !witness.surjective);
        assert_eq!(witness.target_dim, 1);
        assert!(witness
            .kernel_classes
            .iter()
            .all(|(_, c)| *c == DivisorClass::Eliminable));
    }

    #[test]
    fn repeated_generator_is_weakly_regular_but_not_semi_regular() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::new(vec![vec![1, 1, 5], vec![1, 2, 5]]).unwrap();
        let gens = vec![
            poly(&field, &w, &[(&[10, 0, 0], 1), (&[0, 0, 2], 1)]),
            poly(&field, &w, &[(&[1, 1, 0], 1)]),
            poly(&field, &w, &[(&[1, 1, 0], 1)]),
        ];
        let report = classify_sequence(&field, &w, &gens, 20).unwrap();
        assert_eq!(report.verdict, Regularity::WeaklyRegular);
        // The surjectivity failure the taxonomy hinges on: at source degree
        // (4,4) the slice at (6,7) retains a standard monomial.
        let witness = report
            .witnesses
            .iter()
            .find(|wit| wit.index == 2 && wit.degree == MDeg::new(vec![4, 4]))
            .expect("degree (4,4) inspected");
        assert!(!witness.surjective);
        assert!(!witness.injective);
        assert!(witness
            .kernel_classes
            .iter()
            .all(|(_, c)| *c == DivisorClass::Eliminable));
        // And at (0,0) the constant is a semi-trivial divisor.
        let base = report
            .witnesses
            .iter()
            .find(|wit| wit.index == 2 && wit.degree == MDeg::zero(2))
            .unwrap();
        assert!(base.surjective);
        assert_eq!(base.kernel_classes[0].1, DivisorClass::SemiTrivial);
    }
}
