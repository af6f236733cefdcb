//! Signature-labeled Macaulay matrices over GF(p) with row-echelon reduction
//! that never permutes rows.

use super::signature::Signature;
use crate::algebra::{Monomial, Polynomial, PrimeField};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// What happened to a row when it was reduced against the pivots above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowFate {
    /// The row survived and now owns the pivot at this column.
    Pivot { col: usize },
    /// The row vanished. `forced` is true when every column already had a
    /// pivot, so the reduction to zero was unavoidable rather than a rank
    /// defect.
    Zero { forced: bool },
}

/// A dense coefficient matrix whose columns are the monomials of one degree
/// slice, sorted strictly decreasing, and whose rows carry signatures in
/// strictly increasing order.
pub struct MacaulayMatrix {
    field: PrimeField,
    columns: Vec<Monomial>,
    col_of: HashMap<Monomial, usize>,
    rows: Vec<Vec<u64>>,
    row_sigs: Vec<Signature>,
    pivot_of_col: Vec<Option<usize>>,
    pivot_count: usize,
    committed: usize,
}

impl MacaulayMatrix {
    pub fn new(field: PrimeField, columns: Vec<Monomial>) -> Self {
        let col_of = columns
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let ncols = columns.len();
        MacaulayMatrix {
            field,
            columns,
            col_of,
            rows: Vec::new(),
            row_sigs: Vec::new(),
            pivot_of_col: vec![None; ncols],
            pivot_count: 0,
            committed: 0,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn row_signature(&self, r: usize) -> &Signature {
        &self.row_sigs[r]
    }

    /// Appends the coefficient vector of `poly` with the given signature.
    pub fn append_row(&mut self, poly: &Polynomial, sig: Signature) -> Result<()> {
        let mut row = vec![0u64; self.columns.len()];
        for (m, c) in poly.terms() {
            let col = *self.col_of.get(m).ok_or_else(|| {
                Error::MalformedStep(format!("monomial {m} is not a column of this step"))
            })?;
            row[col] = *c;
        }
        self.rows.push(row);
        self.row_sigs.push(sig);
        Ok(())
    }

    /// Reduces every not-yet-committed row, top to bottom, against the pivot
    /// rows above it, committing new pivots as they appear. Rows are never
    /// permuted. Returns `(row index, fate)` per processed row, in row order.
    pub fn reduce_pending(&mut self) -> Vec<(usize, RowFate)> {
        let mut fates = Vec::new();
        for r in self.committed..self.rows.len() {
            let fate = self.reduce_row(r);
            fates.push((r, fate));
        }
        self.committed = self.rows.len();
        fates
    }

    fn reduce_row(&mut self, r: usize) -> RowFate {
        let p = self.field.modulus();
        let ncols = self.columns.len();
        let mut row = std::mem::take(&mut self.rows[r]);
        let mut lead = 0;
        loop {
            while lead < ncols && row[lead] == 0 {
                lead += 1;
            }
            if lead == ncols {
                self.rows[r] = row;
                let forced = self.pivot_count == ncols;
                return RowFate::Zero { forced };
            }
            match self.pivot_of_col[lead] {
                Some(pr) => {
                    // row -= row[lead] * pivot_row, fused with one reduction
                    // per entry; the pivot row is monic.
                    let factor = p - row[lead];
                    let pivot_row = &self.rows[pr];
                    for c in lead..ncols {
                        if pivot_row[c] != 0 {
                            row[c] = (row[c] + factor * pivot_row[c]) % p;
                        }
                    }
                    debug_assert_eq!(row[lead], 0);
                }
                None => {
                    let inv = self.field.inv(row[lead]);
                    if inv != 1 {
                        for c in lead..ncols {
                            if row[c] != 0 {
                                row[c] = self.field.mul(row[c], inv);
                            }
                        }
                    }
                    self.rows[r] = row;
                    self.pivot_of_col[lead] = Some(r);
                    self.pivot_count += 1;
                    return RowFate::Pivot { col: lead };
                }
            }
        }
    }

    /// Reads a row back as a polynomial. Terms come out sorted because the
    /// columns are sorted.
    pub fn row_polynomial(&self, r: usize) -> Polynomial {
        let terms: Vec<(Monomial, u64)> = self.rows[r]
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| (self.columns[i].clone(), c))
            .collect();
        Polynomial::from_sorted_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MonomialOrder;
    use crate::grading::WeightMatrix;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn columns_desc(w: &WeightMatrix, mut ms: Vec<Monomial>) -> Vec<Monomial> {
        ms.sort_by(|a, b| w.mono_cmp(b, a));
        ms
    }

    fn sig(i: usize) -> Signature {
        Signature::generator(2, i)
    }

    #[test]
    fn duplicate_row_reduces_to_zero() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::standard_grading(2);
        let cols = columns_desc(
            &w,
            vec![
                Monomial::new(vec![2, 0]),
                Monomial::new(vec![1, 1]),
                Monomial::new(vec![0, 2]),
            ],
        );
        let mut mac = MacaulayMatrix::new(field, cols);
        let f = Polynomial::from_terms(
            vec![
                (Monomial::new(vec![2, 0]), 3),
                (Monomial::new(vec![0, 2]), 5),
            ],
            &field,
            &w,
        );
        mac.append_row(&f, sig(0)).unwrap();
        mac.append_row(&f, sig(1)).unwrap();
        let fates = mac.reduce_pending();
        assert!(matches!(fates[0].1, RowFate::Pivot { .. }));
        assert!(matches!(fates[1].1, RowFate::Zero { forced: false }));
    }

    #[test]
    fn rows_already_in_echelon_form_stay_put() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::standard_grading(2);
        let cols = columns_desc(
            &w,
            vec![
                Monomial::new(vec![2, 0]),
                Monomial::new(vec![1, 1]),
                Monomial::new(vec![0, 2]),
            ],
        );
        let mut mac = MacaulayMatrix::new(field, cols.clone());
        let f = Polynomial::monomial(cols[0].clone(), 1);
        let g = Polynomial::monomial(cols[1].clone(), 1);
        mac.append_row(&f, sig(0)).unwrap();
        mac.append_row(&g, sig(1)).unwrap();
        let fates = mac.reduce_pending();
        assert_eq!(fates[0].1, RowFate::Pivot { col: 0 });
        assert_eq!(fates[1].1, RowFate::Pivot { col: 1 });
        assert_eq!(mac.row_polynomial(0), f);
        assert_eq!(mac.row_polynomial(1), g);
    }

    #[test]
    fn zero_row_with_open_columns_is_a_rank_defect() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::standard_grading(2);
        let cols = columns_desc(
            &w,
            vec![Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1])],
        );
        let mut mac = MacaulayMatrix::new(field, cols.clone());
        let f = Polynomial::monomial(cols[0].clone(), 2);
        mac.append_row(&f, sig(0)).unwrap();
        mac.append_row(&f, sig(1)).unwrap();
        let fates = mac.reduce_pending();
        // One column is still free when the duplicate vanishes.
        assert_eq!(fates[1].1, RowFate::Zero { forced: false });
    }

    /// Plain unrestricted Gaussian rank, as an independent check.
    fn dense_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
        let field = PrimeField::new(p).unwrap();
        let nrows = m.len();
        let ncols = m.first().map_or(0, |r| r.len());
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
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        rank
    }

    #[test]
    fn pivot_count_matches_unrestricted_rank_on_random_matrices() {
        let field = PrimeField::new(101).unwrap();
        let w = WeightMatrix::standard_grading(2);
        let mut rng = StdRng::seed_from_u64(42);
        for trial in 0..20 {
            let ncols = 30;
            let nrows = 20;
            // Columns: arbitrary distinct monomials, sorted.
            let mut cols: Vec<Monomial> = (0..ncols)
                .map(|i| Monomial::new(vec![i as u32, (ncols - i) as u32]))
                .collect();
            cols.sort_by(|a, b| w.mono_cmp(b, a));
            let raw: Vec<Vec<u64>> = (0..nrows)
                .map(|_| {
                    (0..ncols)
                        .map(|_| {
                            if rng.gen_bool(0.3) {
                                rng.gen_range(0..101)
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect();
            let mut mac = MacaulayMatrix::new(field, cols.clone());
            for (i, row) in raw.iter().enumerate() {
                let terms: Vec<(Monomial, u64)> = row
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| c != 0)
                    .map(|(j, &c)| (cols[j].clone(), c))
                    .collect();
                let poly = Polynomial::from_sorted_terms(terms);
                mac.append_row(&poly, sig(i)).unwrap();
            }
            let fates = mac.reduce_pending();
            let pivots = fates
                .iter()
                .filter(|(_, f)| matches!(f, RowFate::Pivot { .. }))
                .count();
            assert_eq!(pivots, dense_rank(raw, 101), "trial {trial}");
        }
    }
}
