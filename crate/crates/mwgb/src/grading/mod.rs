//! Weight matrices, matrix-weighted degrees, the graded reverse
//! lexicographical order they induce, and monomial enumeration at prescribed
//! degrees.

pub mod enumerate;
pub mod rational;

pub use enumerate::{monomials_of_mdeg, monomials_of_w1_degree};

use crate::algebra::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use rational::{feasible, rref, Inequality};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A matrix-weighted degree: the tuple `(d_1, ..., d_k)`. The derived `Ord`
/// is lexicographic, which is the order used to schedule degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MDeg(Vec<i64>);

impl MDeg {
    pub fn new(coords: Vec<i64>) -> Self {
        MDeg(coords)
    }

    pub fn zero(k: usize) -> Self {
        MDeg(vec![0; k])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The first coordinate `d_1`.
    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn add(&self, other: &MDeg) -> MDeg {
        debug_assert_eq!(self.len(), other.len());
        MDeg(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &MDeg) -> MDeg {
        debug_assert_eq!(self.len(), other.len());
        MDeg(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for MDeg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Positivity and boundedness facts about a weight matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightProperties {
    /// All entries strictly positive.
    pub positive: bool,
    /// All entries non-negative.
    pub nonnegative: bool,
    /// Some integer combination of the rows is positive.
    pub positive_type: bool,
    /// Only finitely many monomials exist at each degree; equivalently no
    /// nontrivial monomial has degree zero.
    pub size_bounded: bool,
}

/// A `k x n` integer matrix of rank `k` whose rows define a Z^k-grading on
/// the polynomial ring in `n` variables. It also acts as the graded reverse
/// lexicographical order induced by that grading (see [`MonomialOrder`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    rows: Vec<Vec<i64>>,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Validation("weight matrix must be nonempty".into()));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Validation(
                "weight rows must have equal length".into(),
            ));
        }
        let k = rows.len();
        if k > n {
            return Err(Error::Validation(format!(
                "weight matrix has {k} rows but only {n} variables"
            )));
        }
        let (_, rank) = rref(&rows);
        if rank != k {
            return Err(Error::Validation(format!(
                "weight matrix has rank {rank}, expected {k}"
            )));
        }
        Ok(WeightMatrix { rows })
    }

    /// The standard grading `W = (1 ... 1)`; the induced order is plain
    /// graded reverse lexicographic.
    pub fn standard_grading(n: usize) -> Self {
        WeightMatrix {
            rows: vec![vec![1; n]],
        }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// The degree of the variable `X_{j+1}`: the j-th column.
    pub fn var_degree(&self, j: usize) -> MDeg {
        MDeg(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn mdeg(&self, m: &Monomial) -> Result<MDeg> {
        if m.num_vars() != self.n() {
            return Err(Error::DimensionMismatch {
                what: "monomial",
                expected: self.n(),
                found: m.num_vars(),
            });
        }
        Ok(self.mdeg_unchecked(m))
    }

    pub(crate) fn mdeg_unchecked(&self, m: &Monomial) -> MDeg {
        MDeg(
            self.rows
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(m.exponents())
                        .map(|(&w, &e)| w * e as i64)
                        .sum()
                })
                .collect(),
        )
    }

    /// The degree of `m` under the first row of weights.
    pub fn w1_degree(&self, m: &Monomial) -> i64 {
        self.rows[0]
            .iter()
            .zip(m.exponents())
            .map(|(&w, &e)| w * e as i64)
            .sum()
    }

    pub fn first_row_positive(&self) -> bool {
        self.rows[0].iter().all(|&w| w > 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&w| w >= 0))
    }

    pub fn properties(&self) -> WeightProperties {
        let positive = self.rows.iter().all(|r| r.iter().all(|&w| w > 0));
        let nonnegative = self.is_nonnegative();
        let (k, n) = (self.k(), self.n());

        // Positive type: some rational a with (a^T W)_j >= 1 for every j;
        // integer combinations follow by clearing denominators.
        let positive_type = {
            let sys: Vec<Inequality> = (0..n)
                .map(|j| Inequality::new((0..k).map(|i| self.rows[i][j]).collect(), 1))
                .collect();
            feasible(sys, k)
        };

        // Size-bounded iff ker(W) meets the nonnegative orthant trivially:
        // the system {v >= 0, sum v = 1, W v = 0} must be infeasible.
        let size_bounded = {
            let mut sys: Vec<Inequality> = Vec::new();
            for j in 0..n {
                let mut coeffs = vec![0; n];
                coeffs[j] = 1;
                sys.push(Inequality::new(coeffs, 0));
            }
            sys.push(Inequality::new(vec![1; n], 1));
            sys.push(Inequality::new(vec![-1; n], -1));
            for row in &self.rows {
                sys.push(Inequality::new(row.clone(), 0));
                sys.push(Inequality::new(row.iter().map(|&w| -w).collect(), 0));
            }
            !feasible(sys, n)
        };

        WeightProperties {
            positive,
            nonnegative,
            positive_type,
            size_bounded,
        }
    }

    /// True iff the rational row spaces coincide, i.e. the matrices define the
    /// same homogeneous components. Decided by comparing reduced row echelon
    /// forms.
    pub fn equivalent_to(&self, other: &WeightMatrix) -> Result<bool> {
        if self.k() != other.k() {
            return Err(Error::DimensionMismatch {
                what: "weight rows",
                expected: self.k(),
                found: other.k(),
            });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                what: "weight columns",
                expected: self.n(),
                found: other.n(),
            });
        }
        let (a, _) = rref(&self.rows);
        let (b, _) = rref(&other.rows);
        Ok(a == b)
    }

    /// Splits a polynomial into its homogeneous components, keyed by degree.
    /// The polynomial is homogeneous iff the map has at most one key.
    pub fn homogeneous_components(&self, f: &Polynomial) -> Result<BTreeMap<MDeg, Polynomial>> {
        let mut groups: BTreeMap<MDeg, Vec<(Monomial, u64)>> = BTreeMap::new();
        for (m, c) in f.terms() {
            let d = self.mdeg(m)?;
            groups.entry(d).or_default().push((m.clone(), *c));
        }
        Ok(groups
            .into_iter()
            .map(|(d, terms)| (d, Polynomial::from_sorted_terms(terms)))
            .collect())
    }

    /// The degree of a homogeneous polynomial; `None` for zero, an error for
    /// an inhomogeneous one.
    pub fn homogeneous_mdeg(&self, f: &Polynomial, index: usize) -> Result<Option<MDeg>> {
        let comps = self.homogeneous_components(f)?;
        match comps.len() {
            0 => Ok(None),
            1 => Ok(comps.into_keys().next()),
            _ => Err(Error::InhomogeneousInput { index }),
        }
    }
}

impl MonomialOrder for WeightMatrix {
    /// Graded reverse lexicographic comparison: degrees compared
    /// lexicographically, ties broken by the reverse lexicographic rule (at
    /// the last differing exponent, the larger exponent loses).
    fn mono_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da = self.mdeg_unchecked(a);
        let db = self.mdeg_unchecked(b);
        match da.cmp(&db) {
            Ordering::Equal => revlex(a, b),
            ord => ord,
        }
    }
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (ea, eb) in a.exponents().iter().zip(b.exponents()).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            // Larger exponent at the last difference means smaller monomial.
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests;
