//! Exact rational linear algebra at tiny sizes: reduced row echelon form and
//! Fourier–Motzkin feasibility for systems of linear inequalities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced row echelon form over Q. Returns the canonical form and the rank.
pub fn rref(rows: &[Vec<i64>]) -> (Vec<Vec<Rat>>, usize) {
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].clone();
        for x in &mut m[pivot_row] {
            *x /= inv.clone();
        }
        for r in 0..nrows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let delta = &f * &m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }
    (m, pivot_row)
}

/// One linear inequality `coeffs · x >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl Inequality {
    pub fn new(coeffs: Vec<i64>, rhs: i64) -> Self {
        Inequality {
            coeffs: coeffs.into_iter().map(rat).collect(),
            rhs: rat(rhs),
        }
    }

    /// Scales by a positive factor so the largest absolute coefficient is 1,
    /// giving a canonical representative for deduplication.
    fn normalized(mut self) -> Self {
        let scale = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.rhs))
            .map(|c| c.abs())
            .max();
        if let Some(s) = scale {
            if !s.is_zero() {
                for c in &mut self.coeffs {
                    *c /= s.clone();
                }
                self.rhs /= s;
            }
        }
        self
    }
}

/// Decides feasibility of `{x in Q^n : every inequality holds}` by eliminating
/// variables one at a time. Intermediate systems are deduplicated; sizes here
/// are tiny (k, n of a weight matrix).
pub fn feasible(system: Vec<Inequality>, nvars: usize) -> bool {
    let mut sys: Vec<Inequality> = system;
    for v in 0..nvars {
        let mut lower: Vec<Inequality> = Vec::new();
        let mut upper: Vec<Inequality> = Vec::new();
        let mut rest: Vec<Inequality> = Vec::new();
        for ineq in sys {
            if ineq.coeffs[v].is_positive() {
                lower.push(ineq);
            } else if ineq.coeffs[v].is_negative() {
                upper.push(ineq);
            } else {
                rest.push(ineq);
            }
        }
        let mut seen: std::collections::HashSet<Vec<(BigInt, BigInt)>> =
            std::collections::HashSet::new();
        let mut push_unique = |out: &mut Vec<Inequality>, ineq: Inequality| {
            let ineq = ineq.normalized();
            let key: Vec<(BigInt, BigInt)> = ineq
                .coeffs
                .iter()
                .chain(std::iter::once(&ineq.rhs))
                .map(|r| (r.numer().clone(), r.denom().clone()))
                .collect();
            if seen.insert(key) {
                out.push(ineq);
            }
        };
        let mut next: Vec<Inequality> = Vec::new();
        for ineq in rest {
            push_unique(&mut next, ineq);
        }
        for lo in &lower {
            for up in &upper {
                // Combine a*x >= b (a_v > 0) with c*x >= d (c_v < 0) into
                // (-c_v)*a + a_v*c >= (-c_v)*b + a_v*d, eliminating x_v.
                let a_v = lo.coeffs[v].clone();
                let neg_c_v = -up.coeffs[v].clone();
                let coeffs: Vec<Rat> = lo
                    .coeffs
                    .iter()
                    .zip(&up.coeffs)
                    .map(|(a, c)| &neg_c_v * a + &a_v * c)
                    .collect();
                let rhs = &neg_c_v * &lo.rhs + &a_v * &up.rhs;
                push_unique(&mut next, Inequality { coeffs, rhs });
            }
        }
        sys = next;
    }
    sys.iter().all(|ineq| !ineq.rhs.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_detects_dependence() {
        let (_, rank) = rref(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(rank, 1);
        let (_, rank) = rref(&[vec![1, 1, 1], vec![1, 2, 3]]);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_is_canonical_for_row_equivalent_matrices() {
        let (a, _) = rref(&[vec![1, 1], vec![0, 1]]);
        let (b, _) = rref(&[vec![-1, -1], vec![0, 1]]);
        assert_eq!(a, b);
        let (c, _) = rref(&[vec![1, 0]]);
        let (d, _) = rref(&[vec![0, 1]]);
        assert_ne!(c, d);
    }

    #[test]
    fn simple_feasibility() {
        // x >= 1 and -x >= 0 is infeasible
        let sys = vec![Inequality::new(vec![1], 1), Inequality::new(vec![-1], 0)];
        assert!(!feasible(sys, 1));
        // x >= 1 and x - y >= 0 and y >= -3 is feasible
        let sys = vec![
            Inequality::new(vec![1, 0], 1),
            Inequality::new(vec![1, -1], 0),
            Inequality::new(vec![0, 1], -3),
        ];
        assert!(feasible(sys, 2));
    }

    #[test]
    fn degenerate_constant_constraints() {
        assert!(feasible(vec![Inequality::new(vec![0], -1)], 1));
        assert!(!feasible(vec![Inequality::new(vec![0], 1)], 1));
    }
}
