//! Monomials as exponent vectors, and the comparator interface used by all
//! polynomial operations.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A monomial `X1^a1 ... Xn^an`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `X_{j+1}` (0-based index) in `n` variables.
    pub fn var(n: usize, j: usize) -> Self {
        let mut exps = vec![0; n];
        exps[j] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference; errors when `other` does not divide `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        if !other.divides(self) {
            return Err(Error::NotDivisible);
        }
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A total order on monomials of a fixed ambient ring.
///
/// Implementations must be compatible with multiplication
/// (`a < b` implies `m*a < m*b`); all orders in this crate are.
pub trait MonomialOrder {
    fn mono_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering;

    fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.mono_cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl<T: MonomialOrder + ?Sized> MonomialOrder for &T {
    fn mono_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        (**self).mono_cmp(a, b)
    }
}
