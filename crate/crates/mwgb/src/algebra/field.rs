//! Arithmetic in the prime field GF(p) for a word-sized odd prime p.
//!
//! Elements are plain `u64` residues in `[0, p)`. All operations go through a
//! [`PrimeField`] context holding the modulus, so values of different fields
//! cannot be mixed silently by arithmetic (they share no methods).

use crate::error::{Error, Result};

/// Default modulus: the largest prime below 2^16.
pub const DEFAULT_PRIME: u64 = 65521;

/// A prime field GF(p) with p an odd prime below 2^31.
///
/// The bound on p keeps `a + c * b` inside `u64` for reduced operands, which
/// lets row operations fuse a multiply and an add before a single reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || p >= (1 << 31) {
            return Err(Error::Validation(format!(
                "modulus {p} must be an odd prime below 2^31"
            )));
        }
        if !is_prime(p) {
            return Err(Error::Validation(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn normalize(&self, x: i64) -> u64 {
        let p = self.p as i64;
        (((x % p) + p) % p) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Fused `a + b * c` with a single reduction.
    pub fn mul_add(&self, a: u64, b: u64, c: u64) -> u64 {
        (a + b * c) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        // Extended Euclid on (a, p).
        let (mut r0, mut r1) = (a as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "element not invertible");
        self.normalize(s0)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
