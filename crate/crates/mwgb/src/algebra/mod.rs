//! Exact arithmetic: the prime field, monomials, sparse polynomials, and a
//! Buchberger oracle used for cross-checking the matrix engine.

pub mod buchberger;
pub mod field;
pub mod monomial;
pub mod poly;

pub use buchberger::{buchberger_oracle, interreduce, is_groebner};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{normal_form, s_polynomial, Polynomial};
