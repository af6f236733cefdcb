//! Compute a truncated Gröbner basis for a system that is homogeneous for a
//! 2x3 matrix of weights, and print the basis with the run statistics.
//!
//! ```bash
//! cargo run --example truncated_basis
//! ```

use mwgb::algebra::{Monomial, Polynomial, PrimeField};
use mwgb::driver::{compute_gb, Strategy};
use mwgb::grading::WeightMatrix;
use mwgb::system::SystemFile;

fn main() {
    let field = PrimeField::new(65521).unwrap();
    let weights = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();

    // x1^2*x2^2 + x1^3*x3 and x1^2*x2^2 - x1^3*x3, both of degree (4,6).
    let f1 = Polynomial::from_terms(
        vec![
            (Monomial::new(vec![2, 2, 0]), 1),
            (Monomial::new(vec![3, 0, 1]), 1),
        ],
        &field,
        &weights,
    );
    let f2 = Polynomial::from_terms(
        vec![
            (Monomial::new(vec![2, 2, 0]), 1),
            (Monomial::new(vec![3, 0, 1]), 65520),
        ],
        &field,
        &weights,
    );

    let sys = SystemFile::new(field, weights, vec![f1, f2], Some(14));
    let out = compute_gb(&sys, Strategy::MwhGcd, None, None, false).unwrap();

    println!("basis ({} elements):", out.basis.len());
    for g in &out.basis {
        println!("  {}", g.to_term_text(sys.n()));
    }
    println!();
    println!("{}", out.report.table());
}
