//! Classify sequences by the divisors of zero they produce in successive
//! quotients: trivial kernels everywhere (regular), kernels only at degrees
//! where the multiplication map is surjective (semi-regular), or kernels
//! whose leading monomials are divisible by an earlier semi-trivial divisor
//! (weakly regular).
//!
//! ```bash
//! cargo run --example regularity_taxonomy
//! ```

use mwgb::algebra::{Monomial, Polynomial, PrimeField};
use mwgb::grading::{MDeg, WeightMatrix};
use mwgb::hilbert::{classify_sequence, random_system};

fn poly(field: &PrimeField, w: &WeightMatrix, terms: &[(&[u32], i64)]) -> Polynomial {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|&(e, c)| (Monomial::new(e.to_vec()), field.normalize(c)))
            .collect(),
        field,
        w,
    )
}

fn main() {
    let field = PrimeField::new(65521).unwrap();
    let bound = 12;

    // A generic pair: regular.
    let w = WeightMatrix::new(vec![vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
    let d = MDeg::new(vec![10, 5]);
    let gens = random_system(&field, &w, &[d.clone(), d], 3).unwrap();
    let report = classify_sequence(&field, &w, &gens, bound).unwrap();
    println!("generic pair at degree (10,5): {}", report.verdict);

    // A linearly dependent triple in a two-dimensional degree slice: the
    // third generator multiplies to zero, and beyond small degrees its
    // kernels are eliminable, not semi-trivial.
    let w = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
    let gens = vec![
        poly(&field, &w, &[(&[2, 2, 0], 1), (&[3, 0, 1], 1)]),
        poly(&field, &w, &[(&[2, 2, 0], 1), (&[3, 0, 1], -1)]),
        poly(&field, &w, &[(&[2, 2, 0], 1), (&[3, 0, 1], 2)]),
    ];
    let small = classify_sequence(&field, &w, &gens, 4).unwrap();
    let large = classify_sequence(&field, &w, &gens, bound).unwrap();
    println!(
        "dependent triple at degree (4,6): {} up to bound 4, {} up to bound {bound}",
        small.verdict, large.verdict
    );

    // A repeated generator: every kernel of the duplicate is divisible by
    // the constant, which is semi-trivial at the base degree.
    let w = WeightMatrix::new(vec![vec![1, 1, 5], vec![1, 2, 5]]).unwrap();
    let gens = vec![
        poly(&field, &w, &[(&[10, 0, 0], 1), (&[0, 0, 2], 1)]),
        poly(&field, &w, &[(&[1, 1, 0], 1)]),
        poly(&field, &w, &[(&[1, 1, 0], 1)]),
    ];
    let report = classify_sequence(&field, &w, &gens, bound).unwrap();
    println!("repeated-generator triple: {}", report.verdict);
    for wit in report.witnesses.iter().filter(|wit| !wit.injective).take(4) {
        println!(
            "  generator {} at {}: dim {} -> {}, rank {}, kernel {}",
            wit.index + 1,
            wit.degree,
            wit.source_dim,
            wit.target_dim,
            wit.rank,
            wit.kernel_dim
        );
        for (lm, class) in &wit.kernel_classes {
            println!("    kernel element with leading monomial {lm}: {class}");
        }
    }
}
