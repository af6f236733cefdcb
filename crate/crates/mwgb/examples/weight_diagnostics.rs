//! Inspect weight matrices: positivity, boundedness, equivalence, and how
//! equivalent matrices can still order monomials differently.
//!
//! ```bash
//! cargo run --example weight_diagnostics
//! ```

use mwgb::algebra::{Monomial, MonomialOrder};
use mwgb::grading::WeightMatrix;
use std::cmp::Ordering;

fn describe(name: &str, w: &WeightMatrix) {
    let p = w.properties();
    println!(
        "{name}: rows {:?}\n  positive {}, nonnegative {}, positive type {}, size-bounded {}",
        w.rows(),
        p.positive,
        p.nonnegative,
        p.positive_type,
        p.size_bounded
    );
}

fn main() {
    let a = WeightMatrix::new(vec![vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
    describe("A", &a);

    // x1*x2 has degree zero here, so slices are infinite.
    let b = WeightMatrix::new(vec![vec![1, -1]]).unwrap();
    describe("B", &b);

    // Negative entries, but -1 times the first row is positive.
    let c = WeightMatrix::new(vec![vec![-1, -1], vec![0, 1]]).unwrap();
    describe("C", &c);

    let d = WeightMatrix::new(vec![vec![1, 1], vec![0, 1]]).unwrap();
    describe("D", &d);
    println!();
    println!(
        "C and D are equivalent (same row space): {}",
        c.equivalent_to(&d).unwrap()
    );

    let one = Monomial::one(2);
    let xy = Monomial::new(vec![1, 1]);
    let dir = |o: Ordering| match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    };
    println!(
        "under D: 1 {} x1*x2;  under C: 1 {} x1*x2",
        dir(d.mono_cmp(&one, &xy)),
        dir(c.mono_cmp(&one, &xy)),
    );
    println!(
        "equivalent weights grade polynomials identically, but only D's order is a monomial order"
    );
}
