//! Degree slices sharing a first-row degree are mutually independent: no
//! monomial or signature of one can divide one of another. The engine runs
//! each such batch concurrently, and the result does not depend on the
//! thread count.
//!
//! ```bash
//! cargo run --example parallel_batches
//! ```

use mwgb::algebra::PrimeField;
use mwgb::driver::{compute_gb, Strategy};
use mwgb::f5::batch_by_d1;
use mwgb::grading::{MDeg, WeightMatrix};
use mwgb::hilbert::random_system;
use mwgb::steps::algosteps_mwh;
use mwgb::system::SystemFile;

fn main() {
    let field = PrimeField::new(65521).unwrap();
    let weights = WeightMatrix::new(vec![vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
    let degree = MDeg::new(vec![10, 5]);
    let degrees = vec![degree.clone(), degree];
    let gens = random_system(&field, &weights, &degrees, 7).unwrap();

    let plan = algosteps_mwh(&weights, &degrees, 20).unwrap();
    let batches = batch_by_d1(&plan);
    println!(
        "{} steps in {} batches; widest batch has {} independent steps",
        plan.len(),
        batches.len(),
        batches.iter().map(|b| b.len()).max().unwrap_or(0)
    );
    for batch in batches.iter().take(6) {
        let d1 = plan.steps[batch[0]].degree.first();
        let degs: Vec<String> = batch
            .iter()
            .map(|&i| plan.steps[i].degree.to_string())
            .collect();
        println!("  first-row degree {d1}: {}", degs.join(" "));
    }

    let sys = SystemFile::new(field, weights, gens, Some(20));
    let single = compute_gb(&sys, Strategy::MwhGcd, None, Some(1), false).unwrap();
    let many = compute_gb(&sys, Strategy::MwhGcd, None, Some(8), false).unwrap();
    println!();
    println!(
        "bases with 1 thread and 8 threads are byte-identical: {}",
        single.basis_text == many.basis_text
    );
}
