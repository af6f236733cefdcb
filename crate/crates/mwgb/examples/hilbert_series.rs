//! Hilbert multiseries: the closed form for regular sequences, the floored
//! form for semi-regular ones, and the dimension count against a computed
//! basis.
//!
//! ```bash
//! cargo run --example hilbert_series
//! ```

use mwgb::algebra::PrimeField;
use mwgb::f5::{run_matrix_f5, F5Config};
use mwgb::grading::{MDeg, WeightMatrix};
use mwgb::hilbert::{
    hs_algebra, hs_quotient_oracle, hs_regular, random_system, TruncatedMultiseries,
};
use mwgb::steps::algosteps_mwh;

fn show(title: &str, hs: &TruncatedMultiseries) {
    println!("{title}:");
    for (d, c) in hs.coefficients() {
        println!("  {d}: {c}");
    }
}

fn main() {
    let field = PrimeField::new(65521).unwrap();
    let weights = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
    let bound = 8;

    show("ambient algebra", &hs_algebra(&weights, bound).unwrap());
    println!();

    let degrees = vec![MDeg::new(vec![3, 5]), MDeg::new(vec![4, 6])];
    let gens = random_system(&field, &weights, &degrees, 12).unwrap();
    let predicted = hs_regular(&weights, &degrees, bound).unwrap();
    show(
        "predicted for a regular pair of degrees (3,5), (4,6)",
        &predicted,
    );
    println!();

    let plan = algosteps_mwh(&weights, &degrees, bound).unwrap();
    let result = run_matrix_f5(&field, &weights, &gens, &plan, F5Config::default()).unwrap();
    let gb = result.basis.reduced(&field, &weights);
    let counted = hs_quotient_oracle(&weights, &gb, bound).unwrap();
    show("counted from the computed basis", &counted);
    println!();
    println!("prediction matches the count: {}", predicted == counted);
}
