//! Seeded random systems and an empirical look at genericity: dense random
//! sequences at fixed degrees are almost always regular.
//!
//! ```bash
//! cargo run --example random_sampling
//! ```

use mwgb::algebra::PrimeField;
use mwgb::grading::{MDeg, WeightMatrix};
use mwgb::hilbert::{classify_sequence, random_system, Regularity};
use mwgb::system::SystemFile;

fn main() {
    let field = PrimeField::new(101).unwrap();
    let weights = WeightMatrix::new(vec![vec![1, 2, 3], vec![2, 1, 1]]).unwrap();
    let degree = MDeg::new(vec![10, 5]);
    let degrees = vec![degree.clone(), degree];

    // The same seed always yields the same system.
    let gens = random_system(&field, &weights, &degrees, 42).unwrap();
    let again = random_system(&field, &weights, &degrees, 42).unwrap();
    assert_eq!(gens, again);
    let sys = SystemFile::new(field, weights.clone(), gens, None);
    println!("system for seed 42:");
    print!("{}", sys.emit());
    println!();

    let trials = 40;
    let mut regular = 0;
    for seed in 0..trials {
        let gens = random_system(&field, &weights, &degrees, seed).unwrap();
        let report = classify_sequence(&field, &weights, &gens, 16).unwrap();
        if report.verdict == Regularity::Regular {
            regular += 1;
        }
    }
    println!("{regular}/{trials} sampled sequences are regular up to bound 16");
}
