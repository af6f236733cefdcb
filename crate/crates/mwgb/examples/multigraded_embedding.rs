//! Embed a weighted ring into a multigraded one by replacing each variable
//! with the product of its weighted copies. The substitution preserves
//! degrees, the graded order, and S-polynomials, so basis computations can
//! be carried across it.
//!
//! ```bash
//! cargo run --example multigraded_embedding
//! ```

use mwgb::algebra::{s_polynomial, Monomial, Polynomial, PrimeField};
use mwgb::grading::{MDeg, WeightMatrix};
use mwgb::hilbert::random_system;
use mwgb::steps::{embed_fw, embedded_var_name, embedded_weights, section_fw};

fn render(p: &Polynomial, k: usize) -> String {
    p.terms()
        .iter()
        .map(|(m, c)| {
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(flat, &e)| {
                    let name = embedded_var_name(k, flat);
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            format!("{c}*{}", vars.join("*"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() {
    let field = PrimeField::new(65521).unwrap();
    let weights = WeightMatrix::new(vec![vec![1, 1, 1], vec![1, 2, 3]]).unwrap();
    let k = weights.k();

    let f = Polynomial::from_terms(
        vec![
            (Monomial::new(vec![1, 2, 0]), 1),
            (Monomial::new(vec![2, 0, 1]), 1),
        ],
        &field,
        &weights,
    );
    println!(
        "f = x1*x2^2 + x1^2*x3, degree {}",
        weights.homogeneous_mdeg(&f, 0).unwrap().unwrap()
    );

    let image = embed_fw(&weights, &f).unwrap();
    println!("image: {}", render(&image, k));

    let bw = embedded_weights(&weights);
    println!(
        "image multidegree: {}",
        bw.homogeneous_mdeg(&image, 0).unwrap().unwrap()
    );
    let back = section_fw(&weights, &image).unwrap();
    println!("section recovers f: {}", back == f);
    println!();

    // S-polynomials commute with the substitution.
    let degrees = vec![MDeg::new(vec![3, 5]), MDeg::new(vec![4, 6])];
    let gens = random_system(&field, &weights, &degrees, 8).unwrap();
    let s = s_polynomial(&gens[0], &gens[1], &field, &weights).unwrap();
    let lhs = embed_fw(&weights, &s).unwrap();
    let rhs = s_polynomial(
        &embed_fw(&weights, &gens[0]).unwrap(),
        &embed_fw(&weights, &gens[1]).unwrap(),
        &field,
        &bw,
    )
    .unwrap();
    println!("substitution commutes with S-polynomials: {}", lhs == rhs);
}
