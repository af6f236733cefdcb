//! Read and write the plain-text system format, and round-trip a basis
//! through it.
//!
//! ```bash
//! cargo run --example system_files
//! ```

use mwgb::driver::{compute_gb, Strategy};
use mwgb::system::SystemFile;

const TEXT: &str = "\
# two generators of degree (4,6)
p 101
vars 3
weights 2
1 1 1
1 2 3
gen 1 2 2 0; 1 3 0 1
gen 1 2 2 0; 100 3 0 1
dmax 12
";

fn main() {
    let sys = SystemFile::parse(TEXT).unwrap();
    println!(
        "parsed: p={}, {} variables, {} weight rows, {} generators, dmax={:?}",
        sys.field.modulus(),
        sys.n(),
        sys.k(),
        sys.generators.len(),
        sys.d_max
    );

    // Emission is canonical: reparsing reproduces the same value.
    let emitted = sys.emit();
    assert_eq!(SystemFile::parse(&emitted).unwrap(), sys);
    println!();
    println!("canonical form:");
    print!("{emitted}");

    // The printed basis of a run is itself a system file.
    let out = compute_gb(&sys, Strategy::MwhGcd, None, None, false).unwrap();
    let basis_sys = SystemFile::parse(&out.basis_text).unwrap();
    println!();
    println!(
        "computed basis re-parses with {} generators",
        basis_sys.generators.len()
    );
}
