//! The two constructions and their connecting scalar: the
//! Wronskian-determinant covariant equals κ(r,d) times the series-built
//! one, coefficient by coefficient.
//!
//! Run with: cargo run --release --example hilbert_vs_goettingen

use covforge::goettingen::goettingen_basic;
use covforge::hilbert::{hilbert_covariant, hilbert_source, kappa_scalar};
use covforge::rat::format_rat;

fn main() {
    println!("source comparison: source(Gott) = kappa * h0\n");
    for (r, d) in [(1usize, 3usize), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5)] {
        let kappa = kappa_scalar(r, d).unwrap();
        let gott = goettingen_basic(r, d).unwrap();
        let h0 = hilbert_source(r, d).unwrap();
        let equal = *gott.source() == h0.scalar_mul(&kappa);
        println!(
            "  (r,d) = ({r},{d}):  kappa = {:>10}   exact: {equal}",
            format_rat(&kappa)
        );
    }

    println!("\nfull covariant comparison at (2,6):");
    let kappa = kappa_scalar(2, 6).unwrap();
    let gott = goettingen_basic(2, 6).unwrap();
    let hilb = hilbert_covariant(2, 6).unwrap();
    println!(
        "  Gott = kappa * Hilb coefficientwise: {}",
        gott == hilb.scalar_mul(&kappa)
    );
    println!(
        "  degree {}, order {}, kappa = {}",
        gott.degree(),
        gott.order(),
        format_rat(&kappa)
    );
}
