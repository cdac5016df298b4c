//! The general construction: feed any covariant Ψ of the generic
//! order-(d-2) form through the symmetrized-Wronskian recipe and get a
//! covariant of the d-ic with the same degree and order.
//!
//! Run with: cargo run --release --example goettingen_recipe

use covforge::binary::xvars;
use covforge::covariant::Covariant;
use covforge::goettingen::{generic_b, goettingen_basic, goettingen_general};
use covforge::rat::format_rat;

fn main() {
    let d = 6usize;
    let b = generic_b(d); // the generic quartic, coefficients b0..b4
    let f = Covariant::generic(d, "a", xvars());

    // quadratic covariants map to even transvectants
    for n in 0..=1usize {
        let psi = b.transvect(&b, 2 * n).unwrap();
        let lifted = goettingen_general(&psi, 1, d).unwrap();
        let expect = f.transvect(&f, 2 * n + 2).unwrap();
        let scalar = lifted.proportionality(&expect).unwrap();
        println!(
            "Psi = (B,B)_{}: lift = {} * (F,F)_{}",
            2 * n,
            format_rat(&scalar),
            2 * n + 2
        );
    }

    // the cube of B reproduces the determinant construction
    let psi = b.mul(&b).unwrap().mul(&b).unwrap();
    let lifted = goettingen_general(&psi, 2, d).unwrap();
    let basic = goettingen_basic(2, d).unwrap();
    println!(
        "Psi = B^3: lift = {} * Gott_2",
        format_rat(&lifted.proportionality(&basic).unwrap())
    );

    // a nontrivial covariant can still lift to zero: the cubic invariant
    // of the quartic B at d = 6
    let h = b.transvect(&b, 2).unwrap();
    let cubic_invariant = b.transvect(&h, 4).unwrap();
    assert!(!cubic_invariant.is_zero());
    let lifted = goettingen_general(&cubic_invariant, 2, d).unwrap();
    println!(
        "Psi = (B,(B,B)_2)_4 (a nonzero invariant): lift is zero? {}",
        lifted.is_zero()
    );
}
