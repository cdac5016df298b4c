//! Deciding perfect-power membership three independent ways: the kernel
//! of the pairing map, the vanishing of the evaluated covariant, and
//! explicit squarefree decomposition.
//!
//! Run with: cargo run --release --example perfect_power_membership

use covforge::binary::{xvars, BinaryForm};
use covforge::hilbert::hilbert_covariant;
use covforge::power::{alpha_kernel, perfect_power_decompose, pow_form, vanishing_test};
use covforge::rat::{format_rat, rat_int};

fn report(name: &str, f: &BinaryForm, r: usize, mu: usize) {
    let hilb = hilbert_covariant(r, f.order()).unwrap();
    let kernel = alpha_kernel(f, r).unwrap();
    let vanishes = vanishing_test(&hilb, f).unwrap();
    let dec = perfect_power_decompose(f, mu).unwrap();
    println!("{name}:");
    println!("  pairing kernel dimension: {}", kernel.len());
    println!("  Hilb_{{{r},{}}} vanishes: {vanishes}", f.order());
    match &dec {
        Some(dec) => println!(
            "  decomposition: {} * (base)^{} with base Cayley coefficients {:?}",
            format_rat(&dec.scalar),
            dec.exponent,
            dec.base
                .rational_coeffs()
                .unwrap()
                .iter()
                .map(format_rat)
                .collect::<Vec<_>>()
        ),
        None => println!("  decomposition: not a {mu}-th power"),
    }
    assert_eq!(!kernel.is_empty(), vanishes);
    assert_eq!(vanishes, dec.is_some());
}

fn main() {
    // a genuine cube: (x1^2 + 2 x2^2)^3 with r = 2 (e = 2, mu = 3)
    let q = BinaryForm::from_rationals(2, xvars(), vec![rat_int(1), rat_int(0), rat_int(2)])
        .unwrap();
    let cube = pow_form(&q, 3).unwrap();
    report("(x1^2 + 2 x2^2)^3", &cube, 2, 3);

    // not a cube
    let sum = BinaryForm::from_rationals(
        6,
        xvars(),
        vec![
            rat_int(1),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(1),
        ],
    )
    .unwrap();
    report("x1^6 + x2^6", &sum, 2, 3);

    // fifth power of a linear form with r = 2 (e = 1, mu = 5)
    let lin = BinaryForm::from_rationals(1, xvars(), vec![rat_int(1), rat_int(1)]).unwrap();
    let fifth = pow_form(&lin, 5).unwrap();
    report("(x1 + x2)^5", &fifth, 2, 5);
}
