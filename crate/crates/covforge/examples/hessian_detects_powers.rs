//! The classical starting point: the Hessian of a binary form vanishes
//! exactly on d-th powers of linear forms, and coincides with the second
//! transvectant (F,F)_2 up to a scalar.
//!
//! Run with: cargo run --release --example hessian_detects_powers

use covforge::binary::{hessian, transvectant, xvars, BinaryForm};
use covforge::rat::{format_rat, rat_int};

fn main() {
    // a generic quartic: Hessian as a polynomial identity
    let f = BinaryForm::generic(4, "a", xvars());
    let he = hessian(&f).unwrap();
    println!("He(F) for the generic quartic has order {}:", he.order());
    for (i, c) in he.coeffs().iter().enumerate() {
        println!("  c_{i} = {c}");
    }

    let t2 = transvectant(&f, &f, 2).unwrap();
    let scalar = he.proportionality(&t2).unwrap();
    println!("\nHe(F) = {} * (F,F)_2", format_rat(&scalar));

    // perfect powers have vanishing Hessian
    let power = BinaryForm::from_rationals(
        4,
        xvars(),
        // (x1 + 2 x2)^4 in Cayley coefficients: (1, 2, 4, 8, 16)
        vec![rat_int(1), rat_int(2), rat_int(4), rat_int(8), rat_int(16)],
    )
    .unwrap();
    println!(
        "\nHe((x1 + 2 x2)^4) = 0? {}",
        hessian(&power).unwrap().is_zero()
    );

    let generic = BinaryForm::from_rationals(
        4,
        xvars(),
        vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(1)],
    )
    .unwrap();
    println!(
        "He(x1^4 + x2^4) = 0? {}",
        hessian(&generic).unwrap().is_zero()
    );
}
