//! Lifting the binary perfect-power test to ternary forms: restrict to a
//! symbolic line, evaluate the determinant construction, and ask whether
//! the result vanishes identically.
//!
//! Run with: cargo run --release --example clebsch_transfer

use covforge::rat::rat_int;
use covforge::transfer::{restrict_to_line, transfer_vanishing_test, NaryForm};

fn main() {
    // a double conic: (x1^2 + x2^2 + x3^2)^2
    let conic = NaryForm::from_rationals(
        3,
        2,
        vec![
            (vec![2, 0, 0], rat_int(1)),
            (vec![0, 2, 0], rat_int(1)),
            (vec![0, 0, 2], rat_int(1)),
        ],
    )
    .unwrap();
    let double_conic = conic.square().unwrap();
    println!(
        "double conic vanishes under the r=2 transfer: {}",
        transfer_vanishing_test(&double_conic, 2).unwrap()
    );

    // the Fermat quartic is not a square of a quadratic
    let fermat = NaryForm::from_rationals(
        3,
        4,
        vec![
            (vec![4, 0, 0], rat_int(1)),
            (vec![0, 4, 0], rat_int(1)),
            (vec![0, 0, 4], rat_int(1)),
        ],
    )
    .unwrap();
    println!(
        "Fermat quartic vanishes under the r=2 transfer: {}",
        transfer_vanishing_test(&fermat, 2).unwrap()
    );

    // the restriction itself: a binary quartic in λ with coefficients
    // bihomogeneous in the two spanning points
    let theta = restrict_to_line(&fermat).unwrap();
    println!("\nrestriction of the Fermat quartic to the line through p, q:");
    for (k, c) in theta.coeffs().iter().enumerate() {
        println!("  lambda-coefficient {k}: {c}");
    }

    // fourth powers of linear forms die under the Hessian transfer (r=1)
    let linear = NaryForm::from_rationals(
        3,
        1,
        vec![
            (vec![1, 0, 0], rat_int(1)),
            (vec![0, 1, 0], rat_int(2)),
            (vec![0, 0, 1], rat_int(-1)),
        ],
    )
    .unwrap();
    let fourth = linear.square().unwrap().square().unwrap();
    println!(
        "\nL^4 vanishes under the r=1 transfer: {}",
        transfer_vanishing_test(&fourth, 1).unwrap()
    );
}
