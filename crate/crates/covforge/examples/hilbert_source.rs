//! The source of the Hilbert covariant, built from the truncated
//! fractional-power series of the dehomogenized form, with exact
//! clearing of the a0-denominators.
//!
//! Run with: cargo run --release --example hilbert_source

use covforge::hilbert::{hilbert_covariant, hilbert_source};
use covforge::series::power_series_for;

fn main() {
    for (r, d) in [(1usize, 4usize), (2, 5), (3, 6)] {
        let h0 = hilbert_source(r, d).unwrap();
        println!("h0 for (r,d) = ({r},{d}):  {h0}");
    }

    // the degenerate direction: d | r collapses everything
    println!("\nh0 for (r,d) = (4,2): {}", hilbert_source(4, 2).unwrap());

    // the series coefficients satisfy the shift recursion, and the top
    // cleared coefficient is the source itself
    let s = power_series_for(2, 6).unwrap();
    println!(
        "\ntheta recursion holds for f(t)^(2/6) truncated at t^3: {}",
        s.theta_recursion_holds()
    );
    println!("a0^3 * theta_3 = {}", s.cleared_theta(3));

    // the full covariant from the source via E+
    let hilb = hilbert_covariant(2, 4).unwrap();
    println!(
        "\ncovariant for (2,4): degree {}, order {}, verified: {:?}",
        hilb.degree(),
        hilb.order(),
        hilb.verify().unwrap()
    );
    for (k, h) in hilb.coeffs().iter().enumerate() {
        println!("  h_{k} = {h}");
    }
}
