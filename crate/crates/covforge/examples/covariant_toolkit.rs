//! The coefficient-space calculus: the E operators, recovering a
//! covariant from its source, verification by the Γ operators, and the
//! dimension count for covariant spaces.
//!
//! Run with: cargo run --release --example covariant_toolkit

use covforge::binary::xvars;
use covforge::cayley::{e_minus, e_plus};
use covforge::covariant::{covariant_from_source, zeta, Covariant};
use covforge::parse::parse_poly;
use covforge::vars::{Context, VarFamily};

fn main() {
    // the discriminant source of the binary quadratic
    let ctx = Context::new(vec![VarFamily::flat("a", 0, 3)]).unwrap();
    let disc = parse_poly("a0*a2 - a1^2", &ctx).unwrap();
    println!("E-(a0 a2 - a1^2) = {}", e_minus(&disc, "a").unwrap());
    println!("E+(a0 a2 - a1^2) = {}", e_plus(&disc, "a").unwrap());

    // a source of the sextic reconstructs a full covariant
    let ctx6 = Context::new(vec![VarFamily::flat("a", 0, 7)]).unwrap();
    let phi0 = parse_poly("a0^2*a3 + 2*a1^3 - 3*a0*a1*a2", &ctx6).unwrap();
    let cov = covariant_from_source(&phi0, 6, xvars()).unwrap();
    println!(
        "\nreconstructed covariant: degree {}, order {}, weight {}",
        cov.degree(),
        cov.order(),
        cov.weight()
    );
    println!("verification: {:?}", cov.verify().unwrap());

    // it is the familiar compound transvectant
    let f = Covariant::generic(6, "a", xvars());
    let compound = f.transvect(&f.transvect(&f, 2).unwrap(), 1).unwrap();
    println!("equals (F,(F,F)_2)_1 exactly: {}", cov == compound);

    // dimensions of covariant spaces from the partition count
    println!("\ndim C(6, 3, 6)   = {}", zeta(6, 3, 6));
    println!("dim C(15, 6, 78) = {}", zeta(15, 6, 78));
    println!("dim C(8, 1, 8)   = {}", zeta(8, 1, 8));
}
