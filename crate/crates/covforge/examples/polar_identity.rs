//! The polar-form route to the Hilbert covariant: a single formula
//! produces it without constructing the source first, verified here as
//! an exact polynomial identity with the proportionality scalar printed.
//!
//! Run with: cargo run --release --example polar_identity

use covforge::hilbert::polar_identity_check;
use covforge::rat::format_rat;

fn main() {
    for (r, d) in [(1usize, 2usize), (1, 4), (2, 4), (2, 6)] {
        let chk = polar_identity_check(r, d).unwrap();
        match chk.scalar {
            Some(c) => println!(
                "(r,d) = ({r},{d}): identity holds with scalar {}",
                format_rat(&c)
            ),
            None => println!("(r,d) = ({r},{d}): sides are not proportional"),
        }
        assert!(chk.holds);
    }
}
