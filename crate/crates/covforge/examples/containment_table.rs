//! Containment relations between the coefficient ideals for varying r:
//! necessary conditions are not sufficient, and the actual table has to
//! be computed.
//!
//! Run with: cargo run --release --example containment_table

use covforge::ideals::ideal_containment;

fn main() {
    let cases = [
        (2usize, 3usize, 5usize),
        (3, 4, 5),
        (2, 4, 5),
        (4, 6, 5),
        (2, 6, 4),
        (6, 10, 4),
    ];
    println!("does J_(r1,d) contain J_(r2,d)?\n");
    for (r1, r2, d) in cases {
        let verdict = ideal_containment(r1, r2, d).unwrap();
        println!("  J_({r1},{d}) >= J_({r2},{d}):  {verdict}");
    }
    println!("\nthe r = 1 ideal contains the low-r ones:");
    for d in [5usize, 6] {
        for r in [2usize, 3, 4] {
            let verdict = ideal_containment(1, r, d).unwrap();
            println!("  J_(1,{d}) >= J_({r},{d}):  {verdict}");
        }
    }
}
