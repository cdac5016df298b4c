//! Equations for the bitangents of a plane quartic: three binary sextics
//! in λ whose common vanishing in the dual coordinates u picks out the
//! 28 bitangent lines.
//!
//! Run with: cargo run --release --example bitangent_system

use covforge::rat::rat_int;
use covforge::transfer::{bitangent_system, NaryForm};

fn main() {
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
    let sys = bitangent_system(&fermat).unwrap();
    for (i, e) in sys.iter().enumerate() {
        println!("E_{} (order {} in lambda):", i + 1, e.order());
        for (k, c) in e.coeffs().iter().enumerate() {
            if c.is_zero() {
                println!("  c_{k} = 0");
            } else {
                println!(
                    "  c_{k}: degree {} in u, {} terms",
                    c.degree_in_family("u").unwrap().unwrap(),
                    c.n_terms()
                );
            }
        }
    }

    // a double conic has every line as a "bitangent": all three systems
    // vanish identically
    let conic = NaryForm::from_rationals(
        3,
        2,
        vec![
            (vec![2, 0, 0], rat_int(1)),
            (vec![0, 2, 0], rat_int(2)),
            (vec![0, 0, 2], rat_int(1)),
            (vec![1, 0, 1], rat_int(-1)),
        ],
    )
    .unwrap();
    let dc = conic.square().unwrap();
    let sys = bitangent_system(&dc).unwrap();
    println!(
        "\ndouble conic: all three systems identically zero? {}",
        sys.iter().all(|e| e.is_zero())
    );
}
