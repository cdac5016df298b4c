//! Graded pieces of the three ideals attached to the perfect-power locus
//! and the containment chain between them.
//!
//! Run with: cargo run --release --example graded_ideal_dimensions

use covforge::ideals::{compare_pieces, g_piece, ix_piece, j_piece, Comparison};

fn main() {
    // the cubic pieces for squares of cubics inside sextics (e = 2, d = 6)
    let j = j_piece(2, 6, 3).unwrap();
    let g = g_piece(2, 6, 3).unwrap();
    let ix = ix_piece(2, 6, 3).unwrap();
    println!("degree-3 pieces for (r,d) = (2,6):");
    println!("  dim J_3    = {}", j.rank);
    println!("  dim g_3    = {}", g.rank);
    println!("  dim (I_X)_3 = {}", ix.rank);
    let (jg, _, _) = compare_pieces(&j, &g).unwrap();
    let (gix, _, _) = compare_pieces(&g, &ix).unwrap();
    println!("  J_3 vs g_3: {:?}, g_3 vs (I_X)_3: {:?}", jg, gix);
    assert!(matches!(jg, Comparison::LeftInRight | Comparison::Equal));
    assert!(matches!(gix, Comparison::LeftInRight | Comparison::Equal));

    // the quartic piece for cubes of quadratics inside sextics (e = 3):
    // all of (I_X)_4, forced by the minors
    let g4 = g_piece(3, 6, 4).unwrap();
    let ix4 = ix_piece(3, 6, 4).unwrap();
    println!("\ndegree-4 pieces for (r,d) = (3,6):");
    println!("  dim g_4    = {}", g4.rank);
    println!("  dim (I_X)_4 = {}", ix4.rank);
    let (cmp, _, _) = compare_pieces(&g4, &ix4).unwrap();
    println!("  g_4 vs (I_X)_4: {:?}", cmp);

    // the twisted cubic: the minors give exactly the classical quadrics
    let tc = g_piece(1, 3, 2).unwrap();
    println!("\ntwisted cubic: dim g_2 = {}", tc.rank);
}
