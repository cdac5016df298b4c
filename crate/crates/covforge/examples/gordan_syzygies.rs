//! Exact linear relations between compound transvectants, checked with
//! the prefix-notation identity checker.
//!
//! Run with: cargo run --release --example gordan_syzygies

use covforge::identity::identity_check_str;
use covforge::rat::{format_rat, rat};

fn main() {
    // (F,(F,F)_4)_1 = (2(2d-5)/(d-4)) (F,(F,F)_2)_3 for d >= 5
    for d in [5usize, 6] {
        let c = rat(2 * (2 * d as i64 - 5), d as i64 - 4);
        let rhs = format!("SCALE({}, T(F,T(F,F,2),3))", format_rat(&c));
        let holds = identity_check_str("T(F,T(F,F,4),1)", &rhs, d).unwrap();
        println!(
            "d={d}: (F,(F,F)_4)_1 = {} (F,(F,F)_2)_3   {holds}",
            format_rat(&c)
        );
    }

    // F^2 (F,F)_4 = c1 (F,F)_2^2 + c2 (F^2,(F,F)_2)_2 for d >= 4
    for d in [4usize, 5, 6] {
        let di = d as i64;
        let c1 = rat(di * (2 * di - 5), (di - 3) * (2 * di - 1));
        let c2 = rat(2 * (2 * di - 5), di - 3);
        let rhs = format!(
            "ADD(SCALE({}, POW(T(F,F,2),2)), SCALE({}, T(MUL(F,F),T(F,F,2),2)))",
            format_rat(&c1),
            format_rat(&c2)
        );
        let holds = identity_check_str("MUL(MUL(F,F),T(F,F,4))", &rhs, d).unwrap();
        println!(
            "d={d}: F^2(F,F)_4 = {} (F,F)_2^2 + {} (F^2,(F,F)_2)_2   {holds}",
            format_rat(&c1),
            format_rat(&c2)
        );
    }

    // a deliberately false identity is reported as such
    let bogus = identity_check_str("T(F,F,2)", "SCALE(2, T(F,F,2))", 4).unwrap();
    println!("\n(F,F)_2 = 2 (F,F)_2 claimed for d=4: {bogus}");
}
