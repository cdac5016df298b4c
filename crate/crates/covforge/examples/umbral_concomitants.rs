//! Bracket-monomial concomitants evaluated umbrally: expand the symbolic
//! expression in letter coordinates, then trade each letter's degree-d
//! monomials for the form's coefficients.
//!
//! Run with: cargo run --release --example umbral_concomitants

use covforge::rat::rat_int;
use covforge::sampling;
use covforge::transfer::{parse_bracket, umbral_evaluate, NaryForm};

fn main() {
    let expr = parse_bracket("(ab u)^2 (ac u) a_x b_x^2 c_x^3").unwrap();
    println!("letters: {:?}", expr.letters);
    println!("letter degrees: {:?}", expr.letter_degrees());

    // the umbral identity: a_x^d reproduces the form
    let cubic = NaryForm::from_rationals(
        3,
        3,
        vec![
            (vec![3, 0, 0], rat_int(1)),
            (vec![1, 1, 1], rat_int(-2)),
            (vec![0, 0, 3], rat_int(1)),
        ],
    )
    .unwrap();
    let id = parse_bracket("a_x^3").unwrap();
    let value = umbral_evaluate(&id, &cubic).unwrap();
    println!("\na_x^3 on a cubic reproduces it: {value}");

    // the degree-3 concomitant of quartics vanishes on double conics and
    // not on a generic quartic
    let mut rng = sampling::rng(11);
    let dc = sampling::random_double_conic(&mut rng).unwrap();
    let on_dc = umbral_evaluate(&expr, &dc).unwrap();
    println!("\non a random double conic: zero? {}", on_dc.is_zero());

    let quartic = sampling::random_ternary_form(4, &mut rng);
    let on_q = umbral_evaluate(&expr, &quartic).unwrap();
    println!("on a random quartic: zero? {}", on_q.is_zero());

    // the two letter-relabeled renderings agree after evaluation
    let expr_b = parse_bracket("(ab u) (ac u)^2 a_x b_x^3 c_x^2").unwrap();
    let vb = umbral_evaluate(&expr_b, &quartic).unwrap();
    println!("relabeled rendering evaluates identically: {}", on_q == vb);

    // the full-bracket concomitant with a determinant factor
    let expr_c = parse_bracket("(abc)(abu)^2(acu) b_x c_x^2").unwrap();
    let on_dc2 = umbral_evaluate(&expr_c, &dc).unwrap();
    let on_q2 = umbral_evaluate(&expr_c, &quartic).unwrap();
    println!(
        "\n(abc)(abu)^2(acu) b_x c_x^2: zero on a double conic? {}; zero on a generic quartic? {}",
        on_dc2.is_zero(),
        on_q2.is_zero()
    );
}
