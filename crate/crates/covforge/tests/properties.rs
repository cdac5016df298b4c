//! Standalone property suite: structural invariants that every part of
//! the crate must keep, runnable on its own via
//! `cargo test --test properties`.

use proptest::prelude::*;

use covforge::binary::{hessian, sl2_transform, transvectant, wronskian, xvars, BinaryForm};
use covforge::cayley::e_minus;
use covforge::covariant::{covariant_from_source, Covariant};
use covforge::goettingen::{generic_b, goettingen_basic, goettingen_general};
use covforge::hilbert::{hilbert_covariant, hilbert_source};
use covforge::ideals::saturation_lemma_check;
use covforge::matrix::RatMatrix;
use covforge::poly::{Mono, MultiPoly};
use covforge::rat::{rat_int, Rat};
use covforge::vars::{Context, VarFamily};

// ---- every covariant constructed anywhere passes verification ----

#[test]
fn every_constructed_covariant_verifies() {
    let mut zoo: Vec<(String, Covariant)> = Vec::new();
    for (r, d) in [(1usize, 3usize), (1, 4), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5)] {
        zoo.push((format!("hilbert({r},{d})"), hilbert_covariant(r, d).unwrap()));
        zoo.push((format!("goettingen({r},{d})"), goettingen_basic(r, d).unwrap()));
    }
    for d in [4usize, 6] {
        let b = generic_b(d);
        let psi = b.transvect(&b, 2).unwrap();
        zoo.push((
            format!("recipe((B,B)_2, d={d})"),
            goettingen_general(&psi, 1, d).unwrap(),
        ));
    }
    for d in 2..=6usize {
        let f = Covariant::generic(d, "a", xvars());
        zoo.push((format!("generic({d})"), f.clone()));
        let h = f.transvect(&f, 2).unwrap();
        if !h.is_zero() {
            zoo.push((format!("(F,F)_2 d={d}"), h.clone()));
            zoo.push((format!("(F,(F,F)_2)_1 d={d}"), f.transvect(&h, 1).unwrap()));
            zoo.push((format!("F*(F,F)_2 d={d}"), f.mul(&h).unwrap()));
        }
    }
    for (name, cov) in &zoo {
        assert_eq!(cov.verify().unwrap(), Ok(()), "{name}");
        // the isobaric-weight invariant holds by construction; reconstruct
        // from the source and compare
        if !cov.is_zero() && !cov.source().is_zero() {
            let rebuilt = covariant_from_source(cov.source(), cov.source_order(), xvars()).unwrap();
            assert_eq!(&rebuilt, cov, "source round-trip for {name}");
        }
    }
    println!("verified {} covariants", zoo.len());
}

#[test]
fn hilbert_sources_are_sources() {
    for (r, d) in [(1usize, 4usize), (2, 4), (2, 5), (2, 6), (3, 6), (4, 6), (5, 6)] {
        let h0 = hilbert_source(r, d).unwrap();
        assert!(e_minus(&h0, "a").unwrap().is_zero(), "(r,d)=({r},{d})");
    }
}

#[test]
fn saturation_route_lemma() {
    for (r, d) in [(1usize, 4usize), (2, 6), (3, 6)] {
        assert!(saturation_lemma_check(r, d).unwrap(), "(r,d)=({r},{d})");
    }
}

#[test]
fn transfer_vanishes_on_ternary_powers() {
    use covforge::sampling;
    use covforge::transfer::transfer_vanishing_test;
    let mut rng = sampling::rng(314);
    // (r,d) = (1,3): cubes of linear forms under the Hessian transfer
    for i in 0..20 {
        let l = sampling::random_ternary_form(1, &mut rng);
        let cube = {
            let p = l.to_poly().unwrap().pow(3);
            covforge::transfer::NaryForm::from_poly(&p, 3, 3, l.symbol_ctx()).unwrap()
        };
        assert!(transfer_vanishing_test(&cube, 1).unwrap(), "cube {i}");
    }
    // (r,d) = (2,4): squares of quadratics
    for i in 0..20 {
        let dc = sampling::random_double_conic(&mut rng).unwrap();
        assert!(transfer_vanishing_test(&dc, 2).unwrap(), "double conic {i}");
    }
}

#[test]
fn umbral_and_restriction_pathways_agree() {
    use covforge::sampling;
    use covforge::transfer::{parse_bracket, transfer_vanishing_test, umbral_evaluate};
    let expr = parse_bracket("(ab u)^2 (ac u) a_x b_x^2 c_x^3").unwrap();
    let mut rng = sampling::rng(2718);
    for i in 0..4 {
        let quartic = sampling::random_ternary_form(4, &mut rng);
        let umbral_zero = umbral_evaluate(&expr, &quartic).unwrap().is_zero();
        let transfer_zero = transfer_vanishing_test(&quartic, 2).unwrap();
        assert_eq!(umbral_zero, transfer_zero, "generic quartic {i}");
        let dc = sampling::random_double_conic(&mut rng).unwrap();
        let umbral_zero = umbral_evaluate(&expr, &dc).unwrap().is_zero();
        let transfer_zero = transfer_vanishing_test(&dc, 2).unwrap();
        assert_eq!(umbral_zero, transfer_zero, "double conic {i}");
        assert!(umbral_zero);
    }
}

#[test]
fn weight_invariant_rejected_on_violation() {
    let ctx = Context::new(vec![VarFamily::flat("a", 0, 3)]).unwrap();
    let a = |i: usize| MultiPoly::var(&ctx, i);
    // degree mismatch in one coefficient
    let bad = vec![a(0), a(1).mul(&a(1)), a(2)];
    assert!(Covariant::from_parts(2, 1, 2, "a", xvars(), bad).is_err());
    // weight off by one
    let bad2 = vec![a(1), a(1), a(2)];
    assert!(Covariant::from_parts(2, 1, 2, "a", xvars(), bad2).is_err());
}

// ---- randomized structural properties ----

fn arb_poly(nvars: usize, max_terms: usize, max_deg: u16) -> impl Strategy<Value = MultiPoly> {
    let term = (
        prop::collection::vec(0..=max_deg, nvars),
        -6i64..=6,
    );
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let fams = vec![VarFamily::flat("v", 0, nvars)];
        let ctx = Context::new(fams).unwrap();
        let mut p = MultiPoly::zero(&ctx);
        for (exps, c) in terms {
            p = p.add(&MultiPoly::monomial(&ctx, Mono(exps), rat_int(c)));
        }
        p
    })
}

fn arb_form(order: usize) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(-5i64..=5, order + 1).prop_map(move |cs| {
        BinaryForm::from_rationals(order, xvars(), cs.into_iter().map(rat_int).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in arb_poly(3, 5, 3), b in arb_poly(3, 5, 3), c in arb_poly(3, 5, 3)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn diff_commutes_with_foreign_substitution(p in arb_poly(2, 5, 3), q in arb_poly(2, 4, 2)) {
        // substitute v1 := q (a polynomial), differentiate by v0
        let ctx = p.context().clone();
        let q = q.extend_to(&ctx).unwrap();
        // the substitution must not involve v0 for the two to commute
        let q_indep: MultiPoly = {
            // drop terms containing v0
            let mut acc = MultiPoly::zero(&ctx);
            for (m, c) in q.terms() {
                if m.0[0] == 0 {
                    acc = acc.add(&MultiPoly::monomial(&ctx, m.clone(), c.clone()));
                }
            }
            acc
        };
        let lhs = p.substitute(&ctx, &[(1, q_indep.clone())]).unwrap().diff(0);
        let rhs = p.diff(0).substitute(&ctx, &[(1, q_indep)]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transvectant_symmetry_and_order(a in arb_form(3), b in arb_form(4), k in 0usize..=3) {
        let ab = transvectant(&a, &b, k).unwrap();
        let ba = transvectant(&b, &a, k).unwrap();
        prop_assert_eq!(ab.order(), 3 + 4 - 2 * k);
        let sign = if k % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        prop_assert_eq!(ab.sub(&ba.scalar_mul(&sign)).unwrap().is_zero(), true);
    }

    #[test]
    fn hessian_equivariance_random_unimodular(f in arb_form(4), b in -3i64..=3, c in -3i64..=3) {
        // g = [[1, c], [b, 1 + bc]] has determinant 1
        let g = [
            [rat_int(1), rat_int(c)],
            [rat_int(b), rat_int(1 + b * c)],
        ];
        let lhs = hessian(&sl2_transform(&f, &g).unwrap()).unwrap();
        let rhs = sl2_transform(&hessian(&f).unwrap(), &g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_nullity_and_kernel_exactness(
        entries in prop::collection::vec(-9i64..=9, 12),
    ) {
        let rows: Vec<Vec<Rat>> = entries
            .chunks(4)
            .map(|ch| ch.iter().map(|&v| rat_int(v)).collect())
            .collect();
        let m = RatMatrix::from_rows(rows);
        let rank = m.rank();
        let kernel = m.kernel();
        prop_assert_eq!(rank + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.annihilates(v));
        }
        prop_assert!(m.rank_mod_p() <= rank);
    }

    #[test]
    fn wronskian_vanishes_exactly_on_dependent_inputs(
        a in arb_form(3),
        b in arb_form(3),
        c in arb_form(3),
        dependent in prop::bool::ANY,
        s in -3i64..=3,
        t in -3i64..=3,
    ) {
        let third = if dependent {
            // force a rational dependency
            let sa = a.scalar_mul(&rat_int(s));
            let tb = b.scalar_mul(&rat_int(t));
            BinaryForm::from_rationals(
                3,
                xvars(),
                sa.rational_coeffs()
                    .unwrap()
                    .iter()
                    .zip(tb.rational_coeffs().unwrap())
                    .map(|(x, y)| x + y)
                    .collect(),
            )
            .unwrap()
        } else {
            c
        };
        let w = wronskian(&[a.clone(), b.clone(), third.clone()]).unwrap();
        // independent check through the coefficient matrix
        let rows: Vec<Vec<Rat>> = [&a, &b, &third]
            .iter()
            .map(|f| {
                f.plain_coeffs()
                    .iter()
                    .map(|p| p.as_constant().unwrap())
                    .collect()
            })
            .collect();
        let rank = RatMatrix::from_rows(rows).rank();
        prop_assert_eq!(w.is_zero(), rank < 3);
    }
}
