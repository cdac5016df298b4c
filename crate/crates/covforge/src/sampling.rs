//! Deterministic random forms for the property suites: seeded generators
//! of rational binary and ternary forms, powers, and perturbations.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::binary::{xvars, BinaryForm};
use crate::error::Result;
use crate::rat::{rat_int, Rat};
use crate::transfer::NaryForm;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random binary form of order d with small integer Cayley coefficients,
/// never identically zero.
pub fn random_binary_form(d: usize, rng: &mut ChaCha8Rng) -> BinaryForm {
    loop {
        let coeffs: Vec<Rat> = (0..=d).map(|_| rat_int(rng.gen_range(-5..=5))).collect();
        if coeffs.iter().any(|c| !num_traits::Zero::is_zero(c)) {
            return BinaryForm::from_rationals(d, xvars(), coeffs).unwrap();
        }
    }
}

/// A random μ-th power scalar·G^μ of total order e·μ.
pub fn random_power_form(e: usize, mu: usize, rng: &mut ChaCha8Rng) -> Result<BinaryForm> {
    let g = random_binary_form(e, rng);
    let scalar = loop {
        let s = rng.gen_range(-4i64..=4);
        if s != 0 {
            break rat_int(s);
        }
    };
    Ok(crate::power::pow_form(&g, mu)?.scalar_mul(&scalar))
}

/// A random ternary form of order d with small integer coefficients,
/// never identically zero.
pub fn random_ternary_form(d: usize, rng: &mut ChaCha8Rng) -> NaryForm {
    let idx = crate::ideals::monomials_of_degree(3, d);
    loop {
        let entries: Vec<(Vec<u16>, Rat)> = idx
            .iter()
            .map(|i| (i.clone(), rat_int(rng.gen_range(-3..=3))))
            .collect();
        if entries.iter().any(|(_, c)| !num_traits::Zero::is_zero(c)) {
            return NaryForm::from_rationals(3, d, entries).unwrap();
        }
    }
}

/// A random double conic Q² for a random ternary quadratic Q.
pub fn random_double_conic(rng: &mut ChaCha8Rng) -> Result<NaryForm> {
    loop {
        let q = random_ternary_form(2, rng);
        let sq = q.square()?;
        if !sq.coeffs().is_empty() {
            return Ok(sq);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_determinism() {
        let mut r1 = rng(42);
        let mut r2 = rng(42);
        let a = random_binary_form(4, &mut r1);
        let b = random_binary_form(4, &mut r2);
        assert_eq!(a, b);
    }

    #[test]
    fn test_power_form_roundtrip() {
        let mut r = rng(7);
        let f = random_power_form(2, 3, &mut r).unwrap();
        assert_eq!(f.order(), 6);
        let dec = crate::power::perfect_power_decompose(&f, 3).unwrap();
        assert!(dec.is_some());
    }
}
