//! Perfect-power membership for rational binary forms, decided three
//! independent ways: the kernel of the pairing map A ↦ (A, F)_1, the
//! vanishing of an evaluated covariant, and explicit squarefree
//! decomposition of the dehomogenized form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::binary::{transvectant, BinaryForm};
use crate::covariant::Covariant;
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::univar::{squarefree_decomposition, DensePoly};
use crate::vars::Context;

/// Matrix of the map S_r → S_{r+d-2}, A ↦ (A, F)_1, for a form F with
/// rational coefficients. Column j holds the plain coefficient vector of
/// (x1^{r-j} x2^j, F)_1 in the monomial basis of order r+d-2 forms, so
/// the shape is (r+d-1) × (r+1).
pub fn alpha_matrix(f: &BinaryForm, r: usize) -> Result<RatMatrix> {
    let d = f.order();
    if d < 2 {
        return Err(Error::InvalidArgument("alpha_matrix needs d ≥ 2".into()));
    }
    let rows = r + d - 1;
    let mut m = RatMatrix::zero(rows, r + 1);
    for j in 0..=r {
        let mono = BinaryForm::monomial_form(r - j, j, f.var_family().clone());
        let cj = transvectant(&mono, f, 1)?;
        for (i, plain) in cj.plain_coeffs().iter().enumerate() {
            let v = plain.as_constant().ok_or_else(|| {
                Error::InvalidArgument("alpha_matrix needs rational coefficients".into())
            })?;
            m[(i, j)] = v;
        }
    }
    Ok(m)
}

/// Generic variant: entries are polynomials linear in the coefficient
/// family of the generic d-ic.
pub fn alpha_matrix_generic(d: usize, r: usize) -> Result<Vec<Vec<MultiPoly>>> {
    if d < 2 {
        return Err(Error::InvalidArgument("alpha_matrix needs d ≥ 2".into()));
    }
    let f = BinaryForm::generic(d, "a", crate::binary::xvars());
    let rows = r + d - 1;
    let mut cols = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let mono = BinaryForm::monomial_form(r - j, j, f.var_family().clone());
        let cj = transvectant(&mono, &f, 1)?;
        let ctx = Context::new(vec![crate::vars::VarFamily::flat("a", 0, d + 1)])?;
        cols.push(
            cj.plain_coeffs()
                .iter()
                .map(|p| p.extend_to(&ctx).unwrap())
                .collect::<Vec<_>>(),
        );
    }
    let mut m = Vec::with_capacity(rows);
    for i in 0..rows {
        m.push((0..=r).map(|j| cols[j][i].clone()).collect());
    }
    Ok(m)
}

/// Exact kernel of the pairing map, converted back to order-r forms.
pub fn alpha_kernel(f: &BinaryForm, r: usize) -> Result<Vec<BinaryForm>> {
    let m = alpha_matrix(f, r)?;
    let kernel = m.kernel();
    kernel
        .into_iter()
        .map(|v| {
            // v holds plain coefficients of an order-r form
            let coeffs: Vec<Rat> = v
                .iter()
                .enumerate()
                .map(|(i, c)| c / Rat::from_integer(crate::rat::binomial(r, i)))
                .collect();
            BinaryForm::from_rationals(r, f.var_family().clone(), coeffs)
        })
        .collect()
}

/// A decomposition F = scalar · G^μ with G primitive (integer
/// coefficients of content one, positive leading coefficient).
#[derive(Clone, Debug, PartialEq)]
pub struct PowerDecomposition {
    pub base: BinaryForm,
    pub exponent: usize,
    pub scalar: Rat,
}

/// Decides whether the rational form F is (projectively) a μ-th power,
/// and if so returns the decomposition. The multiplicity of the x1
/// factor is read off the trailing-coefficient pattern before
/// dehomogenizing with x1 := 1.
pub fn perfect_power_decompose(f: &BinaryForm, mu: usize) -> Result<Option<PowerDecomposition>> {
    let d = f.order();
    if mu == 0 || !d.is_multiple_of(mu) {
        return Err(Error::InvalidArgument(format!(
            "exponent {mu} does not divide the order {d}"
        )));
    }
    let coeffs = f.rational_coeffs().ok_or_else(|| {
        Error::InvalidArgument("perfect_power_decompose needs rational coefficients".into())
    })?;
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidArgument(
            "the zero form has no projective class".into(),
        ));
    }
    if mu == 1 {
        let (base, scalar) = normalize_primitive(f)?;
        return Ok(Some(PowerDecomposition {
            base,
            exponent: 1,
            scalar,
        }));
    }
    // multiplicity of x1: d - (largest index with nonzero coefficient)
    let i_max = (0..=d).rev().find(|&i| !coeffs[i].is_zero()).unwrap();
    let m1 = d - i_max;
    if !m1.is_multiple_of(mu) {
        return Ok(None);
    }
    // dehomogenize: g(z) = F(1, z), degree i_max
    let dense = DensePoly::from_vec(
        (0..=i_max)
            .map(|i| coeffs[i].clone() * Rat::from_integer(crate::rat::binomial(d, i)))
            .collect(),
    );
    let parts = squarefree_decomposition(&dense);
    if parts.iter().any(|(_, mult)| mult % mu != 0) {
        return Ok(None);
    }
    // assemble the base: x1^{m1/mu} * homogenization of Π s_j^{j/mu}
    let mut root = DensePoly(vec![Rat::one()]);
    for (s, mult) in &parts {
        root = root.mul(&s.pow(mult / mu));
    }
    let e = d / mu;
    let ebase = root.degree().unwrap_or(0);
    debug_assert_eq!(ebase + m1 / mu, e);
    // plain coefficients of G: x1^{m1/mu} Σ root_k x1^{ebase-k} x2^k
    let mut plain = vec![Rat::zero(); e + 1];
    for (k, c) in root.0.iter().enumerate() {
        plain[k] = c.clone();
    }
    let cayley: Vec<Rat> = (0..=e)
        .map(|i| plain[i].clone() / Rat::from_integer(crate::rat::binomial(e, i)))
        .collect();
    let g = BinaryForm::from_rationals(e, f.var_family().clone(), cayley)?;
    let (g, _) = normalize_primitive(&g)?;
    // scalar from exact division of matching coefficients, then verified
    let gm = pow_form(&g, mu)?;
    let gm_coeffs = gm.rational_coeffs().unwrap();
    let k = (0..=d).find(|&k| !gm_coeffs[k].is_zero()).unwrap();
    let scalar = coeffs[k].clone() / gm_coeffs[k].clone();
    let scaled = gm.scalar_mul(&scalar);
    if scaled.rational_coeffs().unwrap() != coeffs {
        return Ok(None);
    }
    Ok(Some(PowerDecomposition {
        base: g,
        exponent: mu,
        scalar,
    }))
}

/// μ-th power of a rational form, computed through the polynomial ring.
pub fn pow_form(g: &BinaryForm, mu: usize) -> Result<BinaryForm> {
    let p = g.to_poly().pow(mu);
    BinaryForm::from_poly(&p, g.order() * mu, g.var_family(), g.coeff_ctx())
}

/// Rescales a rational form to primitive integer plain coefficients with
/// positive leading coefficient; returns (normalized, scalar) with
/// form = scalar · normalized.
fn normalize_primitive(f: &BinaryForm) -> Result<(BinaryForm, Rat)> {
    let d = f.order();
    let coeffs = f.rational_coeffs().ok_or_else(|| {
        Error::InvalidArgument("normalization needs rational coefficients".into())
    })?;
    let plain: Vec<Rat> = (0..=d)
        .map(|i| coeffs[i].clone() * Rat::from_integer(crate::rat::binomial(d, i)))
        .collect();
    let mut denom_lcm = BigInt::one();
    for c in &plain {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = plain.iter().map(|c| c.numer() * (&denom_lcm / c.denom())).collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if content.is_zero() {
        return Err(Error::InvalidArgument("cannot normalize the zero form".into()));
    }
    let lead = ints.iter().find(|v| !v.is_zero()).unwrap();
    if lead.is_negative() {
        content = -content;
    }
    let scalar = Rat::new(content.clone(), denom_lcm.clone());
    let norm_cayley: Vec<Rat> = ints
        .iter()
        .enumerate()
        .map(|(i, v)| {
            Rat::from_integer(v / &content) / Rat::from_integer(crate::rat::binomial(d, i))
        })
        .collect();
    let g = BinaryForm::from_rationals(d, f.var_family().clone(), norm_cayley)?;
    Ok((g, scalar))
}

/// True iff the covariant evaluates to the zero form at F.
pub fn vanishing_test(cov: &Covariant, f: &BinaryForm) -> Result<bool> {
    Ok(cov.evaluate(f)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::xvars;
    use crate::hilbert::hilbert_covariant;
    use crate::rat::rat_int;

    fn form(d: usize, plain: &[i64]) -> BinaryForm {
        // build from plain coefficients of x1^{d-i} x2^i
        let cayley: Vec<Rat> = plain
            .iter()
            .enumerate()
            .map(|(i, &v)| rat_int(v) / Rat::from_integer(crate::rat::binomial(d, i)))
            .collect();
        BinaryForm::from_rationals(d, xvars(), cayley).unwrap()
    }

    #[test]
    fn test_alpha_matrix_shape_and_kernel_of_power() {
        // F = (x1 x2)^3, d = 6, r = 2: kernel contains x1 x2
        let f = pow_form(&form(2, &[0, 1, 0]), 3).unwrap();
        let m = alpha_matrix(&f, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (7, 3));
        let kernel = alpha_kernel(&f, 2).unwrap();
        assert_eq!(kernel.len(), 1);
        let g = &kernel[0];
        // the kernel vector is proportional to x1 x2
        assert!(g.coeffs()[0].is_zero() && g.coeffs()[2].is_zero());
        assert!(!g.coeffs()[1].is_zero());
    }

    #[test]
    fn test_alpha_kernel_self_for_r_equals_d() {
        // r = d: (F,F)_1 = 0 puts F's own coefficient vector in the kernel
        let f = form(3, &[1, 2, -1, 5]);
        let kernel = alpha_kernel(&f, 3).unwrap();
        assert!(!kernel.is_empty());
        let target = f.rational_coeffs().unwrap();
        assert!(kernel.iter().any(|g| {
            g.proportionality(&BinaryForm::from_rationals(3, xvars(), target.clone()).unwrap())
                .is_some()
        }));
    }

    #[test]
    fn test_alpha_kernel_trivial_for_quartic_sum() {
        // F = x1^4 + x2^4, r = 2: trivial kernel
        let f = form(4, &[1, 0, 0, 0, 1]);
        assert!(alpha_kernel(&f, 2).unwrap().is_empty());
        assert_eq!(alpha_matrix(&f, 2).unwrap().rank(), 3);
    }

    #[test]
    fn test_alpha_kernel_double_quadratic() {
        // F = (x1^2 + x2^2)^2, r = 2: kernel spanned by x1^2 + x2^2
        let f = pow_form(&form(2, &[1, 0, 1]), 2).unwrap();
        let kernel = alpha_kernel(&f, 2).unwrap();
        assert_eq!(kernel.len(), 1);
        let expect = form(2, &[1, 0, 1]);
        assert!(kernel[0].proportionality(&expect).is_some());
    }

    #[test]
    fn test_decompose_pure_power_of_x1() {
        let f = form(4, &[1, 0, 0, 0, 0]); // x1^4
        let dec = perfect_power_decompose(&f, 4).unwrap().unwrap();
        assert_eq!(dec.exponent, 4);
        assert_eq!(dec.scalar, rat_int(1));
        let base = dec.base.rational_coeffs().unwrap();
        assert_eq!(base, vec![rat_int(1), rat_int(0)]); // x1
    }

    #[test]
    fn test_decompose_cube_roundtrip() {
        // F = (x1^2 + 2 x2^2)^3, μ = 3 → base x1^2 + 2 x2^2, scalar 1
        let q = form(2, &[1, 0, 2]);
        let f = pow_form(&q, 3).unwrap();
        let dec = perfect_power_decompose(&f, 3).unwrap().unwrap();
        assert_eq!(dec.scalar, rat_int(1));
        assert_eq!(dec.base, q);
        // round-trip: scalar · G^μ = F
        let back = pow_form(&dec.base, 3).unwrap().scalar_mul(&dec.scalar);
        assert_eq!(back, f);
    }

    #[test]
    fn test_decompose_rejects_mixed_multiplicities() {
        // x1^5 x2 is not a square
        let f = form(6, &[0, 1, 0, 0, 0, 0, 0]);
        assert!(perfect_power_decompose(&f, 2).unwrap().is_none());
        assert!(perfect_power_decompose(&f, 3).unwrap().is_none());
        // μ must divide d
        assert!(perfect_power_decompose(&f, 4).is_err());
    }

    #[test]
    fn test_decompose_with_scalar_and_x2_factor() {
        // F = 12 (x2 (x1 - x2))^2: x1-multiplicity 0, x2 appears
        let g = form(2, &[0, 1, -1]);
        let f = pow_form(&g, 2).unwrap().scalar_mul(&rat_int(12));
        let dec = perfect_power_decompose(&f, 2).unwrap().unwrap();
        assert_eq!(dec.scalar, rat_int(12));
        let back = pow_form(&dec.base, 2).unwrap().scalar_mul(&dec.scalar);
        assert_eq!(back, f);
    }

    #[test]
    fn test_vanishing_hilbert_on_powers() {
        // Hilb_{2,6} vanishes on (x1^2 + x2^2)^3 and not on x1^5 x2
        let hilb = hilbert_covariant(2, 6).unwrap();
        let cube = pow_form(&form(2, &[1, 0, 1]), 3).unwrap();
        assert!(vanishing_test(&hilb, &cube).unwrap());
        let not_cube = form(6, &[0, 1, 0, 0, 0, 0, 0]);
        assert!(!vanishing_test(&hilb, &not_cube).unwrap());
        // x1^6 + x2^6 is not a cube either
        let sum = form(6, &[1, 0, 0, 0, 0, 0, 1]);
        assert!(!vanishing_test(&hilb, &sum).unwrap());
    }

    #[test]
    fn test_vanishing_hilbert_25_on_fifth_power() {
        // e = gcd(2,5) = 1, μ = 5: vanishes on (x1 + x2)^5
        let hilb = hilbert_covariant(2, 5).unwrap();
        let f = pow_form(&form(1, &[1, 1]), 5).unwrap();
        assert!(vanishing_test(&hilb, &f).unwrap());
    }
}
