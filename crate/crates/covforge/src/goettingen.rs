//! The Göttingen covariants: the Wronskian-determinant construction
//! Gott_{r,d} and its generalization Gott_Ψ for an arbitrary covariant Ψ
//! of the generic order-(d-2) form.
//!
//! Gott_{r,d} is the determinant of the (r+1)×(r+1) matrix
//! (i,j) → ∂^r C_i / ∂x1^{r-j} ∂x2^j with C_i = (x1^{r-i} x2^i, F)_1.
//! The general construction follows the five-step recipe: a row-wise
//! relettered determinant symmetrized over all permutations, the total
//! polarization of Ψ, the z-substitution for the polarized coefficients,
//! and a full Omega contraction pairing each y-set against its z-set.

use std::collections::BTreeMap;

use num_traits::One;

use crate::binary::{transvectant, var_pair, xvars, BinaryForm};
use crate::covariant::Covariant;
use crate::error::{Error, Result};
use crate::matrix::poly_det;
use crate::poly::{Mono, MultiPoly};
use crate::rat::{factorial, Rat};
use crate::vars::{Context, VarFamily};

/// The Wronskian-determinant construction applied to an arbitrary form F
/// of order d ≥ 2 (coefficients rational or polynomial): the determinant
/// of (i,j) → ∂^r (x1^{r-i} x2^i, F)_1 / ∂x1^{r-j} ∂x2^j, a form of
/// order (r+1)(d-2) whose coefficients are degree-(r+1) expressions in
/// the coefficients of F.
pub fn goettingen_on_form(f: &BinaryForm, r: usize) -> Result<BinaryForm> {
    let d = f.order();
    if d < 2 || r < 1 {
        return Err(Error::InvalidArgument(
            "the determinant construction needs d ≥ 2, r ≥ 1".into(),
        ));
    }
    let ctx = f.full_ctx();
    let vf = f.var_family().clone();
    let (x1, x2) = var_pair(&ctx, &vf)?;
    let mut rows = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let mono = BinaryForm::monomial_form(r - i, i, vf.clone());
        let ci = transvectant(&mono, f, 1)?.to_poly().extend_to(&ctx)?;
        let mut row = Vec::with_capacity(r + 1);
        for j in 0..=r {
            let mut e = ci.clone();
            for _ in 0..(r - j) {
                e = e.diff(x1);
            }
            for _ in 0..j {
                e = e.diff(x2);
            }
            row.push(e);
        }
        rows.push(row);
    }
    let det = poly_det(&rows);
    let n = (r + 1) * (d - 2);
    BinaryForm::from_poly(&det, n, &vf, f.coeff_ctx())
}

/// The basic Göttingen covariant of degree r+1 and order (r+1)(d-2).
pub fn goettingen_basic(r: usize, d: usize) -> Result<Covariant> {
    let f = BinaryForm::generic(d, "a", xvars());
    let det = goettingen_on_form(&f, r)?;
    let n = (r + 1) * (d - 2);
    if det.is_zero() {
        return Ok(Covariant::zero(d, r + 1, n, "a", xvars()));
    }
    Covariant::from_parts(d, r + 1, n, "a", xvars(), det.coeffs().to_vec())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// The Göttingen covariant associated to a covariant Ψ of the generic
/// order-(d-2) form 𝔅, of the same degree r+1 and order as Ψ, with
/// weight (r+1) more.
/// Soft limit on r for the general recipe: the symmetrization sums over
/// (r+1)! relettered determinants. Overridable via COVFORGE_MAX_RECIPE_R.
fn max_recipe_r() -> usize {
    std::env::var("COVFORGE_MAX_RECIPE_R")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(6)
}

pub fn goettingen_general(psi: &Covariant, r: usize, d: usize) -> Result<Covariant> {
    if d < 2 {
        return Err(Error::InvalidArgument("goettingen_general needs d ≥ 2".into()));
    }
    if r > max_recipe_r() {
        return Err(Error::Infeasible(format!(
            "the recipe symmetrizes over (r+1)! = {}! permutations; r = {r} exceeds the limit {} (set COVFORGE_MAX_RECIPE_R to override)",
            r + 1,
            max_recipe_r()
        )));
    }
    if psi.source_order() != d - 2 {
        return Err(Error::OrderMismatch(format!(
            "Ψ must be a covariant of the order-{} generic form, got source order {}",
            d - 2,
            psi.source_order()
        )));
    }
    if psi.degree() != r + 1 {
        return Err(Error::DegreeMismatch(format!(
            "Ψ must have degree r+1 = {}, got {}",
            r + 1,
            psi.degree()
        )));
    }
    let q = psi.order();
    let sets = r + 1;
    let n = d - 2; // order in each y/z set

    // symmetrized relettered determinant, in context [a, y-grid]
    let ygrid = VarFamily::grid("y", sets, 1, 2);
    let ctx_w = Context::new(vec![VarFamily::flat("a", 0, d + 1), ygrid.clone()])?;
    let f = BinaryForm::generic(d, "a", xvars());
    let fctx = f.full_ctx();
    let (x1, x2) = var_pair(&fctx, &xvars())?;
    let mut rows = Vec::with_capacity(sets);
    for i in 0..sets {
        let mono = BinaryForm::monomial_form(r - i, i, xvars());
        let ci = transvectant(&mono, &f, 1)?.to_poly().extend_to(&fctx)?;
        let y1 = MultiPoly::var(&ctx_w, ctx_w.grid_var("y", i, 1)?);
        let y2 = MultiPoly::var(&ctx_w, ctx_w.grid_var("y", i, 2)?);
        let mut row = Vec::with_capacity(sets);
        for j in 0..sets {
            let mut e = ci.clone();
            for _ in 0..(r - j) {
                e = e.diff(x1);
            }
            for _ in 0..j {
                e = e.diff(x2);
            }
            row.push(e.substitute(&ctx_w, &[(x1, y1.clone()), (x2, y2.clone())])?);
        }
        rows.push(row);
    }
    let w = poly_det(&rows);
    let mut wsharp = MultiPoly::zero(&ctx_w);
    for sigma in permutations(sets) {
        let mut map = BTreeMap::new();
        for i in 0..sets {
            for col in 1..=2 {
                map.insert(
                    ctx_w.grid_var("y", i, col)?,
                    ctx_w.grid_var("y", sigma[i], col)?,
                );
            }
        }
        wsharp = wsharp.add(&w.rename_vars(&map));
    }

    // total polarization of Ψ into the b-grid, then the z-substitution
    let bgrid = VarFamily::grid("b", sets, 0, d - 1);
    let ctx_pb = Context::new(vec![xvars(), bgrid.clone()])?;
    let psi_poly = psi.to_poly();
    let psi_ctx = psi_poly.context().clone();
    let bfam = psi.coeff_family().to_string();
    let bfi = psi_ctx
        .family_index(&bfam)
        .ok_or_else(|| Error::UnknownVariable(bfam.clone()))?;
    let brange = psi_ctx.family_range(bfi);
    let mut bindings = Vec::new();
    for (slot, v) in brange.clone().enumerate() {
        let mut sum = MultiPoly::zero(&ctx_pb);
        for i in 0..sets {
            sum = sum.add(&MultiPoly::var(&ctx_pb, ctx_pb.grid_var("b", i, slot)?));
        }
        bindings.push((v, sum));
    }
    let spread = psi_poly.substitute(&ctx_pb, &bindings)?;
    // multilinear component: degree exactly one in each b-set
    let bfi_pb = ctx_pb.family_index("b").unwrap();
    let boff = ctx_pb.family_range(bfi_pb).start;
    let bcols = d - 1;
    let mut polarized = MultiPoly::zero(&ctx_pb);
    'term: for (m, c) in spread.terms() {
        for i in 0..sets {
            let deg: u16 = (0..bcols).map(|k| m.0[boff + i * bcols + k]).sum();
            if deg != 1 {
                continue 'term;
            }
        }
        polarized = polarized.add(&MultiPoly::monomial(&ctx_pb, m.clone(), c.clone()));
    }

    // b_{ik} -> (1/(d-2)!) z_{i2}^{d-2-k} (-z_{i1})^k
    let zgrid = VarFamily::grid("z", sets, 1, 2);
    let ctx_pz = Context::new(vec![xvars(), zgrid.clone()])?;
    let scale = Rat::new(num_bigint::BigInt::one(), factorial(d - 2));
    let mut zbindings = Vec::new();
    for i in 0..sets {
        for k in 0..bcols {
            let z1 = ctx_pz.grid_var("z", i, 1)?;
            let z2 = ctx_pz.grid_var("z", i, 2)?;
            let mut exps = vec![0u16; ctx_pz.n_vars()];
            exps[z2] = (d - 2 - k) as u16;
            exps[z1] = k as u16;
            let mut coef = scale.clone();
            if k % 2 == 1 {
                coef = -coef;
            }
            zbindings.push((
                ctx_pb.grid_var("b", i, k)?,
                MultiPoly::monomial(&ctx_pz, Mono(exps), coef),
            ));
        }
    }
    let psihat = polarized.substitute(&ctx_pz, &zbindings)?;

    // contraction: Ω_{y_(i) z_(i)}^{d-2} for every i applied to Ψ̂ · 𝒲^♯,
    // realized by the closed-form pairing of each y-monomial against the
    // matching z-monomial.
    let ctx_out = Context::new(vec![VarFamily::flat("a", 0, d + 1), xvars()])?;
    let arange = ctx_w.family_range(ctx_w.family_index("a").unwrap());
    let yoff = ctx_w.family_range(ctx_w.family_index("y").unwrap()).start;
    let xrange = ctx_pz.family_range(ctx_pz.family_index("x").unwrap());
    let zoff = ctx_pz.family_range(ctx_pz.family_index("z").unwrap()).start;

    // bucket Ψ̂ terms by the vector of z_{i1} exponents
    let mut buckets: BTreeMap<Vec<u16>, Vec<(Vec<u16>, Rat)>> = BTreeMap::new();
    for (m, c) in psihat.terms() {
        let key: Vec<u16> = (0..sets).map(|i| m.0[zoff + 2 * i]).collect();
        let xpart: Vec<u16> = xrange.clone().map(|v| m.0[v]).collect();
        buckets.entry(key).or_default().push((xpart, c.clone()));
    }
    let mut result = MultiPoly::zero(&ctx_out);
    let fact_n = factorial(n);
    for (m, c) in wsharp.terms() {
        // per-set y exponents
        let mut beta = Vec::with_capacity(sets);
        let mut alpha = Vec::with_capacity(sets);
        for i in 0..sets {
            alpha.push(m.0[yoff + 2 * i]);
            beta.push(m.0[yoff + 2 * i + 1]);
        }
        let Some(matches) = buckets.get(&beta) else {
            continue;
        };
        // factor Π (-1)^{β_i} n! α_i! β_i!
        let mut factor = Rat::one();
        let mut parity = 0usize;
        for i in 0..sets {
            factor *= Rat::from_integer(
                fact_n.clone() * factorial(alpha[i] as usize) * factorial(beta[i] as usize),
            );
            parity += beta[i] as usize;
        }
        if parity % 2 == 1 {
            factor = -factor;
        }
        let apart: Vec<u16> = arange.clone().map(|v| m.0[v]).collect();
        for (xpart, cz) in matches {
            let mut exps = vec![0u16; ctx_out.n_vars()];
            exps[..apart.len()].copy_from_slice(&apart);
            exps[apart.len()..].copy_from_slice(xpart);
            let coef = c.clone() * cz.clone() * factor.clone();
            result = result.add(&MultiPoly::monomial(&ctx_out, Mono(exps), coef));
        }
    }

    let coeff_ctx = Context::new(vec![VarFamily::flat("a", 0, d + 1)])?;
    if result.is_zero() {
        return Ok(Covariant::zero(d, r + 1, q, "a", xvars()));
    }
    let form = BinaryForm::from_poly(&result, q, &xvars(), &coeff_ctx)?;
    Covariant::from_parts(d, r + 1, q, "a", xvars(), form.coeffs().to_vec())
}

/// The generic order-(d-2) form 𝔅 as a covariant of itself, the seed for
/// building Ψ arguments.
pub fn generic_b(d: usize) -> Covariant {
    Covariant::generic(d - 2, "b", xvars())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{hilbert_source, kappa_scalar};
    use crate::parse::parse_poly;
    use crate::rat::rat_int;
    use num_traits::Zero;

    #[test]
    fn test_basic_r1_d2_discriminant() {
        let g = goettingen_basic(1, 2).unwrap();
        assert_eq!(g.order(), 0);
        let ctx = g.source().context().clone();
        assert_eq!(g.source(), &parse_poly("a0*a2 - a1^2", &ctx).unwrap());
    }

    #[test]
    fn test_basic_r1_d3_source() {
        // source = 4(a0 a2 - a1^2) = κ_{1,3} · h0
        let g = goettingen_basic(1, 3).unwrap();
        let ctx = g.source().context().clone();
        let expect = parse_poly("a0*a2 - a1^2", &ctx)
            .unwrap()
            .scalar_mul(&rat_int(4));
        assert_eq!(g.source(), &expect);
        let kappa = kappa_scalar(1, 3).unwrap();
        let h0 = hilbert_source(1, 3).unwrap();
        assert_eq!(g.source(), &h0.scalar_mul(&kappa));
    }

    #[test]
    fn test_basic_passes_verification() {
        for (r, d) in [(1usize, 4usize), (2, 4), (2, 5)] {
            let g = goettingen_basic(r, d).unwrap();
            assert_eq!(g.order(), (r + 1) * (d - 2));
            assert_eq!(g.degree(), r + 1);
            assert_eq!(g.verify().unwrap(), Ok(()), "(r,d)=({r},{d})");
        }
    }

    #[test]
    fn test_source_matches_kappa_times_hilbert() {
        for (r, d) in [(1usize, 3usize), (1, 4), (2, 4), (2, 5), (3, 4)] {
            let g = goettingen_basic(r, d).unwrap();
            let kappa = kappa_scalar(r, d).unwrap();
            let h0 = hilbert_source(r, d).unwrap();
            assert_eq!(
                g.source(),
                &h0.scalar_mul(&kappa),
                "(r,d)=({r},{d})"
            );
        }
    }

    #[test]
    fn test_general_quadratic_psi_gives_even_transvectants() {
        // Ψ = (𝔅,𝔅)_{2n} → Gott_Ψ ∝ (F,F)_{2n+2}, d = 4, n = 0, 1
        let d = 4usize;
        let b = generic_b(d);
        let f = Covariant::generic(d, "a", xvars());
        for n in 0..=1usize {
            let psi = b.transvect(&b, 2 * n).unwrap();
            let got = goettingen_general(&psi, 1, d).unwrap();
            let expect = f.transvect(&f, 2 * n + 2).unwrap();
            let c = got.proportionality(&expect);
            assert!(c.is_some(), "n={n}: expected proportionality");
            assert!(!c.unwrap().is_zero(), "n={n}");
            assert_eq!(got.verify().unwrap(), Ok(()));
        }
    }

    #[test]
    fn test_general_on_bpower_matches_basic() {
        // Ψ = 𝔅^{r+1} reproduces the determinant construction up to scalar
        for (r, d) in [(1usize, 4usize), (2, 4)] {
            let b = generic_b(d);
            let mut psi = b.clone();
            for _ in 0..r {
                psi = psi.mul(&b).unwrap();
            }
            let got = goettingen_general(&psi, r, d).unwrap();
            let basic = goettingen_basic(r, d).unwrap();
            let c = got.proportionality(&basic);
            assert!(c.is_some(), "(r,d)=({r},{d})");
            assert!(!c.unwrap().is_zero());
        }
    }

    #[test]
    fn test_psi_degree_checked() {
        let d = 4;
        let b = generic_b(d);
        // degree 2 Ψ with r=2 (needs degree 3) must be rejected
        let psi = b.transvect(&b, 0).unwrap();
        assert!(goettingen_general(&psi, 2, d).is_err());
    }
}
