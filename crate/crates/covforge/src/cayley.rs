//! The differential operators E+, E-, E0 on coefficient space and their
//! bihomogeneous companions Γ+, Γ-, Γ0, which characterize covariants by
//! annihilation.
//!
//! For a coefficient family a0..ad:
//!   E+ = Σ (d-i) a_{i+1} ∂/∂a_i,   E- = Σ i a_{i-1} ∂/∂a_i,
//!   E0 = Σ (2i-d) a_i ∂/∂a_i,
//! and Γ+ = E+ − x1 ∂/∂x2, Γ- = E- − x2 ∂/∂x1,
//! Γ0 = E0 + (x1 ∂/∂x1 − x2 ∂/∂x2).

use crate::binary::var_pair;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rat::rat_int;
use crate::vars::{Shape, VarFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyOp {
    EPlus,
    EMinus,
    EZero,
    GammaPlus,
    GammaMinus,
    GammaZero,
}

/// Resolves the coefficient family `fam` as a0..ad, returning (d, global
/// index of a_0).
fn coeff_family(p: &MultiPoly, fam: &str) -> Result<(usize, usize)> {
    let ctx = p.context();
    let f = ctx
        .family(fam)
        .ok_or_else(|| Error::UnknownVariable(fam.to_string()))?;
    match f.shape {
        Shape::Flat { start: 0, len } if len >= 1 => {
            let fi = ctx.family_index(fam).unwrap();
            Ok((len - 1, ctx.family_range(fi).start))
        }
        _ => Err(Error::InvalidArgument(format!(
            "family `{fam}` is not a coefficient family a0..ad"
        ))),
    }
}

/// E+ P = Σ_{i=0}^{d-1} (d-i) a_{i+1} ∂P/∂a_i.
pub fn e_plus(p: &MultiPoly, fam: &str) -> Result<MultiPoly> {
    let (d, base) = coeff_family(p, fam)?;
    let ctx = p.context();
    let mut out = MultiPoly::zero(ctx);
    for i in 0..d {
        let der = p.diff(base + i);
        if der.is_zero() {
            continue;
        }
        let term = der
            .mul(&MultiPoly::var(ctx, base + i + 1))
            .scalar_mul(&rat_int((d - i) as i64));
        out = out.add(&term);
    }
    Ok(out)
}

/// E- P = Σ_{i=1}^{d} i a_{i-1} ∂P/∂a_i.
pub fn e_minus(p: &MultiPoly, fam: &str) -> Result<MultiPoly> {
    let (d, base) = coeff_family(p, fam)?;
    let ctx = p.context();
    let mut out = MultiPoly::zero(ctx);
    for i in 1..=d {
        let der = p.diff(base + i);
        if der.is_zero() {
            continue;
        }
        let term = der
            .mul(&MultiPoly::var(ctx, base + i - 1))
            .scalar_mul(&rat_int(i as i64));
        out = out.add(&term);
    }
    Ok(out)
}

/// E0 P = Σ_{i=0}^{d} (2i-d) a_i ∂P/∂a_i.
pub fn e_zero(p: &MultiPoly, fam: &str) -> Result<MultiPoly> {
    let (d, base) = coeff_family(p, fam)?;
    let ctx = p.context();
    let mut out = MultiPoly::zero(ctx);
    for i in 0..=d {
        let der = p.diff(base + i);
        if der.is_zero() {
            continue;
        }
        let term = der
            .mul(&MultiPoly::var(ctx, base + i))
            .scalar_mul(&rat_int(2 * i as i64 - d as i64));
        out = out.add(&term);
    }
    Ok(out)
}

/// Iterated E+.
pub fn e_plus_pow(p: &MultiPoly, fam: &str, k: usize) -> Result<MultiPoly> {
    let mut out = p.clone();
    for _ in 0..k {
        out = e_plus(&out, fam)?;
    }
    Ok(out)
}

/// Applies any of the six operators; the Γ kinds need the form-variable
/// family present in the context.
pub fn cayley_operator(
    op: CayleyOp,
    p: &MultiPoly,
    fam: &str,
    var_family: &VarFamily,
) -> Result<MultiPoly> {
    match op {
        CayleyOp::EPlus => e_plus(p, fam),
        CayleyOp::EMinus => e_minus(p, fam),
        CayleyOp::EZero => e_zero(p, fam),
        CayleyOp::GammaPlus => {
            let (v1, v2) = var_pair(p.context(), var_family)?;
            let x1 = MultiPoly::var(p.context(), v1);
            Ok(e_plus(p, fam)?.sub(&x1.mul(&p.diff(v2))))
        }
        CayleyOp::GammaMinus => {
            let (v1, v2) = var_pair(p.context(), var_family)?;
            let x2 = MultiPoly::var(p.context(), v2);
            Ok(e_minus(p, fam)?.sub(&x2.mul(&p.diff(v1))))
        }
        CayleyOp::GammaZero => {
            let (v1, v2) = var_pair(p.context(), var_family)?;
            let x1 = MultiPoly::var(p.context(), v1);
            let x2 = MultiPoly::var(p.context(), v2);
            let euler = x1.mul(&p.diff(v1)).sub(&x2.mul(&p.diff(v2)));
            Ok(e_zero(p, fam)?.add(&euler))
        }
    }
}
