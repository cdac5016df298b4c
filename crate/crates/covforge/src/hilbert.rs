//! The Hilbert covariants: source construction through the truncated
//! fractional-power series, the full covariant through E+, the connecting
//! scalar to the Wronskian-determinant construction, and the polar-form
//! identity that produces the covariant without its source.

use num_traits::One;

use crate::binary::{var_pair, xvars, BinaryForm};
use crate::covariant::{covariant_from_source, Covariant};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rat::{factorial, rat_int, Rat};
use crate::series::power_series_for;
use crate::vars::{Context, VarFamily};

/// The source h0 of the Hilbert covariant for parameters (r, d):
/// a polynomial of degree and weight r+1 in a0..ad, computed as
/// (r+1)! · a0^{r+1} · [t^{r+1}] (1+u)^{r/d}. Zero exactly when d | r.
pub fn hilbert_source(r: usize, d: usize) -> Result<MultiPoly> {
    if r == 0 || d == 0 {
        return Err(Error::InvalidArgument("hilbert_source needs r, d ≥ 1".into()));
    }
    let s = power_series_for(r, d)?;
    Ok(s.cleared_coeff(r + 1)
        .scalar_mul(&Rat::from_integer(factorial(r + 1))))
}

/// Order of the Hilbert covariant: N = (r+1)(d-2).
pub fn hilbert_order(r: usize, d: usize) -> usize {
    (r + 1) * (d - 2)
}

/// The Hilbert covariant of degree r+1 and order (r+1)(d-2), built from
/// its source through E+. Returns the zero covariant when d divides r.
pub fn hilbert_covariant(r: usize, d: usize) -> Result<Covariant> {
    if d < 2 {
        return Err(Error::InvalidArgument("hilbert_covariant needs d ≥ 2".into()));
    }
    let h0 = hilbert_source(r, d)?;
    let n = hilbert_order(r, d);
    if h0.is_zero() {
        return Ok(Covariant::zero(d, r + 1, n, "a", xvars()));
    }
    let cov = covariant_from_source(&h0, d, xvars())?;
    debug_assert_eq!(cov.order(), n);
    Ok(cov)
}

/// The connecting scalar κ_{r,d} = (Π_{i=0}^r i!(d+i-2)!) / (r (d-2)!)^{r+1},
/// with source(Gott_{r,d}) = κ_{r,d} · h0.
pub fn kappa_scalar(r: usize, d: usize) -> Result<Rat> {
    if d < 2 || r < 1 {
        return Err(Error::InvalidArgument("kappa_scalar needs d ≥ 2, r ≥ 1".into()));
    }
    let mut num = Rat::one();
    for i in 0..=r {
        num *= Rat::from_integer(factorial(i) * factorial(d + i - 2));
    }
    let den = Rat::from_integer(factorial(d - 2)) * rat_int(r as i64);
    let mut denpow = Rat::one();
    for _ in 0..=r {
        denpow *= den.clone();
    }
    Ok(num / denpow)
}

/// Outcome of the polar-form identity check.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarCheck {
    pub holds: bool,
    /// scalar c with lhs = c · rhs, when proportional
    pub scalar: Option<Rat>,
}

/// Verifies (x1 y2 − x2 y1)^{r+1} · Hilb_{r,d}(F) ∝
/// F^{r+1-r/d} [(y1 ∂x1 + y2 ∂x2)^{r+1} F^{r/d}], both sides expanded as
/// polynomials; the fractional F-powers on the right cancel through the
/// recursion Q_{n+1} = (s−n)(y·∂F) Q_n + F (y·∂Q_n) with s = r/d, which
/// tracks the F-denominators so that the bracket times F^{r+1−r/d}
/// is exactly Q_{r+1}.
pub fn polar_identity_check(r: usize, d: usize) -> Result<PolarCheck> {
    if d < 2 {
        return Err(Error::InvalidArgument("polar identity needs d ≥ 2".into()));
    }
    let hilb = hilbert_covariant(r, d)?;
    let yfam = VarFamily::flat("y", 1, 2);
    let ctx = Context::new(vec![
        VarFamily::flat("a", 0, d + 1),
        xvars(),
        yfam.clone(),
    ])?;
    let (x1, x2) = var_pair(&ctx, &xvars())?;
    let (y1, y2) = var_pair(&ctx, &yfam)?;

    // lhs = (x1 y2 - x2 y1)^{r+1} * Hilb(a; x)
    let cross = MultiPoly::var(&ctx, x1)
        .mul(&MultiPoly::var(&ctx, y2))
        .sub(&MultiPoly::var(&ctx, x2).mul(&MultiPoly::var(&ctx, y1)));
    let lhs = cross.pow(r + 1).mul(&hilb.to_poly().extend_to(&ctx)?);

    // rhs = Q_{r+1} from the polar recursion
    let f = BinaryForm::generic(d, "a", xvars()).to_poly().extend_to(&ctx)?;
    let ydel = |p: &MultiPoly| -> MultiPoly {
        MultiPoly::var(&ctx, y1)
            .mul(&p.diff(x1))
            .add(&MultiPoly::var(&ctx, y2).mul(&p.diff(x2)))
    };
    let s = Rat::new(r.into(), d.into());
    let ydf = ydel(&f);
    let mut q = MultiPoly::one(&ctx);
    for n in 0..=r {
        let scale = s.clone() - rat_int(n as i64);
        q = ydf.mul(&q).scalar_mul(&scale).add(&f.mul(&ydel(&q)));
    }

    match lhs.proportionality(&q) {
        Some(c) => Ok(PolarCheck {
            holds: true,
            scalar: Some(c),
        }),
        None => Ok(PolarCheck {
            holds: false,
            scalar: None,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::e_minus;
    use num_traits::Zero;
    use crate::parse::parse_poly;
    use crate::series::power_series_for;

    #[test]
    fn test_source_r1_closed_form() {
        // h0 = (d-1)(a0 a2 - a1^2) for d = 2..8
        for d in 2..=8usize {
            let h0 = hilbert_source(1, d).unwrap();
            let ctx = h0.context().clone();
            let disc = parse_poly("a0*a2 - a1^2", &ctx).unwrap();
            assert_eq!(h0, disc.scalar_mul(&rat_int(d as i64 - 1)), "d={d}");
        }
    }

    #[test]
    fn test_source_r2_closed_form() {
        // h0 = (2d^2-6d+4) a0^2 a3 - (6d^2-18d+12) a0 a1 a2 + (4d^2-12d+8) a1^3
        for d in 3..=8usize {
            let h0 = hilbert_source(2, d).unwrap();
            let ctx = h0.context().clone();
            let di = d as i64;
            let text = format!(
                "{}*a0^2*a3 - {}*a0*a1*a2 + {}*a1^3",
                2 * di * di - 6 * di + 4,
                6 * di * di - 18 * di + 12,
                4 * di * di - 12 * di + 8
            );
            assert_eq!(h0, parse_poly(&text, &ctx).unwrap(), "d={d}");
        }
    }

    #[test]
    fn test_source_vanishes_when_d_divides_r() {
        for (r, d) in [(2usize, 2usize), (3, 3), (4, 2), (6, 3)] {
            assert!(hilbert_source(r, d).unwrap().is_zero(), "(r,d)=({r},{d})");
        }
    }

    #[test]
    fn test_source_is_annihilated_by_e_minus() {
        for (r, d) in [(1usize, 4usize), (2, 5), (3, 6), (2, 6), (4, 6)] {
            let h0 = hilbert_source(r, d).unwrap();
            assert!(e_minus(&h0, "a").unwrap().is_zero(), "(r,d)=({r},{d})");
        }
    }

    #[test]
    fn test_cleared_theta_top_is_source() {
        // a0^{r+1} θ_{r+1} = h0
        for (r, d) in [(1usize, 3usize), (2, 4), (3, 5)] {
            let s = power_series_for(r, d).unwrap();
            assert_eq!(s.cleared_theta(r + 1), hilbert_source(r, d).unwrap());
        }
    }

    #[test]
    fn test_hilbert_covariant_r1_d2_is_discriminant() {
        let cov = hilbert_covariant(1, 2).unwrap();
        assert_eq!(cov.order(), 0);
        assert_eq!(cov.degree(), 2);
        let ctx = cov.source().context().clone();
        assert_eq!(cov.source(), &parse_poly("a0*a2 - a1^2", &ctx).unwrap());
    }

    #[test]
    fn test_hilbert_covariant_r1_proportional_to_hessian_transvectant() {
        for d in 3..=6usize {
            let hilb = hilbert_covariant(1, d).unwrap();
            let f = Covariant::generic(d, "a", xvars());
            let t2 = f.transvect(&f, 2).unwrap();
            assert!(
                hilb.proportionality(&t2).is_some(),
                "Hilb_1,{d} ∝ (F,F)_2"
            );
            assert_eq!(hilb.verify().unwrap(), Ok(()));
        }
    }

    #[test]
    fn test_kappa_values() {
        assert_eq!(kappa_scalar(1, 2).unwrap(), rat_int(1));
        assert_eq!(kappa_scalar(1, 3).unwrap(), rat_int(2));
    }

    #[test]
    fn test_polar_identity_small() {
        let chk = polar_identity_check(1, 2).unwrap();
        assert!(chk.holds);
        assert!(!chk.scalar.unwrap().is_zero());
    }
}
