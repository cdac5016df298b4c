//! Truncated fractional-power series of the dehomogenized generic form.
//!
//! For f(t) = Σ C(d,i) a_i t^i and a rational exponent ρ, the series
//! f(t)^ρ = a0^ρ (1 + Σ_{m≥1} θ_m t^m / m!) is represented with cleared
//! a0-denominators: the stored coefficient for t^k is the polynomial
//! p_k = a0^k · [t^k] (1+u)^ρ, where u = (f(t) − a0)/a0. Fractional
//! powers of a0 are never represented symbolically.

use num_traits::Zero;

use crate::cayley::e_plus;
use crate::error::Result;
use crate::poly::MultiPoly;
use crate::rat::{binomial, binomial_rat, factorial, rat_int, Rat};
use crate::vars::{Context, VarFamily};

/// Cleared-denominator truncation of (1+u)^ρ.
#[derive(Clone, Debug)]
pub struct FracPowerSeries {
    rho: Rat,
    order: usize,
    trunc: usize,
    ctx: Context,
    /// cleared[k] = a0^k · [t^k] (1+u)^ρ, a polynomial in a0..ad.
    cleared: Vec<MultiPoly>,
}

impl FracPowerSeries {
    /// Builds the truncated series for the generic order-d form with
    /// coefficient family `a0..ad`.
    pub fn new(rho: Rat, d: usize, trunc: usize) -> FracPowerSeries {
        let ctx = Context::new(vec![VarFamily::flat("a", 0, d + 1)]).unwrap();
        // cleared series of u itself: u_k = C(d,k) a_k / a0 for k >= 1,
        // so a0^k u_k = a0^{k-1} C(d,k) a_k.
        let mut u = vec![MultiPoly::zero(&ctx); trunc + 1];
        for (k, entry) in u.iter_mut().enumerate().take(trunc.min(d) + 1).skip(1) {
            let mut exps = vec![0u16; d + 1];
            exps[0] = (k - 1) as u16;
            exps[k] += 1;
            *entry = MultiPoly::monomial(
                &ctx,
                crate::poly::Mono(exps),
                Rat::from_integer(binomial(d, k)),
            );
        }
        // accumulate Σ_j C(ρ, j) u^j in the cleared representation
        let mut acc = vec![MultiPoly::zero(&ctx); trunc + 1];
        acc[0] = MultiPoly::one(&ctx);
        let mut upow = acc.clone(); // u^0
        for j in 1..=trunc {
            upow = cleared_mul(&upow, &u, trunc, &ctx);
            let cj = binomial_rat(&rho, j);
            if cj.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(&upow) {
                *a = a.add(&p.scalar_mul(&cj));
            }
        }
        let series = FracPowerSeries {
            rho,
            order: d,
            trunc,
            ctx,
            cleared: acc,
        };
        debug_assert!(series.theta_recursion_holds());
        series
    }

    pub fn rho(&self) -> &Rat {
        &self.rho
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    /// p_k = a0^k · [t^k] (1+u)^ρ.
    pub fn cleared_coeff(&self, k: usize) -> &MultiPoly {
        &self.cleared[k]
    }

    /// a0^k θ_k = k! · p_k, the cleared series coefficient of t^k/k!.
    pub fn cleared_theta(&self, k: usize) -> MultiPoly {
        self.cleared[k].scalar_mul(&Rat::from_integer(factorial(k)))
    }

    /// The recursion a0^ρ θ_{m+1} = E+(a0^ρ θ_m) in cleared form:
    /// (m+1) p_{m+1} = (ρ d − m d) a1 p_m + a0 E+(p_m), all polynomial.
    pub fn theta_recursion_holds(&self) -> bool {
        let d = self.order;
        let a0 = MultiPoly::var(&self.ctx, 0);
        let a1 = MultiPoly::var(&self.ctx, 1);
        for m in 0..self.trunc {
            let lhs = self.cleared[m + 1].scalar_mul(&rat_int((m + 1) as i64));
            let scale = self.rho.clone() * rat_int(d as i64) - rat_int((m * d) as i64);
            let rhs = a1
                .mul(&self.cleared[m])
                .scalar_mul(&scale)
                .add(&a0.mul(&e_plus(&self.cleared[m], "a").expect("a-family present")));
            if lhs != rhs {
                return false;
            }
        }
        true
    }
}

/// Multiplies two cleared series: (AB)_k = Σ A_i B_{k−i}, consistent with
/// the a0-power bookkeeping.
fn cleared_mul(
    a: &[MultiPoly],
    b: &[MultiPoly],
    trunc: usize,
    ctx: &Context,
) -> Vec<MultiPoly> {
    let mut out = vec![MultiPoly::zero(ctx); trunc + 1];
    for (k, entry) in out.iter_mut().enumerate() {
        for i in 0..=k {
            if a[i].is_zero() || b[k - i].is_zero() {
                continue;
            }
            *entry = entry.add(&a[i].mul(&b[k - i]));
        }
    }
    out
}

/// Convenience: the series for f(t)^{r/d} truncated at t^{r+1}.
pub fn power_series_for(r: usize, d: usize) -> Result<FracPowerSeries> {
    let rho = Rat::new(r.into(), d.into());
    Ok(FracPowerSeries::new(rho, d, r + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use num_traits::One;

    #[test]
    fn test_series_low_coefficients() {
        // (1+u)^{1/2} for d=2: p_1 = a0^1 * (1/2) * C(2,1) a1/a0 = a1
        let s = FracPowerSeries::new(Rat::new(1.into(), 2.into()), 2, 3);
        assert_eq!(s.cleared_coeff(0), &MultiPoly::one(s.context()));
        let p1 = parse_poly("a1", s.context()).unwrap();
        assert_eq!(s.cleared_coeff(1), &p1);
        // p_2 = a0 [t^2](1 + u)^{1/2} cleared: (1/2)a0 a2 - (1/4)a1^2... times 2:
        // u = (2a1 t + a2 t^2)/a0; [t^2]: (1/2)(a2/a0) + (-1/8)(2a1/a0)^2
        let p2 = parse_poly("1/2*a0*a2 - 1/2*a1^2", s.context()).unwrap();
        assert_eq!(s.cleared_coeff(2), &p2);
    }

    #[test]
    fn test_theta_recursion() {
        for (r, d) in [(1usize, 3usize), (2, 5), (3, 6), (2, 6)] {
            let s = power_series_for(r, d).unwrap();
            assert!(s.theta_recursion_holds(), "(r,d)=({r},{d})");
        }
    }

    #[test]
    fn test_integer_exponent_truncates() {
        // rho = 1 with trunc beyond d: coefficients above d vanish
        let s = FracPowerSeries::new(Rat::one(), 2, 4);
        assert!(s.cleared_coeff(3).is_zero());
        assert!(s.cleared_coeff(4).is_zero());
    }
}
