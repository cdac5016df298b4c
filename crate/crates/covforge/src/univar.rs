//! Dense univariate polynomials over the rationals: Euclidean gcd and
//! squarefree decomposition, the workhorses of perfect-power detection.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Mono, MultiPoly};
use crate::rat::Rat;
use crate::vars::Context;

/// Coefficients in ascending degree order; empty means zero, the last
/// entry is nonzero otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly(pub Vec<Rat>);

impl DensePoly {
    pub fn zero() -> DensePoly {
        DensePoly(Vec::new())
    }

    pub fn from_vec(mut coeffs: Vec<Rat>) -> DensePoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.0.last()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn monic(&self) -> DensePoly {
        match self.leading() {
            None => DensePoly::zero(),
            Some(lc) => {
                let inv = Rat::one() / lc.clone();
                DensePoly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> DensePoly {
        if self.0.len() <= 1 {
            return DensePoly::zero();
        }
        DensePoly::from_vec(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer((i + 1).into()))
                .collect(),
        )
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::from_vec(out)
    }

    pub fn pow(&self, e: usize) -> DensePoly {
        let mut acc = DensePoly(vec![Rat::one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean remainder.
    pub fn rem(&self, div: &DensePoly) -> DensePoly {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = div.degree().unwrap();
        let lc = div.leading().unwrap().clone();
        while r.len() > dd {
            let k = r.len() - 1;
            let f = r[k].clone() / lc.clone();
            if !f.is_zero() {
                for j in 0..=dd {
                    let v = r[k - dd + j].clone() - f.clone() * div.0[j].clone();
                    r[k - dd + j] = v;
                }
            }
            r.pop();
        }
        DensePoly::from_vec(r)
    }

    /// Exact quotient; panics if the division is not exact.
    pub fn div_exact(&self, div: &DensePoly) -> DensePoly {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return DensePoly::zero();
        }
        let dd = div.degree().unwrap();
        let nd = self.degree().unwrap();
        assert!(nd >= dd, "inexact division");
        let lc = div.leading().unwrap().clone();
        let mut r = self.0.clone();
        let mut q = vec![Rat::zero(); nd - dd + 1];
        for k in (dd..=nd).rev() {
            let f = r[k].clone() / lc.clone();
            q[k - dd] = f.clone();
            if !f.is_zero() {
                for j in 0..=dd {
                    let v = r[k - dd + j].clone() - f.clone() * div.0[j].clone();
                    r[k - dd + j] = v;
                }
            }
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact division");
        DensePoly::from_vec(q)
    }
}

/// Monic gcd by the Euclidean algorithm; `gcd(p, 0)` is monic `p`.
pub fn gcd(p: &DensePoly, q: &DensePoly) -> DensePoly {
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Yun's squarefree decomposition: returns `(s_j, j)` with
/// `p = lc * Π s_j^j`, each `s_j` monic squarefree, pairwise coprime,
/// non-constant entries only.
pub fn squarefree_decomposition(p: &DensePoly) -> Vec<(DensePoly, usize)> {
    if p.is_zero() || p.is_constant() {
        return Vec::new();
    }
    let p = p.monic();
    let dp = p.derivative();
    let g = gcd(&p, &dp);
    let mut out = Vec::new();
    if g.is_constant() {
        out.push((p, 1));
        return out;
    }
    let mut w = p.div_exact(&g);
    let mut y = dp.div_exact(&g);
    let mut i = 1usize;
    loop {
        let z = DensePoly::from_vec({
            // z = y - w'
            let wd = w.derivative();
            let n = y.0.len().max(wd.0.len());
            let mut v = vec![Rat::zero(); n];
            for (k, c) in y.0.iter().enumerate() {
                v[k] += c;
            }
            for (k, c) in wd.0.iter().enumerate() {
                v[k] -= c;
            }
            v
        });
        if z.is_zero() {
            if !w.is_constant() {
                out.push((w.monic(), i));
            }
            break;
        }
        let s = gcd(&w, &z);
        if !s.is_constant() {
            out.push((s.clone(), i));
        }
        w = w.div_exact(&s);
        y = z.div_exact(&s);
        i += 1;
    }
    out
}

/// View of a `MultiPoly` that is univariate in the given variable.
pub fn to_dense(p: &MultiPoly, var: usize) -> Result<DensePoly> {
    let mut coeffs: Vec<Rat> = Vec::new();
    for (m, c) in p.terms() {
        for (v, &e) in m.0.iter().enumerate() {
            if v != var && e > 0 {
                return Err(Error::InvalidArgument(
                    "polynomial is not univariate in the requested variable".into(),
                ));
            }
        }
        let e = m.0[var] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rat::zero());
        }
        coeffs[e] = c.clone();
    }
    Ok(DensePoly::from_vec(coeffs))
}

pub fn from_dense(p: &DensePoly, ctx: &Context, var: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(ctx);
    for (e, c) in p.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut exps = vec![0u16; ctx.n_vars()];
        exps[var] = e as u16;
        out = out.add(&MultiPoly::monomial(ctx, Mono(exps), c.clone()));
    }
    out
}

/// Monic gcd of two multivariate polynomials that are univariate in the
/// same variable; `gcd(p, 0)` is monic `p`.
pub fn univariate_gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    if p.context() != q.context() {
        return Err(Error::ContextMismatch(
            "gcd operands live in different contexts".into(),
        ));
    }
    // locate the common variable
    let mut var = None;
    for cand in [p, q] {
        for (m, _) in cand.terms() {
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    var = Some(v);
                    break;
                }
            }
            if var.is_some() {
                break;
            }
        }
        if var.is_some() {
            break;
        }
    }
    let Some(v) = var else {
        // both constant
        let g = if p.is_zero() && q.is_zero() {
            MultiPoly::zero(p.context())
        } else {
            MultiPoly::one(p.context())
        };
        return Ok(g);
    };
    let a = to_dense(p, v)?;
    let b = to_dense(q, v)?;
    Ok(from_dense(&gcd(&a, &b), p.context(), v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::rat::rat_int;
    use crate::vars::{Context, VarFamily};

    fn ctx() -> Context {
        Context::new(vec![VarFamily::flat("x", 1, 1)]).unwrap()
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &ctx()).unwrap()
    }

    #[test]
    fn test_gcd_powers() {
        let g = univariate_gcd(&p("x1^2"), &p("x1^3")).unwrap();
        assert_eq!(g, p("x1^2"));
    }

    #[test]
    fn test_gcd_with_linear_factor() {
        let g = univariate_gcd(&p("x1^2 - 1"), &p("x1 - 1")).unwrap();
        assert_eq!(g, p("x1 - 1"));
    }

    #[test]
    fn test_gcd_factored() {
        // gcd((x+2)^3 (x-1), (x+2)(x-1)^2) = (x+2)(x-1), monic expanded
        let a = p("x1 + 2").pow(3).mul(&p("x1 - 1"));
        let b = p("x1 + 2").mul(&p("x1 - 1").pow(2));
        let g = univariate_gcd(&a, &b).unwrap();
        assert_eq!(g, p("x1^2 + x1 - 2"));
    }

    #[test]
    fn test_gcd_with_zero() {
        let z = MultiPoly::zero(&ctx());
        let g = univariate_gcd(&p("3*x1^2 - 3"), &z).unwrap();
        assert_eq!(g, p("x1^2 - 1"));
    }

    #[test]
    fn test_squarefree_decomposition() {
        // (x-1)^2 (x+3)^5
        let f = to_dense(&p("x1 - 1").pow(2).mul(&p("x1 + 3").pow(5)), 0).unwrap();
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].1, 2);
        assert_eq!(parts[1].1, 5);
        assert_eq!(parts[0].0 .0, vec![rat_int(-1), rat_int(1)]);
        assert_eq!(parts[1].0 .0, vec![rat_int(3), rat_int(1)]);
        // squarefree input comes back with multiplicity 1
        let sf = to_dense(&p("x1^2 - 2"), 0).unwrap();
        let parts = squarefree_decomposition(&sf);
        assert_eq!(parts, vec![(sf.monic(), 1)]);
    }

    #[test]
    fn test_not_univariate() {
        let c2 = Context::new(vec![VarFamily::flat("x", 1, 2)]).unwrap();
        let bad = parse_poly("x1*x2", &c2).unwrap();
        assert!(to_dense(&bad, 0).is_err());
    }
}
