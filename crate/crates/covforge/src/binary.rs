//! Binary forms in the Cayley convention, and the classical operations on
//! them: transvectants, the Omega operator, Wronskians, the Hessian, and
//! unimodular coordinate changes.
//!
//! A form of order d is stored as its Cayley coefficients c_0..c_d, so
//! that the polynomial is Σ C(d,i) c_i x1^{d-i} x2^i. Coefficients are
//! arbitrary polynomials (a generic form has c_i = a_i), and rational
//! specializations are the constant case of the same representation.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Mono, MultiPoly};
use crate::rat::{binomial, factorial, Rat};
use crate::vars::{Context, Shape, VarFamily};

#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    order: usize,
    var_family: VarFamily,
    coeff_ctx: Context,
    coeffs: Vec<MultiPoly>,
}

/// The standard form-variable pair x1, x2.
pub fn xvars() -> VarFamily {
    VarFamily::flat("x", 1, 2)
}

impl BinaryForm {
    pub fn new(order: usize, var_family: VarFamily, coeffs: Vec<MultiPoly>) -> Result<BinaryForm> {
        if !matches!(var_family.shape, Shape::Flat { len: 2, .. }) {
            return Err(Error::InvalidArgument(
                "form variables must be a flat family of two".into(),
            ));
        }
        if coeffs.len() != order + 1 {
            return Err(Error::InvalidArgument(format!(
                "an order-{order} form needs {} coefficients, got {}",
                order + 1,
                coeffs.len()
            )));
        }
        let coeff_ctx = coeffs
            .first()
            .map(|c| c.context().clone())
            .unwrap_or_else(Context::empty);
        if coeffs.iter().any(|c| *c.context() != coeff_ctx) {
            return Err(Error::ContextMismatch(
                "form coefficients live in different contexts".into(),
            ));
        }
        if coeff_ctx.family(&var_family.name).is_some() {
            return Err(Error::ContextMismatch(
                "coefficient context already contains the form variables".into(),
            ));
        }
        Ok(BinaryForm {
            order,
            var_family,
            coeff_ctx,
            coeffs,
        })
    }

    /// The generic order-d form with coefficient family `coeff_name`.
    pub fn generic(order: usize, coeff_name: &str, var_family: VarFamily) -> BinaryForm {
        let ctx = Context::new(vec![VarFamily::flat(coeff_name, 0, order + 1)]).unwrap();
        let coeffs = (0..=order).map(|i| MultiPoly::var(&ctx, i)).collect();
        BinaryForm::new(order, var_family, coeffs).unwrap()
    }

    /// A form with rational Cayley coefficients.
    pub fn from_rationals(order: usize, var_family: VarFamily, values: Vec<Rat>) -> Result<BinaryForm> {
        let ctx = Context::empty();
        let coeffs = values
            .into_iter()
            .map(|v| MultiPoly::constant(&ctx, v))
            .collect();
        BinaryForm::new(order, var_family, coeffs)
    }

    /// The zero form of a declared order (all coefficients zero).
    pub fn zero(order: usize, var_family: VarFamily, coeff_ctx: &Context) -> BinaryForm {
        BinaryForm {
            order,
            var_family,
            coeff_ctx: coeff_ctx.clone(),
            coeffs: vec![MultiPoly::zero(coeff_ctx); order + 1],
        }
    }

    /// The monomial x1^i x2^j as a form of order i+j.
    pub fn monomial_form(i: usize, j: usize, var_family: VarFamily) -> BinaryForm {
        let d = i + j;
        let ctx = Context::empty();
        let coeffs = (0..=d)
            .map(|k| {
                if k == j {
                    MultiPoly::constant(&ctx, Rat::new(BigInt::one(), binomial(d, j)))
                } else {
                    MultiPoly::zero(&ctx)
                }
            })
            .collect();
        BinaryForm::new(d, var_family, coeffs).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn var_family(&self) -> &VarFamily {
        &self.var_family
    }

    pub fn coeff_ctx(&self) -> &Context {
        &self.coeff_ctx
    }

    /// Cayley coefficients c_0..c_d.
    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// All coefficients as rationals, if constant.
    pub fn rational_coeffs(&self) -> Option<Vec<Rat>> {
        self.coeffs.iter().map(|c| c.as_constant()).collect()
    }

    /// Plain coefficient vector: entry i is the coefficient of
    /// x1^{d-i} x2^i, i.e. C(d,i) c_i.
    pub fn plain_coeffs(&self) -> Vec<MultiPoly> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scalar_mul(&Rat::from_integer(binomial(self.order, i))))
            .collect()
    }

    /// Context holding both the coefficients and the form variables.
    pub fn full_ctx(&self) -> Context {
        self.coeff_ctx
            .with_family(self.var_family.clone())
            .expect("var family clashes with coefficient context")
    }

    /// Expands to the polynomial Σ C(d,i) c_i x1^{d-i} x2^i.
    pub fn to_poly(&self) -> MultiPoly {
        let ctx = self.full_ctx();
        let (v1, v2) = var_pair(&ctx, &self.var_family).unwrap();
        let mut out = MultiPoly::zero(&ctx);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ce = c.extend_to(&ctx).unwrap();
            let mut exps = vec![0u16; ctx.n_vars()];
            exps[v1] = (self.order - i) as u16;
            exps[v2] = i as u16;
            let mono = MultiPoly::monomial(&ctx, Mono(exps), Rat::from_integer(binomial(self.order, i)));
            out = out.add(&ce.mul(&mono));
        }
        out
    }

    /// Reads a form of known order back from its polynomial expansion.
    /// The polynomial must be homogeneous of that order in the form
    /// variables (the zero polynomial is accepted).
    pub fn from_poly(
        p: &MultiPoly,
        order: usize,
        var_family: &VarFamily,
        coeff_ctx: &Context,
    ) -> Result<BinaryForm> {
        let mut coeffs = Vec::with_capacity(order + 1);
        for i in 0..=order {
            let pat = vec![(order - i) as u16, i as u16];
            let plain = p.coeff_of(&var_family.name, &pat)?;
            let plain = plain.extend_to(coeff_ctx)?;
            coeffs.push(plain.scalar_mul(&Rat::new(BigInt::one(), binomial(order, i))));
        }
        let form = BinaryForm::new(order, var_family.clone(), coeffs)?;
        // consistency: nothing of other degrees in the form variables
        let total: usize = p
            .split_by_family(&var_family.name)?
            .iter()
            .map(|(pat, poly)| {
                let deg: usize = pat.iter().map(|&e| e as usize).sum();
                if deg == order || poly.is_zero() {
                    0
                } else {
                    1
                }
            })
            .sum();
        if total > 0 {
            return Err(Error::OrderMismatch(format!(
                "polynomial is not homogeneous of order {order} in {}",
                var_family.name
            )));
        }
        Ok(form)
    }

    /// Evaluates the form at rational values of its two variables,
    /// returning a polynomial in the coefficient context.
    pub fn eval_at(&self, x1: &Rat, x2: &Rat) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.coeff_ctx);
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut s = Rat::from_integer(binomial(self.order, i));
            for _ in 0..(self.order - i) {
                s *= x1.clone();
            }
            for _ in 0..i {
                s *= x2.clone();
            }
            out = out.add(&c.scalar_mul(&s));
        }
        out
    }

    /// Scalar multiple of the form.
    pub fn scalar_mul(&self, s: &Rat) -> BinaryForm {
        BinaryForm {
            order: self.order,
            var_family: self.var_family.clone(),
            coeff_ctx: self.coeff_ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c.scalar_mul(s)).collect(),
        }
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.order != other.order {
            return Err(Error::OrderMismatch("form orders differ".into()));
        }
        let ctx = self.coeff_ctx.union(&other.coeff_ctx)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| Ok(a.extend_to(&ctx)?.sub(&b.extend_to(&ctx)?)))
            .collect::<Result<Vec<_>>>()?;
        BinaryForm::new(self.order, self.var_family.clone(), coeffs)
    }

    /// Exact proportionality scalar `c` with `self = c * other`.
    /// Compares in the union of the two coefficient contexts.
    pub fn proportionality(&self, other: &BinaryForm) -> Option<Rat> {
        if self.order != other.order {
            return None;
        }
        if self.is_zero() && other.is_zero() {
            return Some(Rat::one());
        }
        let ctx = self.coeff_ctx.union(&other.coeff_ctx).ok()?;
        let mine: Vec<MultiPoly> = self
            .coeffs
            .iter()
            .map(|c| c.extend_to(&ctx).unwrap())
            .collect();
        let theirs: Vec<MultiPoly> = other
            .coeffs
            .iter()
            .map(|c| c.extend_to(&ctx).unwrap())
            .collect();
        let k = (0..=self.order).find(|&k| !theirs[k].is_zero())?;
        let c = mine[k].proportionality(&theirs[k])?;
        for i in 0..=self.order {
            if mine[i] != theirs[i].scalar_mul(&c) {
                return None;
            }
        }
        Some(c)
    }
}

/// Global indices of the two form variables inside `ctx`.
pub fn var_pair(ctx: &Context, fam: &VarFamily) -> Result<(usize, usize)> {
    let start = match fam.shape {
        Shape::Flat { start, len: 2 } => start,
        _ => {
            return Err(Error::InvalidArgument(
                "expected a flat two-variable family".into(),
            ))
        }
    };
    Ok((
        ctx.flat_var(&fam.name, start)?,
        ctx.flat_var(&fam.name, start + 1)?,
    ))
}

/// The k-th transvectant of two forms in the same variables, with the
/// classical factorial prefactor. For k exceeding either order the
/// result is the zero form of order max(p+q-2k, 0).
pub fn transvectant(a: &BinaryForm, b: &BinaryForm, k: usize) -> Result<BinaryForm> {
    if a.var_family != b.var_family {
        return Err(Error::ContextMismatch(
            "transvectant operands use different form variables".into(),
        ));
    }
    let (p, q) = (a.order, b.order);
    let coeff_ctx = a.coeff_ctx.union(&b.coeff_ctx)?;
    if k > p.min(q) {
        let order = (p + q).saturating_sub(2 * k);
        return Ok(BinaryForm::zero(order, a.var_family.clone(), &coeff_ctx));
    }
    let order = p + q - 2 * k;
    let ctx = coeff_ctx.with_family(a.var_family.clone())?;
    let (v1, v2) = var_pair(&ctx, &a.var_family)?;
    let pa = a.to_poly().extend_to(&ctx)?;
    let pb = b.to_poly().extend_to(&ctx)?;

    // cache iterated derivatives
    let mut da: Vec<MultiPoly> = vec![pa];
    for _ in 0..k {
        let last = da.last().unwrap();
        da.push(last.diff(v1));
    }
    // da[j] = d^j A / dx1^j ; now branch into x2 derivatives per i
    let mut sum = MultiPoly::zero(&ctx);
    for i in 0..=k {
        // d^k A / dx1^{k-i} dx2^i
        let mut ai = da[k - i].clone();
        for _ in 0..i {
            ai = ai.diff(v2);
        }
        let mut bi = pb.clone();
        for _ in 0..i {
            bi = bi.diff(v1);
        }
        for _ in 0..(k - i) {
            bi = bi.diff(v2);
        }
        let mut term = ai.mul(&bi).scalar_mul(&Rat::from_integer(binomial(k, i)));
        if i % 2 == 1 {
            term = term.neg();
        }
        sum = sum.add(&term);
    }
    let pref = Rat::new(
        factorial(p - k) * factorial(q - k),
        factorial(p) * factorial(q),
    );
    let result = sum.scalar_mul(&pref);
    BinaryForm::from_poly(&result, order, &a.var_family, &coeff_ctx)
}

/// Applies the Omega operator Ω = ∂²/∂x1∂y2 − ∂²/∂x2∂y1 for the two named
/// families, k times.
pub fn omega_apply(p: &MultiPoly, fam_x: &str, fam_y: &str, k: usize) -> Result<MultiPoly> {
    let ctx = p.context().clone();
    let fx = ctx
        .family(fam_x)
        .ok_or_else(|| Error::UnknownVariable(fam_x.to_string()))?
        .clone();
    let fy = ctx
        .family(fam_y)
        .ok_or_else(|| Error::UnknownVariable(fam_y.to_string()))?
        .clone();
    let (x1, x2) = var_pair(&ctx, &fx)?;
    let (y1, y2) = var_pair(&ctx, &fy)?;
    let mut out = p.clone();
    for _ in 0..k {
        out = out.diff(x1).diff(y2).sub(&out.diff(x2).diff(y1));
    }
    Ok(out)
}

/// Wronskian of m forms of a common order n (m ≤ n+1): the determinant of
/// the matrix of (m-1)-st derivatives. Vanishes exactly on linearly
/// dependent inputs.
pub fn wronskian(forms: &[BinaryForm]) -> Result<BinaryForm> {
    let m = forms.len();
    if m == 0 {
        return Err(Error::InvalidArgument("empty Wronskian".into()));
    }
    let n = forms[0].order;
    if forms.iter().any(|f| f.order != n) {
        return Err(Error::OrderMismatch(
            "Wronskian arguments must share one order".into(),
        ));
    }
    if forms.iter().any(|f| f.var_family != forms[0].var_family) {
        return Err(Error::ContextMismatch(
            "Wronskian arguments use different form variables".into(),
        ));
    }
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "Wronskian of {m} forms requires order ≥ {}",
            m - 1
        )));
    }
    let mut coeff_ctx = forms[0].coeff_ctx.clone();
    for f in &forms[1..] {
        coeff_ctx = coeff_ctx.union(&f.coeff_ctx)?;
    }
    let ctx = coeff_ctx.with_family(forms[0].var_family.clone())?;
    let (v1, v2) = var_pair(&ctx, &forms[0].var_family)?;
    let mut rows = Vec::with_capacity(m);
    for f in forms {
        let p = f.to_poly().extend_to(&ctx)?;
        let mut row = Vec::with_capacity(m);
        for j in 0..m {
            // ∂^{m-1} / ∂x1^{m-1-j} ∂x2^{j}
            let mut d = p.clone();
            for _ in 0..(m - 1 - j) {
                d = d.diff(v1);
            }
            for _ in 0..j {
                d = d.diff(v2);
            }
            row.push(d);
        }
        rows.push(row);
    }
    let det = crate::matrix::poly_det(&rows);
    let order = m * (n + 1 - m);
    BinaryForm::from_poly(&det, order, &forms[0].var_family, &coeff_ctx)
}

/// The Hessian F_{x1x1} F_{x2x2} − (F_{x1x2})², a form of order 2d−4.
pub fn hessian(f: &BinaryForm) -> Result<BinaryForm> {
    if f.order < 2 {
        return Err(Error::InvalidArgument(
            "the Hessian needs a form of order at least 2".into(),
        ));
    }
    let ctx = f.full_ctx();
    let (v1, v2) = var_pair(&ctx, &f.var_family)?;
    let p = f.to_poly();
    let f11 = p.diff(v1).diff(v1);
    let f22 = p.diff(v2).diff(v2);
    let f12 = p.diff(v1).diff(v2);
    let he = f11.mul(&f22).sub(&f12.mul(&f12));
    BinaryForm::from_poly(&he, 2 * f.order - 4, &f.var_family, &f.coeff_ctx)
}

/// Coordinate change F^g = F(α x1 + β x2, γ x1 + δ x2) for
/// g = [[α, γ], [β, δ]] with det g = 1, recovered in Cayley convention.
pub fn sl2_transform(f: &BinaryForm, g: &[[Rat; 2]; 2]) -> Result<BinaryForm> {
    let det = g[0][0].clone() * g[1][1].clone() - g[0][1].clone() * g[1][0].clone();
    if !det.is_one() {
        return Err(Error::DetNotOne(crate::rat::format_rat(&det)));
    }
    let ctx = f.full_ctx();
    let (v1, v2) = var_pair(&ctx, &f.var_family)?;
    let x1 = MultiPoly::var(&ctx, v1);
    let x2 = MultiPoly::var(&ctx, v2);
    let new_x1 = x1.scalar_mul(&g[0][0]).add(&x2.scalar_mul(&g[1][0]));
    let new_x2 = x1.scalar_mul(&g[0][1]).add(&x2.scalar_mul(&g[1][1]));
    let p = f.to_poly();
    let q = p.substitute(&ctx, &[(v1, new_x1), (v2, new_x2)])?;
    BinaryForm::from_poly(&q, f.order, &f.var_family, &f.coeff_ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn x2_pow(i: usize) -> BinaryForm {
        BinaryForm::monomial_form(0, i, xvars())
    }

    fn x1_pow(i: usize) -> BinaryForm {
        BinaryForm::monomial_form(i, 0, xvars())
    }

    #[test]
    fn test_to_poly_generic() {
        let f = BinaryForm::generic(2, "a", xvars());
        assert_eq!(f.to_poly().to_string(), "a0*x1^2 + 2*a1*x1*x2 + a2*x2^2");
    }

    #[test]
    fn test_from_poly_roundtrip() {
        let f = BinaryForm::generic(3, "a", xvars());
        let p = f.to_poly();
        let g = BinaryForm::from_poly(&p, 3, &xvars(), f.coeff_ctx()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn test_transvectant_zeroth_is_product() {
        let a = BinaryForm::generic(2, "a", xvars());
        let b = BinaryForm::generic(3, "b", xvars());
        let t0 = transvectant(&a, &b, 0).unwrap();
        assert_eq!(t0.to_poly(), {
            let ctx = t0.full_ctx();
            a.to_poly().extend_to(&ctx).unwrap().mul(&b.to_poly().extend_to(&ctx).unwrap())
        });
    }

    #[test]
    fn test_transvectant_odd_self_vanishes() {
        for d in [2usize, 3, 4] {
            let f = BinaryForm::generic(d, "a", xvars());
            let t1 = transvectant(&f, &f, 1).unwrap();
            assert!(t1.is_zero(), "(F,F)_1 must vanish for d={d}");
        }
    }

    #[test]
    fn test_transvectant_example_value() {
        // (x1^2, x2^2)_2 = 1
        let t = transvectant(&x1_pow(2), &x2_pow(2), 2).unwrap();
        assert_eq!(t.order(), 0);
        assert_eq!(t.coeffs()[0].as_constant().unwrap(), rat_int(1));
    }

    #[test]
    fn test_transvectant_k_too_large() {
        let a = BinaryForm::generic(2, "a", xvars());
        let t = transvectant(&a, &a, 3).unwrap();
        assert!(t.is_zero());
        assert_eq!(t.order(), 0);
    }

    #[test]
    fn test_transvectant_symmetry() {
        // (A,B)_k = (-1)^k (B,A)_k
        let a = BinaryForm::generic(3, "a", xvars());
        let b = BinaryForm::generic(4, "b", xvars());
        for k in 0..=3 {
            let ab = transvectant(&a, &b, k).unwrap();
            let ba = transvectant(&b, &a, k).unwrap();
            let sign = if k % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            assert_eq!(ab.proportionality(&ba), Some(sign), "k={k}");
        }
    }

    #[test]
    fn test_omega_basics() {
        let ctx = Context::new(vec![VarFamily::flat("x", 1, 2), VarFamily::flat("y", 1, 2)])
            .unwrap();
        let x1 = MultiPoly::var(&ctx, 0);
        let y1 = MultiPoly::var(&ctx, 2);
        let y2 = MultiPoly::var(&ctx, 3);
        let w = omega_apply(&x1.mul(&y2), "x", "y", 1).unwrap();
        assert_eq!(w.as_constant().unwrap(), rat_int(1));
        let w2 = omega_apply(&x1.mul(&y1), "x", "y", 1).unwrap();
        assert!(w2.is_zero());
        assert!(omega_apply(&x1, "x", "z", 1).is_err());
    }

    #[test]
    fn test_omega_reproduces_transvectant() {
        // prefactored Ω^k on A(x) B(y), then y := x, equals (A,B)_k
        let yfam = VarFamily::flat("y", 1, 2);
        for (p, q, k) in [(2usize, 2usize, 1usize), (3, 2, 2), (4, 3, 3), (2, 4, 0)] {
            let a = BinaryForm::generic(p, "a", xvars());
            let b0 = BinaryForm::generic(q, "b", xvars());
            let b = BinaryForm::new(q, yfam.clone(), b0.coeffs().to_vec()).unwrap();
            let ctx = a
                .full_ctx()
                .union(&b.full_ctx())
                .unwrap();
            let prod = a.to_poly().extend_to(&ctx).unwrap().mul(&b.to_poly().extend_to(&ctx).unwrap());
            let om = omega_apply(&prod, "x", "y", k).unwrap();
            // substitute y -> x
            let (x1, x2) = var_pair(&ctx, &xvars()).unwrap();
            let xs1 = MultiPoly::var(&ctx, x1);
            let xs2 = MultiPoly::var(&ctx, x2);
            let (y1, y2) = var_pair(&ctx, &yfam).unwrap();
            let subst = om.substitute(&ctx, &[(y1, xs1), (y2, xs2)]).unwrap();
            let pref = Rat::new(
                factorial(p - k) * factorial(q - k),
                factorial(p) * factorial(q),
            );
            let lhs = subst.scalar_mul(&pref);
            let rhs = transvectant(&a, &b0, k).unwrap().to_poly().extend_to(&ctx).unwrap();
            assert_eq!(lhs, rhs, "p={p} q={q} k={k}");
        }
    }

    #[test]
    fn test_wronskian_values() {
        // W(x1, x2) = 1
        let w = wronskian(&[x1_pow(1), x2_pow(1)]).unwrap();
        assert_eq!(w.order(), 0);
        assert_eq!(w.coeffs()[0].as_constant().unwrap(), rat_int(1));
        // W(A, A) = 0
        let a = BinaryForm::generic(3, "a", xvars());
        assert!(wronskian(&[a.clone(), a]).unwrap().is_zero());
        // W(x1^2, x1 x2, x2^2) = 4
        let w3 = wronskian(&[
            x1_pow(2),
            BinaryForm::monomial_form(1, 1, xvars()),
            x2_pow(2),
        ])
        .unwrap();
        assert_eq!(w3.order(), 0);
        assert_eq!(w3.coeffs()[0].as_constant().unwrap(), rat_int(4));
    }

    #[test]
    fn test_wronskian_order_bookkeeping() {
        let a = BinaryForm::generic(4, "a", xvars());
        let b = BinaryForm::generic(4, "b", xvars());
        let w = wronskian(&[a, b]).unwrap();
        assert_eq!(w.order(), 2 * (4 - 1));
    }

    #[test]
    fn test_hessian_perfect_powers() {
        for d in [2usize, 3, 5] {
            assert!(hessian(&x1_pow(d)).unwrap().is_zero());
            // (x1 + x2)^d
            let mut coeffs = Vec::new();
            for _ in 0..=d {
                coeffs.push(rat_int(1));
            }
            let f = BinaryForm::from_rationals(d, xvars(), coeffs).unwrap();
            assert!(hessian(&f).unwrap().is_zero(), "He((x1+x2)^{d})");
        }
        assert!(hessian(&x1_pow(1)).is_err());
    }

    #[test]
    fn test_hessian_proportional_to_second_transvectant() {
        for d in 2..=8usize {
            let f = BinaryForm::generic(d, "a", xvars());
            let he = hessian(&f).unwrap();
            let t2 = transvectant(&f, &f, 2).unwrap();
            let c = he.proportionality(&t2).expect("proportional");
            // He = d^2 (d-1)^2 / 2 * (F,F)_2
            let expect = rat_int((d * d * (d - 1) * (d - 1)) as i64) / rat_int(2);
            assert_eq!(c, expect, "d={d}");
        }
    }

    #[test]
    fn test_sl2_identity_and_reversal() {
        let f = BinaryForm::generic(2, "a", xvars());
        let id = [
            [rat_int(1), rat_int(0)],
            [rat_int(0), rat_int(1)],
        ];
        assert_eq!(sl2_transform(&f, &id).unwrap(), f);
        // g = [[0,-1],[1,0]] reverses coefficients with alternating signs
        let g = [
            [rat_int(0), rat_int(-1)],
            [rat_int(1), rat_int(0)],
        ];
        let fg = sl2_transform(&f, &g).unwrap();
        let a = |i: usize| MultiPoly::var(f.coeff_ctx(), i);
        assert_eq!(fg.coeffs()[0], a(2));
        assert_eq!(fg.coeffs()[1], a(1).neg());
        assert_eq!(fg.coeffs()[2], a(0));
        // det != 1 rejected
        let bad = [
            [rat_int(2), rat_int(0)],
            [rat_int(0), rat_int(1)],
        ];
        assert!(sl2_transform(&f, &bad).is_err());
    }

    #[test]
    fn test_hessian_equivariance() {
        // He(F^g) = [He(F)]^g for a random-ish unimodular integer g
        let f = BinaryForm::generic(4, "a", xvars());
        let g = [
            [rat_int(2), rat_int(1)],
            [rat_int(3), rat_int(2)],
        ];
        // det = 4 - 3 = 1
        let lhs = hessian(&sl2_transform(&f, &g).unwrap()).unwrap();
        let rhs = sl2_transform(&hessian(&f).unwrap(), &g).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn test_wronskian_equivariance() {
        // W(C0, C1)(x1, x2) = W(C0^g, C1^g)(x2, -x1) for g = [[0,-1],[1,0]]
        let c0 = BinaryForm::generic(3, "a", xvars());
        let c1 = BinaryForm::generic(3, "b", xvars());
        let g = [
            [rat_int(0), rat_int(-1)],
            [rat_int(1), rat_int(0)],
        ];
        let lhs = wronskian(&[c0.clone(), c1.clone()]).unwrap();
        let w_g = wronskian(&[
            sl2_transform(&c0, &g).unwrap(),
            sl2_transform(&c1, &g).unwrap(),
        ])
        .unwrap();
        // evaluate the transformed Wronskian at (x2, -x1)
        let sub = {
            let ctx = w_g.full_ctx();
            let (v1, v2) = var_pair(&ctx, w_g.var_family()).unwrap();
            let x1 = MultiPoly::var(&ctx, v1);
            let x2 = MultiPoly::var(&ctx, v2);
            w_g.to_poly()
                .substitute(&ctx, &[(v1, x2), (v2, x1.neg())])
                .unwrap()
        };
        assert_eq!(lhs.to_poly(), sub);
    }

    #[test]
    fn test_reversal_substitution_on_quadratic() {
        // F.gen with x1 -> x2, x2 -> -x1 reverses with alternating signs (d = 2)
        let f = BinaryForm::generic(2, "a", xvars());
        let ctx = f.full_ctx();
        let (v1, v2) = var_pair(&ctx, f.var_family()).unwrap();
        let x1 = MultiPoly::var(&ctx, v1);
        let x2 = MultiPoly::var(&ctx, v2);
        let q = f
            .to_poly()
            .substitute(&ctx, &[(v1, x2), (v2, x1.neg())])
            .unwrap();
        let g = BinaryForm::from_poly(&q, 2, f.var_family(), f.coeff_ctx()).unwrap();
        let a = |i: usize| MultiPoly::var(f.coeff_ctx(), i);
        assert_eq!(g.coeffs()[0], a(2));
        assert_eq!(g.coeffs()[1], a(1).neg());
        assert_eq!(g.coeffs()[2], a(0));
    }

    #[test]
    fn test_eval_at() {
        let f = BinaryForm::from_rationals(2, xvars(), vec![rat_int(1), rat_int(0), rat_int(1)])
            .unwrap();
        // x1^2 + x2^2 at (2, 3) = 13
        assert_eq!(f.eval_at(&rat_int(2), &rat_int(3)).as_constant().unwrap(), rat_int(13));
        assert_eq!(f.eval_at(&rat(1, 2), &rat_int(0)).as_constant().unwrap(), rat(1, 4));
    }
}
