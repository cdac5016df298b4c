//! Covariants of the generic binary d-ic: degree/order-tagged coefficient
//! lists, source reconstruction through E+, verification through the Γ
//! operators, and the Cayley–Sylvester dimension count.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};



use crate::binary::{transvectant, BinaryForm};
use crate::cayley::{cayley_operator, e_minus, e_plus_pow, CayleyOp};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rat::{factorial, Rat};
use crate::vars::{Context, VarFamily};

/// A covariant of degree m and order q of the generic form of order d,
/// stored as its Cayley coefficients φ_0..φ_q in the coefficient family.
///
/// Construction enforces the structural invariants: every φ_k homogeneous
/// of degree m and isobaric of weight (dm−q)/2 + k.
#[derive(Clone, Debug, PartialEq)]
pub struct Covariant {
    source_order: usize,
    degree: usize,
    order: usize,
    coeff_family: String,
    form: BinaryForm,
}

impl Covariant {
    /// Wraps coefficient polynomials as a covariant, checking the
    /// homogeneity and isobaric-weight invariants.
    pub fn from_parts(
        source_order: usize,
        degree: usize,
        order: usize,
        coeff_family: &str,
        var_family: VarFamily,
        coeffs: Vec<MultiPoly>,
    ) -> Result<Covariant> {
        let d = source_order;
        let (m, q) = (degree, order);
        if d * m < q || !(d * m - q).is_multiple_of(2) {
            return Err(Error::DegreeMismatch(format!(
                "no covariant of degree {m} and order {q} exists for d={d}: weight (dm-q)/2 is not a nonnegative integer"
            )));
        }
        let w = (d * m - q) / 2;
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match c.degree_in_family(coeff_family)? {
                Some(deg) if deg == m => {}
                got => {
                    return Err(Error::DegreeMismatch(format!(
                        "coefficient {k} is not homogeneous of degree {m} (got {got:?})"
                    )))
                }
            }
            match c.isobaric_weight(coeff_family)? {
                Some(wt) if wt == w + k => {}
                got => {
                    return Err(Error::DegreeMismatch(format!(
                        "coefficient {k} is not isobaric of weight {} (got {got:?})",
                        w + k
                    )))
                }
            }
        }
        let form = BinaryForm::new(order, var_family, coeffs)?;
        Ok(Covariant {
            source_order,
            degree,
            order,
            coeff_family: coeff_family.to_string(),
            form,
        })
    }

    /// The generic d-ic itself, a covariant of degree 1 and order d.
    pub fn generic(d: usize, coeff_family: &str, var_family: VarFamily) -> Covariant {
        let f = BinaryForm::generic(d, coeff_family, var_family.clone());
        Covariant::from_parts(d, 1, d, coeff_family, var_family, f.coeffs().to_vec()).unwrap()
    }

    /// The zero covariant with declared degree and order.
    pub fn zero(d: usize, degree: usize, order: usize, coeff_family: &str, var_family: VarFamily) -> Covariant {
        let ctx = Context::new(vec![VarFamily::flat(coeff_family, 0, d + 1)]).unwrap();
        let coeffs = vec![MultiPoly::zero(&ctx); order + 1];
        Covariant::from_parts(d, degree, order, coeff_family, var_family, coeffs).unwrap()
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn weight(&self) -> usize {
        (self.source_order * self.degree - self.order) / 2
    }

    pub fn coeff_family(&self) -> &str {
        &self.coeff_family
    }

    pub fn form(&self) -> &BinaryForm {
        &self.form
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        self.form.coeffs()
    }

    /// The source (seminvariant) φ_0.
    pub fn source(&self) -> &MultiPoly {
        &self.form.coeffs()[0]
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    /// Bihomogeneous polynomial Σ C(q,k) φ_k x1^{q-k} x2^k.
    pub fn to_poly(&self) -> MultiPoly {
        self.form.to_poly()
    }

    /// Transvectant of two covariants of the same d-ic.
    pub fn transvect(&self, other: &Covariant, k: usize) -> Result<Covariant> {
        if self.source_order != other.source_order {
            return Err(Error::OrderMismatch(
                "covariants of different source forms".into(),
            ));
        }
        let t = transvectant(&self.form, &other.form, k)?;
        let order = t.order();
        Covariant::from_parts(
            self.source_order,
            self.degree + other.degree,
            order,
            &self.coeff_family,
            self.form.var_family().clone(),
            t.coeffs().to_vec(),
        )
    }

    /// Product of two covariants.
    pub fn mul(&self, other: &Covariant) -> Result<Covariant> {
        self.transvect(other, 0)
    }

    pub fn scalar_mul(&self, s: &Rat) -> Covariant {
        Covariant {
            source_order: self.source_order,
            degree: self.degree,
            order: self.order,
            coeff_family: self.coeff_family.clone(),
            form: self.form.scalar_mul(s),
        }
    }

    pub fn add(&self, other: &Covariant) -> Result<Covariant> {
        if self.degree != other.degree || self.order != other.order {
            return Err(Error::DegreeMismatch(format!(
                "cannot add covariants of degree-order ({},{}) and ({},{})",
                self.degree, self.order, other.degree, other.order
            )));
        }
        let coeffs = self
            .coeffs()
            .iter()
            .zip(other.coeffs())
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Covariant::from_parts(
            self.source_order,
            self.degree,
            self.order,
            &self.coeff_family,
            self.form.var_family().clone(),
            coeffs,
        )
    }

    pub fn sub(&self, other: &Covariant) -> Result<Covariant> {
        self.add(&other.scalar_mul(&-Rat::from_integer(1.into())))
    }

    /// Exact proportionality scalar `c` with `self = c * other`.
    pub fn proportionality(&self, other: &Covariant) -> Option<Rat> {
        if self.order != other.order {
            return None;
        }
        self.form.proportionality(&other.form)
    }

    /// Verifies the Γ-annihilation conditions on the bihomogeneous form.
    /// Returns the name of the first failing operator, if any.
    pub fn verify(&self) -> Result<std::result::Result<(), &'static str>> {
        let p = self.to_poly();
        if p.is_zero() {
            return Ok(Ok(()));
        }
        let vf = self.form.var_family().clone();
        for (op, name) in [
            (CayleyOp::GammaMinus, "gamma_minus"),
            (CayleyOp::GammaPlus, "gamma_plus"),
            (CayleyOp::GammaZero, "gamma_zero"),
        ] {
            let img = cayley_operator(op, &p, &self.coeff_family, &vf)?;
            if !img.is_zero() {
                return Ok(Err(name));
            }
        }
        Ok(Ok(()))
    }

    /// Specializes the coefficient variables to the Cayley coefficients
    /// of a concrete form of the same order.
    pub fn evaluate(&self, f: &BinaryForm) -> Result<BinaryForm> {
        if f.order() != self.source_order {
            return Err(Error::OrderMismatch(format!(
                "covariant of {}-ics evaluated at an order-{} form",
                self.source_order,
                f.order()
            )));
        }
        let target = f.coeff_ctx().clone();
        let fam = &self.coeff_family;
        let mut out_coeffs = Vec::with_capacity(self.order + 1);
        for phi in self.coeffs() {
            // all phi variables are in the coefficient family
            let src_ctx = phi.context().clone();
            let fi = src_ctx.family_index(fam).unwrap();
            let range = src_ctx.family_range(fi);
            let bindings: Vec<(usize, MultiPoly)> = range
                .clone()
                .map(|v| (v, f.coeffs()[v - range.start].clone()))
                .collect();
            out_coeffs.push(phi.substitute(&target, &bindings)?);
        }
        BinaryForm::new(self.order, self.form.var_family().clone(), out_coeffs)
    }
}

/// Rebuilds a covariant from its source: φ_k = ((q-k)!/q!) E+^k φ_0.
///
/// The source must be homogeneous, isobaric, annihilated by E-, and of
/// nonnegative implied order q = dm − 2w; E+^{q+1} φ_0 = 0 is verified.
pub fn covariant_from_source(phi0: &MultiPoly, d: usize, var_family: VarFamily) -> Result<Covariant> {
    let ctx = phi0.context();
    let fam = ctx
        .families()
        .iter()
        .find(|f| f.len() == d + 1)
        .ok_or_else(|| {
            Error::InvalidArgument("source context lacks a coefficient family of size d+1".into())
        })?
        .name
        .clone();
    if phi0.is_zero() {
        return Err(Error::InvalidArgument(
            "the zero polynomial has no intrinsic degree; build the zero covariant directly".into(),
        ));
    }
    let m = phi0
        .degree_in_family(&fam)?
        .ok_or_else(|| Error::DegreeMismatch("source is not homogeneous".into()))?;
    let w = phi0
        .isobaric_weight(&fam)?
        .ok_or_else(|| Error::DegreeMismatch("source is not isobaric".into()))?;
    if !e_minus(phi0, &fam)?.is_zero() {
        return Err(Error::NotASource);
    }
    if d * m < 2 * w {
        return Err(Error::DegreeMismatch(format!(
            "implied order dm-2w = {}·{}-2·{} is negative",
            d, m, w
        )));
    }
    let q = d * m - 2 * w;
    let mut coeffs = Vec::with_capacity(q + 1);
    let mut cur = phi0.clone();
    coeffs.push(cur.clone());
    for k in 1..=q {
        cur = crate::cayley::e_plus(&cur, &fam)?;
        let pref = Rat::new(factorial(q - k), factorial(q));
        coeffs.push(cur.scalar_mul(&pref));
    }
    // E+^{q+1} must annihilate the source
    let top = e_plus_pow(phi0, &fam, q + 1)?;
    if !top.is_zero() {
        return Err(Error::NotASource);
    }
    Covariant::from_parts(d, m, q, &fam, var_family, coeffs)
}

/// π(n, k, l): partitions of n into at most k parts, each at most l.
pub fn partition_count(n: i64, k: usize, l: usize) -> u128 {
    if n < 0 {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    static MEMO: OnceLock<Mutex<BTreeMap<(i64, usize, usize), u128>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(&v) = memo.lock().unwrap().get(&(n, k, l)) {
        return v;
    }
    let v = if k == 0 || l == 0 {
        0
    } else {
        // either no part equals l, or remove one part equal to l
        partition_count(n, k, l - 1) + partition_count(n - l as i64, k - 1, l)
    };
    memo.lock().unwrap().insert((n, k, l), v);
    v
}

/// Cayley–Sylvester dimension of the space of covariants of degree m and
/// order q for binary d-ics:
/// ζ(d,m,q) = π((dm−q)/2, d, m) − π((dm−q−2)/2, d, m).
pub fn zeta(d: usize, m: usize, q: usize) -> u128 {
    let dm = (d * m) as i64;
    let q = q as i64;
    if dm < q || (dm - q) % 2 != 0 {
        return 0;
    }
    let w = (dm - q) / 2;
    partition_count(w, d, m) - partition_count(w - 1, d, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::xvars;
    use crate::parse::parse_poly;
    use crate::rat::rat_int;

    fn actx(d: usize) -> Context {
        Context::new(vec![VarFamily::flat("a", 0, d + 1)]).unwrap()
    }

    #[test]
    fn test_partition_counts() {
        assert_eq!(partition_count(6, 6, 3), 7);
        assert_eq!(partition_count(5, 6, 3), 5);
        assert_eq!(partition_count(0, 4, 4), 1);
        assert_eq!(partition_count(-1, 4, 4), 0);
    }

    #[test]
    fn test_zeta_values() {
        assert_eq!(zeta(6, 3, 6), 2);
        assert_eq!(zeta(15, 6, 78), 4);
        for d in 1..=10 {
            assert_eq!(zeta(d, 1, d), 1, "F spans the degree-1 covariants, d={d}");
        }
        // parity obstruction
        assert_eq!(zeta(3, 2, 5), 0);
    }

    #[test]
    fn test_generic_covariant_verifies() {
        for d in 1..=5 {
            let f = Covariant::generic(d, "a", xvars());
            assert_eq!(f.verify().unwrap(), Ok(()));
            assert_eq!(f.weight(), 0);
        }
    }

    #[test]
    fn test_perturbed_form_fails_gamma_minus() {
        // double the a0 coefficient of the generic quadratic
        let ctx = actx(2);
        let coeffs = vec![
            MultiPoly::var(&ctx, 0).scalar_mul(&rat_int(2)),
            MultiPoly::var(&ctx, 1),
            MultiPoly::var(&ctx, 2),
        ];
        let bad = Covariant::from_parts(2, 1, 2, "a", xvars(), coeffs).unwrap();
        assert_eq!(bad.verify().unwrap(), Err("gamma_minus"));
    }

    #[test]
    fn test_order_zero_invariant_from_source() {
        // d=2: a0 a2 - a1^2 is the discriminant, an order-0 covariant
        let ctx = actx(2);
        let phi0 = parse_poly("a0*a2 - a1^2", &ctx).unwrap();
        let cov = covariant_from_source(&phi0, 2, xvars()).unwrap();
        assert_eq!(cov.order(), 0);
        assert_eq!(cov.degree(), 2);
        assert_eq!(cov.verify().unwrap(), Ok(()));
        assert_eq!(cov.source(), &phi0);
    }

    #[test]
    fn test_not_a_source_rejected() {
        let ctx = actx(2);
        let bad = parse_poly("a1", &ctx).unwrap();
        assert!(matches!(
            covariant_from_source(&bad, 2, xvars()),
            Err(Error::NotASource)
        ));
    }

    #[test]
    fn test_worked_expansion_d6() {
        // Φ = (F,(F,F)_2)_1 for d=6: the four leading printed coefficients
        let f = Covariant::generic(6, "a", xvars());
        let h = f.transvect(&f, 2).unwrap();
        let phi = f.transvect(&h, 1).unwrap();
        assert_eq!(phi.degree(), 3);
        assert_eq!(phi.order(), 12);
        assert_eq!(phi.weight(), 3);
        assert_eq!(phi.verify().unwrap(), Ok(()));
        let ctx = phi.source().context().clone();
        let expect = [
            "a0^2*a3 + 2*a1^3 - 3*a0*a1*a2",
            "12*a1^2*a2 - 15*a0*a2^2 + 3*a0^2*a4",
            "15*a1*a2^2 + 3*a0^2*a5 + 18*a0*a1*a4 + 24*a1^2*a3 - 60*a0*a2*a3",
            "25*a2^3 + 60*a1^2*a4 - 80*a0*a3^2 + a0^2*a6 - 30*a4*a0*a2 + 24*a1*a0*a5",
        ];
        for (k, text) in expect.iter().enumerate() {
            let want = parse_poly(text, &ctx).unwrap();
            // printed coefficient of x1^{12-k} x2^k is C(12,k) φ_k
            let got = phi.coeffs()[k]
                .scalar_mul(&Rat::from_integer(crate::rat::binomial(12, k)));
            assert_eq!(got, want, "coefficient of x1^{}x2^{}", 12 - k, k);
        }
    }

    #[test]
    fn test_source_roundtrip_via_transvectant() {
        // reconstructing from the source of (F,F)_2 returns (F,F)_2, d ≤ 6
        for d in 2..=6 {
            let f = Covariant::generic(d, "a", xvars());
            let h = f.transvect(&f, 2).unwrap();
            if h.is_zero() {
                continue;
            }
            let rebuilt = covariant_from_source(h.source(), d, xvars()).unwrap();
            assert_eq!(rebuilt, h, "d={d}");
        }
    }

    #[test]
    fn test_evaluate_covariant() {
        // Hessian covariant on x1^d gives 0
        let d = 4;
        let f = Covariant::generic(d, "a", xvars());
        let h = f.transvect(&f, 2).unwrap();
        let power = BinaryForm::monomial_form(d, 0, xvars());
        let at = h.evaluate(&power).unwrap();
        assert!(at.is_zero());
        // order mismatch rejected
        let wrong = BinaryForm::monomial_form(2, 0, xvars());
        assert!(h.evaluate(&wrong).is_err());
    }
}
