//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are keyed by exponent vectors over the owning [`Context`] and
//! ordered graded-lexicographically, which fixes a canonical printing
//! order. No zero coefficient is ever stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, Rat};
use crate::vars::Context;

/// Exponent vector with graded-lexicographic ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}
impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    ctx: Context,
    terms: BTreeMap<Mono, Rat>,
}

impl MultiPoly {
    // ---- Constructors ----

    pub fn zero(ctx: &Context) -> MultiPoly {
        MultiPoly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Context, c: Rat) -> MultiPoly {
        let mut p = MultiPoly::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Mono(vec![0; ctx.n_vars()]), c);
        }
        p
    }

    pub fn one(ctx: &Context) -> MultiPoly {
        MultiPoly::constant(ctx, Rat::one())
    }

    /// The variable with global index `v`.
    pub fn var(ctx: &Context, v: usize) -> MultiPoly {
        assert!(v < ctx.n_vars(), "variable index out of range");
        let mut exps = vec![0u16; ctx.n_vars()];
        exps[v] = 1;
        let mut p = MultiPoly::zero(ctx);
        p.terms.insert(Mono(exps), Rat::one());
        p
    }

    /// Single term `c * x^mono`.
    pub fn monomial(ctx: &Context, mono: Mono, c: Rat) -> MultiPoly {
        assert_eq!(mono.0.len(), ctx.n_vars(), "exponent length mismatch");
        let mut p = MultiPoly::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    // ---- Queries ----

    pub fn context(&self) -> &Context {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, mono: &Mono) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant value, if the polynomial has no variables in support.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.total_degree() == 0 {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn insert_term(&mut self, mono: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_ctx(&self, other: &MultiPoly) {
        assert!(
            self.ctx == other.ctx,
            "context mismatch: combine polynomials via Context::union and extend_to"
        );
    }

    // ---- Arithmetic ----

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_ctx(other);
        let mut out = MultiPoly::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scalar_mul(&self, s: &Rat) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        let mut out = MultiPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * s);
        }
        out
    }

    pub fn pow(&self, e: usize) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ctx);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    // Checked variants for callers that cannot guarantee matching contexts.

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other)?;
        Ok(self.mul(other))
    }

    fn check_ctx(&self, other: &MultiPoly) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(
                "operands live in different contexts".into(),
            ));
        }
        Ok(())
    }

    /// Embeds the polynomial into a superset context.
    pub fn extend_to(&self, target: &Context) -> Result<MultiPoly> {
        if self.ctx == *target {
            return Ok(self.clone());
        }
        if !target.contains(&self.ctx) {
            return Err(Error::ContextMismatch(
                "target context does not contain the source context".into(),
            ));
        }
        // map of family ranges source -> target
        let mut map = Vec::with_capacity(self.ctx.n_vars());
        for (fi, fam) in self.ctx.families().iter().enumerate() {
            let src = self.ctx.family_range(fi);
            let ti = target.family_index(&fam.name).unwrap();
            let dst = target.family_range(ti);
            for k in 0..src.len() {
                map.push(dst.start + k);
            }
        }
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.n_vars()];
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] = e;
            }
            out.terms.insert(Mono(exps), c.clone());
        }
        Ok(out)
    }

    // ---- Calculus ----

    /// Exact partial derivative with respect to global variable `v`.
    pub fn diff(&self, v: usize) -> MultiPoly {
        assert!(v < self.ctx.n_vars());
        let mut out = MultiPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.0[v];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[v] = e - 1;
            out.insert_term(Mono(exps), c * Rat::from_integer(e.into()));
        }
        out
    }

    /// Derivative by a textual variable label; errors on unknown names.
    pub fn diff_named(&self, label: &str) -> Result<MultiPoly> {
        Ok(self.diff(self.ctx.resolve_label(label)?))
    }

    /// Simultaneous substitution. Every key must be a variable of this
    /// polynomial's context; every replacement must live in `target`;
    /// unbound variables must exist in `target` under the same family
    /// name and logical position.
    pub fn substitute(&self, target: &Context, bindings: &[(usize, MultiPoly)]) -> Result<MultiPoly> {
        let n = self.ctx.n_vars();
        let mut bound: Vec<Option<&MultiPoly>> = vec![None; n];
        for (v, p) in bindings {
            if *v >= n {
                return Err(Error::UnknownVariable(format!("#{v}")));
            }
            if p.context() != target {
                return Err(Error::ContextMismatch(
                    "replacement polynomial not in the target context".into(),
                ));
            }
            bound[*v] = Some(p);
        }
        // unbound variables that actually occur map by label
        let mut passthrough: Vec<Option<usize>> = vec![None; n];
        let mut pow_cache: BTreeMap<(usize, u16), MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match bound[v] {
                    Some(p) => {
                        let pe = pow_cache
                            .entry((v, e))
                            .or_insert_with(|| p.pow(e as usize))
                            .clone();
                        term = term.mul(&pe);
                    }
                    None => {
                        if passthrough[v].is_none() {
                            let label = self.ctx.var_label(v);
                            passthrough[v] = Some(target.resolve_label(&label)?);
                        }
                        let tv = passthrough[v].unwrap();
                        let mut exps = vec![0u16; target.n_vars()];
                        exps[tv] = e;
                        term = term.mul(&MultiPoly::monomial(target, Mono(exps), Rat::one()));
                    }
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Renames variables within the same context by a global-index map
    /// (entries not present are kept). The map must be injective on the
    /// support of the polynomial.
    pub fn rename_vars(&self, map: &BTreeMap<usize, usize>) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; self.ctx.n_vars()];
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let t = map.get(&v).copied().unwrap_or(v);
                    exps[t] = exps[t].checked_add(e).expect("rename collision");
                }
            }
            out.insert_term(Mono(exps), c.clone());
        }
        out
    }

    // ---- Structure queries ----

    /// Splits into (family exponent pattern, remainder polynomial) pairs,
    /// with remainders living in the context without the named family.
    pub fn split_by_family(&self, name: &str) -> Result<Vec<(Vec<u16>, MultiPoly)>> {
        let fi = self
            .ctx
            .family_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let range = self.ctx.family_range(fi);
        let sub = self.ctx.without_family(name)?;
        let mut buckets: BTreeMap<Vec<u16>, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let pat: Vec<u16> = m.0[range.clone()].to_vec();
            let rest: Vec<u16> = m.0[..range.start]
                .iter()
                .chain(&m.0[range.end..])
                .copied()
                .collect();
            buckets
                .entry(pat)
                .or_insert_with(|| MultiPoly::zero(&sub))
                .insert_term(Mono(rest), c.clone());
        }
        Ok(buckets.into_iter().collect())
    }

    /// Coefficient of the exact family exponent pattern, expressed in the
    /// remaining context.
    pub fn coeff_of(&self, name: &str, pattern: &[u16]) -> Result<MultiPoly> {
        let fi = self
            .ctx
            .family_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let range = self.ctx.family_range(fi);
        if pattern.len() != range.len() {
            return Err(Error::InvalidArgument(format!(
                "pattern length {} does not match family `{name}` of size {}",
                pattern.len(),
                range.len()
            )));
        }
        let sub = self.ctx.without_family(name)?;
        let mut out = MultiPoly::zero(&sub);
        for (m, c) in &self.terms {
            if m.0[range.clone()] != *pattern {
                continue;
            }
            let rest: Vec<u16> = m.0[..range.start]
                .iter()
                .chain(&m.0[range.end..])
                .copied()
                .collect();
            out.insert_term(Mono(rest), c.clone());
        }
        Ok(out)
    }

    /// Degree in the named family if homogeneous in it, else `None`.
    /// The zero polynomial reports `Some(deg)` for any requested check,
    /// so callers treat it separately.
    pub fn degree_in_family(&self, name: &str) -> Result<Option<usize>> {
        let fi = self
            .ctx
            .family_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let range = self.ctx.family_range(fi);
        let mut deg: Option<usize> = None;
        for m in self.terms.keys() {
            let d: usize = m.0[range.clone()].iter().map(|&e| e as usize).sum();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return Ok(None),
                _ => {}
            }
        }
        Ok(Some(deg.unwrap_or(0)))
    }

    /// Isobaric weight with respect to a flat family whose logical indices
    /// serve as weights (`a_i` has weight `i`). Returns `None` if mixed.
    pub fn isobaric_weight(&self, name: &str) -> Result<Option<usize>> {
        let fam = self
            .ctx
            .family(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?
            .clone();
        let start = match fam.shape {
            crate::vars::Shape::Flat { start, .. } => start,
            _ => {
                return Err(Error::InvalidArgument(
                    "isobaric weight is defined for flat families".into(),
                ))
            }
        };
        let fi = self.ctx.family_index(name).unwrap();
        let range = self.ctx.family_range(fi);
        let mut wt: Option<usize> = None;
        for m in self.terms.keys() {
            let w: usize = m.0[range.clone()]
                .iter()
                .enumerate()
                .map(|(k, &e)| (start + k) * e as usize)
                .sum();
            match wt {
                None => wt = Some(w),
                Some(prev) if prev != w => return Ok(None),
                _ => {}
            }
        }
        Ok(wt.or(Some(0)))
    }

    /// Specializes a whole flat family to rational values, returning a
    /// polynomial in the context without that family.
    pub fn specialize_family(&self, name: &str, values: &[Rat]) -> Result<MultiPoly> {
        let fi = self
            .ctx
            .family_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let range = self.ctx.family_range(fi);
        if values.len() != range.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} values for family `{name}`",
                range.len()
            )));
        }
        let sub = self.ctx.without_family(name)?;
        let mut out = MultiPoly::zero(&sub);
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            for (k, &e) in m.0[range.clone()].iter().enumerate() {
                for _ in 0..e {
                    coef *= values[k].clone();
                }
                if coef.is_zero() {
                    break;
                }
            }
            if coef.is_zero() {
                continue;
            }
            let rest: Vec<u16> = m.0[..range.start]
                .iter()
                .chain(&m.0[range.end..])
                .copied()
                .collect();
            out.insert_term(Mono(rest), coef);
        }
        Ok(out)
    }

    /// Exact proportionality: returns `c` with `self = c * other` when it
    /// exists. Both zero gives `Some(1)`.
    pub fn proportionality(&self, other: &MultiPoly) -> Option<Rat> {
        if self.ctx != other.ctx {
            return None;
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Some(Rat::one()),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        let (lm, lc) = other.leading().unwrap();
        let mine = self.terms.get(lm)?;
        let c = mine / lc;
        if *self == other.scalar_mul(&c) {
            Some(c)
        } else {
            None
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.total_degree() == 0 {
                factors.push(format_rat(&abs));
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.ctx.var_label(v);
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use crate::vars::VarFamily;

    fn xctx() -> Context {
        Context::new(vec![VarFamily::flat("x", 1, 2)]).unwrap()
    }

    fn x(ctx: &Context, i: usize) -> MultiPoly {
        MultiPoly::var(ctx, ctx.flat_var("x", i).unwrap())
    }

    #[test]
    fn test_binomial_square() {
        let ctx = xctx();
        let s = x(&ctx, 1).add(&x(&ctx, 2));
        let sq = s.pow(2);
        // x1^2 + 2 x1 x2 + x2^2
        assert_eq!(sq.n_terms(), 3);
        assert_eq!(sq.coefficient(&Mono(vec![1, 1])), rat_int(2));
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn test_cancellation_to_zero() {
        let ctx = xctx();
        let p = x(&ctx, 1).mul(&x(&ctx, 2)).scalar_mul(&rat(3, 7));
        assert!(p.add(&p.neg()).is_zero());
    }

    #[test]
    fn test_difference_of_squares() {
        let ctx = Context::new(vec![VarFamily::flat("a", 0, 2), VarFamily::flat("x", 1, 2)])
            .unwrap();
        let a0 = MultiPoly::var(&ctx, 0);
        let a1 = MultiPoly::var(&ctx, 1);
        let x1 = MultiPoly::var(&ctx, 2);
        let x2 = MultiPoly::var(&ctx, 3);
        let p = a0.mul(&x1).add(&a1.mul(&x2));
        let q = a0.mul(&x1).sub(&a1.mul(&x2));
        let prod = p.mul(&q);
        let expect = a0.pow(2).mul(&x1.pow(2)).sub(&a1.pow(2).mul(&x2.pow(2)));
        assert_eq!(prod, expect);
    }

    #[test]
    fn test_diff() {
        let ctx = xctx();
        let p = x(&ctx, 1).pow(3);
        assert_eq!(p.diff_named("x1").unwrap(), x(&ctx, 1).pow(2).scalar_mul(&rat_int(3)));
        assert!(p.diff_named("x2").unwrap().is_zero());
        assert!(p.diff_named("q1").is_err());
    }

    #[test]
    fn test_substitute_expand() {
        // x1^2 with x1 -> l1*p1 + l2*q1
        let src = xctx();
        let tgt = Context::new(vec![
            VarFamily::flat("lam", 1, 2),
            VarFamily::flat("p", 1, 1),
            VarFamily::flat("q", 1, 1),
        ])
        .unwrap();
        let l1 = MultiPoly::var(&tgt, 0);
        let l2 = MultiPoly::var(&tgt, 1);
        let p1 = MultiPoly::var(&tgt, 2);
        let q1 = MultiPoly::var(&tgt, 3);
        let repl = l1.mul(&p1).add(&l2.mul(&q1));
        let p = x(&src, 1).pow(2);
        let v = src.flat_var("x", 1).unwrap();
        let out = p.substitute(&tgt, &[(v, repl.clone())]).unwrap();
        assert_eq!(out, repl.pow(2));
    }

    #[test]
    fn test_substitute_identity() {
        let ctx = xctx();
        let p = x(&ctx, 1).pow(2).add(&x(&ctx, 2).scalar_mul(&rat(5, 3)));
        let id = p
            .substitute(&ctx, &[(0, x(&ctx, 1)), (1, x(&ctx, 2))])
            .unwrap();
        assert_eq!(id, p);
        // unbound passthrough also works
        let id2 = p.substitute(&ctx, &[]).unwrap();
        assert_eq!(id2, p);
    }

    #[test]
    fn test_diff_substitute_commute() {
        // d/dx of P with y-only substitution equals (dP/dx) substituted
        let ctx = Context::new(vec![VarFamily::flat("x", 1, 1), VarFamily::flat("y", 1, 1)])
            .unwrap();
        let xv = MultiPoly::var(&ctx, 0);
        let yv = MultiPoly::var(&ctx, 1);
        let p = xv.pow(3).mul(&yv.pow(2)).add(&xv.mul(&yv));
        let repl = yv.pow(2).add(&MultiPoly::one(&ctx));
        let lhs = p.substitute(&ctx, &[(1, repl.clone())]).unwrap().diff(0);
        let rhs = p.diff(0).substitute(&ctx, &[(1, repl)]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn test_coeff_of_and_split() {
        // a0 x1^2 + 2 a1 x1 x2 + a2 x2^2
        let ctx = Context::new(vec![VarFamily::flat("a", 0, 3), VarFamily::flat("x", 1, 2)])
            .unwrap();
        let mut p = MultiPoly::zero(&ctx);
        for (i, coef) in [(0usize, 1i64), (1, 2), (2, 1)] {
            let mut exps = vec![0u16; 5];
            exps[i] = 1;
            exps[3] = (2 - i) as u16;
            exps[4] = i as u16;
            p = p.add(&MultiPoly::monomial(&ctx, Mono(exps), rat_int(coef)));
        }
        let c20 = p.coeff_of("x", &[2, 0]).unwrap();
        assert_eq!(c20.to_string(), "a0");
        let c11 = p.coeff_of("x", &[1, 1]).unwrap();
        assert_eq!(c11.to_string(), "2*a1");
        assert_eq!(p.split_by_family("x").unwrap().len(), 3);
        assert!(p.coeff_of("x", &[1]).is_err());
    }

    #[test]
    fn test_homogeneity_and_weight() {
        let ctx = Context::new(vec![VarFamily::flat("a", 0, 4)]).unwrap();
        // a0 a2 - a1^2 : degree 2, weight 2
        let a = |i: usize| MultiPoly::var(&ctx, i);
        let p = a(0).mul(&a(2)).sub(&a(1).pow(2));
        assert_eq!(p.degree_in_family("a").unwrap(), Some(2));
        assert_eq!(p.isobaric_weight("a").unwrap(), Some(2));
        let mixed = p.add(&a(3));
        assert_eq!(mixed.degree_in_family("a").unwrap(), None);
    }

    #[test]
    fn test_display_canonical_order() {
        let ctx = Context::new(vec![VarFamily::flat("a", 0, 4)]).unwrap();
        let a = |i: usize| MultiPoly::var(&ctx, i);
        let p = a(1)
            .pow(3)
            .scalar_mul(&rat_int(2))
            .add(&a(0).pow(2).mul(&a(3)))
            .sub(&a(0).mul(&a(1)).mul(&a(2)).scalar_mul(&rat_int(3)));
        assert_eq!(p.to_string(), "a0^2*a3 - 3*a0*a1*a2 + 2*a1^3");
    }

    #[test]
    fn test_try_ops_context_mismatch() {
        let c1 = xctx();
        let c2 = Context::new(vec![VarFamily::flat("y", 1, 2)]).unwrap();
        let p = MultiPoly::one(&c1);
        let q = MultiPoly::one(&c2);
        assert!(p.try_add(&q).is_err());
        assert!(p.try_mul(&q).is_err());
        let u = c1.union(&c2).unwrap();
        let pe = p.extend_to(&u).unwrap();
        let qe = q.extend_to(&u).unwrap();
        assert!(pe.try_add(&qe).is_ok());
    }

    #[test]
    fn test_proportionality() {
        let ctx = xctx();
        let p = x(&ctx, 1).pow(2).add(&x(&ctx, 2).pow(2));
        let q = p.scalar_mul(&rat(-7, 3));
        assert_eq!(q.proportionality(&p), Some(rat(-7, 3)));
        let r = p.add(&x(&ctx, 1).mul(&x(&ctx, 2)));
        assert_eq!(r.proportionality(&p), None);
    }
}
