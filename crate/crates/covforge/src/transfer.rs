//! The Clebsch transfer: n-ary forms, restriction to symbolic lines, the
//! transferred vanishing test, a parser and umbral evaluator for
//! bracket-monomial concomitants, and the plane-quartic bitangent system.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::binary::BinaryForm;
use crate::error::{Error, Result};
use crate::goettingen::goettingen_on_form;
use crate::matrix::{poly_det, rank_exact_int};
use crate::poly::{Mono, MultiPoly};
use crate::rat::{multinomial, Rat};
use crate::vars::{Context, VarFamily};

/// The λ variable pair used for line restrictions.
pub fn lam_vars() -> VarFamily {
    VarFamily::flat("lam", 1, 2)
}

/// An order-d form in n variables, multinomial convention:
/// Γ = Σ_{|I|=d} C(d; I) a_I x^I. Coefficients may be symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct NaryForm {
    n: usize,
    order: usize,
    ctx: Context,
    coeffs: BTreeMap<Vec<u16>, MultiPoly>,
}

impl NaryForm {
    pub fn new(n: usize, order: usize, coeffs: BTreeMap<Vec<u16>, MultiPoly>) -> Result<NaryForm> {
        if n < 2 {
            return Err(Error::InvalidArgument("n-ary forms need n ≥ 2".into()));
        }
        let ctx = coeffs
            .values()
            .next()
            .map(|c| c.context().clone())
            .unwrap_or_else(Context::empty);
        for (idx, c) in &coeffs {
            if idx.len() != n || idx.iter().map(|&e| e as usize).sum::<usize>() != order {
                return Err(Error::InvalidArgument(format!(
                    "multi-index {idx:?} does not have length {n} and total {order}"
                )));
            }
            if *c.context() != ctx {
                return Err(Error::ContextMismatch(
                    "n-ary coefficients live in different contexts".into(),
                ));
            }
        }
        Ok(NaryForm {
            n,
            order,
            ctx,
            coeffs,
        })
    }

    /// Builds from rational coefficients keyed by multi-index.
    pub fn from_rationals(
        n: usize,
        order: usize,
        entries: Vec<(Vec<u16>, Rat)>,
    ) -> Result<NaryForm> {
        let ctx = Context::empty();
        let mut coeffs = BTreeMap::new();
        for (idx, v) in entries {
            if !v.is_zero() {
                coeffs.insert(idx, MultiPoly::constant(&ctx, v));
            }
        }
        NaryForm::new(n, order, coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn symbol_ctx(&self) -> &Context {
        &self.ctx
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u16>, MultiPoly> {
        &self.coeffs
    }

    /// Coefficient a_I (zero when absent).
    pub fn coeff(&self, idx: &[u16]) -> MultiPoly {
        self.coeffs
            .get(idx)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(&self.ctx))
    }

    /// The polynomial Σ C(d;I) a_I x^I in the context Γ-symbols ∪ x(1..n).
    pub fn to_poly(&self) -> Result<MultiPoly> {
        let xfam = VarFamily::flat("x", 1, self.n);
        let ctx = self.ctx.with_family(xfam)?;
        let xoff = ctx.family_range(ctx.family_index("x").unwrap()).start;
        let mut out = MultiPoly::zero(&ctx);
        for (idx, c) in &self.coeffs {
            let mut exps = vec![0u16; ctx.n_vars()];
            for (i, &e) in idx.iter().enumerate() {
                exps[xoff + i] = e;
            }
            let parts: Vec<usize> = idx.iter().map(|&e| e as usize).collect();
            let mono = MultiPoly::monomial(
                &ctx,
                Mono(exps),
                Rat::from_integer(multinomial(&parts)),
            );
            out = out.add(&mono.mul(&c.extend_to(&ctx)?));
        }
        Ok(out)
    }

    /// The square Γ = Q² of an n-ary form, with multinomial bookkeeping.
    pub fn square(&self) -> Result<NaryForm> {
        let p = self.to_poly()?.pow(2);
        NaryForm::from_poly(&p, self.n, 2 * self.order, &self.ctx)
    }

    /// Reads a form back from its polynomial expansion in x1..xn.
    pub fn from_poly(p: &MultiPoly, n: usize, order: usize, sym_ctx: &Context) -> Result<NaryForm> {
        let mut coeffs = BTreeMap::new();
        for (idx, poly) in p.split_by_family("x")? {
            let total: usize = idx.iter().map(|&e| e as usize).sum();
            if poly.is_zero() {
                continue;
            }
            if total != order {
                return Err(Error::OrderMismatch(format!(
                    "polynomial is not homogeneous of order {order}"
                )));
            }
            let parts: Vec<usize> = idx.iter().map(|&e| e as usize).collect();
            let scaled = poly
                .extend_to(sym_ctx)?
                .scalar_mul(&(Rat::one() / Rat::from_integer(multinomial(&parts))));
            coeffs.insert(idx, scaled);
        }
        NaryForm::new(n, order, coeffs)
    }
}

/// Restriction of Γ to the symbolic line x_i = λ1 p_i + λ2 q_i: an
/// order-d binary form in λ whose Cayley coefficients are bihomogeneous
/// in the p and q families (p-degree d-k, q-degree k at λ1^{d-k} λ2^k).
pub fn restrict_to_line(gamma: &NaryForm) -> Result<BinaryForm> {
    let n = gamma.n();
    let pfam = VarFamily::flat("p", 1, n);
    let qfam = VarFamily::flat("q", 1, n);
    let coeff_ctx = gamma.symbol_ctx().with_family(pfam)?.with_family(qfam)?;
    restrict_with(gamma, &coeff_ctx, |ctx, i| {
        Ok((
            MultiPoly::var(ctx, ctx.flat_var("p", i + 1)?),
            MultiPoly::var(ctx, ctx.flat_var("q", i + 1)?),
        ))
    })
}

/// Shared restriction machinery: substitutes x_i = λ1 P_i + λ2 Q_i for
/// caller-supplied point polynomials P_i, Q_i in `coeff_ctx`.
fn restrict_with(
    gamma: &NaryForm,
    coeff_ctx: &Context,
    point: impl Fn(&Context, usize) -> Result<(MultiPoly, MultiPoly)>,
) -> Result<BinaryForm> {
    let n = gamma.n();
    let d = gamma.order();
    let full = coeff_ctx.with_family(lam_vars())?;
    let l1 = MultiPoly::var(&full, full.flat_var("lam", 1)?);
    let l2 = MultiPoly::var(&full, full.flat_var("lam", 2)?);
    // cached powers of each linear factor λ1 P_i + λ2 Q_i
    let mut powers: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        let (pi, qi) = point(coeff_ctx, i)?;
        let lin = l1
            .mul(&pi.extend_to(&full)?)
            .add(&l2.mul(&qi.extend_to(&full)?));
        let mut pw = vec![MultiPoly::one(&full)];
        for e in 1..=d {
            pw.push(pw[e - 1].mul(&lin));
        }
        powers.push(pw);
    }
    let mut acc = MultiPoly::zero(&full);
    for (idx, c) in gamma.coeffs() {
        let parts: Vec<usize> = idx.iter().map(|&e| e as usize).collect();
        let mut term = c
            .extend_to(&full)?
            .scalar_mul(&Rat::from_integer(multinomial(&parts)));
        for (i, &e) in idx.iter().enumerate() {
            if e > 0 {
                term = term.mul(&powers[i][e as usize]);
            }
        }
        acc = acc.add(&term);
    }
    BinaryForm::from_poly(&acc, d, &lam_vars(), coeff_ctx)
}

/// The transferred vanishing test: evaluates the determinant construction
/// on the symbolic line restriction and reports whether the result is the
/// zero polynomial in λ, p, q jointly.
pub fn transfer_vanishing_test(gamma: &NaryForm, r: usize) -> Result<bool> {
    if gamma.order() < 2 {
        return Err(Error::InvalidArgument("transfer test needs d ≥ 2".into()));
    }
    let theta = restrict_to_line(gamma)?;
    Ok(goettingen_on_form(&theta, r)?.is_zero())
}

// ---- bracket expressions and umbral evaluation ----

#[derive(Clone, Debug, PartialEq)]
pub enum BracketFactor {
    /// (l1 l2 ... ln): full determinant of letter rows
    Bracket(Vec<String>),
    /// (l1 ... l_{n-1} u): letters then the line row
    BracketU(Vec<String>),
    /// l_x: pairing of a letter with the point variables
    PairX(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BracketExpr {
    pub factors: Vec<(BracketFactor, usize)>,
    pub letters: Vec<String>,
}

impl BracketExpr {
    /// Total degree of each letter across all factors.
    pub fn letter_degrees(&self) -> BTreeMap<String, usize> {
        let mut deg: BTreeMap<String, usize> = BTreeMap::new();
        for (f, pow) in &self.factors {
            match f {
                BracketFactor::Bracket(ls) | BracketFactor::BracketU(ls) => {
                    for l in ls {
                        *deg.entry(l.clone()).or_default() += pow;
                    }
                }
                BracketFactor::PairX(l) => *deg.entry(l.clone()).or_default() += pow,
            }
        }
        deg
    }

    /// The variable count implied by bracket arities, when any bracket is
    /// present.
    pub fn implied_arity(&self) -> Option<usize> {
        for (f, _) in &self.factors {
            match f {
                BracketFactor::Bracket(ls) => return Some(ls.len()),
                BracketFactor::BracketU(ls) => return Some(ls.len() + 1),
                BracketFactor::PairX(_) => {}
            }
        }
        None
    }
}

/// Parses a bracket-monomial expression such as
/// `(ab u)^2 (ac u) a_x b_x^2 c_x^3` or `(abc)(abu)^2(acu) b_x c_x^2`.
/// Letters are single alphabetic characters; `u` is reserved for the
/// line row and `x` for the point pairing.
pub fn parse_bracket(text: &str) -> Result<BracketExpr> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0usize;
    let mut factors: Vec<(BracketFactor, usize)> = Vec::new();
    let mut letters: Vec<String> = Vec::new();
    let note_letter = |letters: &mut Vec<String>, l: &str| {
        if !letters.iter().any(|k| k == l) {
            letters.push(l.to_string());
        }
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '*' {
            i += 1;
            continue;
        }
        let factor = if c == '(' {
            i += 1;
            let mut ls: Vec<String> = Vec::new();
            let mut saw_u = false;
            while i < chars.len() && chars[i] != ')' {
                let ch = chars[i];
                if ch.is_whitespace() {
                    i += 1;
                    continue;
                }
                if !ch.is_ascii_alphabetic() {
                    return Err(Error::Parse(format!(
                        "unexpected `{ch}` inside a bracket"
                    )));
                }
                if saw_u {
                    return Err(Error::Parse("`u` must be the last bracket entry".into()));
                }
                if ch == 'u' {
                    saw_u = true;
                } else if ch == 'x' {
                    return Err(Error::Parse("`x` cannot appear inside a bracket".into()));
                } else {
                    ls.push(ch.to_string());
                }
                i += 1;
            }
            if i == chars.len() {
                return Err(Error::Parse("unterminated bracket".into()));
            }
            i += 1; // consume ')'
            if ls.is_empty() {
                return Err(Error::Parse("empty bracket".into()));
            }
            {
                let mut seen = std::collections::BTreeSet::new();
                for l in &ls {
                    if !seen.insert(l.clone()) {
                        return Err(Error::Parse(format!(
                            "letter `{l}` repeated inside one bracket"
                        )));
                    }
                }
            }
            for l in &ls {
                note_letter(&mut letters, l);
            }
            if saw_u {
                BracketFactor::BracketU(ls)
            } else {
                BracketFactor::Bracket(ls)
            }
        } else if c.is_ascii_alphabetic() {
            // l_x
            if i + 2 >= chars.len() || chars[i + 1] != '_' || chars[i + 2] != 'x' {
                return Err(Error::Parse(format!(
                    "expected `{c}_x` at position {i}"
                )));
            }
            if c == 'u' || c == 'x' {
                return Err(Error::Parse("`u` and `x` are reserved names".into()));
            }
            let l = c.to_string();
            note_letter(&mut letters, &l);
            i += 3;
            BracketFactor::PairX(l)
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        };
        // optional power
        let mut pow = 1usize;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(Error::Parse("expected an exponent after ^".into()));
            }
            pow = chars[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("exponent overflow".into()))?;
        }
        factors.push((factor, pow));
    }
    if factors.is_empty() {
        return Err(Error::Parse("empty bracket expression".into()));
    }
    // arity consistency among the brackets themselves
    let expr = BracketExpr { factors, letters };
    if let Some(n) = expr.implied_arity() {
        for (f, _) in &expr.factors {
            let ok = match f {
                BracketFactor::Bracket(ls) => ls.len() == n,
                BracketFactor::BracketU(ls) => ls.len() + 1 == n,
                BracketFactor::PairX(_) => true,
            };
            if !ok {
                return Err(Error::Parse(
                    "bracket factors imply inconsistent variable counts".into(),
                ));
            }
        }
    }
    Ok(expr)
}

/// Umbral evaluation: expands the bracket expression as a polynomial in
/// the letter coordinates, then replaces every degree-d monomial in one
/// letter's coordinates by the corresponding coefficient of Γ. The
/// result is a polynomial in the x and u families (and Γ's symbols).
pub fn umbral_evaluate(expr: &BracketExpr, gamma: &NaryForm) -> Result<MultiPoly> {
    let n = gamma.n();
    let d = gamma.order();
    if let Some(arity) = expr.implied_arity() {
        if arity != n {
            return Err(Error::DegreeMismatch(format!(
                "bracket arity {arity} does not match n = {n}"
            )));
        }
    }
    for (l, deg) in expr.letter_degrees() {
        if deg != d {
            return Err(Error::DegreeMismatch(format!(
                "letter `{l}` has total degree {deg}, expected {d}"
            )));
        }
    }
    // context: one flat family per letter, then u and x
    let mut fams: Vec<VarFamily> = expr
        .letters
        .iter()
        .map(|l| VarFamily::flat(l, 1, n))
        .collect();
    fams.push(VarFamily::flat("u", 1, n));
    fams.push(VarFamily::flat("x", 1, n));
    let work = Context::new(fams)?;
    let letter_var = |l: &str, i: usize| -> Result<MultiPoly> {
        Ok(MultiPoly::var(&work, work.flat_var(l, i + 1)?))
    };
    let mut product = MultiPoly::one(&work);
    for (f, pow) in &expr.factors {
        let base = match f {
            BracketFactor::Bracket(ls) => {
                let rows: Vec<Vec<MultiPoly>> = ls
                    .iter()
                    .map(|l| (0..n).map(|i| letter_var(l, i)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                poly_det(&rows)
            }
            BracketFactor::BracketU(ls) => {
                let mut rows: Vec<Vec<MultiPoly>> = ls
                    .iter()
                    .map(|l| (0..n).map(|i| letter_var(l, i)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                rows.push(
                    (0..n)
                        .map(|i| Ok(MultiPoly::var(&work, work.flat_var("u", i + 1)?)))
                        .collect::<Result<Vec<_>>>()?,
                );
                poly_det(&rows)
            }
            BracketFactor::PairX(l) => {
                let mut s = MultiPoly::zero(&work);
                for i in 0..n {
                    s = s.add(&letter_var(l, i)?.mul(&MultiPoly::var(
                        &work,
                        work.flat_var("x", i + 1)?,
                    )));
                }
                s
            }
        };
        product = product.mul(&base.pow(*pow));
    }
    // substitute letter monomials by Γ coefficients
    let out_ctx = gamma
        .symbol_ctx()
        .with_family(VarFamily::flat("u", 1, n))?
        .with_family(VarFamily::flat("x", 1, n))?;
    let uoff = out_ctx.family_range(out_ctx.family_index("u").unwrap()).start;
    let xoff = out_ctx.family_range(out_ctx.family_index("x").unwrap()).start;
    let wu = work.family_range(work.family_index("u").unwrap()).start;
    let wx = work.family_range(work.family_index("x").unwrap()).start;
    let letter_ranges: Vec<std::ops::Range<usize>> = expr
        .letters
        .iter()
        .map(|l| work.family_range(work.family_index(l).unwrap()))
        .collect();
    let mut out = MultiPoly::zero(&out_ctx);
    for (mono, c) in product.terms() {
        let mut coeff_poly = MultiPoly::constant(gamma.symbol_ctx(), c.clone());
        for range in &letter_ranges {
            let idx: Vec<u16> = mono.0[range.clone()].to_vec();
            coeff_poly = coeff_poly.mul(&gamma.coeff(&idx));
            if coeff_poly.is_zero() {
                break;
            }
        }
        if coeff_poly.is_zero() {
            continue;
        }
        let mut exps = vec![0u16; out_ctx.n_vars()];
        for i in 0..n {
            exps[uoff + i] = mono.0[wu + i];
            exps[xoff + i] = mono.0[wx + i];
        }
        let shell = MultiPoly::monomial(&out_ctx, Mono(exps), Rat::one());
        out = out.add(&shell.mul(&coeff_poly.extend_to(&out_ctx)?));
    }
    Ok(out)
}

// ---- the bitangent system ----

/// The three (p, q) specializations through which a line [u1, u2, u3]
/// passes, and the resulting binary sextics: E_i(λ) is the determinant
/// construction evaluated on the restriction of the quartic through the
/// i-th pair. Every λ-coefficient is homogeneous of degree 12 in u.
pub fn bitangent_system(gamma: &NaryForm) -> Result<[BinaryForm; 3]> {
    if gamma.n() != 3 || gamma.order() != 4 {
        return Err(Error::InvalidArgument(
            "the bitangent system needs a ternary quartic".into(),
        ));
    }
    let coeff_ctx = gamma
        .symbol_ctx()
        .with_family(VarFamily::flat("u", 1, 3))?;
    let u = |ctx: &Context, i: usize| MultiPoly::var(ctx, ctx.flat_var("u", i).unwrap());
    // p and q as rows of u-linear coordinates
    let pairs: [([i64; 3], [usize; 3], [i64; 3], [usize; 3]); 3] = [
        // p = [u3, 0, -u1], q = [u2, -u1, 0]
        ([1, 0, -1], [3, 0, 1], [1, -1, 0], [2, 1, 0]),
        // p = [0, u3, -u2], q = [u2, -u1, 0]
        ([0, 1, -1], [0, 3, 2], [1, -1, 0], [2, 1, 0]),
        // p = [0, u3, -u2], q = [u3, 0, -u1]
        ([0, 1, -1], [0, 3, 2], [1, 0, -1], [3, 0, 1]),
    ];
    let mut out = Vec::with_capacity(3);
    for (ps, pi, qs, qi) in pairs {
        let theta = restrict_with(gamma, &coeff_ctx, |ctx, i| {
            let pval = if ps[i] == 0 {
                MultiPoly::zero(ctx)
            } else {
                u(ctx, pi[i]).scalar_mul(&Rat::from_integer(ps[i].into()))
            };
            let qval = if qs[i] == 0 {
                MultiPoly::zero(ctx)
            } else {
                u(ctx, qi[i]).scalar_mul(&Rat::from_integer(qs[i].into()))
            };
            Ok((pval, qval))
        })?;
        out.push(goettingen_on_form(&theta, 2)?);
    }
    Ok(out.try_into().expect("three systems"))
}

// ---- the double-conic ideal piece (heavy, optional) ----

/// Dimension of the degree-3 piece of the ideal of double conics inside
/// the space of ternary quartics: the kernel of the map sending each
/// quartic coefficient symbol to the matching coefficient of Q² for a
/// generic ternary quadratic Q. Exact, blocked by multidegree.
pub fn double_conic_ideal_dim() -> Result<usize> {
    // quartic multi-indices (15) and quadric multi-indices (6)
    let quartic_idx = crate::ideals::monomials_of_degree(3, 4);
    let quad_idx = crate::ideals::monomials_of_degree(3, 2);
    let qctx = Context::new(vec![VarFamily::flat("q", 0, quad_idx.len())])?;
    // c_I(q) = [x^I](Q^2) / C(4; I)
    let mut c: BTreeMap<Vec<u16>, MultiPoly> = BTreeMap::new();
    for (s, ms) in quad_idx.iter().enumerate() {
        for (t, mt) in quad_idx.iter().enumerate() {
            let idx: Vec<u16> = ms.iter().zip(mt).map(|(&a, &b)| a + b).collect();
            let parts_s: Vec<usize> = ms.iter().map(|&e| e as usize).collect();
            let parts_t: Vec<usize> = mt.iter().map(|&e| e as usize).collect();
            let coef = Rat::from_integer(multinomial(&parts_s) * multinomial(&parts_t));
            let mut exps = vec![0u16; quad_idx.len()];
            exps[s] += 1;
            exps[t] += 1;
            let term = MultiPoly::monomial(&qctx, Mono(exps), coef);
            c.entry(idx.clone())
                .and_modify(|p| *p = p.add(&term))
                .or_insert(term);
        }
    }
    for (idx, p) in c.iter_mut() {
        let parts: Vec<usize> = idx.iter().map(|&e| e as usize).collect();
        *p = p.scalar_mul(&(Rat::one() / Rat::from_integer(multinomial(&parts))));
    }
    // degree-3 monomials in the 15 quartic symbols, blocked by the sum
    // of their multi-indices
    let nq = quartic_idx.len();
    let mut blocks: BTreeMap<Vec<u16>, Vec<MultiPoly>> = BTreeMap::new();
    let mut total_cols = 0usize;
    for i in 0..nq {
        for j in i..nq {
            for k in j..nq {
                let key: Vec<u16> = (0..3)
                    .map(|t| quartic_idx[i][t] + quartic_idx[j][t] + quartic_idx[k][t])
                    .collect();
                let image = c[&quartic_idx[i]]
                    .mul(&c[&quartic_idx[j]])
                    .mul(&c[&quartic_idx[k]]);
                blocks.entry(key).or_default().push(image);
                total_cols += 1;
            }
        }
    }
    // rank per block over the q-monomials appearing
    let mut rank = 0usize;
    for images in blocks.values() {
        let mut index: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
        for img in images {
            for (mono, _) in img.terms() {
                let next = index.len();
                index.entry(mono.0.clone()).or_insert(next);
            }
        }
        let rows: Vec<Vec<(usize, Rat)>> = images
            .iter()
            .map(|img| {
                img.terms()
                    .map(|(mono, v)| (index[&mono.0], v.clone()))
                    .collect()
            })
            .collect();
        let ints = rows
            .iter()
            .map(|r| {
                use num_integer::Integer;
                let mut l = num_bigint::BigInt::one();
                for (_, v) in r {
                    l = l.lcm(v.denom());
                }
                let mut dense = vec![num_bigint::BigInt::zero(); index.len()];
                for (j, v) in r {
                    dense[*j] = v.numer() * (&l / v.denom());
                }
                dense
            })
            .collect();
        rank += rank_exact_int(ints);
    }
    Ok(total_cols - rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn ternary(entries: Vec<(Vec<u16>, i64)>, d: usize) -> NaryForm {
        NaryForm::from_rationals(
            3,
            d,
            entries
                .into_iter()
                .map(|(i, v)| (i, rat_int(v)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn test_restrict_pure_power() {
        // Γ = x1^3 restricts to (λ1 p1 + λ2 q1)^3
        let g = ternary(vec![(vec![3, 0, 0], 1)], 3);
        let theta = restrict_to_line(&g).unwrap();
        assert_eq!(theta.order(), 3);
        // Cayley coefficient k is p1^{3-k} q1^k
        let ctx = theta.coeff_ctx().clone();
        for k in 0..=3usize {
            let expect = MultiPoly::var(&ctx, ctx.flat_var("p", 1).unwrap())
                .pow(3 - k)
                .mul(&MultiPoly::var(&ctx, ctx.flat_var("q", 1).unwrap()).pow(k));
            assert_eq!(theta.coeffs()[k], expect, "k={k}");
        }
    }

    #[test]
    fn test_restrict_degree_bookkeeping() {
        // λ1^(d-k) λ2^k coefficient has p-degree d-k and q-degree k
        let g = ternary(
            vec![(vec![2, 1, 1], 3), (vec![0, 4, 0], -2), (vec![1, 1, 2], 5)],
            4,
        );
        let theta = restrict_to_line(&g).unwrap();
        for (k, c) in theta.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            assert_eq!(c.degree_in_family("p").unwrap(), Some(4 - k), "k={k}");
            assert_eq!(c.degree_in_family("q").unwrap(), Some(k), "k={k}");
        }
    }

    #[test]
    fn test_transfer_vanishing_on_powers() {
        // L^4 for linear L: Hessian transfer vanishes (r=1)
        let l4 = {
            let l = ternary(vec![(vec![1, 0, 0], 1), (vec![0, 1, 0], 2), (vec![0, 0, 1], -1)], 1);
            let sq = l.square().unwrap();
            sq.square().unwrap()
        };
        assert!(transfer_vanishing_test(&l4, 1).unwrap());
        // double conic vanishes for r=2, d=4
        let q = ternary(
            vec![
                (vec![2, 0, 0], 1),
                (vec![0, 2, 0], 2),
                (vec![0, 0, 2], 1),
                (vec![1, 1, 0], -1),
            ],
            2,
        );
        assert!(transfer_vanishing_test(&q.square().unwrap(), 2).unwrap());
        // x1^4 + x2^4 + x3^4 is not a square
        let fermat = ternary(
            vec![(vec![4, 0, 0], 1), (vec![0, 4, 0], 1), (vec![0, 0, 4], 1)],
            4,
        );
        assert!(!transfer_vanishing_test(&fermat, 2).unwrap());
    }

    #[test]
    fn test_parse_bracket_degrees() {
        let e = parse_bracket("(ab u)^2 (ac u) a_x b_x^2 c_x^3").unwrap();
        assert_eq!(e.letters, vec!["a", "b", "c"]);
        assert_eq!(e.implied_arity(), Some(3));
        let deg = e.letter_degrees();
        assert_eq!(deg["a"], 4);
        assert_eq!(deg["b"], 4);
        assert_eq!(deg["c"], 4);
        let e2 = parse_bracket("(abc)(abu)^2(acu) b_x c_x^2").unwrap();
        assert_eq!(e2.letter_degrees()["a"], 4);
        assert!(parse_bracket("(ab u").is_err());
        assert!(parse_bracket("(ab u)(abc u)").is_err());
        assert!(parse_bracket("a_y").is_err());
    }

    #[test]
    fn test_umbral_identity() {
        // a_x^d evaluates to Γ itself
        let g = ternary(
            vec![(vec![2, 1, 0], 3), (vec![0, 0, 3], -1), (vec![1, 1, 1], 2)],
            3,
        );
        let e = parse_bracket("a_x^3").unwrap();
        let val = umbral_evaluate(&e, &g).unwrap();
        let expect = g.to_poly().unwrap();
        // val lives in [u, x]; Γ's polynomial lives in [x]; compare
        let ctx = val.context().clone();
        assert_eq!(val, expect.extend_to(&ctx).unwrap());
    }

    #[test]
    fn test_umbral_rank_one_kills_brackets() {
        // d=3 on Γ = x1^3: brackets vanish
        let g = ternary(vec![(vec![3, 0, 0], 1)], 3);
        let e = parse_bracket("(ab u)^2 a_x b_x").unwrap();
        assert!(umbral_evaluate(&e, &g).unwrap().is_zero());
    }

    #[test]
    fn test_umbral_degree_mismatch() {
        let g = ternary(vec![(vec![3, 0, 0], 1)], 3);
        let e = parse_bracket("(ab u)^2 a_x b_x^2").unwrap();
        assert!(umbral_evaluate(&e, &g).is_err());
    }

    #[test]
    fn test_double_conic_ideal_dimension() {
        // the degree-3 piece of the double-conic ideal; multidegree
        // blocking keeps the 680-column kernel cheap
        assert_eq!(double_conic_ideal_dim().unwrap(), 218);
    }

    #[test]
    fn test_bitangent_degrees() {
        let fermat = ternary(
            vec![(vec![4, 0, 0], 1), (vec![0, 4, 0], 1), (vec![0, 0, 4], 1)],
            4,
        );
        let sys = bitangent_system(&fermat).unwrap();
        let mut any_nonzero = false;
        for e in &sys {
            assert_eq!(e.order(), 6);
            for c in e.coeffs() {
                if c.is_zero() {
                    continue;
                }
                any_nonzero = true;
                assert_eq!(c.degree_in_family("u").unwrap(), Some(12));
            }
        }
        assert!(any_nonzero, "a nonsingular quartic has bitangents");
    }
}
