//! Exact linear algebra over the rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination on an integer
//! copy of the matrix; kernels come from a rational reduced row echelon
//! form. A modular-rank routine over a fixed 61-bit prime serves as a
//! fast pre-pass for the large graded-piece computations; a rank found
//! modulo p is always a lower bound for the rank over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rat::Rat;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Stacks two matrices with equal column counts.
    pub fn stack(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.cols {
            return Err(Error::InvalidArgument(
                "stacked matrices must share the column count".into(),
            ));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Integer copy with each row scaled by its denominators' lcm
    /// (rank-preserving).
    fn to_int_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut l = BigInt::one();
            for e in self.row(i) {
                l = l.lcm(e.denom());
            }
            out.push(
                self.row(i)
                    .iter()
                    .map(|e| e.numer() * (&l / e.denom()))
                    .collect(),
            );
        }
        out
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_exact_int(self.to_int_rows())
    }

    /// Rank modulo the fixed prime; a lower bound for the exact rank.
    pub fn rank_mod_p(&self) -> usize {
        let rows: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(rat_mod_p).collect())
            .collect();
        rank_mod_p(rows)
    }

    /// Exact kernel basis, derived from the reduced row echelon form.
    /// Each basis vector `v` satisfies `M v = 0` with `v[free] = 1` for
    /// its free column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for &(r, c) in &pivots {
                v[c] = -rref[r * self.cols + free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form; returns (data, pivot (row, col) list).
    fn rref(&self) -> (Vec<Rat>, Vec<(usize, usize)>) {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                a.swap(r * cols + j, pr * cols + j);
            }
            let inv = {
                let p = a[r * cols + c].clone();
                Rat::one() / p
            };
            for j in c..cols {
                let v = a[r * cols + j].clone() * inv.clone();
                a[r * cols + j] = v;
            }
            for i in 0..rows {
                if i == r || a[i * cols + c].is_zero() {
                    continue;
                }
                let f = a[i * cols + c].clone();
                for j in c..cols {
                    let v = a[i * cols + j].clone() - f.clone() * a[r * cols + j].clone();
                    a[i * cols + j] = v;
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        (a, pivots)
    }

    /// True iff `M v = 0` exactly.
    pub fn annihilates(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).all(|i| {
            self.row(i)
                .iter()
                .zip(v)
                .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
                .is_zero()
        })
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Fixed 61-bit Mersenne prime for modular rank pre-passes.
pub const MOD_P: u64 = (1u64 << 61) - 1;

pub fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b);
        }
        b = mul_mod(b, b);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64) -> u64 {
    pow_mod(a, MOD_P - 2)
}

/// Image of a rational modulo the fixed prime.
pub fn rat_mod_p(r: &Rat) -> u64 {
    let p = BigInt::from(MOD_P);
    let mut n = r.numer() % &p;
    if n.is_negative() {
        n += &p;
    }
    let mut d = r.denom() % &p;
    if d.is_negative() {
        d += &p;
    }
    let n = n.to_u64().unwrap();
    let d = d.to_u64().unwrap();
    assert!(d != 0, "denominator divisible by the modular prime");
    mul_mod(n, inv_mod(d))
}

/// Gaussian elimination rank over GF(MOD_P).
pub fn rank_mod_p(mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = inv_mod(m[rank][c]);
        for j in c..cols {
            m[rank][j] = mul_mod(m[rank][j], inv);
        }
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mul_mod(f, prow[j]);
                row[j] = (row[j] + MOD_P - sub) % MOD_P;
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free Bareiss rank of an integer matrix.
pub fn rank_exact_int(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        // smallest nonzero pivot keeps the Bareiss entries modest
        let pivot = (rank..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&i, &j| m[i][c].magnitude().cmp(m[j][c].magnitude()));
        let Some(pr) = pivot else {
            continue;
        };
        m.swap(rank, pr);
        let (top, rest) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        let p = prow[c].clone();
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                // still rescale so the Bareiss division stays exact
                for j in (c + 1)..cols {
                    let v = (&p * &row[j]) / &prev;
                    row[j] = v;
                }
                row[c] = BigInt::zero();
                continue;
            }
            let f = row[c].clone();
            for j in (c + 1)..cols {
                let v = (&p * &row[j] - &f * &prow[j]) / &prev;
                row[j] = v;
            }
            row[c] = BigInt::zero();
        }
        prev = p;
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix of polynomials, by dynamic programming
/// over column subsets (no division needed).
pub fn poly_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix");
    assert!(n <= 20, "poly_det limited to small matrices");
    let ctx = m[0][0].context().clone();
    let mut dp: std::collections::BTreeMap<u32, MultiPoly> = std::collections::BTreeMap::new();
    dp.insert(0, MultiPoly::one(&ctx));
    for row in m {
        let mut next: std::collections::BTreeMap<u32, MultiPoly> = std::collections::BTreeMap::new();
        for (s, val) in &dp {
            for j in 0..n {
                let bit = 1u32 << j;
                if s & bit != 0 {
                    continue;
                }
                if row[j].is_zero() {
                    continue;
                }
                // expansion along the current row: sign (-1)^{row + position}
                let below = (s & (bit - 1)).count_ones();
                let parity = (s.count_ones() + below) % 2;
                let mut term = val.mul(&row[j]);
                if parity == 1 {
                    term = term.neg();
                }
                next.entry(s | bit)
                    .and_modify(|acc| *acc = acc.add(&term))
                    .or_insert(term);
            }
        }
        dp = next;
        if dp.is_empty() {
            return MultiPoly::zero(&ctx);
        }
    }
    dp.remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| MultiPoly::zero(&ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use crate::vars::{Context, VarFamily};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn test_rank_basics() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert!(RatMatrix::identity(2).kernel().is_empty());
        let z = RatMatrix::zero(3, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 4);
    }

    #[test]
    fn test_rank_one_proportional_rows() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        // spanned by (2, -1) up to scale; rref form has v[free]=1
        assert!(a.annihilates(&k[0]));
        assert_eq!(k[0][1], rat_int(1));
        assert_eq!(k[0][0], rat(-2, 1));
    }

    #[test]
    fn test_rank_nullity_and_exact_kernel() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[1, 0, 1, 0], &[0, 2, 2, 4]]);
        let r = a.rank();
        let k = a.kernel();
        assert_eq!(r + k.len(), a.cols());
        for v in &k {
            assert!(a.annihilates(v));
        }
        assert_eq!(a.rank_mod_p(), r);
    }

    #[test]
    fn test_rational_entries() {
        let a = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat(2, 1)],
        ]);
        assert_eq!(a.rank(), 2);
        // proportional rational rows
        let b = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat(1, 1)],
        ]);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn test_poly_det_numeric() {
        let ctx = Context::new(vec![VarFamily::flat("x", 1, 2)]).unwrap();
        let x1 = MultiPoly::var(&ctx, 0);
        let x2 = MultiPoly::var(&ctx, 1);
        // det [[x1, x2], [x2, x1]] = x1^2 - x2^2
        let d = poly_det(&[vec![x1.clone(), x2.clone()], vec![x2.clone(), x1.clone()]]);
        assert_eq!(d, x1.pow(2).sub(&x2.pow(2)));
        // repeated rows vanish
        let d2 = poly_det(&[vec![x1.clone(), x2.clone()], vec![x1, x2]]);
        assert!(d2.is_zero());
    }

    #[test]
    fn test_poly_det_3x3_sign() {
        // det of an antidiagonal numeric matrix embedded as constants
        let ctx = Context::empty();
        let c = |v: i64| MultiPoly::constant(&ctx, rat_int(v));
        let d = poly_det(&[
            vec![c(0), c(0), c(1)],
            vec![c(0), c(1), c(0)],
            vec![c(1), c(0), c(0)],
        ]);
        assert_eq!(d.as_constant().unwrap(), rat_int(-1));
    }
}
