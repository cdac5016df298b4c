//! Exact rational scalars and small combinatorial helpers.
//!
//! All arithmetic in this crate runs over `num_rational::BigRational`
//! (arbitrary-precision, always reduced, positive denominator), aliased
//! here as [`Rat`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// n/d as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k); zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial coefficient C(s, j) for rational `s`.
pub fn binomial_rat(s: &Rat, j: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..j {
        acc *= (s - rat_int(i as i64)) / rat_int((i + 1) as i64);
    }
    acc
}

/// Multinomial coefficient (Σ parts)! / Π parts!.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    let mut acc = factorial(total);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// Canonical text form: `p` or `p/q` with the sign on the numerator.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `int` or `int/uint`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid integer `{num}`")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("invalid denominator `{d}`")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    if d.is_negative() {
        return Err(Error::Parse("denominator must be positive".into()));
    }
    Ok(Rat::new(n, d))
}
