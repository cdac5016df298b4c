//! A small prefix notation for compound transvectant expressions and an
//! exact identity checker over the generic d-ic.
//!
//! Grammar:
//! ```text
//! expr := 'F'
//!       | 'T' '(' expr ',' expr ',' uint ')'     transvectant
//!       | 'MUL' '(' expr ',' expr ')'            product
//!       | 'POW' '(' expr ',' uint ')'            power
//!       | 'SCALE' '(' rational ',' expr ')'      rational multiple
//!       | 'ADD' '(' expr ',' expr ')'
//!       | 'SUB' '(' expr ',' expr ')'
//! ```
//! Example: `T(T(F,F,2),F,1)` is ((F,F)_2, F)_1.

use crate::covariant::Covariant;
use crate::error::{Error, Result};
use crate::rat::{parse_rat, Rat};
use crate::vars::VarFamily;

#[derive(Clone, Debug, PartialEq)]
pub enum CovExpr {
    F,
    Transvect(Box<CovExpr>, Box<CovExpr>, usize),
    Mul(Box<CovExpr>, Box<CovExpr>),
    Pow(Box<CovExpr>, usize),
    Scale(Rat, Box<CovExpr>),
    Add(Box<CovExpr>, Box<CovExpr>),
    Sub(Box<CovExpr>, Box<CovExpr>),
}

pub fn parse_cov_expr(text: &str) -> Result<CovExpr> {
    let mut p = ExprParser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "trailing input at position {}",
            p.pos
        )));
    }
    Ok(e)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected `{c}` at position {}",
                self.pos
            )))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!(
                "expected an integer at position {start}"
            )));
        }
        self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse("integer overflow".into()))
    }

    fn rational(&mut self) -> Result<Rat> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_digit()
                || self.chars[self.pos] == '-'
                || self.chars[self.pos] == '/')
        {
            self.pos += 1;
        }
        parse_rat(&self.chars[start..self.pos].iter().collect::<String>())
    }

    fn expr(&mut self) -> Result<CovExpr> {
        let head = self.ident();
        match head.as_str() {
            "F" => Ok(CovExpr::F),
            "T" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(',')?;
                let k = self.uint()?;
                self.expect(')')?;
                Ok(CovExpr::Transvect(Box::new(a), Box::new(b), k))
            }
            "MUL" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(CovExpr::Mul(Box::new(a), Box::new(b)))
            }
            "POW" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let k = self.uint()?;
                self.expect(')')?;
                Ok(CovExpr::Pow(Box::new(a), k))
            }
            "SCALE" => {
                self.expect('(')?;
                let r = self.rational()?;
                self.expect(',')?;
                let a = self.expr()?;
                self.expect(')')?;
                Ok(CovExpr::Scale(r, Box::new(a)))
            }
            "ADD" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(CovExpr::Add(Box::new(a), Box::new(b)))
            }
            "SUB" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(CovExpr::Sub(Box::new(a), Box::new(b)))
            }
            other => Err(Error::Parse(format!("unknown operator `{other}`"))),
        }
    }
}

/// Evaluates an expression as an exact covariant of the generic form of
/// order `d` over the given coefficient family.
pub fn eval_cov_expr(
    expr: &CovExpr,
    d: usize,
    coeff_family: &str,
    var_family: &VarFamily,
) -> Result<Covariant> {
    match expr {
        CovExpr::F => Ok(Covariant::generic(d, coeff_family, var_family.clone())),
        CovExpr::Transvect(a, b, k) => {
            let ca = eval_cov_expr(a, d, coeff_family, var_family)?;
            let cb = eval_cov_expr(b, d, coeff_family, var_family)?;
            ca.transvect(&cb, *k)
        }
        CovExpr::Mul(a, b) => {
            let ca = eval_cov_expr(a, d, coeff_family, var_family)?;
            let cb = eval_cov_expr(b, d, coeff_family, var_family)?;
            ca.mul(&cb)
        }
        CovExpr::Pow(a, k) => {
            let ca = eval_cov_expr(a, d, coeff_family, var_family)?;
            let mut acc = ca.clone();
            if *k == 0 {
                return Err(Error::InvalidArgument(
                    "POW wants a positive exponent".into(),
                ));
            }
            for _ in 1..*k {
                acc = acc.mul(&ca)?;
            }
            Ok(acc)
        }
        CovExpr::Scale(r, a) => Ok(eval_cov_expr(a, d, coeff_family, var_family)?.scalar_mul(r)),
        CovExpr::Add(a, b) => {
            let ca = eval_cov_expr(a, d, coeff_family, var_family)?;
            let cb = eval_cov_expr(b, d, coeff_family, var_family)?;
            ca.add(&cb)
        }
        CovExpr::Sub(a, b) => {
            let ca = eval_cov_expr(a, d, coeff_family, var_family)?;
            let cb = eval_cov_expr(b, d, coeff_family, var_family)?;
            ca.sub(&cb)
        }
    }
}

/// Checks `lhs = rhs` coefficientwise as covariants of the generic d-ic.
/// Degree/order mismatches between nonzero sides are reported as errors.
pub fn identity_check(lhs: &CovExpr, rhs: &CovExpr, d: usize) -> Result<bool> {
    let vf = crate::binary::xvars();
    let l = eval_cov_expr(lhs, d, "a", &vf)?;
    let r = eval_cov_expr(rhs, d, "a", &vf)?;
    if l.is_zero() && r.is_zero() {
        return Ok(true);
    }
    if l.order() != r.order() || (!l.is_zero() && !r.is_zero() && l.degree() != r.degree()) {
        return Err(Error::DegreeMismatch(format!(
            "sides have degree-order ({},{}) vs ({},{})",
            l.degree(),
            l.order(),
            r.degree(),
            r.order()
        )));
    }
    Ok(l == r)
}

/// Parses and checks an identity given as two expression strings.
pub fn identity_check_str(lhs: &str, rhs: &str, d: usize) -> Result<bool> {
    identity_check(&parse_cov_expr(lhs)?, &parse_cov_expr(rhs)?, d)
}
