//! Text grammar for polynomials, shared by the CLI and the file formats.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := rational ('*' varpow)* | varpow ('*' varpow)*
//! varpow := name ('^' uint)?
//! rational := int ('/' uint)?
//! name   := letter+ digits | letter+ '_' uint '_' uint
//! ```
//!
//! Whitespace is insignificant. Example: `2*a0^2*a3 - 3*a0*a1*a2`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rat::{parse_rat, Rat};
use crate::vars::Context;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Number(String),
    Name(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '0'..='9' => {
                let mut s = String::new();
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push(Token::Number(s));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    s.push(chars[i]);
                    i += 1;
                }
                out.push(Token::Name(s));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Parses a polynomial over the given context.
pub fn parse_poly(text: &str, ctx: &Context) -> Result<MultiPoly> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut acc = MultiPoly::zero(ctx);
    let mut i = 0;
    let mut sign_next = Rat::one();
    // optional leading sign
    match tokens.first() {
        Some(Token::Plus) => i = 1,
        Some(Token::Minus) => {
            sign_next = -Rat::one();
            i = 1;
        }
        _ => {}
    }
    loop {
        let (term, ni) = parse_term(&tokens, i, ctx)?;
        acc = acc.add(&term.scalar_mul(&sign_next));
        i = ni;
        if i == tokens.len() {
            break;
        }
        match &tokens[i] {
            Token::Plus => sign_next = Rat::one(),
            Token::Minus => sign_next = -Rat::one(),
            t => return Err(Error::Parse(format!("expected + or -, found {t:?}"))),
        }
        i += 1;
        if i == tokens.len() {
            return Err(Error::Parse("dangling sign at end of input".into()));
        }
    }
    Ok(acc)
}

fn parse_term(tokens: &[Token], mut i: usize, ctx: &Context) -> Result<(MultiPoly, usize)> {
    let mut acc = MultiPoly::one(ctx);
    loop {
        match tokens.get(i) {
            Some(Token::Number(s)) => {
                let r = parse_rat(s)?;
                acc = acc.scalar_mul(&r);
                i += 1;
            }
            Some(Token::Name(name)) => {
                let v = ctx.resolve_label(name)?;
                let mut e: u32 = 1;
                if let Some(Token::Caret) = tokens.get(i + 1) {
                    match tokens.get(i + 2) {
                        Some(Token::Number(s)) if !s.contains('/') => {
                            e = s
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad exponent `{s}`")))?;
                            i += 3;
                        }
                        _ => return Err(Error::Parse("expected integer exponent after ^".into())),
                    }
                } else {
                    i += 1;
                }
                acc = acc.mul(&MultiPoly::var(ctx, v).pow(e as usize));
            }
            t => {
                return Err(Error::Parse(format!(
                    "expected a factor, found {t:?} at token {i}"
                )))
            }
        }
        match tokens.get(i) {
            Some(Token::Star) => i += 1,
            _ => break,
        }
    }
    Ok((acc, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use crate::vars::VarFamily;

    #[test]
    fn test_parse_examples() {
        let ctx = Context::new(vec![VarFamily::flat("a", 0, 4)]).unwrap();
        let p = parse_poly("2*a0^2*a3 - 3*a0*a1*a2", &ctx).unwrap();
        assert_eq!(p.n_terms(), 2);
        assert_eq!(p.to_string(), "2*a0^2*a3 - 3*a0*a1*a2");
    }

    #[test]
    fn test_parse_rational_and_signs() {
        let ctx = Context::new(vec![VarFamily::flat("x", 1, 2)]).unwrap();
        let p = parse_poly("-1/2*x1 + x2 - 3", &ctx).unwrap();
        assert_eq!(p.to_string(), "-1/2*x1 + x2 - 3");
        let q = parse_poly("  x1 ^ 2*  x2", &ctx).unwrap();
        assert_eq!(q.to_string(), "x1^2*x2");
    }

    #[test]
    fn test_parse_grid_names() {
        let ctx = Context::new(vec![VarFamily::grid("y", 2, 1, 2)]).unwrap();
        let p = parse_poly("y_0_1*y_1_2", &ctx).unwrap();
        assert_eq!(p.to_string(), "y_0_1*y_1_2");
    }

    #[test]
    fn test_parse_constant() {
        let ctx = Context::empty();
        let p = parse_poly("7/3", &ctx).unwrap();
        assert_eq!(p.as_constant().unwrap(), crate::rat::rat(7, 3));
        let z = parse_poly("0", &ctx).unwrap();
        assert!(z.is_zero());
        assert_eq!(parse_poly("5 - 5", &ctx).unwrap(), MultiPoly::zero(&ctx));
        assert_eq!(
            parse_poly("2*3", &ctx).unwrap().as_constant().unwrap(),
            rat_int(6)
        );
    }

    #[test]
    fn test_parse_errors() {
        let ctx = Context::new(vec![VarFamily::flat("a", 0, 2)]).unwrap();
        assert!(parse_poly("b0", &ctx).is_err());
        assert!(parse_poly("a0 +", &ctx).is_err());
        assert!(parse_poly("a0^x", &ctx).is_err());
        assert!(parse_poly("", &ctx).is_err());
    }

    #[test]
    fn test_display_parse_roundtrip() {
        let ctx = Context::new(vec![VarFamily::flat("a", 0, 5), VarFamily::flat("x", 1, 2)])
            .unwrap();
        let p = parse_poly(
            "3/7*a0^2*x1^3 - a1*a4*x2 + 11*a3 - 2/9",
            &ctx,
        )
        .unwrap();
        let q = parse_poly(&p.to_string(), &ctx).unwrap();
        assert_eq!(p, q);
    }
}
