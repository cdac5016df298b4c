//! JSON schemas for the file formats: binary forms, covariants, n-ary
//! forms, and the structured results the command line emits.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::binary::BinaryForm;
use crate::covariant::Covariant;
use crate::error::{Error, Result};
use crate::parse::parse_poly;
use crate::poly::MultiPoly;
use crate::rat::{format_rat, parse_rat};
use crate::transfer::NaryForm;
use crate::vars::{Context, Shape, VarFamily};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BinaryFormJson {
    pub order: usize,
    pub vars: [String; 2],
    pub cayley_coefficients: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CovariantJson {
    pub d: usize,
    pub degree: usize,
    pub order: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NaryFormJson {
    pub n: usize,
    pub order: usize,
    /// keys look like "(i1,...,in)"
    pub coefficients: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PowerTestJson {
    pub is_power: bool,
    pub mu: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<BinaryFormJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanRowJson {
    pub m: usize,
    pub dim_j: usize,
    pub dim_ix: usize,
    pub equal: bool,
    pub mode: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReportJson {
    pub r: usize,
    pub d: usize,
    pub m_max: usize,
    pub rows: Vec<ScanRowJson>,
    pub candidate_si: Option<usize>,
    pub note: String,
}

/// Splits a label like `a0`, `lam2` or `y_1_2` into its family parts.
fn split_label(label: &str) -> Result<(String, Vec<usize>)> {
    let parts: Vec<&str> = label.split('_').collect();
    match parts.len() {
        1 => {
            let cut = label
                .find(|c: char| c.is_ascii_digit())
                .ok_or_else(|| Error::Parse(format!("variable `{label}` lacks an index")))?;
            let (name, digits) = label.split_at(cut);
            let idx: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in `{label}`")))?;
            Ok((name.to_string(), vec![idx]))
        }
        3 => {
            let i: usize = parts[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in `{label}`")))?;
            let j: usize = parts[2]
                .parse()
                .map_err(|_| Error::Parse(format!("bad index in `{label}`")))?;
            Ok((parts[0].to_string(), vec![i, j]))
        }
        _ => Err(Error::Parse(format!("unrecognized variable `{label}`"))),
    }
}

/// Infers a context from the variable labels appearing in a set of
/// polynomial strings. Flat families span 0 (or the least seen index)
/// through the largest seen index; families are ordered by name.
pub fn infer_context(texts: &[&str]) -> Result<Context> {
    let mut flat: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut grid: BTreeMap<String, (usize, usize, usize)> = BTreeMap::new();
    for text in texts {
        let mut chars = text.chars().peekable();
        let mut token = String::new();
        let mut flush = |token: &mut String| -> Result<()> {
            if token.is_empty() {
                return Ok(());
            }
            let (name, idx) = split_label(token)?;
            match idx.len() {
                1 => {
                    let entry = flat.entry(name).or_insert((idx[0], idx[0]));
                    entry.0 = entry.0.min(idx[0]);
                    entry.1 = entry.1.max(idx[0]);
                }
                _ => {
                    let entry = grid.entry(name).or_insert((0, idx[1], idx[1]));
                    entry.0 = entry.0.max(idx[0]);
                    entry.1 = entry.1.min(idx[1]);
                    entry.2 = entry.2.max(idx[1]);
                }
            }
            token.clear();
            Ok(())
        };
        while let Some(&c) = chars.peek() {
            if c.is_ascii_alphabetic() || c == '_' || (!token.is_empty() && c.is_ascii_digit()) {
                token.push(c);
                chars.next();
            } else {
                if c == '^' {
                    // exponent digits follow; finish the token first
                    flush(&mut token)?;
                    chars.next();
                    while chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                        chars.next();
                    }
                    continue;
                }
                flush(&mut token)?;
                chars.next();
            }
        }
        flush(&mut token)?;
    }
    let mut fams: Vec<VarFamily> = Vec::new();
    for (name, (lo, hi)) in flat {
        // index forms: a0.. starts at 0; x1,x2 style starts at 1
        let start = lo.min(1);
        fams.push(VarFamily::flat(&name, start, hi - start + 1));
    }
    for (name, (rows, lo, hi)) in grid {
        let start = lo;
        fams.push(VarFamily::grid(&name, rows + 1, start, hi - start + 1));
    }
    Context::new(fams)
}

// ---- binary forms ----

pub fn binary_form_to_json(f: &BinaryForm) -> BinaryFormJson {
    let fam = f.var_family();
    debug_assert!(matches!(fam.shape, Shape::Flat { len: 2, .. }));
    BinaryFormJson {
        order: f.order(),
        vars: [fam.slot_name(0), fam.slot_name(1)],
        cayley_coefficients: f.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

pub fn binary_form_from_json(j: &BinaryFormJson) -> Result<BinaryForm> {
    if j.cayley_coefficients.len() != j.order + 1 {
        return Err(Error::InvalidArgument(format!(
            "an order-{} form needs {} coefficients",
            j.order,
            j.order + 1
        )));
    }
    // the variable pair
    let (n1, i1) = split_label(&j.vars[0])?;
    let (n2, i2) = split_label(&j.vars[1])?;
    if n1 != n2 || i1.len() != 1 || i2.len() != 1 || i2[0] != i1[0] + 1 {
        return Err(Error::InvalidArgument(
            "form variables must be consecutive, e.g. [\"x1\", \"x2\"]".into(),
        ));
    }
    let var_family = VarFamily::flat(&n1, i1[0], 2);
    let texts: Vec<&str> = j
        .cayley_coefficients
        .iter()
        .map(|s| s.as_str())
        .collect();
    let ctx = infer_context(&texts)?;
    if ctx.family(&n1).is_some() {
        return Err(Error::InvalidArgument(
            "coefficients must not mention the form variables".into(),
        ));
    }
    let coeffs = j
        .cayley_coefficients
        .iter()
        .map(|s| parse_poly(s, &ctx))
        .collect::<Result<Vec<_>>>()?;
    BinaryForm::new(j.order, var_family, coeffs)
}

pub fn read_binary_form(path: &str) -> Result<BinaryForm> {
    let text = std::fs::read_to_string(path)?;
    let j: BinaryFormJson = serde_json::from_str(&text)?;
    binary_form_from_json(&j)
}

// ---- covariants ----

pub fn covariant_to_json(c: &Covariant) -> CovariantJson {
    CovariantJson {
        d: c.source_order(),
        degree: c.degree(),
        order: c.order(),
        coefficients: c.coeffs().iter().map(|p| p.to_string()).collect(),
    }
}

pub fn covariant_from_json(j: &CovariantJson) -> Result<Covariant> {
    let ctx = Context::new(vec![VarFamily::flat("a", 0, j.d + 1)])?;
    let coeffs = j
        .coefficients
        .iter()
        .map(|s| parse_poly(s, &ctx))
        .collect::<Result<Vec<_>>>()?;
    Covariant::from_parts(j.d, j.degree, j.order, "a", crate::binary::xvars(), coeffs)
}

// ---- n-ary forms ----

fn parse_multi_index(key: &str, n: usize) -> Result<Vec<u16>> {
    let trimmed = key
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("multi-index `{key}` must look like (i1,...,in)")))?;
    let parts: Vec<u16> = trimmed
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multi-index entry in `{key}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if parts.len() != n {
        return Err(Error::Parse(format!(
            "multi-index `{key}` has {} entries, expected {n}",
            parts.len()
        )));
    }
    Ok(parts)
}

pub fn nary_form_to_json(f: &NaryForm) -> NaryFormJson {
    let mut coefficients = BTreeMap::new();
    for (idx, c) in f.coeffs() {
        let key = format!(
            "({})",
            idx.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        coefficients.insert(key, c.to_string());
    }
    NaryFormJson {
        n: f.n(),
        order: f.order(),
        coefficients,
    }
}

pub fn nary_form_from_json(j: &NaryFormJson) -> Result<NaryForm> {
    let texts: Vec<&str> = j.coefficients.values().map(|s| s.as_str()).collect();
    let ctx = infer_context(&texts)?;
    let mut coeffs = BTreeMap::new();
    for (key, text) in &j.coefficients {
        let idx = parse_multi_index(key, j.n)?;
        let poly = parse_poly(text, &ctx)?;
        if !poly.is_zero() {
            coeffs.insert(idx, poly);
        }
    }
    NaryForm::new(j.n, j.order, coeffs)
}

pub fn read_nary_form(path: &str) -> Result<NaryForm> {
    let text = std::fs::read_to_string(path)?;
    let j: NaryFormJson = serde_json::from_str(&text)?;
    nary_form_from_json(&j)
}

// ---- results ----

pub fn power_test_json(mu: usize, dec: &Option<crate::power::PowerDecomposition>) -> PowerTestJson {
    match dec {
        None => PowerTestJson {
            is_power: false,
            mu,
            base: None,
            scalar: None,
        },
        Some(dec) => PowerTestJson {
            is_power: true,
            mu,
            base: Some(binary_form_to_json(&dec.base)),
            scalar: Some(format_rat(&dec.scalar)),
        },
    }
}

pub fn scan_report_json(rep: &crate::ideals::ScanReport) -> ScanReportJson {
    ScanReportJson {
        r: rep.r,
        d: rep.d,
        m_max: rep.m_max,
        rows: rep
            .rows
            .iter()
            .map(|row| ScanRowJson {
                m: row.m,
                dim_j: row.dim_j,
                dim_ix: row.dim_ix,
                equal: row.equal,
                mode: match row.mode {
                    crate::ideals::RankMode::Exact => "exact".into(),
                    crate::ideals::RankMode::ModularCertified => "modular-certified".into(),
                },
            })
            .collect(),
        candidate_si: rep.candidate_si,
        note: format!("candidate verified up to m_max = {}", rep.m_max),
    }
}

/// CSV rendering of a scan report: header plus one line per degree.
pub fn scan_report_csv(rep: &crate::ideals::ScanReport) -> String {
    let mut out = String::from("m,dim_J,dim_IX,equal\n");
    for row in &rep.rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.m, row.dim_j, row.dim_ix, row.equal
        ));
    }
    out
}

/// Parses a rational string, shared by CLI flags.
pub fn rational_from_str(s: &str) -> Result<crate::rat::Rat> {
    parse_rat(s)
}

/// Parses a polynomial against an inferred context (for standalone
/// expression evaluation).
pub fn poly_from_str(s: &str) -> Result<MultiPoly> {
    let ctx = infer_context(&[s])?;
    parse_poly(s, &ctx)
}
