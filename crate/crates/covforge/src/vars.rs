//! Named variable families and the immutable polynomial context.
//!
//! A [`Context`] is an ordered list of [`VarFamily`] values, fixed at
//! creation. Polynomials from different contexts never combine silently:
//! callers either build a [`Context::union`] and lift operands into it
//! with `MultiPoly::extend_to`, or get an error.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Index shape of a variable family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// A flat range `name{start} .. name{start+len-1}`, e.g. `a0..a6` or `x1,x2`.
    Flat { start: usize, len: usize },
    /// A doubly-indexed grid `name_i_j` with `i` in `0..rows` and
    /// `j` in `col_start..col_start+col_len`, e.g. `y_0_1, y_0_2, y_1_1, ...`.
    Grid {
        rows: usize,
        col_start: usize,
        col_len: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarFamily {
    pub name: String,
    pub shape: Shape,
}

impl VarFamily {
    pub fn flat(name: &str, start: usize, len: usize) -> Self {
        VarFamily {
            name: name.to_string(),
            shape: Shape::Flat { start, len },
        }
    }

    pub fn grid(name: &str, rows: usize, col_start: usize, col_len: usize) -> Self {
        VarFamily {
            name: name.to_string(),
            shape: Shape::Grid {
                rows,
                col_start,
                col_len,
            },
        }
    }

    /// Number of variables in the family.
    pub fn len(&self) -> usize {
        match self.shape {
            Shape::Flat { len, .. } => len,
            Shape::Grid { rows, col_len, .. } => rows * col_len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Display name of the variable at internal slot `s` (0-based).
    pub fn slot_name(&self, s: usize) -> String {
        match self.shape {
            Shape::Flat { start, .. } => format!("{}{}", self.name, start + s),
            Shape::Grid {
                col_start, col_len, ..
            } => {
                let i = s / col_len;
                let j = col_start + s % col_len;
                format!("{}_{}_{}", self.name, i, j)
            }
        }
    }
}

#[derive(Debug)]
struct CtxInner {
    families: Vec<VarFamily>,
    offsets: Vec<usize>,
    n_vars: usize,
}

/// An immutable, shareable variable context.
#[derive(Clone, Debug)]
pub struct Context {
    inner: Arc<CtxInner>,
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.families == other.inner.families
    }
}
impl Eq for Context {}

impl Context {
    pub fn new(families: Vec<VarFamily>) -> Result<Context> {
        let mut seen = std::collections::BTreeSet::new();
        for f in &families {
            if !seen.insert(f.name.clone()) {
                return Err(Error::DuplicateFamily(f.name.clone()));
            }
        }
        let mut offsets = Vec::with_capacity(families.len());
        let mut n = 0usize;
        for f in &families {
            offsets.push(n);
            n += f.len();
        }
        Ok(Context {
            inner: Arc::new(CtxInner {
                families,
                offsets,
                n_vars: n,
            }),
        })
    }

    /// Context with no variables (constants only).
    pub fn empty() -> Context {
        Context::new(vec![]).unwrap()
    }

    pub fn n_vars(&self) -> usize {
        self.inner.n_vars
    }

    pub fn families(&self) -> &[VarFamily] {
        &self.inner.families
    }

    pub fn family_index(&self, name: &str) -> Option<usize> {
        self.inner.families.iter().position(|f| f.name == name)
    }

    pub fn family(&self, name: &str) -> Option<&VarFamily> {
        self.inner.families.iter().find(|f| f.name == name)
    }

    /// Global index range occupied by family `fi`.
    pub fn family_range(&self, fi: usize) -> std::ops::Range<usize> {
        let off = self.inner.offsets[fi];
        off..off + self.inner.families[fi].len()
    }

    /// Global index of `name{idx}` in a flat family (logical index).
    pub fn flat_var(&self, name: &str, idx: usize) -> Result<usize> {
        let fi = self
            .family_index(name)
            .ok_or_else(|| Error::UnknownVariable(format!("{name}{idx}")))?;
        match self.inner.families[fi].shape {
            Shape::Flat { start, len } => {
                if idx < start || idx >= start + len {
                    return Err(Error::UnknownVariable(format!("{name}{idx}")));
                }
                Ok(self.inner.offsets[fi] + idx - start)
            }
            _ => Err(Error::UnknownVariable(format!("{name}{idx}"))),
        }
    }

    /// Global index of `name_i_j` in a grid family.
    pub fn grid_var(&self, name: &str, i: usize, j: usize) -> Result<usize> {
        let fi = self
            .family_index(name)
            .ok_or_else(|| Error::UnknownVariable(format!("{name}_{i}_{j}")))?;
        match self.inner.families[fi].shape {
            Shape::Grid {
                rows,
                col_start,
                col_len,
            } => {
                if i >= rows || j < col_start || j >= col_start + col_len {
                    return Err(Error::UnknownVariable(format!("{name}_{i}_{j}")));
                }
                Ok(self.inner.offsets[fi] + i * col_len + (j - col_start))
            }
            _ => Err(Error::UnknownVariable(format!("{name}_{i}_{j}"))),
        }
    }

    /// Resolves a textual variable label like `a0`, `x1` or `y_0_2`.
    pub fn resolve_label(&self, label: &str) -> Result<usize> {
        let parts: Vec<&str> = label.split('_').collect();
        match parts.len() {
            1 => {
                let split = label
                    .find(|c: char| c.is_ascii_digit())
                    .ok_or_else(|| Error::UnknownVariable(label.to_string()))?;
                let (name, digits) = label.split_at(split);
                let idx: usize = digits
                    .parse()
                    .map_err(|_| Error::UnknownVariable(label.to_string()))?;
                self.flat_var(name, idx)
            }
            3 => {
                let i: usize = parts[1]
                    .parse()
                    .map_err(|_| Error::UnknownVariable(label.to_string()))?;
                let j: usize = parts[2]
                    .parse()
                    .map_err(|_| Error::UnknownVariable(label.to_string()))?;
                self.grid_var(parts[0], i, j)
            }
            _ => Err(Error::UnknownVariable(label.to_string())),
        }
    }

    /// Display name of the variable with global index `v`.
    pub fn var_label(&self, v: usize) -> String {
        for (fi, f) in self.inner.families.iter().enumerate() {
            let r = self.family_range(fi);
            if r.contains(&v) {
                return f.slot_name(v - r.start);
            }
        }
        panic!("variable index {v} out of range");
    }

    /// Union of two contexts: families of `self` first, then the new ones
    /// from `other`. Families sharing a name must have identical shapes.
    pub fn union(&self, other: &Context) -> Result<Context> {
        let mut fams = self.inner.families.clone();
        for f in &other.inner.families {
            match fams.iter().find(|g| g.name == f.name) {
                Some(g) if g.shape == f.shape => {}
                Some(_) => {
                    return Err(Error::ContextMismatch(format!(
                        "family `{}` has conflicting shapes",
                        f.name
                    )))
                }
                None => fams.push(f.clone()),
            }
        }
        Context::new(fams)
    }

    /// Context obtained by appending one more family.
    pub fn with_family(&self, fam: VarFamily) -> Result<Context> {
        let single = Context::new(vec![fam])?;
        self.union(&single)
    }

    /// Context with the named family removed.
    pub fn without_family(&self, name: &str) -> Result<Context> {
        if self.family_index(name).is_none() {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        let fams: Vec<VarFamily> = self
            .inner
            .families
            .iter()
            .filter(|f| f.name != name)
            .cloned()
            .collect();
        Context::new(fams)
    }

    /// True if every family of `other` appears in `self` with equal shape.
    pub fn contains(&self, other: &Context) -> bool {
        other
            .inner
            .families
            .iter()
            .all(|f| self.family(&f.name).map(|g| g.shape == f.shape) == Some(true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_flat_and_grid_labels() {
        let ctx = Context::new(vec![
            VarFamily::flat("a", 0, 4),
            VarFamily::flat("x", 1, 2),
            VarFamily::grid("y", 2, 1, 2),
        ])
        .unwrap();
        assert_eq!(ctx.n_vars(), 10);
        assert_eq!(ctx.var_label(0), "a0");
        assert_eq!(ctx.var_label(4), "x1");
        assert_eq!(ctx.var_label(6), "y_0_1");
        assert_eq!(ctx.var_label(9), "y_1_2");
        assert_eq!(ctx.resolve_label("a3").unwrap(), 3);
        assert_eq!(ctx.resolve_label("y_1_1").unwrap(), 8);
        assert!(ctx.resolve_label("z1").is_err());
        assert!(ctx.resolve_label("a4").is_err());
    }

    #[test]
    fn test_union_and_removal() {
        let c1 = Context::new(vec![VarFamily::flat("a", 0, 3)]).unwrap();
        let c2 = Context::new(vec![VarFamily::flat("x", 1, 2)]).unwrap();
        let u = c1.union(&c2).unwrap();
        assert_eq!(u.n_vars(), 5);
        assert!(u.contains(&c1) && u.contains(&c2));
        let back = u.without_family("x").unwrap();
        assert_eq!(back, c1);

        let conflicting = Context::new(vec![VarFamily::flat("a", 0, 5)]).unwrap();
        assert!(c1.union(&conflicting).is_err());
    }
}
