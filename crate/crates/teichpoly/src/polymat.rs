//! Matrices over the group ring: products, determinants by memoized
//! cofactor expansion, and characteristic polynomials det(uI - M) in an
//! extended ring. The Teichmuller polynomial of a fibered face is the
//! quotient of two such characteristic polynomials.

use crate::error::{Error, Result};
use crate::groupring::GroupPoly;
use std::collections::HashMap;

/// Hard ceiling for cofactor expansion unless the caller raises it; the
/// 2^n memo table is the real cost and n stays tiny in practice.
pub const DEFAULT_COFACTOR_LIMIT: usize = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupPoly>,
}

impl PolyMatrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GroupPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(first) = entries.first() {
            for e in &entries {
                if e.vars() != first.vars() {
                    return Err(Error::VariableMismatch(
                        first.vars().to_vec(),
                        e.vars().to_vec(),
                    ));
                }
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<GroupPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        PolyMatrix::from_entries(r, c, rows.into_iter().flatten().collect())
    }

    /// Literal constructor for fixed tables and tests; panics on bad shape.
    pub fn build(vars: &[&str], rows: &[&[&[(i64, &[i64])]]]) -> Self {
        let built: Vec<Vec<GroupPoly>> = rows
            .iter()
            .map(|row| row.iter().map(|terms| GroupPoly::build(vars, terms)).collect())
            .collect();
        PolyMatrix::from_rows(built).expect("literal matrix data is well-formed")
    }

    pub fn identity(n: usize, vars: Vec<String>) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(if i == j {
                    GroupPoly::constant(vars.clone(), 1)
                } else {
                    GroupPoly::zero(vars.clone())
                });
            }
        }
        PolyMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &GroupPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[GroupPoly] {
        &self.entries
    }

    pub fn vars(&self) -> &[String] {
        self.entries
            .first()
            .map(|e| e.vars())
            .unwrap_or_default()
    }

    pub fn map_entries(&self, f: impl Fn(&GroupPoly) -> GroupPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map_entries(
        &self,
        f: impl Fn(&GroupPoly) -> Result<GroupPoly>,
    ) -> Result<PolyMatrix> {
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(f)
                .collect::<Result<Vec<_>>>()?,
        })
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mat_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let vars = self.vars().to_vec();
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = GroupPoly::zero(vars.to_vec());
                for k in 0..self.cols {
                    let prod = self.entry(i, k).mul(other.entry(k, j))?;
                    acc = acc.add(&prod)?;
                }
                entries.push(acc);
            }
        }
        PolyMatrix::from_entries(self.rows, other.cols, entries)
    }

    /// Exact determinant by cofactor expansion, memoized on the set of
    /// still-unused columns. Fraction-free elimination is useless here:
    /// the base ring has no cheap division.
    pub fn det(&self) -> Result<GroupPoly> {
        self.det_with_limit(DEFAULT_COFACTOR_LIMIT)
    }

    pub fn det_with_limit(&self, limit: usize) -> Result<GroupPoly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > limit {
            return Err(Error::SizeOverLimit {
                size: self.rows,
                limit,
            });
        }
        let vars = if self.rows == 0 {
            Vec::new()
        } else {
            self.vars().to_vec()
        };
        if self.rows == 0 {
            return Ok(GroupPoly::constant(vars, 1));
        }
        let mut memo: HashMap<u64, GroupPoly> = HashMap::new();
        let full = (1u64 << self.rows) - 1;
        self.minor_det(0, full, &mut memo)
    }

    fn minor_det(
        &self,
        row: usize,
        col_mask: u64,
        memo: &mut HashMap<u64, GroupPoly>,
    ) -> Result<GroupPoly> {
        let vars = self.vars().to_vec();
        if col_mask == 0 {
            return Ok(GroupPoly::constant(vars, 1));
        }
        if let Some(hit) = memo.get(&col_mask) {
            return Ok(hit.clone());
        }
        let mut acc = GroupPoly::zero(vars);
        let mut positive = true;
        for j in 0..self.cols {
            if col_mask & (1 << j) == 0 {
                continue;
            }
            let e = self.entry(row, j);
            if !e.is_zero() {
                let sub = self.minor_det(row + 1, col_mask & !(1 << j), memo)?;
                let term = e.mul(&sub)?;
                acc = if positive {
                    acc.add(&term)?
                } else {
                    acc.sub(&term)?
                };
            }
            positive = !positive;
        }
        memo.insert(col_mask, acc.clone());
        Ok(acc)
    }

    /// Re-embed every entry into the ring with `new_var` prepended as
    /// variable 0.
    pub fn lift_with_new_var(&self, new_var: &str) -> Result<PolyMatrix> {
        if self.vars().iter().any(|v| v == new_var) {
            return Err(Error::ShapeMismatch(format!(
                "variable {new_var} already present in the ring"
            )));
        }
        let mut vars = vec![new_var.to_string()];
        vars.extend_from_slice(self.vars());
        self.try_map_entries(|e| {
            GroupPoly::from_terms(
                vars.clone(),
                e.terms().iter().map(|(exp, c)| {
                    let mut lifted = vec![0i64];
                    lifted.extend_from_slice(exp);
                    (lifted, c.clone())
                }),
            )
        })
    }
}

/// det(uI - M) in the ring extended by `new_var` (as variable 0), exact.
pub fn char_det(m: &PolyMatrix, new_var: &str) -> Result<GroupPoly> {
    char_det_with_limit(m, new_var, DEFAULT_COFACTOR_LIMIT)
}

pub fn char_det_with_limit(m: &PolyMatrix, new_var: &str, limit: usize) -> Result<GroupPoly> {
    if m.rows != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let lifted = m.lift_with_new_var(new_var)?;
    let vars = lifted.vars().to_vec();
    let n = m.rows;
    let mut u_exp = vec![0i64; vars.len()];
    u_exp[0] = 1;
    let u = GroupPoly::monomial(vars.clone(), u_exp, 1)?;
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = lifted.entry(i, j).neg();
            if i == j {
                e = e.add(&u)?;
            }
            entries.push(e);
        }
    }
    PolyMatrix::from_entries(n, n, entries)?.det_with_limit(limit)
}

/// Teichmuller polynomial from edge/vertex transition matrices:
/// char_det(PE) / char_det(PV), or just char_det(PE) when the vertex
/// contribution cancels and PV is omitted.
pub fn teichmuller_from_transition(
    pe: &PolyMatrix,
    pv: Option<&PolyMatrix>,
    new_var: &str,
) -> Result<GroupPoly> {
    let num = char_det(pe, new_var)?;
    match pv {
        None => Ok(num),
        Some(pv) => {
            let den = char_det(pv, new_var)?;
            num.exact_div(&den)
        }
    }
}
