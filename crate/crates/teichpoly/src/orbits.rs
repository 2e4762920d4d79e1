//! Census of closed-orbit homology classes of the suspension flow, read
//! off diagonal entries of powers of the twisted transition matrix, plus
//! the bookkeeping that groups orbit classes by drilling equivalence.

use crate::cone::{parallel, Covector};
use crate::error::{Error, Result};
use crate::groupring::ExpVec;
use crate::polymat::PolyMatrix;
use rug::Integer;

/// A (possibly nonprimitive) closed orbit of the suspension flow: it winds
/// `u_degree` times around the flow direction, carries the recorded
/// homology class in the remaining coordinates, and passes through the
/// cell whose diagonal entry produced it. Primitivity is not decided here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    pub u_degree: u32,
    /// Homology class in the non-flow coordinates. The sign convention is
    /// fixed here once: a matrix term with exponent vector e yields the
    /// class -e, so an inverse-variable term witnesses a positive class.
    pub t_class: ExpVec,
    pub multiplicity: Integer,
    pub through_cell: usize,
}

impl OrbitClass {
    /// Full homology vector (u_degree, t_class...) of the orbit.
    pub fn full_class(&self) -> ExpVec {
        let mut v = Vec::with_capacity(1 + self.t_class.len());
        v.push(self.u_degree as i64);
        v.extend_from_slice(&self.t_class);
        v
    }
}

/// Enumerate orbit classes through every cell for each power up to the
/// bound. The matrix must be square with nonnegative coefficients; each
/// term of each diagonal entry of each power becomes one class.
pub fn census(m: &PolyMatrix, max_power: u32) -> Result<Vec<OrbitClass>> {
    if m.rows() != m.cols() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if max_power == 0 {
        return Err(Error::ZeroInput("census needs at least one power"));
    }
    if m.entries()
        .iter()
        .any(|p| p.terms().values().any(|c| *c < 0))
    {
        return Err(Error::ShapeMismatch(
            "transition matrix has a negative coefficient".into(),
        ));
    }
    let mut classes = Vec::new();
    let mut power = m.clone();
    for u_degree in 1..=max_power {
        for i in 0..power.rows() {
            for (e, c) in power.entry(i, i).terms() {
                classes.push(OrbitClass {
                    u_degree,
                    t_class: e.iter().map(|x| -x).collect(),
                    multiplicity: c.clone(),
                    through_cell: i,
                });
            }
        }
        if u_degree < max_power {
            power = power.mat_mul(m)?;
        }
    }
    Ok(classes)
}

/// Keep the first orbit class from each drilling-equivalence class, where
/// two classes are equivalent when the shifted vectors x + c are parallel
/// over the integers.
pub fn drilling_class_representatives(
    classes: &[OrbitClass],
    x: &Covector,
) -> Result<Vec<OrbitClass>> {
    if classes.is_empty() {
        return Err(Error::ZeroInput("no orbit classes to group"));
    }
    let mut reps: Vec<(ExpVec, OrbitClass)> = Vec::new();
    for class in classes {
        let full = class.full_class();
        if x.0.len() != full.len() {
            return Err(Error::DimensionMismatch {
                expected: x.0.len(),
                got: full.len(),
            });
        }
        let shifted: ExpVec = x.0.iter().zip(&full).map(|(a, b)| a + b).collect();
        if !reps.iter().any(|(kept, _)| parallel(kept, &shifted)) {
            reps.push((shifted, class.clone()));
        }
    }
    Ok(reps.into_iter().map(|(_, c)| c).collect())
}
