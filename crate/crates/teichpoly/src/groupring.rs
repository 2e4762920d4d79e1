//! Exact arithmetic in the group ring Z[Z^b]: multivariate Laurent
//! polynomials with arbitrary-precision integer coefficients. This is the
//! base ring for everything else in the crate; all operations are exact.

use crate::error::{Error, Result};
use rug::Integer;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a group element, one entry per ring variable.
/// Whenever two exponent vectors meet they must have equal length.
pub type ExpVec = Vec<i64>;

/// A Laurent polynomial over Z. The term map never stores zero
/// coefficients and the empty map is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPoly {
    vars: Vec<String>,
    terms: BTreeMap<ExpVec, Integer>,
}

impl GroupPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        GroupPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: impl Into<Integer>) -> Self {
        let mut p = GroupPoly::zero(vars);
        let c = c.into();
        if c != 0 {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn monomial(vars: Vec<String>, exp: ExpVec, coeff: impl Into<Integer>) -> Result<Self> {
        if exp.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: exp.len(),
            });
        }
        let mut p = GroupPoly::zero(vars);
        let c = coeff.into();
        if c != 0 {
            p.terms.insert(exp, c);
        }
        Ok(p)
    }

    pub fn from_terms(
        vars: Vec<String>,
        terms: impl IntoIterator<Item = (ExpVec, Integer)>,
    ) -> Result<Self> {
        let mut p = GroupPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: p.vars.len(),
                    got: e.len(),
                });
            }
            let slot = p.terms.entry(e).or_insert_with(Integer::new);
            *slot += c;
        }
        p.terms.retain(|_, c| *c != 0);
        Ok(p)
    }

    /// Terse constructor for fixed literal data. Panics on malformed input,
    /// so it is only for static tables and tests.
    pub fn build(vars: &[&str], terms: &[(i64, &[i64])]) -> Self {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        GroupPoly::from_terms(
            vars,
            terms
                .iter()
                .map(|(c, e)| (e.to_vec(), Integer::from(*c))),
        )
        .expect("literal polynomial data is well-formed")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &BTreeMap<ExpVec, Integer> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn same_vars(&self, other: &GroupPoly) -> Result<()> {
        if self.vars != other.vars {
            if self.vars.len() != other.vars.len() {
                return Err(Error::DimensionMismatch {
                    expected: self.vars.len(),
                    got: other.vars.len(),
                });
            }
            return Err(Error::VariableMismatch(
                self.vars.clone(),
                other.vars.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupPoly) -> Result<GroupPoly> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let slot = out.terms.entry(e.clone()).or_insert_with(Integer::new);
            *slot += c;
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn sub(&self, other: &GroupPoly) -> Result<GroupPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= -1;
        }
        out
    }

    pub fn scale(&self, k: &Integer) -> GroupPoly {
        let mut out = GroupPoly::zero(self.vars.clone());
        if *k == 0 {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), Integer::from(c * k));
        }
        out
    }

    /// Multiply by the monomial with exponent vector `delta`.
    pub fn shift(&self, delta: &[i64]) -> GroupPoly {
        let mut out = GroupPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let shifted: ExpVec = e.iter().zip(delta).map(|(a, b)| a + b).collect();
            out.terms.insert(shifted, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &GroupPoly) -> Result<GroupPoly> {
        self.same_vars(other)?;
        let mut acc: BTreeMap<ExpVec, Integer> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: ExpVec = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let slot = acc.entry(e).or_insert_with(Integer::new);
                *slot += Integer::from(c1 * c2);
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(GroupPoly {
            vars: self.vars.clone(),
            terms: acc,
        })
    }

    pub fn pow(&self, k: u32) -> GroupPoly {
        let mut out = GroupPoly::constant(self.vars.clone(), 1);
        for _ in 0..k {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Componentwise minimum exponent over the support. None when zero.
    pub fn min_exps(&self) -> Option<ExpVec> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            acc.iter().zip(e).map(|(a, b)| (*a).min(*b)).collect()
        }))
    }

    /// Componentwise maximum exponent over the support. None when zero.
    pub fn max_exps(&self) -> Option<ExpVec> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            acc.iter().zip(e).map(|(a, b)| (*a).max(*b)).collect()
        }))
    }

    /// Exact quotient in the Laurent ring: returns R with Q*R = P, or
    /// `NotDivisible`. Monomials are units here, so divisibility is decided
    /// by the non-unit parts: both operands are shifted to the polynomial
    /// ring and divided by lexicographic leading terms.
    pub fn exact_div(&self, q: &GroupPoly) -> Result<GroupPoly> {
        self.same_vars(q)?;
        if q.is_zero() {
            return Err(Error::ZeroInput("division by the zero polynomial"));
        }
        if self.is_zero() {
            return Ok(GroupPoly::zero(self.vars.clone()));
        }
        let p_min = self.min_exps().expect("nonzero");
        let q_min = q.min_exps().expect("nonzero");
        let neg = |v: &[i64]| -> ExpVec { v.iter().map(|x| -x).collect() };
        let p0 = self.shift(&neg(&p_min));
        let q0 = q.shift(&neg(&q_min));

        let (qe, qc) = q0.terms.iter().next_back().expect("nonzero");
        let qe = qe.clone();
        let qc = qc.clone();
        let mut rem = p0.terms;
        let mut quo: BTreeMap<ExpVec, Integer> = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let me: ExpVec = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            if me.iter().any(|x| *x < 0) || !rc.is_divisible(&qc) {
                return Err(Error::NotDivisible);
            }
            let mc = Integer::from(rc.div_exact_ref(&qc));
            // rem -= mc * x^me * q0; cancels the leading term of rem
            for (e, c) in &q0.terms {
                let target: ExpVec = e.iter().zip(&me).map(|(a, b)| a + b).collect();
                let slot = rem.entry(target).or_insert_with(Integer::new);
                *slot -= Integer::from(c * &mc);
            }
            rem.retain(|_, c| *c != 0);
            quo.insert(me, mc);
        }
        let shift_back: ExpVec = p_min.iter().zip(&q_min).map(|(a, b)| a - b).collect();
        Ok(GroupPoly {
            vars: self.vars.clone(),
            terms: quo,
        }
        .shift(&shift_back))
    }

    /// Negate every exponent in position `var_index` (the substitution
    /// v -> v^-1 for that variable).
    pub fn substitute_inverse(&self, var_index: usize) -> Result<GroupPoly> {
        if var_index >= self.vars.len() {
            return Err(Error::IndexOutOfRange {
                index: var_index,
                len: self.vars.len(),
            });
        }
        let mut out = GroupPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[var_index] = -e[var_index];
            out.terms.insert(e, c.clone());
        }
        Ok(out)
    }

    /// Negate every exponent vector entirely (full reversal g -> -g).
    pub fn reverse_all(&self) -> GroupPoly {
        let mut out = GroupPoly::zero(self.vars.clone());
        for (e, c) in &self.terms {
            out.terms.insert(e.iter().map(|x| -x).collect(), c.clone());
        }
        out
    }

    /// Canonical representative up to multiplication by a unit (+-monomial):
    /// each variable's minimum exponent is shifted to 0 and the sign is
    /// fixed so the lexicographically greatest term has positive
    /// coefficient. Idempotent.
    pub fn normalize_unit(&self) -> Result<GroupPoly> {
        if self.is_zero() {
            return Err(Error::ZeroInput("cannot unit-normalize zero"));
        }
        let mins = self.min_exps().expect("nonzero");
        let neg_mins: ExpVec = mins.iter().map(|x| -x).collect();
        let shifted = self.shift(&neg_mins);
        let lead_negative = shifted
            .terms
            .iter()
            .next_back()
            .map(|(_, c)| *c < 0)
            .expect("nonzero");
        Ok(if lead_negative {
            shifted.neg()
        } else {
            shifted
        })
    }

    /// True iff the polynomial equals its full exponent reversal up to a
    /// unit. Teichmuller polynomials have this symmetry.
    pub fn reversal_symmetric(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroInput("reversal symmetry of zero is undefined"));
        }
        Ok(self.normalize_unit()? == self.reverse_all().normalize_unit()?)
    }

    /// Substitute 1 for the given variable and drop it from the ring.
    pub fn collapse_var(&self, var_index: usize) -> Result<GroupPoly> {
        if var_index >= self.vars.len() {
            return Err(Error::IndexOutOfRange {
                index: var_index,
                len: self.vars.len(),
            });
        }
        let mut vars = self.vars.clone();
        vars.remove(var_index);
        let mut out = GroupPoly::zero(vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.remove(var_index);
            let slot = out.terms.entry(e).or_insert_with(Integer::new);
            *slot += c;
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Dense coefficient list of a one-variable polynomial: returns the
    /// minimum exponent and coefficients from that exponent upward.
    pub fn univariate(&self) -> Result<(i64, Vec<Integer>)> {
        if self.vars.len() != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: self.vars.len(),
            });
        }
        if self.is_zero() {
            return Ok((0, Vec::new()));
        }
        let lo = self.terms.keys().next().expect("nonzero")[0];
        let hi = self.terms.keys().next_back().expect("nonzero")[0];
        let mut coeffs = vec![Integer::new(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            coeffs[(e[0] - lo) as usize] = c.clone();
        }
        Ok((lo, coeffs))
    }
}

impl fmt::Display for GroupPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let negative = *c < 0;
            let mag = Integer::from(c.abs_ref());
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if mag != 1 || e.iter().all(|x| *x == 0) {
                write!(f, "{mag}")?;
                printed = true;
            }
            for (i, exp) in e.iter().enumerate() {
                if *exp == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if *exp != 1 {
                    write!(f, "^{exp}")?;
                }
                printed = true;
            }
        }
        Ok(())
    }
}
