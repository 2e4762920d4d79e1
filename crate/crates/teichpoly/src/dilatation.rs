//! Dilatation of a class in the fibered cone: specialize the polynomial
//! along the class, take the largest root above 1, and minimize that root
//! along a norm-one slice. All root work happens in log space with exact
//! rational exponents; floats only carry the Newton iteration.

use crate::cone::{CohomClass, ConeDesc, Covector};
use crate::error::{Error, Result};
use crate::groupring::GroupPoly;
use crate::real::{self, GUARD_DIGITS};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// A closed segment with rational endpoints inside a norm-one slice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segment {
    pub start: Vec<Rational>,
    pub end: Vec<Rational>,
    /// The covector whose level set the segment lives on, when it came
    /// from one.
    pub covector: Option<Covector>,
}

impl Segment {
    pub fn dim(&self) -> usize {
        self.start.len()
    }

    /// Affine point start + t (end - start), exact.
    pub fn at(&self, t: &Rational) -> Vec<Rational> {
        self.start
            .iter()
            .zip(&self.end)
            .map(|(a, b)| Rational::from(a + Rational::from(Rational::from(b - a) * t)))
            .collect()
    }
}

/// The dilatation of one class, with the evidence that located it.
#[derive(Clone, Debug)]
pub struct DilatationValue {
    pub value: Float,
    /// Absolute value of the exponent-shifted polynomial at the root.
    pub residual: Float,
    /// Sign-verified bracket around the value.
    pub bracket: (Float, Float),
    /// Requested decimal precision.
    pub precision: u32,
}

/// Interior minimum of the dilatation along a segment.
#[derive(Clone, Debug)]
pub struct MinPoint {
    /// Position in (0, 1) along the segment.
    pub parameter: Float,
    pub coordinates: Vec<Float>,
    pub lambda: Float,
    /// Normalized size of the criticality equation at the minimum.
    pub first_order_residual: Float,
    /// Pairing of the coordinates with the slice covector, when present;
    /// the slice construction makes this 1 up to rounding.
    pub norm_check: Option<Float>,
}

/// Coordinates of a minimum point packaged with small-height rational
/// detection per coordinate.
#[derive(Clone, Debug)]
pub struct AModulePresentation {
    pub coordinates: Vec<Float>,
    pub pairing: Float,
    /// True where a rational of denominator within the search bound
    /// matches the coordinate at working precision.
    pub rational_flags: Vec<bool>,
    /// Whether an exclusion certificate backs the unflagged coordinates.
    pub irrationality_certified: bool,
}

/// Support of the polynomial paired against a class: grouped exact
/// exponents with summed coefficients, sorted by descending exponent,
/// zero sums dropped, overall sign fixed so the top coefficient is
/// positive.
fn exponent_terms(p: &GroupPoly, alpha: &CohomClass) -> Result<Vec<(Integer, Rational)>> {
    if p.is_zero() {
        return Err(Error::ZeroInput("zero polynomial has no dilatation"));
    }
    let exact: Vec<Rational> = match alpha {
        CohomClass::Exact(v) => v.clone(),
        CohomClass::Approx { entries, .. } => entries
            .iter()
            .map(|f| {
                f.to_rational()
                    .ok_or(Error::ZeroInput("class entry is not finite"))
            })
            .collect::<Result<_>>()?,
    };
    if exact.len() != p.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: p.num_vars(),
            got: exact.len(),
        });
    }
    let mut grouped: std::collections::BTreeMap<Rational, Integer> = Default::default();
    for (e, c) in p.terms() {
        let mut pairing = Rational::new();
        for (a, b) in exact.iter().zip(e) {
            pairing += Rational::from(a * Rational::from(*b));
        }
        *grouped.entry(pairing).or_default() += c;
    }
    let mut terms: Vec<(Integer, Rational)> = grouped
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(e, c)| (c, e))
        .collect();
    terms.reverse();
    if terms.is_empty() {
        return Err(Error::ZeroInput("class collapses the polynomial to zero"));
    }
    if terms[0].0 < 0 {
        for t in terms.iter_mut() {
            t.0 = Integer::from(-&t.0);
        }
    }
    Ok(terms)
}

/// Shifted evaluation G(x) = sum a_i exp((e_i - e_0) x) and its x-derivative.
fn shifted_eval(terms: &[(Integer, Rational)], x: &Float, bits: u32) -> (Float, Float) {
    let e0 = &terms[0].1;
    let mut g = Float::with_val(bits, 0);
    let mut dg = Float::with_val(bits, 0);
    for (a, e) in terms {
        let delta = Float::with_val(bits, Rational::from(e - e0));
        let term = Float::with_val(bits, &delta * x).exp() * Float::with_val(bits, a);
        g += &term;
        dg += term * delta;
    }
    (g, dg)
}

fn float_sign(f: &Float) -> i32 {
    if f.is_zero() {
        0
    } else if f.is_sign_positive() {
        1
    } else {
        -1
    }
}

/// Largest x > 0 with G(x) = 0, where G is the exponent-shifted
/// specialization. Returns (x, residual, verified x-bracket).
fn largest_root_ln(
    terms: &[(Integer, Rational)],
    bits: u32,
) -> Result<(Float, Float, (Float, Float))> {
    if terms.len() == 1 {
        return Err(Error::NoRootAboveOne);
    }
    // strict upper bound on roots above 1: for k > 1,
    // |tail| <= S k^(e0 - gap) with S = sum |a_i| / a_0, so any root obeys
    // k^gap <= S; widening the exponent to 1/min(gap,1) never shrinks the
    // bound when it matters
    let a0 = Float::with_val(bits, &terms[0].0);
    let mut s = Float::with_val(bits, 0);
    for (a, _) in &terms[1..] {
        s += Float::with_val(bits, Integer::from(a.abs_ref()));
    }
    s /= &a0;
    let gap = Rational::from(&terms[0].1 - &terms[1].1);
    let gap = if gap > 1 { Rational::from(1) } else { gap };
    let gap_f = Float::with_val(bits, &gap);
    let x_max: Float = if s <= 0 {
        return Err(Error::NoRootAboveOne);
    } else {
        let u = Float::with_val(bits, s.clone().ln() / &gap_f).exp() + 1u32;
        u.ln() * 1.0001f64
    };

    // scan downward for the highest sign change, densifying on misses
    let mut bracket: Option<(Float, Float)> = None;
    'densities: for n in [64u32, 256, 1024, 4096, 16384] {
        let mut prev_x = x_max.clone();
        let mut prev_s = float_sign(&shifted_eval(terms, &prev_x, bits).0);
        for j in 1..=n {
            let x = Float::with_val(bits, &x_max * Float::with_val(bits, (n - j) as f64 / n as f64));
            let sgn = float_sign(&shifted_eval(terms, &x, bits).0);
            if prev_s > 0 && sgn <= 0 {
                bracket = Some((x, prev_x));
                break 'densities;
            }
            prev_x = x;
            prev_s = sgn;
        }
    }
    let (mut lo, mut hi) = bracket.ok_or(Error::NoRootAboveOne)?;

    // bisect enough for Newton to take over, keeping G(hi) > 0
    for _ in 0..48 {
        let mid = Float::with_val(bits, &lo + &hi) / 2u32;
        let s = float_sign(&shifted_eval(terms, &mid, bits).0);
        if s > 0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let mut x = Float::with_val(bits, &lo + &hi) / 2u32;
    let tiny = Float::with_val(bits, 2f64).pow_int(-((bits as i64) - 8));
    let mut last_step = Float::with_val(bits, 1);
    for _ in 0..80 {
        let (g, dg) = shifted_eval(terms, &x, bits);
        let scale: Float = Float::with_val(bits, dg.abs_ref());
        if scale < Float::with_val(bits, 2f64).pow_int(-(bits as i64) / 2) {
            return Err(Error::DegenerateRoot);
        }
        let step = g / dg;
        x -= &step;
        last_step = Float::with_val(bits, step.abs_ref());
        if last_step < tiny {
            break;
        }
    }
    if x <= Float::with_val(bits, 2f64).pow_int(-(bits as i64) / 2) {
        return Err(Error::NoRootAboveOne);
    }

    // sign-verified bracket
    let mut delta: Float = Float::with_val(bits, last_step.max(&Float::with_val(bits, 2f64).pow_int(-((bits as i64) - 24)))) * 4u32;
    for _ in 0..24 {
        let xl = Float::with_val(bits, &x - &delta);
        let xr = Float::with_val(bits, &x + &delta);
        let sl = float_sign(&shifted_eval(terms, &xl, bits).0);
        let sr = float_sign(&shifted_eval(terms, &xr, bits).0);
        if sl * sr < 0 {
            let residual = Float::with_val(bits, shifted_eval(terms, &x, bits).0.abs_ref());
            return Ok((x, residual, (xl, xr)));
        }
        delta *= 4u32;
    }
    Err(Error::RootIsolation("no verified sign change around the root"))
}

trait PowInt {
    fn pow_int(self, e: i64) -> Float;
}

impl PowInt for Float {
    fn pow_int(self, e: i64) -> Float {
        let prec = self.prec();
        Float::with_val(prec, self.pow(e))
    }
}

/// Dilatation of a class: the largest root above 1 of the polynomial
/// specialized along the class.
pub fn eval_lambda(p: &GroupPoly, alpha: &CohomClass, prec_digits: u32) -> Result<DilatationValue> {
    let bits = real::bits(prec_digits + GUARD_DIGITS);
    let terms = exponent_terms(p, alpha)?;
    let (x, residual, (xl, xr)) = largest_root_ln(&terms, bits)?;
    Ok(DilatationValue {
        value: Float::with_val(bits, x.exp_ref()),
        residual,
        bracket: (
            Float::with_val(bits, xl.exp_ref()),
            Float::with_val(bits, xr.exp_ref()),
        ),
        precision: prec_digits,
    })
}

/// First variation of the dilatation when the class moves along v:
/// with F(k) = sum a_g k^<alpha,g>, implicit differentiation gives
/// dL/de = -L ln L (sum a_g <v,g> L^e_g) / (sum a_g e_g L^e_g).
pub fn directional_derivative(
    p: &GroupPoly,
    alpha: &CohomClass,
    v: &CohomClass,
    prec_digits: u32,
) -> Result<Float> {
    let bits = real::bits(prec_digits + GUARD_DIGITS);
    if v.len() != p.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: p.num_vars(),
            got: v.len(),
        });
    }
    let lambda = eval_lambda(p, alpha, prec_digits)?;
    let x = Float::with_val(bits, lambda.value.ln_ref());
    // group on (pairing with alpha) while carrying the v-pairing weights
    let terms = exponent_terms(p, alpha)?;
    let e0 = terms[0].1.clone();
    let mut num = Float::with_val(bits, 0);
    let mut den = Float::with_val(bits, 0);
    let mut scale = Float::with_val(bits, 0);
    for (e, c) in p.terms() {
        let ea = match alpha.pair(e)? {
            crate::cone::Scalar::Exact(q) => q,
            crate::cone::Scalar::Approx(f) => f
                .to_rational()
                .ok_or(Error::ZeroInput("class entry is not finite"))?,
        };
        let ev = v.pair(e)?.to_float(bits);
        let shift = Float::with_val(bits, Rational::from(&ea - &e0));
        let weight = Float::with_val(bits, &shift * &x).exp() * Float::with_val(bits, c);
        num += Float::with_val(bits, &weight * &ev);
        den += Float::with_val(bits, &weight * &Float::with_val(bits, &ea));
        scale += Float::with_val(bits, weight.abs_ref()) * Float::with_val(bits, ea.abs());
    }
    if Float::with_val(bits, den.abs_ref()) < scale * Float::with_val(bits, 2f64).pow_int(-(bits as i64) / 2) {
        return Err(Error::DegenerateRoot);
    }
    let ln_l = Float::with_val(bits, lambda.value.ln_ref());
    Ok(-Float::with_val(bits, &lambda.value * &ln_l) * num / den)
}

/// The norm-one segment cut out of a two-dimensional cone by a covector:
/// each extreme ray is scaled to pairing 1 and the lexicographically
/// smaller endpoint comes first.
pub fn segment_from_covector(cone: &ConeDesc, w: &Covector) -> Result<Segment> {
    if cone.dim() != 2 {
        return Err(Error::SegmentDimension(cone.dim()));
    }
    if w.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: w.len(),
        });
    }
    // candidate rays: boundary directions of each inequality that the
    // remaining inequalities accept in closure
    let mut rays: Vec<(i64, i64)> = Vec::new();
    for ineq in cone.inequalities() {
        let (a, b) = (ineq.0[0], ineq.0[1]);
        for cand in [(-b, a), (b, -a)] {
            if cand == (0, 0) {
                continue;
            }
            let ok = cone
                .inequalities()
                .iter()
                .all(|c| c.0[0] as i128 * cand.0 as i128 + c.0[1] as i128 * cand.1 as i128 >= 0);
            if ok && !rays.iter().any(|r| crate::cone::parallel(&[r.0, r.1], &[cand.0, cand.1])) {
                rays.push(cand);
            }
        }
    }
    if rays.len() != 2 {
        return Err(Error::SegmentDimension(rays.len()));
    }
    let mut endpoints = Vec::new();
    for (r0, r1) in rays {
        let pairing = w.0[0] * r0 + w.0[1] * r1;
        if pairing <= 0 {
            return Err(Error::CovectorNotPositive);
        }
        endpoints.push(vec![
            Rational::from((r0, pairing)),
            Rational::from((r1, pairing)),
        ]);
    }
    endpoints.sort();
    Ok(Segment {
        start: endpoints[0].clone(),
        end: endpoints[1].clone(),
        covector: Some(w.clone()),
    })
}

/// Support data along a segment: per grouped exponent pair, the summed
/// coefficient, the pairing with the start point, and the pairing with the
/// direction, so the exponent at parameter t is c + t b.
pub fn slice_support(p: &GroupPoly, seg: &Segment) -> Result<Vec<(Integer, Rational, Rational)>> {
    if p.is_zero() {
        return Err(Error::ZeroInput("zero polynomial has no dilatation"));
    }
    if seg.dim() != p.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: p.num_vars(),
            got: seg.dim(),
        });
    }
    let dir: Vec<Rational> = seg
        .start
        .iter()
        .zip(&seg.end)
        .map(|(a, b)| Rational::from(b - a))
        .collect();
    let mut grouped: std::collections::BTreeMap<(Rational, Rational), Integer> = Default::default();
    for (e, coeff) in p.terms() {
        let mut c = Rational::new();
        let mut b = Rational::new();
        for ((s, d), k) in seg.start.iter().zip(&dir).zip(e) {
            c += Rational::from(s * Rational::from(*k));
            b += Rational::from(d * Rational::from(*k));
        }
        *grouped.entry((c, b)).or_default() += coeff;
    }
    let out: Vec<(Integer, Rational, Rational)> = grouped
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((c, b), coeff)| (coeff, c, b))
        .collect();
    if out.is_empty() {
        return Err(Error::ZeroInput("segment collapses the polynomial to zero"));
    }
    Ok(out)
}

fn terms_at(
    support: &[(Integer, Rational, Rational)],
    t: &Rational,
) -> Vec<(Integer, Rational)> {
    let mut grouped: std::collections::BTreeMap<Rational, Integer> = Default::default();
    for (coeff, c, b) in support {
        let e = Rational::from(c + Rational::from(b * t));
        *grouped.entry(e).or_default() += coeff;
    }
    let mut terms: Vec<(Integer, Rational)> = grouped
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(e, c)| (c, e))
        .collect();
    terms.reverse();
    if !terms.is_empty() && terms[0].0 < 0 {
        for t in terms.iter_mut() {
            t.0 = Integer::from(-&t.0);
        }
    }
    terms
}

/// ln lambda at segment parameter t, at scouting precision.
fn ln_lambda_at(
    support: &[(Integer, Rational, Rational)],
    t: &Rational,
    bits: u32,
) -> Result<Float> {
    let terms = terms_at(support, t);
    if terms.len() <= 1 {
        return Err(Error::NoRootAboveOne);
    }
    let (x, _, _) = largest_root_ln(&terms, bits)?;
    Ok(x)
}

/// Minimize the dilatation along a segment: coarse scan, golden-section
/// narrowing, then a full-precision Newton iteration on the pair
/// (parameter, ln lambda) solving value = 0 and criticality = 0.
pub fn minimize_on_slice(p: &GroupPoly, seg: &Segment, prec_digits: u32) -> Result<MinPoint> {
    let bits = real::bits(prec_digits + GUARD_DIGITS);
    let scout_bits = real::bits(20);
    let support = slice_support(p, seg)?;

    // coarse scan over the open segment
    let n = 64u32;
    let mut best: Option<(u32, Float)> = None;
    for k in 1..n {
        let t = Rational::from((k, n));
        let x = ln_lambda_at(&support, &t, scout_bits)?;
        if best.as_ref().map_or(true, |(_, bx)| x < *bx) {
            best = Some((k, x));
        }
    }
    let (k0, _) = best.expect("scan is nonempty");
    if k0 == 1 || k0 == n - 1 {
        return Err(Error::MinimumAtBoundary);
    }

    // golden-section narrowing inside the bracketing cells
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut a = (k0 - 1) as f64 / n as f64;
    let mut b = (k0 + 1) as f64 / n as f64;
    let to_rat = |v: f64| Rational::from_f64(v).expect("finite parameter");
    let eval = |v: f64| -> Result<Float> { ln_lambda_at(&support, &to_rat(v), scout_bits) };
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    for _ in 0..60 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = eval(d)?;
        }
    }
    let t_seed = (a + b) / 2.0;

    // full-precision Newton on (s, x): F1 = sum a E = 0, F2 = sum a b E = 0
    // with E = exp((c + s b - shift) x); the shift is frozen at the seed
    let seed_terms = terms_at(&support, &to_rat(t_seed));
    if seed_terms.len() <= 1 {
        return Err(Error::NoRootAboveOne);
    }
    let shift = seed_terms[0].1.clone();
    let mut s = Float::with_val(bits, t_seed);
    let mut x = Float::with_val(bits, ln_lambda_at(&support, &to_rat(t_seed), bits)?);
    let tiny = Float::with_val(bits, 2f64).pow_int(-((bits as i64) - 12));
    let mut converged = false;
    for _ in 0..90 {
        let mut f1 = Float::with_val(bits, 0);
        let mut f2 = Float::with_val(bits, 0);
        let mut j11 = Float::with_val(bits, 0); // dF1/ds
        let mut j12 = Float::with_val(bits, 0); // dF1/dx
        let mut j21 = Float::with_val(bits, 0); // dF2/ds
        let mut j22 = Float::with_val(bits, 0); // dF2/dx
        for (coeff, c, b) in &support {
            let bf = Float::with_val(bits, b);
            let ef = Float::with_val(bits, Rational::from(c - &shift)) + Float::with_val(bits, &bf * &s);
            let e = Float::with_val(bits, &ef * &x).exp() * Float::with_val(bits, coeff);
            f1 += &e;
            f2 += Float::with_val(bits, &e * &bf);
            j11 += Float::with_val(bits, &e * &bf) * &x;
            j12 += Float::with_val(bits, &e * &ef);
            j21 += Float::with_val(bits, &e * &bf) * Float::with_val(bits, &bf * &x);
            j22 += Float::with_val(bits, &e * &bf) * &ef;
        }
        let det = Float::with_val(bits, &j11 * &j22) - Float::with_val(bits, &j12 * &j21);
        if det.is_zero() {
            return Err(Error::DegenerateRoot);
        }
        let ds = (Float::with_val(bits, &f1 * &j22) - Float::with_val(bits, &f2 * &j12)) / &det;
        let dx = (Float::with_val(bits, &f2 * &j11) - Float::with_val(bits, &f1 * &j21)) / &det;
        s -= &ds;
        x -= &dx;
        let step = Float::with_val(bits, ds.abs_ref()).max(&Float::with_val(bits, dx.abs_ref()));
        if step < tiny {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::DegenerateRoot);
    }
    if s <= 0 || s >= 1 {
        return Err(Error::MinimumAtBoundary);
    }

    // residuals and coordinates at the converged point
    let mut f2 = Float::with_val(bits, 0);
    let mut f2_scale = Float::with_val(bits, 0);
    for (coeff, c, b) in &support {
        let bf = Float::with_val(bits, b);
        let ef = Float::with_val(bits, Rational::from(c - &shift)) + Float::with_val(bits, &bf * &s);
        let e = Float::with_val(bits, &ef * &x).exp() * Float::with_val(bits, coeff);
        let term = Float::with_val(bits, &e * &bf);
        f2 += &term;
        f2_scale += Float::with_val(bits, term.abs_ref());
    }
    let first_order_residual = if f2_scale.is_zero() {
        Float::with_val(bits, 0)
    } else {
        Float::with_val(bits, f2.abs_ref()) / f2_scale
    };
    let coordinates: Vec<Float> = seg
        .start
        .iter()
        .zip(&seg.end)
        .map(|(p0, p1)| {
            Float::with_val(bits, p0) + Float::with_val(bits, Rational::from(p1 - p0)) * &s
        })
        .collect();
    let norm_check = seg.covector.as_ref().map(|w| {
        let mut acc = Float::with_val(bits, 0);
        for (wi, ci) in w.0.iter().zip(&coordinates) {
            acc += Float::with_val(bits, ci * Float::with_val(bits, *wi));
        }
        acc
    });
    Ok(MinPoint {
        parameter: s,
        coordinates,
        lambda: Float::with_val(bits, x.exp_ref()),
        first_order_residual,
        norm_check,
    })
}

/// Present minimum-point coordinates against a covector, flagging each
/// coordinate that a small-height rational reproduces at precision.
pub fn a_module_presentation(
    point: &MinPoint,
    w: &Covector,
    denominator_bound: u64,
    irrationality_certified: bool,
) -> Result<AModulePresentation> {
    if w.len() != point.coordinates.len() {
        return Err(Error::DimensionMismatch {
            expected: point.coordinates.len(),
            got: w.len(),
        });
    }
    let bits = point.coordinates[0].prec();
    let mut pairing = Float::with_val(bits, 0);
    for (wi, ci) in w.0.iter().zip(&point.coordinates) {
        pairing += Float::with_val(bits, ci * Float::with_val(bits, *wi));
    }
    let gap = Float::with_val(bits, &pairing - Float::with_val(bits, 1));
    if Float::with_val(bits, gap.abs_ref()) > Float::with_val(bits, 2f64).pow_int(-((bits as i64) / 3)) {
        return Err(Error::NormCheckFar(format!(
            "slice pairing {} is not 1",
            real::decimal_of_float(&pairing, 10)
        )));
    }
    let tol = Float::with_val(bits, 2f64).pow_int(-((bits as i64) / 2));
    let rational_flags = point
        .coordinates
        .iter()
        .map(|c| {
            let cq = match c.to_rational() {
                Some(q) => q,
                None => return false,
            };
            for q in 1..=denominator_bound {
                let scaled = Rational::from(&cq * Integer::from(q));
                let (n, _) = scaled.numer().clone().div_rem_round(scaled.denom().clone());
                let cand = Rational::from((n, Integer::from(q)));
                let err = Float::with_val(bits, Rational::from(&cq - &cand));
                if Float::with_val(bits, err.abs_ref()) < tol {
                    return true;
                }
            }
            false
        })
        .collect();
    Ok(AModulePresentation {
        coordinates: point.coordinates.clone(),
        pairing,
        rational_flags,
        irrationality_certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::fibered_cone;
    use crate::presets::example1_theta;
    use proptest::prelude::*;

    fn assert_close(value: &Float, decimal: &str, tol: f64) {
        let target = real::parse_rational(decimal).unwrap();
        let diff = Float::with_val(value.prec(), value - Float::with_val(value.prec(), &target));
        assert!(
            diff.clone().abs() < tol,
            "value {} vs {} (diff {})",
            real::decimal_of_float(value, 30),
            decimal,
            real::decimal_of_float(&diff, 30)
        );
    }

    #[test]
    fn golden_ratio_family() {
        let p = GroupPoly::build(&["u"], &[(1, &[2]), (-3, &[1]), (1, &[0])]);
        let l1 = eval_lambda(&p, &CohomClass::exact_ints(&[1]), 50).unwrap();
        assert_close(&l1.value, "2.6180339887498948482045868343656381177203091798058", 1e-45);
        assert!(l1.residual < 1e-45);
        assert!(l1.bracket.0 < l1.value && l1.value < l1.bracket.1);

        // doubling the class takes the square root of the dilatation
        let l2 = eval_lambda(&p, &CohomClass::exact_ints(&[2]), 50).unwrap();
        assert_close(&l2.value, "1.6180339887498948482045868343656381177203091798058", 1e-45);
    }

    #[test]
    fn no_root_above_one_cases() {
        let pos = GroupPoly::build(&["u"], &[(1, &[1]), (2, &[0])]);
        assert!(matches!(
            eval_lambda(&pos, &CohomClass::exact_ints(&[1]), 30),
            Err(Error::NoRootAboveOne)
        ));
        let at_one = GroupPoly::build(&["u"], &[(1, &[1]), (-1, &[0])]);
        assert!(matches!(
            eval_lambda(&at_one, &CohomClass::exact_ints(&[1]), 30),
            Err(Error::NoRootAboveOne)
        ));
        let mono = GroupPoly::build(&["u"], &[(5, &[3])]);
        assert!(matches!(
            eval_lambda(&mono, &CohomClass::exact_ints(&[1]), 30),
            Err(Error::NoRootAboveOne)
        ));
    }

    #[test]
    fn fractional_classes_take_roots_of_powers() {
        // along (1/3), exponents scale by 1/3, so lambda cubes
        let p = GroupPoly::build(&["u"], &[(1, &[2]), (-3, &[1]), (1, &[0])]);
        let l = eval_lambda(
            &p,
            &CohomClass::Exact(vec![Rational::from((1, 3))]),
            50,
        )
        .unwrap();
        let whole = eval_lambda(&p, &CohomClass::exact_ints(&[1]), 50).unwrap();
        let cubed = Float::with_val(l.value.prec(), (&whole.value).pow(3));
        let diff = Float::with_val(l.value.prec(), &l.value - &cubed);
        assert!(diff.abs() < 1e-40);
    }

    #[test]
    fn segment_construction_from_the_absolute_value_cone() {
        let cone = fibered_cone(&example1_theta(), &CohomClass::exact_ints(&[1, 0])).unwrap();
        let seg = segment_from_covector(&cone, &Covector(vec![3, 1])).unwrap();
        assert_eq!(
            seg.start,
            vec![Rational::from((1, 4)), Rational::from((1, 4))]
        );
        assert_eq!(
            seg.end,
            vec![Rational::from((1, 2)), Rational::from((-1, 2))]
        );
        assert!(matches!(
            segment_from_covector(&cone, &Covector(vec![0, 1])),
            Err(Error::CovectorNotPositive)
        ));
    }

    #[test]
    fn segment_needs_dimension_two() {
        let cone = fibered_cone(
            &crate::presets::magic_theta(),
            &CohomClass::exact_ints(&[7, 2, 1]),
        )
        .unwrap();
        assert!(matches!(
            segment_from_covector(&cone, &Covector(vec![1, 1, 1])),
            Err(Error::SegmentDimension(3))
        ));
    }

    #[test]
    fn minimum_on_the_first_example_slice() {
        let theta = example1_theta();
        let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0])).unwrap();
        let seg = segment_from_covector(&cone, &Covector(vec![3, 1])).unwrap();
        let min = minimize_on_slice(&theta, &seg, 50).unwrap();
        // the first coordinate of the minimizer and its dilatation
        assert_close(
            &min.coordinates[0],
            "0.36500242871384123658094369221",
            1e-20,
        );
        assert_close(&min.lambda, "11506.2184988813862692424208919", 1e-18);
        assert!(min.first_order_residual < 1e-40);
        let norm = min.norm_check.clone().unwrap();
        let bits = norm.prec();
        let gap = Float::with_val(bits, &norm - Float::with_val(bits, 1));
        assert!(gap.abs() < 1e-40);
    }

    #[test]
    fn boundary_minimum_is_reported() {
        // restrict the slice to the right of the true minimum
        let theta = example1_theta();
        let seg = Segment {
            start: vec![Rational::from((2, 5)), Rational::from((-1, 5))],
            end: vec![Rational::from((1, 2)), Rational::from((-1, 2))],
            covector: Some(Covector(vec![3, 1])),
        };
        assert!(matches!(
            minimize_on_slice(&theta, &seg, 30),
            Err(Error::MinimumAtBoundary)
        ));
    }

    #[test]
    fn presentation_flags_small_rationals() {
        let theta = example1_theta();
        let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0])).unwrap();
        let seg = segment_from_covector(&cone, &Covector(vec![3, 1])).unwrap();
        let min = minimize_on_slice(&theta, &seg, 50).unwrap();
        let pres = a_module_presentation(&min, &Covector(vec![3, 1]), 72, true).unwrap();
        // the minimizer coordinates are irrational, so nothing within
        // denominator 72 reproduces them at working precision
        assert_eq!(pres.rational_flags, vec![false, false]);
        assert!(pres.irrationality_certified);

        // a handcrafted point with rational coordinates flags positive
        let bits = min.coordinates[0].prec();
        let fake = MinPoint {
            parameter: Float::with_val(bits, 0.5),
            coordinates: vec![
                Float::with_val(bits, Rational::from((1, 3))),
                Float::with_val(bits, 0),
            ],
            lambda: Float::with_val(bits, 2),
            first_order_residual: Float::with_val(bits, 0),
            norm_check: None,
        };
        let pres = a_module_presentation(&fake, &Covector(vec![3, 1]), 10, false).unwrap();
        assert_eq!(pres.rational_flags, vec![true, true]);

        // a pairing far from 1 refuses
        let off = MinPoint {
            coordinates: vec![
                Float::with_val(bits, 1),
                Float::with_val(bits, 1),
            ],
            ..fake
        };
        assert!(matches!(
            a_module_presentation(&off, &Covector(vec![3, 1]), 10, false),
            Err(Error::NormCheckFar(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn scaling_the_class_takes_powers(num in 1i64..=4, den in 1i64..=4) {
            // lambda(alpha / n) = lambda(alpha)^n, tested through scaling
            let p = GroupPoly::build(&["u", "t"], &[(1, &[2, 1]), (-4, &[1, 0]), (1, &[0, 0])]);
            let alpha = CohomClass::Exact(vec![Rational::from(1), Rational::from((num, den))]);
            let scaled = alpha.scale(&Rational::from((1, 2)));
            let l1 = eval_lambda(&p, &alpha, 50).unwrap();
            let l2 = eval_lambda(&p, &scaled, 50).unwrap();
            let bits = l1.value.prec();
            let square = Float::with_val(bits, l1.value.ln_ref());
            let double = Float::with_val(bits, l2.value.ln_ref()) / 2u32;
            let diff = Float::with_val(bits, &square - &double);
            prop_assert!(diff.abs() < 1e-40);
        }

        #[test]
        fn derivative_matches_finite_differences(vn in -3i64..=3, vt in -3i64..=3) {
            prop_assume!(vn != 0 || vt != 0);
            let theta = example1_theta();
            let alpha = CohomClass::exact_ints(&[3, 1]);
            let v = CohomClass::exact_ints(&[vn, vt]);
            let exact = directional_derivative(&theta, &alpha, &v, 50).unwrap();
            let h = Rational::from((1, 1u64 << 30));
            let plus = CohomClass::Exact(vec![
                Rational::from(3) + Rational::from(vn) * h.clone(),
                Rational::from(1) + Rational::from(vt) * h.clone(),
            ]);
            let minus = CohomClass::Exact(vec![
                Rational::from(3) - Rational::from(vn) * h.clone(),
                Rational::from(1) - Rational::from(vt) * h.clone(),
            ]);
            let lp = eval_lambda(&theta, &plus, 50).unwrap();
            let lm = eval_lambda(&theta, &minus, 50).unwrap();
            let bits = lp.value.prec();
            let fd = Float::with_val(bits, &lp.value - &lm.value)
                / (Float::with_val(bits, &h) * 2u32);
            let denom = Float::with_val(bits, exact.abs_ref()).max(&Float::with_val(bits, 1));
            let rel = Float::with_val(bits, &exact - &fd) / denom;
            prop_assert!(rel.abs() < 1e-6, "exact {} fd {}", exact, fd);
        }
    }
}
