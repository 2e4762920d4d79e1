//! Irrationality certificates for minimizers on norm-one slices. The
//! chain is: rewrite the value and criticality equations as integer
//! polynomials in two algebraically independent monomials X and Y,
//! eliminate X, reduce the palindromic eliminant, certify minimality mod a
//! small prime, bound the denominators a rational critical ratio could
//! have, and exclude them all against a rigorous enclosure.

use crate::dilatation::{minimize_on_slice, slice_support, Segment};
use crate::error::{Error, Result};
use crate::groupring::GroupPoly;
use crate::intpoly::IntPoly;
use crate::real::{self, GUARD_DIGITS};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// The value polynomial V and criticality polynomial W in the monomials
/// X = lambda^x_exponent and Y = lambda^(y_exponent_base + y_exponent_slope t),
/// where t is the segment parameter.
#[derive(Clone, Debug)]
pub struct CriticalSystem {
    pub value: GroupPoly,
    pub derivative: GroupPoly,
    pub x_exponent: Rational,
    pub y_exponent_base: Rational,
    pub y_exponent_slope: Rational,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Irrational,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct IrrationalityCertificate {
    pub system: CriticalSystem,
    /// Reduced eliminant of A = Y + 1/Y, before rational-root removal.
    pub eliminant: IntPoly,
    /// Palindromic annihilator of Y built from the rational-root-free core.
    pub y_annihilator: IntPoly,
    /// Degree bound D on the algebraic number behind the ratio.
    pub degree_bound: u64,
    /// Scaling constant c = lcm(|lead|, |const|) of the annihilator.
    pub scaling: Integer,
    /// Denominator bound B = D * max_p v_p(c); zero when c is a unit.
    pub denominator_bound: u64,
    /// First prime under 100 certifying the core irreducible, if any.
    pub minimality_prime: Option<u64>,
    pub x_enclosure: (Rational, Rational),
    pub y_enclosure: (Rational, Rational),
    /// Rigorous outward enclosure of ln X / ln Y.
    pub ratio_enclosure: (Rational, Rational),
    /// Whether every rational with denominator within the scan bound
    /// avoids the ratio enclosure.
    pub excluded: bool,
    pub verdict: Verdict,
    pub hypotheses: String,
}

/// Divide out all factors of the form (v - 1), one variable at a time.
/// Such factors only contribute roots on the unit torus and would degrade
/// the elimination step.
pub fn strip_unit_linear_factors(p: &GroupPoly) -> GroupPoly {
    let mut out = p.clone();
    let vars = p.vars().to_vec();
    for (i, _) in vars.iter().enumerate() {
        let mut exps = vec![0i64; vars.len()];
        exps[i] = 1;
        let factor = GroupPoly::from_terms(
            vars.clone(),
            vec![
                (exps, Integer::from(1)),
                (vec![0; vars.len()], Integer::from(-1)),
            ],
        )
        .expect("factor exponents match the ring");
        while let Ok(q) = out.exact_div(&factor) {
            if q.is_zero() {
                break;
            }
            out = q;
        }
    }
    out
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn to_i128(x: &Integer) -> Result<i128> {
    x.to_i128()
        .ok_or(Error::ShapeMismatch("exponent lattice entry overflows".into()))
}

/// Build the two-monomial rewriting of the slice support. The exponent
/// functionals c + t b are scaled integral by L and their integer span
/// gets the Hermite-style basis (x0, 0), (w, y0). The offset w is pinned
/// by requiring the Y exponent at the hinted parameter to land in
/// (0, x0], which does not depend on how the segment is parameterized and
/// keeps Y above one at the minimum.
pub fn build_critical_system(
    support: &[(Integer, Rational, Rational)],
    t_hint: &Rational,
) -> Result<CriticalSystem> {
    if support.iter().all(|(_, _, b)| *b == 0) {
        return Err(Error::ZeroDerivative);
    }
    // scale the exponent functionals integral
    let mut l = Integer::from(1);
    for (_, c, b) in support {
        l = l.lcm(c.denom()).lcm(b.denom());
    }
    let lq = Rational::from(&l);
    let mut pts: Vec<(Integer, i128, i128)> = Vec::new();
    for (a, c, b) in support {
        let ci = Rational::from(c * &lq);
        let bi = Rational::from(b * &lq);
        debug_assert!(*ci.denom() == 1 && *bi.denom() == 1);
        pts.push((a.clone(), to_i128(ci.numer())?, to_i128(bi.numer())?));
    }

    // fold an extended gcd over the direction components, tracking the
    // matching combination of constant components
    let mut y0: i128 = 0;
    let mut w: i128 = 0;
    for (_, c, b) in &pts {
        let (g, x, y) = egcd(y0, *b);
        w = x * w + y * c;
        y0 = g;
    }
    debug_assert!(y0 > 0);

    let mut x0: i128 = 0;
    for (_, c, b) in &pts {
        let resid = c - (b / y0) * w;
        x0 = egcd(x0, resid).0;
    }

    let mut y0 = y0;
    let hint_value = |w: i128, y0: i128| -> Rational {
        Rational::from(Integer::from(w)) + Rational::from(Integer::from(y0)) * t_hint.clone()
    };
    if x0 > 0 {
        // unique shift of w by a multiple of x0 putting the hinted
        // exponent value into (0, x0]
        let r = hint_value(w, y0) / Rational::from(Integer::from(x0));
        let steps = Integer::from(r.ceil().numer() - 1);
        w -= to_i128(&steps)? * x0;
    } else if hint_value(w, y0) <= 0 {
        // rank-one exponent span: only a sign flip is available
        w = -w;
        y0 = -y0;
    }

    let mut value_terms = Vec::new();
    let mut deriv_terms = Vec::new();
    for (a, c, b) in &pts {
        let n = b / y0;
        let resid = c - n * w;
        let m = if x0 > 0 {
            debug_assert!(resid % x0 == 0);
            resid / x0
        } else {
            debug_assert!(resid == 0);
            0
        };
        value_terms.push((vec![m as i64, n as i64], a.clone()));
        let bw = Integer::from(a * Integer::from(*b));
        if bw != 0 {
            deriv_terms.push((vec![m as i64, n as i64], bw));
        }
    }
    let vars = vec!["X".to_string(), "Y".to_string()];
    let value = GroupPoly::from_terms(vars.clone(), value_terms)?.normalize_unit()?;
    let derivative = GroupPoly::from_terms(vars, deriv_terms)?.normalize_unit()?;
    Ok(CriticalSystem {
        value,
        derivative,
        x_exponent: Rational::from((Integer::from(x0), l.clone())),
        y_exponent_base: Rational::from((Integer::from(w), l.clone())),
        y_exponent_slope: Rational::from((Integer::from(y0), l)),
    })
}

/// Coefficients of a polynomial with respect to one variable, each a
/// polynomial in the remaining variables. Requires nonnegative exponents
/// in the selected variable.
fn var_coefficients(p: &GroupPoly, var_idx: usize) -> Result<Vec<GroupPoly>> {
    let deg = p
        .terms()
        .keys()
        .map(|e| e[var_idx])
        .max()
        .ok_or(Error::ZeroInput("zero polynomial has no coefficients"))?;
    if p.terms().keys().any(|e| e[var_idx] < 0) {
        return Err(Error::ShapeMismatch(
            "resultant input must be cleared in the eliminated variable".into(),
        ));
    }
    let rest_vars: Vec<String> = p
        .vars()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != var_idx)
        .map(|(_, v)| v.clone())
        .collect();
    let mut buckets: Vec<Vec<(Vec<i64>, Integer)>> = vec![Vec::new(); (deg + 1) as usize];
    for (e, c) in p.terms() {
        let mut rest: Vec<i64> = Vec::with_capacity(e.len() - 1);
        for (i, x) in e.iter().enumerate() {
            if i != var_idx {
                rest.push(*x);
            }
        }
        buckets[e[var_idx] as usize].push((rest, c.clone()));
    }
    buckets
        .into_iter()
        .map(|terms| GroupPoly::from_terms(rest_vars.clone(), terms))
        .collect()
}

/// Sylvester resultant eliminating the named variable, computed as a
/// polynomial determinant over the remaining variables.
pub fn resultant(a: &GroupPoly, b: &GroupPoly, var: &str) -> Result<GroupPoly> {
    if a.vars() != b.vars() {
        return Err(Error::VariableMismatch(
            a.vars().to_vec(),
            b.vars().to_vec(),
        ));
    }
    let var_idx = a
        .vars()
        .iter()
        .position(|v| v == var)
        .ok_or_else(|| Error::VariableMismatch(a.vars().to_vec(), vec![var.to_string()]))?;
    let ca = var_coefficients(a, var_idx)?;
    let cb = var_coefficients(b, var_idx)?;
    let (da, db) = (ca.len() - 1, cb.len() - 1);
    if da == 0 || db == 0 {
        return Err(Error::DegenerateDegrees);
    }
    let n = da + db;
    let rest_vars = ca[0].vars().to_vec();
    let zero = GroupPoly::zero(rest_vars.clone());
    let mut rows: Vec<Vec<GroupPoly>> = Vec::with_capacity(n);
    for i in 0..db {
        let mut row = vec![zero.clone(); n];
        for (k, c) in ca.iter().enumerate() {
            row[i + (da - k)] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..da {
        let mut row = vec![zero.clone(); n];
        for (k, c) in cb.iter().enumerate() {
            row[i + (db - k)] = c.clone();
        }
        rows.push(row);
    }
    let m = crate::polymat::PolyMatrix::from_rows(rows)?;
    m.det_with_limit(n)
}

/// Fraction-free determinant of an integer matrix.
fn bareiss_det(mut m: Vec<Vec<Integer>>) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::from(1);
    }
    let mut sign = 1i32;
    let mut prev = Integer::from(1);
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let swap = (k + 1..n).find(|&i| m[i][k] != 0);
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Integer::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = Integer::from(&m[k][k] * &m[i][j]) - Integer::from(&m[i][k] * &m[k][j]);
                m[i][j] = t / &prev;
            }
            m[i][k] = Integer::new();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Univariate polynomial in X given by the Sylvester determinant in Y of
/// the system, recovered by evaluation at integer nodes and exact
/// interpolation.
fn x_eliminant(v: &GroupPoly, w: &GroupPoly) -> Result<IntPoly> {
    let cv = var_coefficients_by_name(v, "Y")?;
    let cw = var_coefficients_by_name(w, "Y")?;
    let (dyv, dyw) = (cv.len() - 1, cw.len() - 1);
    if dyv == 0 || dyw == 0 {
        return Err(Error::DegenerateDegrees);
    }
    let dxv = max_degree_by_name(v, "X")?;
    let dxw = max_degree_by_name(w, "X")?;
    let bound = dxv * dyw + dxw * dyv;
    let nodes: Vec<i64> = (0..=bound as i64)
        .map(|j| if j % 2 == 0 { j / 2 } else { -(j / 2) - 1 })
        .collect();
    let mut values = Vec::with_capacity(nodes.len());
    for r in &nodes {
        let eval = |coeffs: &[GroupPoly]| -> Vec<Integer> {
            coeffs
                .iter()
                .map(|c| horner_at_integer(c, *r))
                .collect()
        };
        let av = eval(&cv);
        let aw = eval(&cw);
        let n = dyv + dyw;
        let mut m = vec![vec![Integer::new(); n]; n];
        for i in 0..dyw {
            for (k, c) in av.iter().enumerate() {
                m[i][i + (dyv - k)] = c.clone();
            }
        }
        for i in 0..dyv {
            for (k, c) in aw.iter().enumerate() {
                m[dyw + i][i + (dyw - k)] = c.clone();
            }
        }
        values.push(bareiss_det(m));
    }
    interpolate_integer(&nodes, &values)
}

fn var_coefficients_by_name(p: &GroupPoly, var: &str) -> Result<Vec<GroupPoly>> {
    let idx = p
        .vars()
        .iter()
        .position(|v| v == var)
        .ok_or_else(|| Error::VariableMismatch(p.vars().to_vec(), vec![var.to_string()]))?;
    var_coefficients(p, idx)
}

fn max_degree_by_name(p: &GroupPoly, var: &str) -> Result<usize> {
    let idx = p
        .vars()
        .iter()
        .position(|v| v == var)
        .ok_or_else(|| Error::VariableMismatch(p.vars().to_vec(), vec![var.to_string()]))?;
    Ok(p.terms().keys().map(|e| e[idx]).max().unwrap_or(0) as usize)
}

/// Evaluate a univariate polynomial (as a GroupPoly) at an integer.
fn horner_at_integer(p: &GroupPoly, r: i64) -> Integer {
    // dense ascending coefficients; exponents are nonnegative here
    let deg = p.terms().keys().map(|e| e[0]).max().unwrap_or(0);
    let mut coeffs = vec![Integer::new(); (deg + 1) as usize];
    for (e, c) in p.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    let ri = Integer::from(r);
    let mut acc = Integer::new();
    for c in coeffs.iter().rev() {
        acc *= &ri;
        acc += c;
    }
    acc
}

/// Newton-form interpolation through integer nodes; the result must have
/// integer coefficients.
fn interpolate_integer(nodes: &[i64], values: &[Integer]) -> Result<IntPoly> {
    let n = nodes.len();
    let mut table: Vec<Rational> = values.iter().map(|v| Rational::from(v)).collect();
    // divided differences in place: table[i] becomes f[x_0..x_i]
    for level in 1..n {
        for i in (level..n).rev() {
            let num = Rational::from(&table[i] - &table[i - 1]);
            let den = Rational::from(nodes[i] - nodes[i - level]);
            table[i] = num / den;
        }
    }
    // expand sum of c_i prod_(j<i) (x - x_j)
    let mut acc: Vec<Rational> = vec![Rational::new(); n];
    let mut basis: Vec<Rational> = vec![Rational::new(); n];
    basis[0] = Rational::from(1);
    let mut basis_len = 1usize;
    for (i, c) in table.iter().enumerate() {
        for j in 0..basis_len {
            acc[j] += Rational::from(c * &basis[j]);
        }
        if i + 1 < n {
            // basis *= (x - nodes[i])
            for j in (0..basis_len).rev() {
                let shifted = basis[j].clone();
                basis[j + 1] += &shifted;
                basis[j] = Rational::from(&basis[j] * &Rational::from(-nodes[i]));
            }
            basis_len += 1;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for q in acc {
        if *q.denom() != 1 {
            return Err(Error::ShapeMismatch(
                "interpolated eliminant is not integral".into(),
            ));
        }
        coeffs.push(q.numer().clone());
    }
    Ok(IntPoly::new(coeffs))
}

/// c = lcm(|lead|, |const|) and B = D * max_p v_p(c) for the annihilator.
/// A unit c admits no bound at all.
pub fn denominator_bound(annihilator: &IntPoly, degree_bound: u64) -> Result<(Integer, u64)> {
    if annihilator.is_zero() {
        return Err(Error::ZeroInput("zero polynomial bounds nothing"));
    }
    let lead = Integer::from(annihilator.lead().abs_ref());
    let cons = Integer::from(annihilator.constant().abs_ref());
    if cons == 0 {
        return Err(Error::ZeroInput("annihilator must not vanish at zero"));
    }
    let c = lead.lcm(&cons);
    if c == 1 {
        return Err(Error::UnitRoot);
    }
    let v = max_prime_valuation(&c);
    Ok((c, degree_bound * v))
}

/// Largest exponent appearing in the factorization of c. Trial division
/// handles every prime up to a million; a remaining cofactor is refined by
/// perfect-power detection, which is exhaustive for the magnitudes the
/// pipeline produces.
fn max_prime_valuation(c: &Integer) -> u64 {
    let mut rest = c.clone();
    let mut best = 0u64;
    let mut p = Integer::from(2);
    while Integer::from(&p * &p) <= rest && p < 1_000_000 {
        if rest.is_divisible(&p) {
            let mut v = 0u64;
            while rest.is_divisible(&p) {
                rest = Integer::from(&rest / &p);
                v += 1;
            }
            best = best.max(v);
        }
        p += 1;
    }
    if rest > 1 {
        let mut v = 1u64;
        for k in (2..=u64::from(rest.significant_bits())).rev() {
            let root = rest.clone().root(k as u32);
            if Integer::from((&root).pow(k as u32)) == rest {
                v = k;
                break;
            }
        }
        best = best.max(v);
    }
    best.max(1)
}

/// True when no rational with denominator up to the bound lies inside the
/// closed enclosure. The enclosure must be narrower than the minimal gap
/// 1/(2 q^2) or nothing can be concluded.
pub fn exclude_rationals(lo: &Rational, hi: &Rational, denominator_max: u64) -> Result<bool> {
    if denominator_max == 0 {
        return Err(Error::EnclosureTooWide(0));
    }
    let width = Rational::from(hi - lo);
    let gap = Rational::from((
        Integer::from(1),
        Integer::from(2) * Integer::from(denominator_max) * Integer::from(denominator_max),
    ));
    if width >= gap {
        return Err(Error::EnclosureTooWide(denominator_max));
    }
    let mid = Rational::from(lo + hi) / Rational::from(2);
    for q in 1..=denominator_max {
        // the nearest p/q to the midpoint; if it misses, all others do too
        let scaled = Rational::from(&mid * Integer::from(q));
        let (p, _) = scaled.numer().clone().div_rem_round(scaled.denom().clone());
        let cand = Rational::from((p, Integer::from(q)));
        if cand >= *lo && cand <= *hi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shrink-or-fail search for a verified sign-change window around a
/// numeric root estimate, then bisection down to the requested relative
/// width. Everything is exact rational arithmetic on the polynomial side.
fn enclose_root(
    poly: &IntPoly,
    center: &Float,
    rel_width_target: i64,
) -> Result<(Rational, Rational)> {
    let c = center
        .to_rational()
        .ok_or(Error::RootIsolation("root estimate is not finite"))?;
    let scale = Rational::from(c.abs_ref());
    if scale == 0 {
        return Err(Error::RootIsolation("root estimate is zero"));
    }
    let mut rel = Rational::from((1, 100_000u64));
    for _ in 0..8 {
        let h = Rational::from(&scale * &rel);
        let lo = Rational::from(&c - &h);
        let hi = Rational::from(&c + &h);
        if poly.sign_at(&lo) * poly.sign_at(&hi) < 0 {
            let target = Rational::from(&scale * pow10(rel_width_target));
            return poly.refine_sign_change(lo, hi, &target);
        }
        rel /= 100u32;
    }
    Err(Error::RootIsolation("no sign change near the root estimate"))
}

fn pow10(neg_exp: i64) -> Rational {
    Rational::from((
        Integer::from(1),
        Integer::from(Integer::u_pow_u(10, neg_exp.unsigned_abs() as u32)),
    ))
}

/// Relative width of the enclosures behind the certificate, as a power of
/// ten below the scale of the enclosed value.
const ENCLOSURE_REL_DIGITS: i64 = 16;

/// Primes scanned for a minimality witness.
const SCAN_PRIMES: [u64; 21] = [
    7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 97,
];

/// Run the whole certification chain for the dilatation minimizer on a
/// segment. A unit annihilator downgrades the verdict to inconclusive
/// rather than failing, since every other part of the certificate is still
/// meaningful.
pub fn certify_slice(
    p: &GroupPoly,
    seg: &Segment,
    prec_digits: u32,
    scan_at_least: u64,
) -> Result<IrrationalityCertificate> {
    let bits = real::bits(prec_digits + GUARD_DIGITS);
    let core_poly = strip_unit_linear_factors(p);
    let min = minimize_on_slice(&core_poly, seg, prec_digits)?;
    let support = slice_support(&core_poly, seg)?;
    let t_hint = min
        .parameter
        .to_rational()
        .ok_or(Error::RootIsolation("minimum parameter is not finite"))?;
    let sys = build_critical_system(&support, &t_hint)?;

    // numeric monomial values at the minimum
    let ln_lambda = Float::with_val(bits, min.lambda.ln_ref());
    let x_num = Float::with_val(bits, Float::with_val(bits, &sys.x_exponent) * &ln_lambda).exp();
    let y_exp = Float::with_val(bits, &sys.y_exponent_base)
        + Float::with_val(bits, &sys.y_exponent_slope) * &min.parameter;
    let y_num = Float::with_val(bits, &y_exp * &ln_lambda).exp();

    // eliminate X, reduce to the A = Y + 1/Y eliminant
    let ry = resultant(&sys.value, &sys.derivative, "X")?;
    let (_, ry_coeffs) = ry.univariate()?;
    let ry_poly = IntPoly::new(ry_coeffs).primitive_part();
    if ry_poly.deg().unwrap_or(0) == 0 {
        return Err(Error::DegenerateDegrees);
    }
    let mut reduced = ry_poly.squarefree_part()?;
    for lin in [
        IntPoly::from_ascending_i64(&[-1, 1]),
        IntPoly::from_ascending_i64(&[1, 1]),
    ] {
        while let Ok(q) = reduced.divexact(&lin) {
            reduced = q;
        }
    }
    let eliminant = reduced.palindromic_reduce()?;
    let (core, stripped) = eliminant.strip_rational_roots()?;
    if core.deg().unwrap_or(0) == 0 {
        return Err(Error::DegenerateDegrees);
    }
    let a_num = Float::with_val(bits, &y_num + Float::with_val(bits, y_num.recip_ref()));
    for (root, _) in &stripped {
        let gap = Float::with_val(bits, &a_num - Float::with_val(bits, root));
        if gap.abs() < 1e-10 {
            return Err(Error::RootIsolation(
                "critical value sits at a rational eliminant root",
            ));
        }
    }

    // minimality witness mod a small prime
    let mut minimality_prime = None;
    for prime in SCAN_PRIMES {
        match core.irreducible_mod_p(prime) {
            Ok(true) => {
                minimality_prime = Some(prime);
                break;
            }
            Ok(false) => continue,
            Err(Error::LeadingDivisibleByP(_)) => continue,
            Err(e) => return Err(e),
        }
    }

    let y_annihilator = core.palindromic_lift()?;
    let deg_x_value = max_degree_by_name(&sys.value, "X")? as u64;
    let degree_bound = deg_x_value * y_annihilator.deg().unwrap_or(0) as u64;

    let (scaling, denom_bound, unit_root) = match denominator_bound(&y_annihilator, degree_bound) {
        Ok((c, b)) => (c, b, false),
        Err(Error::UnitRoot) => (Integer::from(1), 0, true),
        Err(e) => return Err(e),
    };

    // rigorous enclosures: Y from its annihilator, X from the eliminated
    // system, both by exact sign bisection around the numeric values
    let y_enclosure = enclose_root(&y_annihilator, &y_num, ENCLOSURE_REL_DIGITS)?;
    let rx = x_eliminant(&sys.value, &sys.derivative)?;
    if rx.is_zero() {
        return Err(Error::DegenerateDegrees);
    }
    let x_enclosure = enclose_root(&rx, &x_num, ENCLOSURE_REL_DIGITS)?;
    if y_enclosure.0 <= 1 || x_enclosure.0 <= 1 {
        return Err(Error::RootIsolation("enclosure touches the unit circle"));
    }

    // outward ratio enclosure ln X / ln Y with directed rounding
    let ratio_lo = real::div_down(
        &real::ln_down(&x_enclosure.0, bits),
        &real::ln_up(&y_enclosure.1, bits),
        bits,
    );
    let ratio_hi = real::div_up(
        &real::ln_up(&x_enclosure.1, bits),
        &real::ln_down(&y_enclosure.0, bits),
        bits,
    );
    let ratio_enclosure = (
        ratio_lo
            .to_rational()
            .ok_or(Error::RootIsolation("ratio bound is not finite"))?,
        ratio_hi
            .to_rational()
            .ok_or(Error::RootIsolation("ratio bound is not finite"))?,
    );

    let scan_bound = denom_bound.max(scan_at_least);
    let excluded = if unit_root && scan_bound == 0 {
        false
    } else {
        exclude_rationals(&ratio_enclosure.0, &ratio_enclosure.1, scan_bound)?
    };

    let verdict = if !unit_root && minimality_prime.is_some() && excluded {
        Verdict::Irrational
    } else {
        Verdict::Inconclusive
    };
    let mut hypotheses = String::new();
    hypotheses.push_str(&format!(
        "eliminant degree {}; core degree {}",
        eliminant.deg().unwrap_or(0),
        core.deg().unwrap_or(0)
    ));
    match minimality_prime {
        Some(p) => hypotheses.push_str(&format!("; core irreducible mod {p}")),
        None => hypotheses.push_str("; no small-prime minimality witness"),
    }
    if unit_root {
        hypotheses.push_str("; unit root: no denominator bound");
    } else {
        hypotheses.push_str(&format!(
            "; scaling c = {scaling} gives denominator bound {denom_bound}"
        ));
    }
    hypotheses.push_str(&format!(
        "; rationals with denominator up to {scan_bound} {}",
        if excluded { "excluded" } else { "not excluded" }
    ));

    Ok(IrrationalityCertificate {
        system: sys,
        eliminant,
        y_annihilator,
        degree_bound,
        scaling,
        denominator_bound: denom_bound,
        minimality_prime,
        x_enclosure,
        y_enclosure,
        ratio_enclosure,
        excluded,
        verdict,
        hypotheses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{fibered_cone, CohomClass, Covector};
    use crate::dilatation::segment_from_covector;
    use crate::presets::{example1_theta, magic_theta};

    fn rat(s: &str) -> Rational {
        real::parse_rational(s).unwrap()
    }

    fn assert_encloses(enc: &(Rational, Rational), decimal: &str, tol: &str) {
        let target = rat(decimal);
        let t = rat(tol);
        assert!(
            enc.0 <= target.clone() + t.clone() && enc.1 >= target.clone() - t.clone(),
            "enclosure [{}, {}] misses {}",
            enc.0,
            enc.1,
            decimal
        );
        let mid = Rational::from(&enc.0 + &enc.1) / Rational::from(2);
        let err = Rational::from(&mid - &target);
        assert!(
            Rational::from(err.abs_ref()) < t,
            "midpoint {} is off {}",
            mid,
            decimal
        );
    }

    #[test]
    fn critical_system_matches_the_hand_built_magic_form() {
        let seg = Segment {
            start: vec![
                Rational::from(2),
                Rational::from(0),
                Rational::from(-2),
            ],
            end: vec![Rational::from(5), Rational::from(2), Rational::from(2)],
            covector: None,
        };
        let support = slice_support(&magic_theta(), &seg).unwrap();
        let sys = build_critical_system(&support, &rat("0.53")).unwrap();
        let value = GroupPoly::build(
            &["X", "Y"],
            &[
                (1, &[2, 3]),
                (-1, &[2, 1]),
                (-1, &[1, 5]),
                (-1, &[1, 0]),
                (-1, &[0, 4]),
                (1, &[0, 2]),
            ],
        );
        let derivative = GroupPoly::build(
            &["X", "Y"],
            &[
                (1, &[2, 3]),
                (1, &[2, 1]),
                (-3, &[1, 5]),
                (2, &[1, 0]),
                (-2, &[0, 4]),
            ],
        );
        assert_eq!(sys.value, value);
        assert_eq!(sys.derivative, derivative);
        assert_eq!(sys.x_exponent, Rational::from(2));
        assert_eq!(sys.y_exponent_base, Rational::from(0));
        assert_eq!(sys.y_exponent_slope, Rational::from(1));
    }

    #[test]
    fn zero_direction_refuses() {
        let support = vec![
            (Integer::from(1), Rational::from(2), Rational::new()),
            (Integer::from(-3), Rational::from(0), Rational::new()),
        ];
        assert!(matches!(
            build_critical_system(&support, &rat("0.5")),
            Err(Error::ZeroDerivative)
        ));
    }

    #[test]
    fn resultants_of_small_systems() {
        let a = GroupPoly::build(&["X", "Y"], &[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = GroupPoly::build(&["X", "Y"], &[(1, &[1, 0]), (1, &[0, 1])]);
        let r = resultant(&a, &b, "X").unwrap();
        assert_eq!(r, GroupPoly::build(&["Y"], &[(2, &[1])]));

        let c = GroupPoly::build(&["X", "Y"], &[(1, &[0, 1])]);
        assert!(matches!(
            resultant(&a, &c, "X"),
            Err(Error::DegenerateDegrees)
        ));
    }

    #[test]
    fn denominator_bounds_and_unit_roots() {
        // lead 200 with maximal 2-adic valuation 3
        let q = IntPoly::from_descending_i64(&[200, 0, 0, -1, 0, 0, 200]);
        let (c, b) = denominator_bound(&q, 12).unwrap();
        assert_eq!(c, Integer::from(200));
        assert_eq!(b, 36);
        assert!(matches!(
            denominator_bound(&IntPoly::from_descending_i64(&[1, -3, 1]), 4),
            Err(Error::UnitRoot)
        ));
    }

    #[test]
    fn exclusion_scans_nearest_fractions() {
        let lo = rat("2.7397074");
        let hi = rat("2.7397082");
        assert!(exclude_rationals(&lo, &hi, 72).unwrap());
        // 1/3 sits inside this one
        let lo = rat("0.333332");
        let hi = rat("0.333334");
        assert!(!exclude_rationals(&lo, &hi, 3).unwrap());
        // too wide to decide
        assert!(matches!(
            exclude_rationals(&rat("0.3"), &rat("0.5"), 10),
            Err(Error::EnclosureTooWide(10))
        ));
    }

    #[test]
    fn unit_factor_stripping() {
        let theta = example1_theta();
        let stripped = strip_unit_linear_factors(&theta);
        assert_eq!(
            stripped.normalize_unit().unwrap(),
            crate::presets::example1_quartic_factor()
                .normalize_unit()
                .unwrap()
        );
        // idempotent on factor-free input
        let again = strip_unit_linear_factors(&stripped);
        assert_eq!(again, stripped);
    }

    #[test]
    fn full_certificate_for_the_first_example() {
        let theta = example1_theta();
        let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0])).unwrap();
        let seg = segment_from_covector(&cone, &Covector(vec![3, 1])).unwrap();
        let cert = certify_slice(&theta, &seg, 50, 36).unwrap();

        assert_eq!(
            cert.eliminant,
            IntPoly::from_descending_i64(&[
                200, -9530, 128025, -778216, 2422552, -3782016, 2354832
            ])
        );
        assert_eq!(cert.minimality_prime, Some(7));
        assert_eq!(cert.scaling, Integer::from(200));
        assert_eq!(cert.degree_bound, 24);
        assert_eq!(cert.denominator_bound, 72);
        assert_encloses(&cert.y_enclosure, "30.35640008366680", "1e-10");
        assert_encloses(
            &cert.x_enclosure,
            "11506.2184988813862692424208919",
            "1e-2",
        );
        assert_encloses(&cert.ratio_enclosure, "2.73970779735274417973806903929", "1e-5");
        assert!(cert.excluded);
        assert_eq!(cert.verdict, Verdict::Irrational);

        // the certified A value
        let a_lo = Rational::from(&cert.y_enclosure.0 + Rational::from(cert.y_enclosure.1.recip_ref()));
        let target = rat("30.38934206615629");
        let err = Rational::from(&a_lo - &target);
        assert!(Rational::from(err.abs_ref()) < rat("1e-10"));
    }

    #[test]
    fn full_certificate_for_the_magic_segment() {
        let seg = Segment {
            start: vec![
                Rational::from(2),
                Rational::from(0),
                Rational::from(-2),
            ],
            end: vec![Rational::from(5), Rational::from(2), Rational::from(2)],
            covector: None,
        };
        let cert = certify_slice(&magic_theta(), &seg, 50, 16).unwrap();
        assert_eq!(
            cert.eliminant,
            IntPoly::from_descending_i64(&[2, -8, 0, 31, -34, 9])
        );
        assert_eq!(
            cert.y_annihilator,
            IntPoly::from_descending_i64(&[2, -6, 2, 7, -9, 7, 2, -6, 2])
        );
        assert_eq!(cert.minimality_prime, Some(7));
        assert_eq!(cert.scaling, Integer::from(2));
        assert_eq!(cert.degree_bound, 16);
        assert_eq!(cert.denominator_bound, 16);
        assert_encloses(&cert.y_enclosure, "1.52133064029021807856653168182623781199143", "1e-10");
        assert_encloses(&cert.ratio_enclosure, "3.78111658136307297027220709350751914495813", "1e-5");
        assert!(cert.excluded);
        assert_eq!(cert.verdict, Verdict::Irrational);
    }
}
