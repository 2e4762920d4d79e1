//! End-to-end gate over the whole crate: eleven checks, one printed
//! pass/fail line each, every tolerance pinned in `teichpoly::tolerances`.

use rug::{Float, Integer, Rational};
use teichpoly::certify::{certify_slice, Verdict};
use teichpoly::cone::{fibered_cone, slice_covector, CohomClass, Covector, SliceMode};
use teichpoly::dilatation::{
    directional_derivative, eval_lambda, minimize_on_slice, segment_from_covector,
};
use teichpoly::groupring::GroupPoly;
use teichpoly::intpoly::IntPoly;
use teichpoly::orbits::census;
use teichpoly::penner::{phi, symmetry_check, PennerSpec, PennerStep, TwistKind};
use teichpoly::polymat::{teichmuller_from_transition, PolyMatrix};
use teichpoly::presets;
use teichpoly::real;
use teichpoly::tolerances;

const PREC: u32 = 50;
const CASES: usize = 100;

/// Deterministic generator for the property suites (SplitMix64).
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    fn poly(&mut self, vars: &[&str], max_terms: u64) -> GroupPoly {
        let n = self.below(max_terms + 1);
        let terms: Vec<(Vec<i64>, Integer)> = (0..n)
            .map(|_| {
                let e: Vec<i64> = vars.iter().map(|_| self.int(-3, 3)).collect();
                (e, Integer::from(self.int(-9, 9)))
            })
            .collect();
        GroupPoly::from_terms(vars.iter().map(|s| s.to_string()).collect(), terms)
            .expect("well-formed random poly")
    }

    fn nonzero_poly(&mut self, vars: &[&str], max_terms: u64) -> GroupPoly {
        loop {
            let p = self.poly(vars, max_terms);
            if !p.is_zero() {
                return p;
            }
        }
    }
}

fn float_abs_within(x: &Float, target: f64, tol: f64) -> bool {
    Float::with_val(x.prec(), x - Float::with_val(x.prec(), target)).abs() <= tol
}

fn enclosure_within(e: &(Rational, Rational), target: f64, tol: f64) -> bool {
    let lo = real::float_from_rational(&e.0, 128);
    let hi = real::float_from_rational(&e.1, 128);
    lo >= target - tol && hi <= target + tol && lo <= hi
}

#[test]
fn acceptance() {
    let mut results: Vec<(u32, bool, String)> = Vec::new();
    let mut record = |n: u32, ok: bool, what: String| results.push((n, ok, what));

    // 1: the 5x5 transition matrix reproduces the printed polynomial
    let theta = teichmuller_from_transition(&presets::example1_matrix(), None, "u")
        .unwrap()
        .normalize_unit()
        .unwrap();
    record(
        1,
        theta == presets::example1_theta(),
        "transition matrix characteristic polynomial equals the printed one exactly".into(),
    );

    // 2: the fibered cone of that polynomial is the wedge a > |b|
    let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0])).unwrap();
    let inside = |a: Rational, b: Rational| cone.contains_strict_rational(&[a, b]).unwrap();
    let mut cone_ok = inside(Rational::from(1), Rational::from((999, 1000)))
        && inside(Rational::from(1), Rational::from((-999, 1000)))
        && !inside(Rational::from(1), Rational::from((1001, 1000)))
        && !inside(Rational::from(1), Rational::from((-1001, 1000)));
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            cone_ok &= inside(Rational::from(a), Rational::from(b)) == (a > b.abs());
        }
    }
    record(2, cone_ok, "fibered cone membership agrees with a > |b| on every probe".into());

    // 3: minimum of the dilatation on the drilled slice w = (3, 1)
    let w = slice_covector(&Covector(vec![2, 0]), Some(&Covector(vec![1, 1])), SliceMode::Drill)
        .unwrap();
    let seg = segment_from_covector(&cone, &w).unwrap();
    let min = minimize_on_slice(&theta, &seg, PREC).unwrap();
    let s_ok = float_abs_within(&min.coordinates[0], 0.365002, tolerances::MIN_COORDINATE_ABS);
    let l_ok = float_abs_within(&min.lambda, 11506.21849, tolerances::MIN_DILATATION_ABS);
    let r_ok = min.first_order_residual.clone().abs() <= tolerances::MIN_RESIDUAL_CEILING;
    record(
        3,
        s_ok && l_ok && r_ok,
        format!(
            "drilled minimum s = {}, lambda = {}, residual <= {:e}",
            real::decimal_of_float(&min.coordinates[0], 8),
            real::decimal_of_float(&min.lambda, 10),
            tolerances::MIN_RESIDUAL_CEILING
        ),
    );

    // 4: elimination over the same slice: printed sextic, minimality mod 7,
    // trace and multiplier values
    let cert = certify_slice(&theta, &seg, PREC, 0).unwrap();
    let printed = IntPoly::from_descending_i64(&[
        200, -9530, 128025, -778216, 2422552, -3782016, 2354832,
    ]);
    let match_ok = cert.eliminant.primitive_part() == printed.primitive_part();
    let prime_ok = cert.minimality_prime == Some(7);
    let bits = real::bits(PREC);
    let y_mid = real::float_from_rational(
        &(Rational::from(&cert.y_enclosure.0 + &cert.y_enclosure.1) / Rational::from(2)),
        bits,
    );
    let a_val = Float::with_val(bits, &y_mid + Float::with_val(bits, 1 / &y_mid));
    let y_ok = float_abs_within(&y_mid, 30.35640008366680, tolerances::TRACE_VALUE_ABS);
    let a_ok = float_abs_within(&a_val, 30.38934206615629, tolerances::TRACE_VALUE_ABS);
    record(
        4,
        match_ok && prime_ok && y_ok && a_ok,
        format!(
            "eliminant equals the printed sextic (irreducible mod 7), A = {}, Y = {}",
            real::decimal_of_float(&a_val, 14),
            real::decimal_of_float(&y_mid, 14)
        ),
    );

    // 5: the certificate itself
    let ratio_ok = enclosure_within(&cert.ratio_enclosure, 2.739707, tolerances::RATIO_ABS);
    record(
        5,
        ratio_ok && cert.denominator_bound >= 36 && cert.excluded
            && cert.verdict == Verdict::Irrational,
        format!(
            "ratio enclosed at 2.739707, B = {} >= 36, exclusion passed, verdict irrational",
            cert.denominator_bound
        ),
    );

    // 6: the 2-sheeted branched cover halves the minimizer exactly
    let w2 = slice_covector(&Covector(vec![2, 0]), Some(&Covector(vec![2, 2])), SliceMode::Branch(2))
        .unwrap();
    let seg2 = segment_from_covector(&cone, &w2).unwrap();
    let min2 = minimize_on_slice(&theta, &seg2, PREC).unwrap();
    let mut halving_ok = w2.0 == vec![6, 2];
    for (c2, c1) in min2.coordinates.iter().zip(&min.coordinates) {
        let half = Float::with_val(bits, c1 / Float::with_val(bits, 2));
        halving_ok &= Float::with_val(bits, c2 - &half).abs() <= tolerances::SCALING_IDENTITY_ABS;
    }
    let par_gap = Float::with_val(bits, &min2.parameter - &min.parameter).abs();
    halving_ok &= par_gap <= tolerances::SCALING_IDENTITY_ABS;
    record(
        6,
        halving_ok,
        "branched-cover minimizer is exactly half the drilled one".into(),
    );

    // 7: the Penner word's determinant factor equals the printed quartic
    // times (u - 1)^10
    let spec = presets::penner_example_spec();
    let f = phi(&spec).unwrap();
    let um1 = GroupPoly::build(&["u", "t"], &[(1, &[1, 0]), (-1, &[0, 0])]);
    let expected = presets::penner_example_quartic()
        .mul(&um1.pow(10))
        .unwrap()
        .normalize_unit()
        .unwrap();
    record(
        7,
        f.normalize_unit().unwrap() == expected,
        "twist-word determinant factor equals the printed quartic times (u - 1)^10".into(),
    );

    // 8: tilted minimum of the Penner example and its certificate
    let mirrored = presets::penner_example_quartic()
        .substitute_inverse(1)
        .unwrap()
        .normalize_unit()
        .unwrap();
    let pcone = fibered_cone(&mirrored, &CohomClass::exact_ints(&[1, 0])).unwrap();
    let pseg = segment_from_covector(&pcone, &Covector(vec![4, 0])).unwrap();
    let pmin = minimize_on_slice(&mirrored, &pseg, PREC).unwrap();
    let s = &pmin.coordinates[1];
    let s_ok = float_abs_within(s, 0.0001117568645, tolerances::PENNER_COORDINATE_ABS);
    let recip = Float::with_val(bits, 1) / (Float::with_val(bits, 4) * s);
    let recip_ok = float_abs_within(&recip, 2236.999051, tolerances::PENNER_RATIO_ABS);
    let pcert = certify_slice(&mirrored, &pseg, PREC, 40).unwrap();
    record(
        8,
        s_ok && recip_ok && pcert.excluded && pcert.verdict == Verdict::Irrational,
        format!(
            "tilted minimum s = {}, 1/(4s) = {}, exclusion to q <= {}, verdict irrational",
            real::decimal_of_float(s, 16),
            real::decimal_of_float(&recip, 8),
            pcert.denominator_bound.max(40)
        ),
    );

    // 9: the magic manifold segment
    let mseg = teichpoly::dilatation::Segment {
        start: vec![Rational::from(2), Rational::from(0), Rational::from(-2)],
        end: vec![Rational::from(5), Rational::from(2), Rational::from(2)],
        covector: None,
    };
    let mtheta = presets::magic_theta();
    let mmin = minimize_on_slice(&mtheta, &mseg, PREC).unwrap();
    let t_ok = float_abs_within(&mmin.parameter, 0.528944, tolerances::MIN_COORDINATE_ABS);
    let two_over = Float::with_val(bits, 2) / &mmin.parameter;
    let ratio9_ok = float_abs_within(&two_over, 3.781116, tolerances::MIN_COORDINATE_ABS);
    let mcert = certify_slice(&mtheta, &mseg, PREC, 16).unwrap();
    record(
        9,
        t_ok && ratio9_ok && mcert.excluded && mcert.verdict == Verdict::Irrational,
        format!(
            "magic minimum t = {}, 2/t = {}, exclusion to q <= {}, verdict irrational",
            real::decimal_of_float(&mmin.parameter, 8),
            real::decimal_of_float(&two_over, 8),
            mcert.denominator_bound.max(16)
        ),
    );

    // 10: symmetry: the untilted face minimizes at its exact midpoint, and
    // proportional twist words give symmetric polynomials
    let base_seg = segment_from_covector(&cone, &Covector(vec![2, 0])).unwrap();
    let base_min = minimize_on_slice(&theta, &base_seg, PREC).unwrap();
    let mid_gap = Float::with_val(bits, &base_min.parameter - Float::with_val(bits, 0.5)).abs();
    let mid_ok = mid_gap <= tolerances::SCALING_IDENTITY_ABS;
    let step = |kind, mults: &[i64]| PennerStep {
        kind,
        multiplicities: mults.to_vec(),
    };
    let proportional = PennerSpec::new(
        3,
        2,
        presets::penner_example_intersection(),
        vec![
            step(TwistKind::A, &[1, 1, 1]),
            step(TwistKind::B, &[1, 1]),
            step(TwistKind::A, &[2, 2, 2]),
            step(TwistKind::B, &[3, 3]),
        ],
        14,
        true,
    )
    .unwrap();
    let sym_ok = symmetry_check(&proportional).unwrap() && !symmetry_check(&spec).unwrap();
    record(
        10,
        mid_ok && sym_ok,
        "base-face minimizer at the exact midpoint; proportional words symmetric".into(),
    );

    // 11: randomized property suites, 100 deterministic instances each
    let mut rng = Rng(0x5eed_2026_0814);
    let vars = ["x", "y"];

    let mut ring_ok = true;
    for _ in 0..CASES {
        let a = rng.poly(&vars, 5);
        let b = rng.poly(&vars, 5);
        let c = rng.poly(&vars, 5);
        let one = GroupPoly::constant(vec!["x".into(), "y".into()], 1);
        ring_ok &= a.add(&b).unwrap().add(&c).unwrap() == a.add(&b.add(&c).unwrap()).unwrap();
        ring_ok &= a.mul(&b).unwrap() == b.mul(&a).unwrap();
        ring_ok &= a.mul(&b.add(&c).unwrap()).unwrap()
            == a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        ring_ok &= a.mul(&one).unwrap() == a;
        ring_ok &= a.add(&a.neg()).unwrap().is_zero();
    }

    let mut div_ok = true;
    for _ in 0..CASES {
        let a = rng.poly(&vars, 5);
        let b = rng.nonzero_poly(&vars, 5);
        div_ok &= a.mul(&b).unwrap().exact_div(&b).unwrap() == a;
    }

    let mut homog_ok = true;
    for _ in 0..CASES {
        let den = rng.int(2, 8);
        let num = rng.int(-(den - 1), den - 1);
        let alpha = CohomClass::Exact(vec![Rational::from(1), Rational::from((num, den))]);
        let doubled = alpha.scale(&Rational::from(2));
        let l1 = eval_lambda(&theta, &alpha, PREC).unwrap();
        let l2 = eval_lambda(&theta, &doubled, PREC).unwrap();
        let b = l1.value.prec();
        let gap = Float::with_val(b, Float::with_val(b, l2.value.ln_ref()) - Float::with_val(b, l1.value.ln_ref()) / Float::with_val(b, 2)).abs();
        homog_ok &= gap <= tolerances::HOMOGENEITY_ABS;
    }

    let mut fd_ok = true;
    for _ in 0..CASES {
        let a = rng.int(2, 4);
        let bb = rng.int(-(a - 1), a - 1);
        let (vn, vt) = loop {
            let v = (rng.int(-3, 3), rng.int(-3, 3));
            if v != (0, 0) {
                break v;
            }
        };
        let alpha = CohomClass::exact_ints(&[a, bb]);
        let v = CohomClass::exact_ints(&[vn, vt]);
        let exact = directional_derivative(&theta, &alpha, &v, PREC).unwrap();
        let h = Rational::from((1, 1u64 << 30));
        let shift = |sign: i64| {
            CohomClass::Exact(vec![
                Rational::from(a) + Rational::from(sign * vn) * h.clone(),
                Rational::from(bb) + Rational::from(sign * vt) * h.clone(),
            ])
        };
        let lp = eval_lambda(&theta, &shift(1), PREC).unwrap();
        let lm = eval_lambda(&theta, &shift(-1), PREC).unwrap();
        let b = lp.value.prec();
        let fd = Float::with_val(b, &lp.value - &lm.value) / (Float::with_val(b, &h) * 2u32);
        let denom = Float::with_val(b, exact.abs_ref()).max(&Float::with_val(b, 1));
        let rel = (Float::with_val(b, &exact - &fd) / denom).abs();
        fd_ok &= rel <= tolerances::DERIVATIVE_FD_REL;
    }

    let mut census_ok = true;
    for _ in 0..CASES {
        let n = rng.int(1, 3) as usize;
        let mut rows = Vec::with_capacity(n);
        let mut plain = vec![vec![Integer::new(); n]; n];
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let terms: Vec<(Vec<i64>, Integer)> = (0..rng.below(3))
                    .map(|_| (vec![rng.int(-1, 1)], Integer::from(rng.int(0, 3))))
                    .collect();
                let entry = GroupPoly::from_terms(vec!["t".into()], terms).unwrap();
                plain[i][j] = entry.terms().values().sum();
                row.push(entry);
            }
            rows.push(row);
        }
        let m = PolyMatrix::from_rows(rows).unwrap();
        let classes = census(&m, 3).unwrap();
        let mut power = plain.clone();
        for step in 1..=3u32 {
            for (i, row) in power.iter().enumerate() {
                let from_census: Integer = classes
                    .iter()
                    .filter(|c| c.u_degree == step && c.through_cell == i)
                    .map(|c| c.multiplicity.clone())
                    .sum();
                census_ok &= from_census == row[i];
            }
            if step < 3 {
                let mut next = vec![vec![Integer::new(); n]; n];
                for i in 0..n {
                    for j in 0..n {
                        for (k, cell) in plain.iter().enumerate() {
                            next[i][j] += Integer::from(&power[i][k] * &cell[j]);
                        }
                    }
                }
                power = next;
            }
        }
    }

    let mut perron_ok = true;
    for _ in 0..CASES {
        let d = rng.int(2, 5);
        let lead = rng.int(1, 3);
        let mut terms = vec![(vec![d], Integer::from(lead))];
        let mut magnitude = lead;
        for e in 1..d {
            if rng.below(2) == 1 {
                let c = rng.int(1, 4);
                magnitude += c;
                terms.push((vec![e], Integer::from(-c)));
            }
        }
        let c0 = lead + 1 + rng.int(0, 4);
        magnitude += c0;
        terms.push((vec![0], Integer::from(-c0)));
        let p = GroupPoly::from_terms(vec!["k".into()], terms).unwrap();
        let l = eval_lambda(&p, &CohomClass::exact_ints(&[1]), 30).unwrap();
        perron_ok &= l.bracket.1 <= Float::with_val(l.bracket.1.prec(), magnitude);
    }

    record(
        11,
        ring_ok && div_ok && homog_ok && fd_ok && census_ok && perron_ok,
        format!(
            "property suites x{CASES}: ring axioms {ring_ok}, division {div_ok}, homogeneity {homog_ok}, derivative {fd_ok}, census {census_ok}, root bound {perron_ok}"
        ),
    );

    let mut failed = Vec::new();
    for (n, ok, what) in &results {
        println!("{} criterion {n:2}: {what}", if *ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(*n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
