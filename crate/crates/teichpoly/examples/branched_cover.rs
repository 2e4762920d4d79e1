//! Pass to a cyclic branched cover and watch the minimal dilatation
//! point scale in lockstep.
//!
//! For a d-sheeted cyclic cover branched over the orbit c, the slice
//! covector x + c of the drilled face is replaced by d x + (d - 1) c.
//! The dilatation function is unchanged, so the new minimizer is
//! exactly the old one divided by d: same minimal dilatation class,
//! measured against a deeper fibration.

use teichpoly::cone::{branched_admissible, fibered_cone, slice_covector, CohomClass, Covector, SliceMode};
use teichpoly::dilatation::{minimize_on_slice, segment_from_covector};
use teichpoly::presets;
use teichpoly::real;

fn main() -> teichpoly::Result<()> {
    let theta = presets::example1_theta();
    let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0]))?;
    let x = Covector(vec![2, 0]);

    // an orbit class is branch-admissible when its coordinate gcd d
    // exceeds 1 (and is coprime to the homology torsion, trivial here);
    // the doubled class (2, 2) supports a 2-sheeted cyclic cover
    let c = Covector(vec![2, 2]);
    let (d, admissible) = branched_admissible(&c, 1)?;
    assert!(admissible);

    let drilled = slice_covector(&x, Some(&Covector(vec![1, 1])), SliceMode::Drill)?;
    let branched = slice_covector(&x, Some(&c), SliceMode::Branch(d as u32))?;
    println!("drilled covector:  {:?}", drilled.0);
    println!("branched covector: {:?}", branched.0);

    let seg_d = segment_from_covector(&cone, &drilled)?;
    let seg_b = segment_from_covector(&cone, &branched)?;
    let min_d = minimize_on_slice(&theta, &seg_d, 50)?;
    let min_b = minimize_on_slice(&theta, &seg_b, 50)?;

    println!(
        "drilled minimizer:  ({}, {})",
        real::decimal_of_float(&min_d.coordinates[0], 30),
        real::decimal_of_float(&min_d.coordinates[1], 30),
    );
    println!(
        "branched minimizer: ({}, {})",
        real::decimal_of_float(&min_b.coordinates[0], 30),
        real::decimal_of_float(&min_b.coordinates[1], 30),
    );

    // the halving is exact: both segments carry the same parameterization
    // of directions, so the parameters agree to working precision
    let gap = (min_d.parameter.clone() - &min_b.parameter).abs();
    println!("parameter agreement: {:e}", gap.to_f64());

    // lambda at the covering class is the square of the base lambda,
    // reflecting the two sheets of the cover
    let ratio = min_b.lambda.clone().ln() / min_d.lambda.clone().ln();
    println!("log lambda ratio (cover / base): {}", real::decimal_of_float(&ratio, 20));
    Ok(())
}
