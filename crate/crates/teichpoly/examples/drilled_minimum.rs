//! Drill a closed orbit out of a fibered 3-manifold and minimize the
//! dilatation over the tilted fibered face.
//!
//! Drilling the orbit c replaces the norm-one slice {<alpha, x> = 1} by
//! {<alpha, x + c> = 1}. The dilatation function lambda is unchanged on
//! the cone but the slice tilts, so its minimum moves off the symmetry
//! point and becomes a transcendental-looking value that the certificate
//! machinery can analyze.

use teichpoly::cone::{fibered_cone, slice_covector, CohomClass, Covector, SliceMode};
use teichpoly::dilatation::{minimize_on_slice, segment_from_covector};
use teichpoly::presets;
use teichpoly::real;

fn main() -> teichpoly::Result<()> {
    let theta = presets::example1_theta();
    let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0]))?;

    // base fibration class x = (2, 0), drilled along the orbit c = (1, 1)
    let x = Covector(vec![2, 0]);
    let c = Covector(vec![1, 1]);
    let w = slice_covector(&x, Some(&c), SliceMode::Drill)?;
    println!("slice covector after drilling: {:?}", w.0);

    let seg = segment_from_covector(&cone, &w)?;
    println!(
        "norm-one segment: ({}, {}) -> ({}, {})",
        seg.start[0], seg.start[1], seg.end[0], seg.end[1]
    );

    let min = minimize_on_slice(&theta, &seg, 50)?;
    println!("minimizer s = {}", real::decimal_of_float(&min.coordinates[0], 30));
    println!("          second coordinate = {}", real::decimal_of_float(&min.coordinates[1], 30));
    println!("minimal dilatation lambda = {}", real::decimal_of_float(&min.lambda, 20));
    println!("scaled first-order residual = {:e}", min.first_order_residual.to_f64());
    if let Some(check) = &min.norm_check {
        println!("norm pairing at the minimizer = {}", real::decimal_of_float(check, 20));
    }
    Ok(())
}
