//! Produce a machine-checkable certificate that the minimizing slice
//! coordinate of a dilatation function is irrational.
//!
//! The pipeline eliminates variables from the critical system (value
//! and derivative both vanish at the minimizer), bounds the degree and
//! denominator of any rational candidate through the valuations of an
//! algebraic scaling constant, and then excludes every bounded-height
//! rational from a rigorous enclosure of the critical exponent ratio.

use teichpoly::certify::certify_slice;
use teichpoly::cone::{fibered_cone, slice_covector, CohomClass, Covector, SliceMode};
use teichpoly::dilatation::segment_from_covector;
use teichpoly::io::{to_text, CertificateJson};
use teichpoly::presets;

fn main() -> teichpoly::Result<()> {
    let theta = presets::example1_theta();
    let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0]))?;
    let w = slice_covector(&Covector(vec![2, 0]), Some(&Covector(vec![1, 1])), SliceMode::Drill)?;
    let seg = segment_from_covector(&cone, &w)?;

    let cert = certify_slice(&theta, &seg, 50, 0)?;

    println!("verdict: {:?}", cert.verdict);
    println!("eliminant: {}", cert.eliminant);
    println!("degree bound D = {}", cert.degree_bound);
    println!("scaling constant c = {}", cert.scaling);
    println!("denominator bound B = {}", cert.denominator_bound);
    println!("hypotheses: {}", cert.hypotheses);
    println!();

    // the full serialized record, ready to be stored or rechecked
    print!("{}", to_text(&CertificateJson::of(&cert)));
    Ok(())
}
