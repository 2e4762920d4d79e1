//! Minimize the dilatation over a segment of the magic manifold's
//! fibered face and certify the minimizer irrational.
//!
//! The magic manifold is the smallest-volume 3-chain-link complement;
//! its Teichmuller polynomial lives in three homology variables. We
//! restrict to one edge of a fibered face, parameterized from one end
//! to the other, and run the whole analysis on that slice.

use rug::Rational;
use teichpoly::certify::certify_slice;
use teichpoly::dilatation::{minimize_on_slice, Segment};
use teichpoly::presets;
use teichpoly::real;

fn main() -> teichpoly::Result<()> {
    let theta = presets::magic_theta();
    println!("theta = {theta}");

    let seg = Segment {
        start: vec![Rational::from(2), Rational::from(0), Rational::from(-2)],
        end: vec![Rational::from(5), Rational::from(2), Rational::from(2)],
        covector: None,
    };

    let min = minimize_on_slice(&theta, &seg, 50)?;
    println!("minimizing parameter t = {}", real::decimal_of_float(&min.parameter, 30));
    println!(
        "minimizing class = ({}, {}, {})",
        real::decimal_of_float(&min.coordinates[0], 20),
        real::decimal_of_float(&min.coordinates[1], 20),
        real::decimal_of_float(&min.coordinates[2], 20),
    );
    println!("lambda = {}", real::decimal_of_float(&min.lambda, 30));

    let cert = certify_slice(&theta, &seg, 50, 16)?;
    println!("verdict: {:?}", cert.verdict);
    println!("eliminant of Y + 1/Y: {}", cert.eliminant);
    println!("annihilator of Y: {}", cert.y_annihilator);
    println!(
        "ratio enclosure: [{}, {}]",
        real::decimal_of_rational(&cert.ratio_enclosure.0, 25, false),
        real::decimal_of_rational(&cert.ratio_enclosure.1, 25, true),
    );
    println!("hypotheses: {}", cert.hypotheses);
    Ok(())
}
