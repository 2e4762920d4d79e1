//! Build a pseudo-Anosov map as a Penner word of Dehn twists and compute
//! the invariant determinant factor of its homology action.
//!
//! Penner's construction composes positive twists along one family of
//! curves with negative twists along a transverse family. The twist
//! matrices act on Z[t, t^-1]-modules, and the characteristic
//! determinant of the composed action packages the dilatations of the
//! whole fibered face of the mapping torus.

use teichpoly::penner::{phi, symmetry_check, PennerSpec, PennerStep, TwistKind};
use teichpoly::presets;

fn a(multiplicities: &[i64]) -> PennerStep {
    PennerStep {
        kind: TwistKind::A,
        multiplicities: multiplicities.to_vec(),
    }
}

fn b(multiplicities: &[i64]) -> PennerStep {
    PennerStep {
        kind: TwistKind::B,
        multiplicities: multiplicities.to_vec(),
    }
}

fn main() -> teichpoly::Result<()> {
    // 3 a-curves meet 2 b-curves in 14 points, counted with the deck
    // variable t remembering which lift of the curve is crossed
    let spec = presets::penner_example_spec();
    let p = phi(&spec)?;
    println!("phi = {p}");
    println!("word symmetric: {}", symmetry_check(&spec)?);

    // the printed quartic factor carries all the dynamics; (u - 1)^10
    // accounts for the rest of the homology action
    let quartic = presets::penner_example_quartic();
    let um1 = teichpoly::GroupPoly::build(&["u", "t"], &[(1, &[1, 0]), (-1, &[0, 0])]);
    let expected = quartic.mul(&um1.pow(10))?.normalize_unit()?;
    assert_eq!(p.normalize_unit()?, expected);

    // a word with every multiplicity equal is symmetric, which forces
    // the face minimum to the symmetry point and a quadratic dilatation
    let uniform = PennerSpec::new(
        3,
        2,
        presets::penner_example_intersection(),
        vec![a(&[1, 1, 1]), b(&[1, 1]), a(&[1, 1, 1]), b(&[1, 1])],
        14,
        true,
    )?;
    println!("uniform word symmetric: {}", symmetry_check(&uniform)?);
    Ok(())
}
