//! Compute a Teichmuller polynomial from train-track transition data.
//!
//! A transition matrix records how a pseudo-Anosov map carries the
//! edges of an invariant train track over themselves, with the deck
//! variable t tracking how each strip wraps around the surface's
//! homology. Its characteristic determinant in a fresh variable u is
//! the Teichmuller polynomial of the mapping torus's fibered face.

use teichpoly::polymat::{teichmuller_from_transition, PolyMatrix};
use teichpoly::presets;

fn main() -> teichpoly::Result<()> {
    // a 2x2 warm-up: one edge maps over itself once and over the other
    // edge with a deck translation, the other folds back plainly
    let small = PolyMatrix::build(
        &["t"],
        &[
            &[&[(1, &[0])], &[(1, &[1])]],
            &[&[(1, &[-1])], &[(1, &[0])]],
        ],
    );
    let small_theta = teichmuller_from_transition(&small, None, "u")?.normalize_unit()?;
    println!("2x2 example: {small_theta}");

    // the genus-2 example: a 5x5 transition matrix over Z[t, t^-1]
    let m = presets::example1_matrix();
    let theta = teichmuller_from_transition(&m, None, "u")?.normalize_unit()?;
    println!("5x5 example: {theta}");
    assert_eq!(theta, presets::example1_theta());

    // specializing t := 1 collapses theta to the ordinary characteristic
    // polynomial of the integer transition matrix, whose largest root is
    // the dilatation of the monodromy itself
    let collapsed = theta.collapse_var(1)?.normalize_unit()?;
    println!("specialized at t = 1: {collapsed}");
    Ok(())
}
