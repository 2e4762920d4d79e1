//! Enumerate homology classes of closed orbits of the suspension flow
//! through powers of the transition matrix.
//!
//! A closed orbit through cell i that wraps m times around the flow
//! direction shows up as a monomial in the (i, i) entry of the m-th
//! matrix power; its exponent vector, negated, is the homology class of
//! the orbit in the non-flow coordinates. Distinct orbits with parallel
//! drilled classes x + c produce the same tilted face, so a covector
//! groups the census into drilling-equivalence classes.

use teichpoly::cone::Covector;
use teichpoly::orbits::{census, drilling_class_representatives};
use teichpoly::presets;

fn main() -> teichpoly::Result<()> {
    let m = presets::example1_matrix();

    let classes = census(&m, 2)?;
    println!("orbit classes through powers 1 and 2:");
    for c in &classes {
        println!(
            "  power {} cell {}: class {:?} with multiplicity {}",
            c.u_degree, c.through_cell, c.t_class, c.multiplicity
        );
    }

    // group by parallelism of x + c for the base fibration x = (2, 0);
    // drilling two orbits from the same group tilts the face identically
    let reps = drilling_class_representatives(&classes, &Covector(vec![2, 0]))?;
    println!("\ndistinct drilled faces from these orbits: {}", reps.len());
    for r in &reps {
        println!(
            "  representative: power {} class {:?}",
            r.u_degree, r.t_class
        );
    }
    Ok(())
}
