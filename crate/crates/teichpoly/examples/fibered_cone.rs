//! Locate the fibered cone of a Teichmuller polynomial and evaluate the
//! norm it induces on cohomology classes.
//!
//! The support of the polynomial is a lattice polytope; the cone dual to
//! the vertex dominating a reference fibration consists of exactly the
//! classes whose largest support pairing stays at that vertex. Integer
//! classes in the cone are fibrations of the same 3-manifold, and the
//! pairing spread of the support is their Thurston norm.

use rug::Rational;
use teichpoly::cone::{fibered_cone, teich_norm, CohomClass, Scalar};
use teichpoly::presets;

fn main() -> teichpoly::Result<()> {
    let theta = presets::example1_theta();

    // (1, 0) is the class of the original fibration
    let cone = fibered_cone(&theta, &CohomClass::exact_ints(&[1, 0]))?;
    println!("dominant support vertex: {:?}", cone.dominant());
    println!("facet count before pruning: {}", cone.inequalities().len());

    // the cone is the wedge a > |b|: probe both walls from both sides
    for (a, b_num, b_den) in [(1i64, 999i64, 1000i64), (1, -999, 1000), (1, 1001, 1000), (1, -1001, 1000)] {
        let alpha = vec![Rational::from(a), Rational::from((b_num, b_den))];
        println!(
            "({a}, {b_num}/{b_den}) inside: {}",
            cone.contains_strict_rational(&alpha)?
        );
    }

    // norms of a few integer classes in the cone; the value counts the
    // complexity |chi| of the dual fiber surface
    for class in [[1i64, 0], [2, 1], [3, 1], [5, 2]] {
        let n = teich_norm(&theta, &CohomClass::exact_ints(&class))?;
        let Scalar::Exact(q) = n else { unreachable!("integer classes pair exactly") };
        println!("norm{class:?} = {q}");
    }
    Ok(())
}
