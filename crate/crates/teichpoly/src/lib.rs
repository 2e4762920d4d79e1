//! Exact and certified computation around Teichmuller polynomials of
//! fibered 3-manifolds: group-ring arithmetic, transition-matrix
//! characteristic polynomials, fibered cones and Thurston-norm slices,
//! dilatation evaluation and minimization, and machine-checkable
//! certificates that minimal dilatation points have irrational coordinates.
//!
//! The `examples/` directory is the primary tour of the API; each example
//! exercises one capability end to end. A thin CLI (`teichpoly`) wraps the
//! same entry points for file-based workflows.

pub mod certify;
pub mod cone;
pub mod dilatation;
pub mod error;
pub mod groupring;
pub mod intpoly;
pub mod io;
pub mod orbits;
pub mod penner;
pub mod polymat;
pub mod presets;
pub mod real;
pub mod tolerances;

pub use error::{Error, Result};
pub use groupring::{ExpVec, GroupPoly};
