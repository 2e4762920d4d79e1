//! Every numeric tolerance the reproduction reports and acceptance tests
//! use, pinned in one place. Exact checks (polynomial identities, integer
//! lattice data, verdicts) take no tolerance and do not appear here.
//!
//! The working precision everywhere is 50 decimal digits plus guard bits,
//! so quantities limited only by round-off are checked at 1e-40, leaving
//! ten digits of slack. Quantities quoted from published decimals are
//! checked at the published precision instead.

/// Offset of the first minimizer coordinate from its published 6-digit
/// decimal.
pub const MIN_COORDINATE_ABS: f64 = 1e-5;

/// Offset of the minimal dilatation from its published value. The value
/// is around 1.15e4, so this is still a 1e-6 relative check.
pub const MIN_DILATATION_ABS: f64 = 1e-2;

/// Ceiling on the scaled first-order residual at the reported minimum
/// when run at 50 digits.
pub const MIN_RESIDUAL_CEILING: f64 = 1e-45;

/// Offset of the trace value A = Y + 1/Y and of Y itself from their
/// published 16-digit decimals.
pub const TRACE_VALUE_ABS: f64 = 1e-10;

/// Offset of the critical exponent ratio from its published decimal, and
/// the slack allowed when asserting the enclosure straddles it.
pub const RATIO_ABS: f64 = 1e-5;

/// Agreement between a minimizer and its half-scale counterpart on the
/// doubled covector, and of the symmetric minimizer with the exact
/// midpoint. Both are exact identities, so only round-off separates them.
pub const SCALING_IDENTITY_ABS: f64 = 1e-40;

/// Offset of the Penner-family minimizer coordinate from its published
/// value. The coordinate is around 1.1e-4; the published decimal has
/// thirteen significant digits.
pub const PENNER_COORDINATE_ABS: f64 = 1e-12;

/// Offset of 1/(4s) for the Penner family from its published decimal.
pub const PENNER_RATIO_ABS: f64 = 1e-4;

/// Homogeneity defect |ln lambda(2a) - 2 ln lambda(a)| allowed in the
/// property suites (exact identity up to round-off at 50 digits).
pub const HOMOGENEITY_ABS: f64 = 1e-40;

/// Relative error allowed between the directional derivative and a
/// central finite difference with step 2^-30.
pub const DERIVATIVE_FD_REL: f64 = 1e-6;
