//! Asymptotic stability of equilibria.
//!
//! A scalar eigenvalue `λ` is decided three ways:
//!
//! * order test: no `λ` is stable once `v ≥ √(2u − u²)` ([`is_simple_order`]);
//! * winding of the sampled boundary curve around `λ` ([`classify_lambda`]);
//! * argument-principle count of characteristic roots outside the unit disk
//!   ([`count_roots_outside`]), independent of the curve sampling.
//!
//! The latter two are tied by `outside roots = 1 − winding(γ, λ)`.

mod curve;
mod geometry;
mod intervals;
mod roots;
mod verdict;

pub use curve::{
    boundary_curve, curve_point, detect_self_intersection, is_simple_order, BoundaryCurve,
    CurveSample, DEFAULT_SAMPLES, MIN_DETECTION_SAMPLES, MIN_SAMPLES, REFINEMENT_LEVELS,
    REFINEMENT_RATIO,
};
pub use geometry::{distance_to_polyline, segment_crossing, winding_number};
pub use intervals::{real_axis_intervals, real_axis_intervals_on};
pub use roots::{
    characteristic_function, contour_winding, count_roots_outside, root_verdict,
    DEFAULT_INNER_RADIUS,
};
pub use verdict::{
    boundary_tolerance, classify_eigenvalues, classify_lambda, classify_matrix, eigenvalues,
    EigenVerdict, Evidence, MatrixVerdict, StabilityVerdict, Status, MAX_MATRIX_DIM,
};
