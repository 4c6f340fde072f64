//! Simulation and stability analysis for fractional difference equations of
//! complex order `α = u + ιv` with `u ∈ (0, 1)`.
//!
//! The Caputo-like equation `Δ^α x(t) = (A − I) x(t + α − 1)` is equivalent to
//! the summation form
//!
//! ```text
//! x(t + 1) = x0 + (A − I) (φ̃_α * x)(t),    φ̃_α(n) = C(n + α − 1, n)
//! ```
//!
//! and its zero solution is asymptotically stable exactly when every root of
//! `det(z (1 − z⁻¹)^α I − (A − I)) = 0` lies in the open unit disk. For a scalar
//! eigenvalue `λ` the image of the unit circle under the characteristic map is
//! the boundary curve
//!
//! ```text
//! γ(t) = 2^α sin(t/2)^α exp(ι[απ/2 + t(1 − α/2)]) + 1,   t ∈ (0, 2π)
//! ```
//!
//! and `λ` is stable iff `γ` winds once counterclockwise around it.
//!
//! Module map:
//!
//! * [`special`]: complex log-Gamma and principal powers.
//! * [`kernel`]: memory weights `φ̃_α` and the discrete convolution.
//! * [`solver`]: linear and nonlinear trajectory integration.
//! * [`stability`]: boundary curve, winding classification, root-counting oracle.
//! * [`systems`]: built-in maps (linear, logistic, coupled 2D).
//! * [`cli`]: the `fracstab` command-line front end.

pub mod cli;
pub mod error;
pub mod kernel;
pub mod solver;
pub mod special;
pub mod stability;
pub mod systems;

pub use error::{Error, Result};
pub use kernel::{ComplexOrder, PhiKernel};
pub use num_complex::Complex64;
pub use solver::{MapSpec, SimulationOptions, Trajectory};
pub use stability::{BoundaryCurve, Evidence, StabilityVerdict, Status};

/// Complex state vector `x(t) ∈ ℂⁿ`.
pub type CVector = nalgebra::DVector<Complex64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<Complex64>;
