use num_complex::Complex64;
use serde::Serialize;

use super::curve::{boundary_curve, is_simple_order, BoundaryCurve, DEFAULT_SAMPLES};
use super::geometry::{distance_to_polyline, winding_number};
use crate::error::{Error, Result};
use crate::kernel::ComplexOrder;
use crate::CMatrix;

pub const MAX_MATRIX_DIM: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Stable,
    Unstable,
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Winding number of the boundary curve around `λ`.
    WindingNumber { winding: i64 },
    /// Characteristic roots found outside the unit circle.
    OutsideRootCount { count: usize },
    /// The order admits no stable region.
    NonSimpleCurve,
    /// `λ` lies within sampling resolution of the curve.
    CurveDistance { distance: f64 },
    /// `λ` lies inside the unresolved spiral around the endpoint `1`.
    SpiralCore { radius: f64 },
    /// The winding sum never settled near an integer.
    Unresolved { winding: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityVerdict {
    pub status: Status,
    pub evidence: Evidence,
    pub tolerance_used: f64,
}

impl StabilityVerdict {
    pub fn is_stable(&self) -> bool {
        self.status == Status::Stable
    }

    pub fn reason(&self) -> String {
        match &self.evidence {
            Evidence::WindingNumber { winding } => {
                format!("boundary curve winding number {winding}")
            }
            Evidence::OutsideRootCount { count } => {
                format!("{count} characteristic root(s) outside the unit circle")
            }
            Evidence::NonSimpleCurve => "non-simple curve".to_string(),
            Evidence::CurveDistance { distance } => {
                format!("eigenvalue within {distance:e} of the boundary curve")
            }
            Evidence::SpiralCore { radius } => {
                format!(
                    "eigenvalue inside the unresolved spiral core of radius {radius:e} around 1"
                )
            }
            Evidence::Unresolved { winding } => format!("winding sum {winding} not an integer"),
        }
    }
}

/// Distance from the polyline below which a verdict is `Boundary`.
pub fn boundary_tolerance(lambda: Complex64) -> f64 {
    1e-6 * (1.0 + lambda.norm())
}

fn non_simple(lambda: Complex64) -> StabilityVerdict {
    StabilityVerdict {
        status: Status::Unstable,
        evidence: Evidence::NonSimpleCurve,
        tolerance_used: boundary_tolerance(lambda),
    }
}

impl BoundaryCurve {
    /// Stable iff the curve winds exactly once counterclockwise around `λ`.
    ///
    /// The argument principle on `|z| = 1` gives
    /// `#roots outside = 1 − winding(γ, λ)`, so a clockwise loop (winding −1)
    /// means two unstable roots, not zero.
    pub fn classify(&self, lambda: Complex64) -> StabilityVerdict {
        let tol = boundary_tolerance(lambda);
        if !self.is_simple {
            return non_simple(lambda);
        }
        let core = self.core_radius();
        if (lambda - 1.0).norm() <= core.max(tol) {
            return StabilityVerdict {
                status: Status::Boundary,
                evidence: Evidence::SpiralCore { radius: core },
                tolerance_used: tol,
            };
        }
        let pts = self.points();
        let distance = distance_to_polyline(&pts, lambda, true);
        if distance < tol {
            return StabilityVerdict {
                status: Status::Boundary,
                evidence: Evidence::CurveDistance { distance },
                tolerance_used: tol,
            };
        }

        let mut w = winding_number(&pts, lambda);
        let mut n = self.n_uniform;
        for _ in 0..3 {
            if (w - w.round()).abs() <= 0.25 {
                break;
            }
            n *= 2;
            let finer = super::curve::sample_curve(self.order, n);
            let pts: Vec<_> = finer.iter().map(|s| s.point).collect();
            w = winding_number(&pts, lambda);
        }
        if (w - w.round()).abs() > 0.25 {
            return StabilityVerdict {
                status: Status::Boundary,
                evidence: Evidence::Unresolved { winding: w },
                tolerance_used: tol,
            };
        }
        let winding = w.round() as i64;
        StabilityVerdict {
            status: if winding == 1 {
                Status::Stable
            } else {
                Status::Unstable
            },
            evidence: Evidence::WindingNumber { winding },
            tolerance_used: tol,
        }
    }
}

pub fn classify_lambda(order: ComplexOrder, lambda: Complex64) -> StabilityVerdict {
    if order.v() >= 0.0 && !is_simple_order(order) {
        return non_simple(lambda);
    }
    boundary_curve(order, DEFAULT_SAMPLES)
        .expect("default sample count is valid")
        .classify(lambda)
}

/// Eigenvalues of a small dense complex matrix: closed form up to 2×2,
/// Schur decomposition beyond.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<Complex64>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.nrows(),
            found: a.ncols(),
        });
    }
    match a.nrows() {
        0 => Err(Error::InvalidArgument("empty matrix".into())),
        1 => Ok(vec![a[(0, 0)]]),
        2 => {
            let half_tr = (a[(0, 0)] + a[(1, 1)]) * 0.5;
            let det = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
            let disc = (half_tr * half_tr - det).sqrt();
            Ok(vec![half_tr + disc, half_tr - disc])
        }
        n if n > MAX_MATRIX_DIM => Err(Error::InvalidArgument(format!(
            "matrix dimension {n} exceeds the supported maximum {MAX_MATRIX_DIM}"
        ))),
        _ => {
            let schur = a
                .clone()
                .try_schur(1e-12, 1000)
                .ok_or(Error::EigenNonConvergence)?;
            let ev = schur.eigenvalues().ok_or(Error::EigenNonConvergence)?;
            Ok(ev.iter().copied().collect())
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenVerdict {
    pub eigenvalue: Complex64,
    pub verdict: StabilityVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixVerdict {
    pub verdict: StabilityVerdict,
    pub eigenvalues: Vec<EigenVerdict>,
}

/// Classifies each eigenvalue against a single sampled curve and combines:
/// any unstable eigenvalue makes the matrix unstable, all stable makes it
/// stable, anything else is a boundary case.
pub fn classify_eigenvalues(order: ComplexOrder, eigenvalues: &[Complex64]) -> MatrixVerdict {
    let simple = order.v() < 0.0 || is_simple_order(order);
    let curve = if simple {
        Some(boundary_curve(order, DEFAULT_SAMPLES).expect("default sample count is valid"))
    } else {
        None
    };
    let per: Vec<EigenVerdict> = eigenvalues
        .iter()
        .map(|&ev| EigenVerdict {
            eigenvalue: ev,
            verdict: curve
                .as_ref()
                .map_or_else(|| non_simple(ev), |c| c.classify(ev)),
        })
        .collect();

    let verdict = if let Some(u) = per.iter().find(|e| e.verdict.status == Status::Unstable) {
        u.verdict.clone()
    } else if let Some(b) = per.iter().find(|e| e.verdict.status == Status::Boundary) {
        b.verdict.clone()
    } else {
        per.first()
            .map(|e| e.verdict.clone())
            .expect("at least one eigenvalue")
    };
    MatrixVerdict {
        verdict,
        eigenvalues: per,
    }
}

pub fn classify_matrix(order: ComplexOrder, a: &CMatrix) -> Result<StabilityVerdict> {
    let ev = eigenvalues(a)?;
    Ok(classify_eigenvalues(order, &ev).verdict)
}
