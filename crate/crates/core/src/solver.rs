//! Trajectory integration for
//!
//! ```text
//! x(t + 1) = x0 + (A − I) (φ̃_α * x)(t)                       (linear)
//! x(t)     = x0 + Σ_{j<t} φ̃_α(t − 1 − j) [f(x(j)) − x(j)]     (nonlinear)
//! ```
//!
//! Each step is an O(t) dot product against the full history, so a run of
//! `T` steps costs O(T²).

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{phi_coefficients, ComplexOrder};
use crate::{CMatrix, CVector};

pub type MapFn = dyn Fn(&CVector) -> CVector + Send + Sync;
pub type JacobianFn = dyn Fn(&CVector) -> CMatrix + Send + Sync;

/// A map `f: ℂⁿ → ℂⁿ` with an optional analytic Jacobian.
#[derive(Clone)]
pub struct MapSpec {
    dimension: usize,
    f: Arc<MapFn>,
    jacobian: Option<Arc<JacobianFn>>,
}

impl fmt::Debug for MapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MapSpec")
            .field("dimension", &self.dimension)
            .field("analytic_jacobian", &self.jacobian.is_some())
            .finish()
    }
}

impl MapSpec {
    pub fn new(dimension: usize, f: impl Fn(&CVector) -> CVector + Send + Sync + 'static) -> Self {
        Self {
            dimension,
            f: Arc::new(f),
            jacobian: None,
        }
    }

    pub fn with_jacobian(
        mut self,
        jacobian: impl Fn(&CVector) -> CMatrix + Send + Sync + 'static,
    ) -> Self {
        self.jacobian = Some(Arc::new(jacobian));
        self
    }

    /// `f(x) = A x`.
    pub fn linear(a: CMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch {
                expected: a.nrows(),
                found: a.ncols(),
            });
        }
        let n = a.nrows();
        let a2 = a.clone();
        Ok(Self::new(n, move |x| &a * x).with_jacobian(move |_| a2.clone()))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn has_analytic_jacobian(&self) -> bool {
        self.jacobian.is_some()
    }

    pub fn eval(&self, x: &CVector) -> Result<CVector> {
        self.check_dim(x.len())?;
        let y = (self.f)(x);
        self.check_dim(y.len())?;
        Ok(y)
    }

    /// Analytic Jacobian when available, otherwise [`numerical_jacobian`].
    pub fn jacobian_at(&self, x: &CVector) -> Result<CMatrix> {
        self.check_dim(x.len())?;
        match &self.jacobian {
            Some(j) => Ok(j(x)),
            None => numerical_jacobian(self, x),
        }
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Trajectory {
    pub order: ComplexOrder,
    /// `states[t]` for `t = 0..=T`, or up to `diverged_at`.
    #[serde(skip)]
    pub states: Vec<CVector>,
    pub diverged_at: Option<usize>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn last(&self) -> &CVector {
        self.states.last().expect("trajectory holds x0")
    }

    pub fn norms(&self) -> Vec<f64> {
        self.states.iter().map(|x| x.norm()).collect()
    }

    pub fn diverged(&self) -> bool {
        self.diverged_at.is_some()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SimulationOptions {
    /// A state whose Euclidean norm exceeds this (or is non-finite) ends the run.
    pub divergence_cutoff: f64,
}

impl Default for SimulationOptions {
    fn default() -> Self {
        Self {
            divergence_cutoff: 1e10,
        }
    }
}

impl SimulationOptions {
    pub fn with_cutoff(divergence_cutoff: f64) -> Self {
        Self { divergence_cutoff }
    }

    fn is_divergent(&self, x: &[Complex64]) -> bool {
        let n2: f64 = x.iter().map(|c| c.norm_sqr()).sum();
        !n2.is_finite() || n2.sqrt() > self.divergence_cutoff
    }

    /// Linear system `x(t + 1) = x0 + (A − I)(φ̃_α * x)(t)`.
    pub fn simulate_linear(
        &self,
        order: ComplexOrder,
        a: &CMatrix,
        x0: &CVector,
        steps: usize,
    ) -> Result<Trajectory> {
        let dim = x0.len();
        if dim == 0 {
            return Err(Error::InvalidArgument("empty state vector".into()));
        }
        if !a.is_square() || a.nrows() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: a.nrows(),
            });
        }
        let a_minus_i = a - CMatrix::identity(dim, dim);
        let kernel = phi_coefficients(order, steps);
        let mut history: Vec<Complex64> = Vec::with_capacity((steps + 1) * dim);
        history.extend(x0.iter());
        let mut states = vec![x0.clone()];
        let mut conv = vec![Complex64::new(0.0, 0.0); dim];
        let mut diverged_at = None;

        for t in 0..steps {
            kernel.convolve_flat(&history, dim, t, &mut conv);
            let next = x0 + &a_minus_i * CVector::from_column_slice(&conv);
            history.extend(next.iter());
            let stop = self.is_divergent(next.as_slice());
            states.push(next);
            if stop {
                diverged_at = Some(t + 1);
                break;
            }
        }
        Ok(Trajectory {
            order,
            states,
            diverged_at,
        })
    }

    /// Nonlinear system `x(t) = x0 + Σ_{j<t} φ̃_α(t − 1 − j) g(j)` with
    /// `g(j) = f(x(j)) − x(j)` cached as the run advances.
    pub fn simulate_nonlinear(
        &self,
        order: ComplexOrder,
        map: &MapSpec,
        x0: &CVector,
        steps: usize,
    ) -> Result<Trajectory> {
        let dim = map.dimension();
        map.check_dim(x0.len())?;
        let kernel = phi_coefficients(order, steps);
        let mut forcing: Vec<Complex64> = Vec::with_capacity(steps * dim);
        let mut states = vec![x0.clone()];
        let mut conv = vec![Complex64::new(0.0, 0.0); dim];
        let mut diverged_at = None;

        for t in 1..=steps {
            let prev = &states[t - 1];
            let g = map.eval(prev)? - prev;
            forcing.extend(g.iter());
            kernel.convolve_flat(&forcing, dim, t - 1, &mut conv);
            let next = x0 + CVector::from_column_slice(&conv);
            let stop = self.is_divergent(next.as_slice());
            states.push(next);
            if stop {
                diverged_at = Some(t);
                break;
            }
        }
        Ok(Trajectory {
            order,
            states,
            diverged_at,
        })
    }
}

/// [`SimulationOptions::simulate_linear`] with the default cutoff.
pub fn simulate_linear(
    order: ComplexOrder,
    a: &CMatrix,
    x0: &CVector,
    steps: usize,
) -> Result<Trajectory> {
    SimulationOptions::default().simulate_linear(order, a, x0, steps)
}

/// [`SimulationOptions::simulate_nonlinear`] with the default cutoff.
pub fn simulate_nonlinear(
    order: ComplexOrder,
    map: &MapSpec,
    x0: &CVector,
    steps: usize,
) -> Result<Trajectory> {
    SimulationOptions::default().simulate_nonlinear(order, map, x0, steps)
}

/// Central-difference Jacobian of a holomorphic map.
///
/// Differences are taken along the real and the imaginary direction of each
/// coordinate with step `h = 1e-6 max(1, |x|)`. For holomorphic `f` they
/// estimate `f'` and `ι f'`; the two are averaged.
pub fn numerical_jacobian(map: &MapSpec, point: &CVector) -> Result<CMatrix> {
    let n = map.dimension();
    map.check_dim(point.len())?;
    let h = 1e-6 * point.norm().max(1.0);
    let i = Complex64::i();
    let two_h = Complex64::new(2.0 * h, 0.0);
    let mut jac = CMatrix::zeros(n, n);
    for k in 0..n {
        let central = |step: Complex64| -> Result<CVector> {
            let mut plus = point.clone();
            let mut minus = point.clone();
            plus[k] += step;
            minus[k] -= step;
            Ok((map.eval(&plus)? - map.eval(&minus)?) / two_h)
        };
        let d_re = central(Complex64::new(h, 0.0))?;
        let d_im = central(i * h)?;
        let col = (d_re - d_im * i) * Complex64::new(0.5, 0.0);
        jac.set_column(k, &col);
    }
    Ok(jac)
}
