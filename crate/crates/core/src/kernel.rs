//! Memory weights `φ̃_α(n) = C(n + α − 1, n)` and the discrete convolution
//! `(φ̃_α * x)(n) = Σ_{s=0}^{n} φ̃_α(n − s) x(s)`.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::CVector;

/// Fractional order `α = u + ιv`.
///
/// `u` must lie strictly inside `(0, 1)`. The classical first-order case
/// `α = 1` is also accepted, since every formula in the crate reduces to
/// ordinary iteration there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawOrder", into = "RawOrder")]
pub struct ComplexOrder {
    u: f64,
    v: f64,
}

#[derive(Serialize, Deserialize)]
struct RawOrder {
    re: f64,
    im: f64,
}

impl TryFrom<RawOrder> for ComplexOrder {
    type Error = Error;
    fn try_from(raw: RawOrder) -> Result<Self> {
        ComplexOrder::new(raw.re, raw.im)
    }
}

impl From<ComplexOrder> for RawOrder {
    fn from(o: ComplexOrder) -> Self {
        RawOrder { re: o.u, im: o.v }
    }
}

impl ComplexOrder {
    pub fn new(u: f64, v: f64) -> Result<Self> {
        let classical = u == 1.0 && v == 0.0;
        if !(u.is_finite() && v.is_finite()) || !((u > 0.0 && u < 1.0) || classical) {
            return Err(Error::InvalidOrder { u, v });
        }
        Ok(Self { u, v })
    }

    pub fn from_complex(alpha: Complex64) -> Result<Self> {
        Self::new(alpha.re, alpha.im)
    }

    /// `α = 1`: ordinary first-order difference equation.
    pub fn classical() -> Self {
        Self { u: 1.0, v: 0.0 }
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn v(&self) -> f64 {
        self.v
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.u, self.v)
    }

    pub fn conj(&self) -> Self {
        Self {
            u: self.u,
            v: -self.v,
        }
    }
}

impl fmt::Display for ComplexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v < 0.0 {
            write!(f, "{}-{}i", self.u, -self.v)
        } else {
            write!(f, "{}+{}i", self.u, self.v)
        }
    }
}

/// Precomputed `φ̃_α(0..=N)`.
#[derive(Debug, Clone)]
pub struct PhiKernel {
    order: ComplexOrder,
    weights: Vec<Complex64>,
}

/// Weights `φ̃_α(0..=n_max)` from the ratio recurrence
/// `φ̃(n) = φ̃(n − 1) (n − 1 + α) / n`.
pub fn phi_coefficients(order: ComplexOrder, n_max: usize) -> PhiKernel {
    let mut kernel = PhiKernel {
        order,
        weights: Vec::with_capacity(n_max + 1),
    };
    kernel.weights.push(Complex64::new(1.0, 0.0));
    kernel.fill_to(n_max);
    kernel
}

impl PhiKernel {
    pub fn order(&self) -> ComplexOrder {
        self.order
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    /// Largest index with a stored weight.
    pub fn capacity(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn weight(&self, n: usize) -> Result<Complex64> {
        self.weights.get(n).copied().ok_or(Error::Capacity {
            needed: n,
            available: self.capacity(),
        })
    }

    /// Grows the table so that index `n` is available, doubling the capacity.
    pub fn ensure(&mut self, n: usize) {
        if n <= self.capacity() {
            return;
        }
        let target = n.max(2 * self.capacity().max(1));
        self.fill_to(target);
    }

    fn fill_to(&mut self, n_max: usize) {
        let alpha = self.order.as_complex();
        let mut last = *self.weights.last().expect("weights start at φ̃(0) = 1");
        for n in self.weights.len()..=n_max {
            let nf = n as f64;
            last = last * (nf - 1.0 + alpha) / nf;
            self.weights.push(last);
        }
    }

    /// `Σ_{s=0}^{n} φ̃(n − s) series[s]`, componentwise.
    pub fn convolve_at(&self, series: &[CVector], n: usize) -> Result<CVector> {
        if n > self.capacity() {
            return Err(Error::Capacity {
                needed: n,
                available: self.capacity(),
            });
        }
        if series.len() <= n {
            return Err(Error::InvalidArgument(format!(
                "series has {} entries, convolution at {n} needs {}",
                series.len(),
                n + 1
            )));
        }
        let dim = series[0].len();
        let mut acc = CVector::zeros(dim);
        for (s, x) in series[..=n].iter().enumerate() {
            if x.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: x.len(),
                });
            }
            let w = self.weights[n - s];
            for (a, xi) in acc.iter_mut().zip(x.iter()) {
                *a += w * xi;
            }
        }
        Ok(acc)
    }

    /// Convolution over a flat row-major history, `history[s * dim + k]`.
    pub(crate) fn convolve_flat(
        &self,
        history: &[Complex64],
        dim: usize,
        n: usize,
        out: &mut [Complex64],
    ) {
        debug_assert!(n <= self.capacity() && history.len() >= (n + 1) * dim);
        out.iter_mut().for_each(|o| *o = Complex64::new(0.0, 0.0));
        for s in 0..=n {
            let w = self.weights[n - s];
            let row = &history[s * dim..(s + 1) * dim];
            for (o, x) in out.iter_mut().zip(row) {
                *o += w * x;
            }
        }
    }
}
