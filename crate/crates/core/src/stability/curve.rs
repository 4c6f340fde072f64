//! The boundary curve `γ(t) = e^{ιt}(1 − e^{−ιt})^α + 1`, `t ∈ (0, 2π)`,
//! written as `2^α sin(t/2)^α exp(ι[απ/2 + t(1 − α/2)]) + 1`.
//!
//! For `v ≠ 0` both ends of the curve spiral into `λ = 1`: near `t = 0` the
//! offset behaves like `t^u e^{−vπ/2} e^{ι(v ln t + uπ/2)}`. The sampling grid
//! is uniform in the bulk and geometrically refined toward both ends.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::Serialize;

use super::geometry::segment_crossing;
use crate::error::{Error, Result};
use crate::kernel::ComplexOrder;
use crate::special::pow_positive;

pub const DEFAULT_SAMPLES: usize = 4096;
pub const MIN_SAMPLES: usize = 64;
pub const MIN_DETECTION_SAMPLES: usize = 512;
/// Geometric refinement levels added at each end of the parameter range.
pub const REFINEMENT_LEVELS: u32 = 40;
pub const REFINEMENT_RATIO: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveSample {
    pub t: f64,
    pub point: Complex64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryCurve {
    pub order: ComplexOrder,
    pub samples: Vec<CurveSample>,
    pub is_simple: bool,
    /// Number of uniform intervals on `[0, 2π]` before refinement.
    pub n_uniform: usize,
    pub refinement_levels: u32,
}

/// `γ(t)` evaluated directly from the closed form.
///
/// For `t > π` the sine is taken as `sin((2π − t)/2)`, which keeps full
/// relative precision as `t → 2π`.
pub fn curve_point(order: ComplexOrder, t: f64) -> Complex64 {
    let alpha = order.as_complex();
    let half = if t <= PI { 0.5 * t } else { 0.5 * (TAU - t) };
    let modulus_base = 2.0 * half.sin();
    let phase = Complex64::i() * (alpha * (PI / 2.0) + t * (1.0 - alpha / 2.0));
    pow_positive(modulus_base, alpha) * phase.exp() + 1.0
}

fn parameter_grid(n_uniform: usize) -> Vec<f64> {
    let h = TAU / n_uniform as f64;
    let mut ts = Vec::with_capacity(n_uniform + 2 * REFINEMENT_LEVELS as usize);
    let mut small: Vec<f64> = (1..=REFINEMENT_LEVELS)
        .map(|k| h * REFINEMENT_RATIO.powi(k as i32))
        .collect();
    small.reverse();
    ts.extend(small.iter().copied());
    ts.extend((1..n_uniform).map(|k| k as f64 * h));
    ts.extend(small.iter().rev().map(|s| TAU - s));
    ts.dedup_by(|a, b| *a <= *b);
    ts.retain(|&t| t > 0.0 && t < TAU);
    ts
}

pub(crate) fn sample_curve(order: ComplexOrder, n_uniform: usize) -> Vec<CurveSample> {
    parameter_grid(n_uniform)
        .into_iter()
        .map(|t| CurveSample {
            t,
            point: curve_point(order, t),
        })
        .collect()
}

/// Samples `γ` on `n_samples` uniform intervals plus geometric refinement
/// toward both endpoints.
pub fn boundary_curve(order: ComplexOrder, n_samples: usize) -> Result<BoundaryCurve> {
    if n_samples < MIN_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "boundary curve needs at least {MIN_SAMPLES} samples, got {n_samples}"
        )));
    }
    let samples = sample_curve(order, n_samples);
    let is_simple = if order.v() < 0.0 {
        find_crossing(order, &samples).is_none()
    } else {
        is_simple_order(order)
    };
    Ok(BoundaryCurve {
        order,
        samples,
        is_simple,
        n_uniform: n_samples,
        refinement_levels: REFINEMENT_LEVELS,
    })
}

/// `0 ≤ v < √(2u − u²)`, i.e. `α` inside the circle `(u − 1)² + v² = 1`.
///
/// Past this threshold the curve acquires a cusp and then runs clockwise, so
/// no eigenvalue is stable. For `v < 0` the answer comes from numerical
/// self-intersection detection on the default sampling.
pub fn is_simple_order(order: ComplexOrder) -> bool {
    let (u, v) = (order.u(), order.v());
    if v >= 0.0 {
        v < (2.0 * u - u * u).sqrt()
    } else {
        let samples = sample_curve(order, DEFAULT_SAMPLES);
        find_crossing(order, &samples).is_none()
    }
}

/// Parameter pair `(t1, t2)`, `t1 < t2`, at which the open curve crosses itself.
pub fn detect_self_intersection(curve: &BoundaryCurve) -> Result<Option<(f64, f64)>> {
    if curve.n_uniform < MIN_DETECTION_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "self-intersection detection needs at least {MIN_DETECTION_SAMPLES} samples, got {}",
            curve.n_uniform
        )));
    }
    Ok(find_crossing(curve.order, &curve.samples))
}

struct Segment {
    index: usize,
    x_lo: f64,
    x_hi: f64,
    y_lo: f64,
    y_hi: f64,
}

/// Sweep over segments sorted by left edge; each candidate is confirmed by
/// bisecting both parameter intervals on the exact curve.
fn find_crossing(order: ComplexOrder, samples: &[CurveSample]) -> Option<(f64, f64)> {
    let mut segs: Vec<Segment> = samples
        .windows(2)
        .enumerate()
        .map(|(index, w)| {
            let (a, b) = (w[0].point, w[1].point);
            Segment {
                index,
                x_lo: a.re.min(b.re),
                x_hi: a.re.max(b.re),
                y_lo: a.im.min(b.im),
                y_hi: a.im.max(b.im),
            }
        })
        .collect();
    segs.sort_by(|a, b| a.x_lo.total_cmp(&b.x_lo));

    let mut active: Vec<&Segment> = Vec::new();
    for seg in &segs {
        active.retain(|s| s.x_hi >= seg.x_lo);
        for other in &active {
            if other.index.abs_diff(seg.index) < 2 || other.y_hi < seg.y_lo || seg.y_hi < other.y_lo
            {
                continue;
            }
            let (i, j) = (other.index.min(seg.index), other.index.max(seg.index));
            let (a, b) = (samples[i].point, samples[i + 1].point);
            let (c, d) = (samples[j].point, samples[j + 1].point);
            if segment_crossing(a, b, c, d).is_some() {
                if let Some(hit) = refine_crossing(
                    order,
                    (samples[i].t, samples[i + 1].t),
                    (samples[j].t, samples[j + 1].t),
                ) {
                    return Some(hit);
                }
            }
        }
        active.push(seg);
    }
    None
}

fn curve_derivative(order: ComplexOrder, t: f64) -> Complex64 {
    let alpha = order.as_complex();
    let half = if t <= PI { 0.5 * t } else { 0.5 * (TAU - t) };
    let cot = (0.5 * t).cos() / half.sin();
    (curve_point(order, t) - 1.0) * (alpha * (0.5 * cot) + Complex64::i() * (1.0 - alpha / 2.0))
}

/// Narrows a chord crossing by bisection in both parameters, then polishes
/// `γ(t1) = γ(t2)` with Newton steps. Returns `None` for chord artefacts.
fn refine_crossing(
    order: ComplexOrder,
    mut ia: (f64, f64),
    mut ib: (f64, f64),
) -> Option<(f64, f64)> {
    for _ in 0..60 {
        if ia.1 - ia.0 < 1e-13 && ib.1 - ib.0 < 1e-13 {
            break;
        }
        let ma = 0.5 * (ia.0 + ia.1);
        let mb = 0.5 * (ib.0 + ib.1);
        let halves_a = [(ia.0, ma), (ma, ia.1)];
        let halves_b = [(ib.0, mb), (mb, ib.1)];
        let mut next = None;
        'search: for ha in halves_a {
            for hb in halves_b {
                let hit = segment_crossing(
                    curve_point(order, ha.0),
                    curve_point(order, ha.1),
                    curve_point(order, hb.0),
                    curve_point(order, hb.1),
                );
                if hit.is_some() {
                    next = Some((ha, hb));
                    break 'search;
                }
            }
        }
        let Some((na, nb)) = next else { break };
        ia = na;
        ib = nb;
    }

    // Newton in w = ln(distance of t to the nearer endpoint): near 0 and 2π
    // the curve varies on the scale of that distance, not of t.
    let (mut t1, mut t2) = (0.5 * (ia.0 + ia.1), 0.5 * (ib.0 + ib.1));
    let residual = |t1: f64, t2: f64| curve_point(order, t1) - curve_point(order, t2);
    let dt_dw = |t: f64| if t <= PI { t } else { -(TAU - t) };
    let step = |t: f64, dw: f64| {
        let dw = dw.clamp(-2.0, 2.0);
        if t <= PI {
            t * (-dw).exp()
        } else {
            TAU - (TAU - t) * (-dw).exp()
        }
    };
    for _ in 0..80 {
        let f = residual(t1, t2);
        if f.norm() < 1e-15 * (curve_point(order, t1) - 1.0).norm() {
            break;
        }
        let j1 = curve_derivative(order, t1) * dt_dw(t1);
        let j2 = -curve_derivative(order, t2) * dt_dw(t2);
        let det = j1.re * j2.im - j1.im * j2.re;
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let dw1 = (f.re * j2.im - f.im * j2.re) / det;
        let dw2 = (j1.re * f.im - j1.im * f.re) / det;
        let (n1, n2) = (step(t1, dw1), step(t2, dw2));
        if !(n1 > 0.0 && n1 < TAU && n2 > 0.0 && n2 < TAU) {
            return None;
        }
        if n1 == t1 && n2 == t2 {
            break;
        }
        t1 = n1;
        t2 = n2;
    }
    // t itself is only known to one ulp, which limits γ near t = 2π; both
    // terms scale with |γ − 1| so points deep in the spiral cores are not
    // matched merely for being close to 1
    let resolution = 8.0
        * f64::EPSILON
        * (t1 * curve_derivative(order, t1).norm() + t2 * curve_derivative(order, t2).norm());
    let radius = (curve_point(order, t1) - 1.0).norm();
    let tol = 1e-10 * radius + resolution;
    let miss = residual(t1, t2).norm();
    if miss.is_nan() || miss > tol || resolution > 1e-6 * radius || (t1 - t2).abs() < 1e-6 {
        return None;
    }
    Some((t1.min(t2), t1.max(t2)))
}

impl BoundaryCurve {
    pub fn points(&self) -> Vec<Complex64> {
        self.samples.iter().map(|s| s.point).collect()
    }

    /// Radius around `λ = 1` left unresolved by the finest samples.
    pub fn core_radius(&self) -> f64 {
        let first = self.samples.first().map_or(0.0, |s| (s.point - 1.0).norm());
        let last = self.samples.last().map_or(0.0, |s| (s.point - 1.0).norm());
        first.max(last)
    }

    /// Shoelace area of the closed polyline; positive when traversed
    /// counterclockwise.
    pub fn signed_area(&self) -> f64 {
        let pts = self.points();
        let n = pts.len();
        (0..n)
            .map(|k| {
                let (a, b) = (pts[k], pts[(k + 1) % n]);
                a.re * b.im - b.re * a.im
            })
            .sum::<f64>()
            / 2.0
    }
}
