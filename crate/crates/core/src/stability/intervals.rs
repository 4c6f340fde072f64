//! Intersection of the stable region with the real axis.

use num_complex::Complex64;

use super::curve::{boundary_curve, curve_point, is_simple_order, BoundaryCurve, DEFAULT_SAMPLES};
use super::verdict::Status;
use crate::error::{Error, Result};
use crate::kernel::ComplexOrder;

const BISECTION_TOL: f64 = 1e-10;

/// Stable open intervals `(lo, hi)` of real `λ`, ascending.
pub fn real_axis_intervals(order: ComplexOrder) -> Result<Vec<(f64, f64)>> {
    if !is_simple_order(order) {
        return Err(Error::NonSimpleOrder {
            u: order.u(),
            v: order.v(),
        });
    }
    let curve = boundary_curve(order, DEFAULT_SAMPLES)?;
    Ok(real_axis_intervals_on(&curve))
}

/// Real-axis crossings of `γ`, each bisected to `1e-10` in `t`.
fn crossings(curve: &BoundaryCurve) -> Vec<f64> {
    let order = curve.order;
    let mut xs = Vec::new();
    for w in curve.samples.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a.point.im == 0.0 {
            xs.push(a.point.re);
            continue;
        }
        if a.point.im * b.point.im >= 0.0 {
            continue;
        }
        let (mut lo, mut hi) = (a.t, b.t);
        let lo_sign = a.point.im.signum();
        while hi - lo > BISECTION_TOL {
            let mid = 0.5 * (lo + hi);
            if curve_point(order, mid).im.signum() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        xs.push(curve_point(order, 0.5 * (lo + hi)).re);
    }
    if let Some(last) = curve.samples.last() {
        if last.point.im == 0.0 {
            xs.push(last.point.re);
        }
    }
    // both ends of γ sit at λ = 1
    xs.push(1.0);
    xs.sort_by(f64::total_cmp);
    xs.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    xs
}

/// Classifies the midpoint of every gap between consecutive crossings and
/// keeps the stable gaps, merging neighbours that share an endpoint.
pub fn real_axis_intervals_on(curve: &BoundaryCurve) -> Vec<(f64, f64)> {
    if !curve.is_simple {
        return Vec::new();
    }
    let xs = crossings(curve);
    let mut out: Vec<(f64, f64)> = Vec::new();
    for w in xs.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        let mid = Complex64::new(0.5 * (lo + hi), 0.0);
        if curve.classify(mid).status != Status::Stable {
            continue;
        }
        match out.last_mut() {
            Some(prev) if prev.1 == lo => prev.1 = hi,
            _ => out.push((lo, hi)),
        }
    }
    out
}
