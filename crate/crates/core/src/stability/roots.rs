//! Root-location oracle for `g(z) = z (1 − z⁻¹)^α − (λ − 1)`.
//!
//! `g` is analytic on `|z| > 1` (there `Re(1 − z⁻¹) > 0`) and behaves like
//! `z − α − (λ − 1)` at infinity, so the number of zeros in `|z| > r` equals
//! `wind(g, |z| = R) − wind(g, |z| = r)` for any `R` beyond the largest root.
//! Nothing here touches the sampled boundary curve.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::verdict::{Evidence, StabilityVerdict, Status};
use crate::error::{Error, Result};
use crate::kernel::ComplexOrder;

/// Inner contour radius used by [`root_verdict`].
pub const DEFAULT_INNER_RADIUS: f64 = 1.0 + 1e-6;

const INITIAL_ARCS: usize = 512;
const MAX_ARC_ANGLE: f64 = 0.5;
const MIN_ARC_WIDTH: f64 = 1e-15;

pub fn characteristic_function(order: ComplexOrder, lambda: Complex64, z: Complex64) -> Complex64 {
    let alpha = order.as_complex();
    z * ((1.0 - 1.0 / z).ln() * alpha).exp() - (lambda - 1.0)
}

/// Winding number of `g` around 0 along `|z| = radius`, counterclockwise.
///
/// Arcs are bisected until each angle increment is below 0.5 rad and agrees
/// with the sum over its two halves.
pub fn contour_winding(order: ComplexOrder, lambda: Complex64, radius: f64) -> Result<i64> {
    let g =
        |theta: f64| characteristic_function(order, lambda, Complex64::from_polar(radius, theta));
    let mut total = 0.0;
    let mut stack: Vec<(f64, f64, Complex64, Complex64)> = Vec::new();
    let step = TAU / INITIAL_ARCS as f64;
    let first = g(0.0);
    let mut prev = first;
    for k in 0..INITIAL_ARCS {
        let a = k as f64 * step;
        let b = if k + 1 == INITIAL_ARCS {
            TAU
        } else {
            (k + 1) as f64 * step
        };
        let gb = if k + 1 == INITIAL_ARCS { first } else { g(b) };
        stack.push((a, b, prev, gb));
        prev = gb;
    }

    while let Some((a, b, ga, gb)) = stack.pop() {
        if !(ga.norm() > 0.0 && gb.norm() > 0.0) || !ga.is_finite() || !gb.is_finite() {
            return Err(Error::Indeterminate(format!(
                "characteristic function vanishes or overflows on |z| = {radius}"
            )));
        }
        let whole = (gb * ga.conj()).arg();
        let m = 0.5 * (a + b);
        let gm = g(m);
        let split = (gm * ga.conj()).arg() + (gb * gm.conj()).arg();
        if (whole.abs() <= MAX_ARC_ANGLE && (whole - split).abs() < 1e-9) || b - a < MIN_ARC_WIDTH {
            total += split;
        } else {
            stack.push((a, m, ga, gm));
            stack.push((m, b, gm, gb));
        }
    }

    let w = total / TAU;
    if (w - w.round()).abs() > 0.25 {
        return Err(Error::Indeterminate(format!(
            "winding estimate {w} on |z| = {radius} is not near an integer"
        )));
    }
    Ok(w.round() as i64)
}

/// Number of roots of `g` with `|z| > radius`, where `radius ∈ (1, 1.1]`.
pub fn count_roots_outside(order: ComplexOrder, lambda: Complex64, radius: f64) -> Result<usize> {
    if !(radius > 1.0 && radius <= 1.1) {
        return Err(Error::InvalidArgument(format!(
            "inner radius must lie in (1, 1.1], got {radius}"
        )));
    }
    let mut big = 2.0 * (1.0 + (lambda - 1.0).norm() + order.as_complex().norm());
    let mut outer = None;
    for _ in 0..40 {
        if contour_winding(order, lambda, big)? == 1
            && contour_winding(order, lambda, 2.0 * big)? == 1
        {
            outer = Some(1);
            break;
        }
        big *= 2.0;
    }
    let outer = outer
        .ok_or_else(|| Error::Indeterminate("outer contour winding never settled at 1".into()))?;
    let inner = contour_winding(order, lambda, radius)?;
    let count = outer - inner;
    usize::try_from(count).map_err(|_| {
        Error::Indeterminate(format!(
            "negative root count {count} (outer {outer}, inner {inner})"
        ))
    })
}

/// Verdict from the root count alone: stable iff no root lies outside
/// [`DEFAULT_INNER_RADIUS`].
pub fn root_verdict(order: ComplexOrder, lambda: Complex64) -> Result<StabilityVerdict> {
    let count = count_roots_outside(order, lambda, DEFAULT_INNER_RADIUS)?;
    Ok(StabilityVerdict {
        status: if count == 0 {
            Status::Stable
        } else {
            Status::Unstable
        },
        evidence: Evidence::OutsideRootCount { count },
        tolerance_used: DEFAULT_INNER_RADIUS - 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classical_closed_forms() {
        let one = ComplexOrder::classical();
        assert_eq!(count_roots_outside(one, c(0.5, 0.0), 1.01).unwrap(), 0);
        assert_eq!(count_roots_outside(one, c(3.0, 0.0), 1.01).unwrap(), 1);
        assert_eq!(count_roots_outside(one, c(0.0, -2.0), 1.01).unwrap(), 1);
    }

    #[test]
    fn root_inside_the_annulus_is_not_counted() {
        // α = 1 gives g = z − λ: single root at 1.05
        let one = ComplexOrder::classical();
        assert_eq!(count_roots_outside(one, c(1.05, 0.0), 1.1).unwrap(), 0);
        assert_eq!(count_roots_outside(one, c(1.05, 0.0), 1.01).unwrap(), 1);
    }

    #[test]
    fn radius_validation() {
        let one = ComplexOrder::classical();
        assert!(count_roots_outside(one, c(0.5, 0.0), 1.0).is_err());
        assert!(count_roots_outside(one, c(0.5, 0.0), 1.5).is_err());
    }

    #[test]
    fn clockwise_curve_has_two_outside_roots_inside_its_loop() {
        // α = 0.4 + 0.9i runs clockwise; −0.1 − 0.1i sits inside the loop
        let a = ComplexOrder::new(0.4, 0.9).unwrap();
        assert_eq!(
            count_roots_outside(a, c(-0.1, -0.1), DEFAULT_INNER_RADIUS).unwrap(),
            2
        );
        assert_eq!(
            count_roots_outside(a, c(0.5, 0.1), DEFAULT_INNER_RADIUS).unwrap(),
            1
        );
    }

    #[test]
    fn root_verdict_matches_unit_disk() {
        let one = ComplexOrder::classical();
        assert_eq!(
            root_verdict(one, c(0.3, 0.3)).unwrap().status,
            Status::Stable
        );
        let v = root_verdict(one, c(0.3, 1.3)).unwrap();
        assert_eq!(v.evidence, Evidence::OutsideRootCount { count: 1 });
    }
}
