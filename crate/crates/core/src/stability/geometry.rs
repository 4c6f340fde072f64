//! Planar polyline primitives on `Complex64` points.

use num_complex::Complex64;

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Winding number of the closed polyline `poly` (last vertex joined back to
/// the first) around `p`, as a real number. Sums signed angle increments, so
/// the result is an integer up to rounding unless an edge passes through `p`.
pub fn winding_number(poly: &[Complex64], p: Complex64) -> f64 {
    let n = poly.len();
    if n < 2 {
        return 0.0;
    }
    let mut total = 0.0;
    for k in 0..n {
        let a = poly[k] - p;
        let b = poly[(k + 1) % n] - p;
        total += (b * a.conj()).arg();
    }
    total / std::f64::consts::TAU
}

fn distance_to_segment(a: Complex64, b: Complex64, p: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let s = (((p - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (a + d * s - p).norm()
}

/// Smallest distance from `p` to the polyline; includes the closing edge when
/// `closed` is set.
pub fn distance_to_polyline(poly: &[Complex64], p: Complex64, closed: bool) -> f64 {
    let n = poly.len();
    if n == 1 {
        return (poly[0] - p).norm();
    }
    let edges = if closed { n } else { n.saturating_sub(1) };
    (0..edges)
        .map(|k| distance_to_segment(poly[k], poly[(k + 1) % n], p))
        .fold(f64::INFINITY, f64::min)
}

/// Proper crossing of segments `ab` and `cd`, returned as the fractional
/// positions along each. Touching or collinear configurations are ignored.
pub fn segment_crossing(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
) -> Option<(f64, f64)> {
    let r = b - a;
    let s = d - c;
    let d1 = cross(r, c - a);
    let d2 = cross(r, d - a);
    let d3 = cross(s, a - c);
    let d4 = cross(s, b - c);
    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        let denom = cross(r, s);
        let ta = cross(c - a, s) / denom;
        let tc = cross(c - a, r) / denom;
        Some((ta, tc))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn square() -> Vec<Complex64> {
        vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1.0), c(0.0, 1.0)]
    }

    #[test]
    fn winding_of_square() {
        let sq = square();
        assert!((winding_number(&sq, c(0.5, 0.5)) - 1.0).abs() < 1e-12);
        assert!(winding_number(&sq, c(1.5, 0.5)).abs() < 1e-12);
        let rev: Vec<_> = sq.iter().rev().copied().collect();
        assert!((winding_number(&rev, c(0.5, 0.5)) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn winding_of_doubled_circle() {
        let poly: Vec<_> = (0..200)
            .map(|k| Complex64::from_polar(1.0, 4.0 * std::f64::consts::PI * k as f64 / 200.0))
            .collect();
        assert!((winding_number(&poly, c(0.1, -0.2)) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn distances() {
        let sq = square();
        assert!((distance_to_polyline(&sq, c(0.5, 0.5), true) - 0.5).abs() < 1e-15);
        // closing edge is x = 0; without it the nearest point is a vertex
        assert!((distance_to_polyline(&sq, c(-0.25, 0.5), true) - 0.25).abs() < 1e-15);
        assert!((distance_to_polyline(&sq, c(-0.25, 0.5), false) - 0.3125f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn crossings() {
        let hit = segment_crossing(c(0.0, 0.0), c(2.0, 2.0), c(0.0, 2.0), c(2.0, 0.0)).unwrap();
        assert!((hit.0 - 0.5).abs() < 1e-15 && (hit.1 - 0.5).abs() < 1e-15);
        assert!(segment_crossing(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(1.0, 1.0)).is_none());
        // shared endpoint is not a proper crossing
        assert!(segment_crossing(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 1.0)).is_none());
    }
}
