//! Complex special functions: log-Gamma via Lanczos and the principal power.
//!
//! Every argument of `(1 − z⁻¹)` with `|z| > 1` has positive real part, so the
//! principal branch is continuous along all contours the stability code walks.
//! Likewise `2 sin(t/2)` is a positive real for `t ∈ (0, 2π)`, so the boundary
//! curve never touches a branch cut.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Distance from a non-positive integer below which `z` is treated as a pole.
pub const POLE_TOLERANCE: f64 = 1e-14;

/// Principal branch of `log Γ(z)`, imaginary part in `(−π, π]`.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma of non-finite {z}")));
    }
    if z.re <= 0.0 && z.im.abs() <= POLE_TOLERANCE && (z.re - z.re.round()).abs() <= POLE_TOLERANCE
    {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok(wrap_imag(log_gamma_unwrapped(z)))
}

/// `Γ(z)`, computed as `exp(log_gamma(z))`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    log_gamma(z).map(|l| l.exp())
}

fn log_gamma_unwrapped(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z) Γ(1 − z) = π / sin(πz)
        Complex64::new(PI.ln(), 0.0) - log_sin_pi(z) - log_gamma_unwrapped(1.0 - z)
    } else {
        let z = z - 1.0;
        let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
        for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
            series += c / (z + i as f64);
        }
        let w = z + LANCZOS_G + 0.5;
        0.5 * TAU.ln() + (z + 0.5) * w.ln() - w + series.ln()
    }
}

/// `log sin(πz)` without overflowing for large `|Im z|`.
fn log_sin_pi(z: Complex64) -> Complex64 {
    if z.im < 0.0 {
        return log_sin_pi(z.conj()).conj();
    }
    // sin(πz) = e^{−iπz} (e^{2iπz} − 1) / (2i), and |e^{2iπz}| ≤ 1 here.
    let i = Complex64::i();
    let ipz = i * PI * z;
    -ipz + ((2.0 * ipz).exp() - 1.0).ln() - (2.0 * i).ln()
}

fn wrap_imag(z: Complex64) -> Complex64 {
    let mut im = z.im % TAU;
    if im > PI {
        im -= TAU;
    } else if im <= -PI {
        im += TAU;
    }
    Complex64::new(z.re, im)
}

/// `base^exponent = exp(exponent · Log base)` with the principal logarithm.
///
/// `0^α` is `0` when `Re α > 0` and a domain error otherwise.
pub fn cpow_principal(base: Complex64, exponent: Complex64) -> Result<Complex64> {
    if base == Complex64::new(0.0, 0.0) {
        return if exponent.re > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::Domain(format!("0 raised to {exponent}")))
        };
    }
    Ok((exponent * base.ln()).exp())
}

/// Principal power of a positive real base; skips the zero check.
pub(crate) fn pow_positive(base: f64, exponent: Complex64) -> Complex64 {
    debug_assert!(base > 0.0);
    (exponent * base.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Γ via upward recurrence then the Stirling series; independent of Lanczos.
    fn stirling_log_gamma(z: Complex64) -> Complex64 {
        const B: [f64; 8] = [
            1.0 / 6.0,
            -1.0 / 30.0,
            1.0 / 42.0,
            -1.0 / 30.0,
            5.0 / 66.0,
            -691.0 / 2730.0,
            7.0 / 6.0,
            -3617.0 / 510.0,
        ];
        let shift = 20;
        let mut log_prod = c(0.0, 0.0);
        let mut w = z;
        for _ in 0..shift {
            log_prod += w.ln();
            w += 1.0;
        }
        let mut s = (w - 0.5) * w.ln() - w + 0.5 * TAU.ln();
        let mut wpow = w;
        for (k, b) in B.iter().enumerate() {
            let n = 2 * (k + 1);
            s += b / ((n * (n - 1)) as f64 * wpow);
            wpow *= w * w;
        }
        s - log_prod
    }

    #[test]
    fn identity_points() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - PI.sqrt().ln()).abs() < 1e-14);
        assert!(half.im.abs() < 1e-15);
        assert!((half.re - 0.572_364_9).abs() < 1e-7);
    }

    #[test]
    fn gamma_one_plus_i_matches_independent_oracles() {
        let z = c(1.0, 1.0);
        let g = gamma(z).unwrap();
        let oracle = stirling_log_gamma(z).exp();
        assert!((g - oracle).norm() / oracle.norm() < 1e-13);
        assert!((g - c(0.49802, -0.15495)).norm() < 1e-5);
        // Γ(z) Γ(1 − z) = π / sin(πz)
        let refl = g * gamma(1.0 - z).unwrap();
        let expected = PI / (PI * z).sin();
        assert!((refl - expected).norm() / expected.norm() < 1e-13);
    }

    #[test]
    fn poles_are_rejected() {
        for n in 0..5 {
            assert!(matches!(
                log_gamma(c(-(n as f64), 0.0)),
                Err(Error::Pole { .. })
            ));
        }
        assert!(log_gamma(c(-2.0 + 1e-9, 0.0)).is_ok());
    }

    #[test]
    fn principal_imaginary_range() {
        for &z in &[c(-3.5, 0.2), c(10.0, 40.0), c(0.3, -25.0)] {
            let l = log_gamma(z).unwrap();
            assert!(l.im > -PI && l.im <= PI);
        }
    }

    #[test]
    fn accuracy_against_stirling_up_to_fifty() {
        let pts = [
            c(2.5, 3.0),
            c(17.0, -11.0),
            c(35.0, 30.0),
            c(0.7, 45.0),
            c(-4.3, 2.2),
            c(-20.5, -9.0),
            c(49.0, 0.0),
        ];
        for z in pts {
            let got = gamma(z).unwrap();
            let want = stirling_log_gamma(z).exp();
            let rel = (got - want).norm() / want.norm();
            assert!(rel < 1e-12, "z = {z}: rel {rel:e}");
        }
    }

    #[test]
    fn cpow_examples() {
        let e = c(std::f64::consts::E, 0.0);
        let r = cpow_principal(e, c(0.0, PI)).unwrap();
        assert!((r - c(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(
            cpow_principal(c(1.0, 0.0), c(0.3, -7.0)).unwrap(),
            c(1.0, 0.0)
        );

        // 2 sin(π/2) = 2; oracle built from real exp/log/trig
        let alpha = c(0.8, 0.7);
        let got = cpow_principal(c(2.0 * (PI / 2.0).sin(), 0.0), alpha).unwrap();
        let l2 = 2f64.ln();
        let want = c(
            2f64.powf(0.8) * (0.7 * l2).cos(),
            2f64.powf(0.8) * (0.7 * l2).sin(),
        );
        assert!((got - want).norm() < 1e-15);
    }

    #[test]
    fn cpow_zero_base() {
        assert_eq!(
            cpow_principal(c(0.0, 0.0), c(0.5, 3.0)).unwrap(),
            c(0.0, 0.0)
        );
        assert!(cpow_principal(c(0.0, 0.0), c(0.0, 1.0)).is_err());
        assert!(cpow_principal(c(0.0, 0.0), c(-1.0, 0.0)).is_err());
    }

    #[test]
    fn cpow_branch_cut_sits_on_negative_axis() {
        // arg(−1) = π, so (−1)^{1/2} = i
        let r = cpow_principal(c(-1.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((r - c(0.0, 1.0)).norm() < 1e-15);
    }
}
