//! Built-in maps: scalar linear, logistic, and the coupled 2D quadratic map.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::ComplexOrder;
use crate::solver::MapSpec;
use crate::stability::{classify_matrix, real_axis_intervals, StabilityVerdict};
use crate::{CMatrix, CVector};

/// Absolute residual `‖f(x) − x‖` accepted for an equilibrium.
pub const EQUILIBRIUM_TOL: f64 = 1e-8;

pub const SYSTEM_NAMES: [&str; 3] = ["linear", "logistic", "coupled2d"];

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `f(x) = λ x(1 − x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogisticParams {
    pub lambda: f64,
}

impl LogisticParams {
    /// `{0, (λ − 1)/λ}`; the second is dropped when `λ = 0`.
    pub fn equilibria(&self) -> Vec<f64> {
        if self.lambda == 0.0 {
            vec![0.0]
        } else {
            vec![0.0, (self.lambda - 1.0) / self.lambda]
        }
    }

    pub fn derivative(&self, x: Complex64) -> Complex64 {
        self.lambda - 2.0 * self.lambda * x
    }
}

pub fn logistic_map(params: LogisticParams) -> MapSpec {
    let l = params.lambda;
    MapSpec::new(1, move |x: &CVector| x.map(|z| l * z * (1.0 - z)))
        .with_jacobian(move |x: &CVector| CMatrix::from_element(1, 1, params.derivative(x[0])))
}

/// `f1 = λx(y + 1) + μ(x² + 1)y`, `f2 = λy(x + 1) − μ(y + 1)²x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoupledParams {
    pub lambda: f64,
    pub mu: f64,
}

impl CoupledParams {
    pub fn jacobian(&self, x: Complex64, y: Complex64) -> CMatrix {
        let (l, m) = (self.lambda, self.mu);
        CMatrix::from_row_slice(
            2,
            2,
            &[
                l * (y + 1.0) + 2.0 * m * x * y,
                l * x + m * (x * x + 1.0),
                l * y - m * (y + 1.0) * (y + 1.0),
                l * (x + 1.0) - 2.0 * m * (y + 1.0) * x,
            ],
        )
    }
}

pub fn coupled_map(params: CoupledParams) -> MapSpec {
    let (l, m) = (params.lambda, params.mu);
    MapSpec::new(2, move |s: &CVector| {
        let (x, y) = (s[0], s[1]);
        CVector::from_vec(vec![
            l * x * (y + 1.0) + m * (x * x + 1.0) * y,
            l * y * (x + 1.0) - m * (y + 1.0) * (y + 1.0) * x,
        ])
    })
    .with_jacobian(move |s: &CVector| params.jacobian(s[0], s[1]))
}

/// `f(x) = λ x`, `λ ∈ ℂ`.
pub fn linear_map(lambda: Complex64) -> MapSpec {
    MapSpec::linear(CMatrix::from_element(1, 1, lambda)).expect("1x1 is square")
}

/// Local verdict at an equilibrium: the linearization's eigenvalues against
/// the stable region.
pub fn equilibrium_verdict(
    order: ComplexOrder,
    map: &MapSpec,
    point: &CVector,
) -> Result<StabilityVerdict> {
    let residual = (map.eval(point)? - point).norm();
    if residual.is_nan() || residual > EQUILIBRIUM_TOL {
        return Err(Error::NotEquilibrium { residual });
    }
    classify_matrix(order, &map.jacobian_at(point)?)
}

/// Stable `λ` intervals for the two logistic equilibria. `x₁* = 0` is stable
/// when `λ` is in the region; `x₂* = (λ − 1)/λ` when `2 − λ` is.
#[derive(Debug, Clone, Serialize)]
pub struct LogisticIntervals {
    pub x1: Vec<(f64, f64)>,
    pub x2: Vec<(f64, f64)>,
}

pub fn logistic_intervals(order: ComplexOrder) -> Result<LogisticIntervals> {
    let x1 = real_axis_intervals(order)?;
    let x2 = x1
        .iter()
        .rev()
        .map(|&(lo, hi)| (2.0 - hi, 2.0 - lo))
        .collect();
    Ok(LogisticIntervals { x1, x2 })
}

/// A registry entry: the map plus its known equilibria.
#[derive(Debug, Clone)]
pub struct BuiltinSystem {
    pub name: &'static str,
    pub map: MapSpec,
    pub equilibria: Vec<CVector>,
    /// Eigenvalue `λ` for the scalar linear system.
    pub linear_lambda: Option<Complex64>,
}

/// Looks up a system by name. Parameters: `linear` takes a complex
/// `lambda`; `logistic` a real `lambda`; `coupled2d` real `lambda` and `mu`.
pub fn build_system(name: &str, params: &BTreeMap<String, Complex64>) -> Result<BuiltinSystem> {
    let allowed: &[&str] = match name {
        "linear" | "logistic" => &["lambda"],
        "coupled2d" => &["lambda", "mu"],
        _ => return Err(Error::UnknownSystem(name.to_string())),
    };
    if let Some(extra) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::InvalidArgument(format!(
            "system {name} has no parameter {extra:?}"
        )));
    }
    let get = |key: &str| -> Result<Complex64> {
        params.get(key).copied().ok_or_else(|| {
            Error::InvalidArgument(format!("system {name} requires parameter {key:?}"))
        })
    };
    let get_real = |key: &str| -> Result<f64> {
        let v = get(key)?;
        if v.im != 0.0 {
            return Err(Error::InvalidArgument(format!(
                "parameter {key:?} of system {name} must be real"
            )));
        }
        Ok(v.re)
    };

    Ok(match name {
        "linear" => {
            let lambda = get("lambda")?;
            BuiltinSystem {
                name: "linear",
                map: linear_map(lambda),
                equilibria: vec![CVector::zeros(1)],
                linear_lambda: Some(lambda),
            }
        }
        "logistic" => {
            let p = LogisticParams {
                lambda: get_real("lambda")?,
            };
            BuiltinSystem {
                name: "logistic",
                map: logistic_map(p),
                equilibria: p
                    .equilibria()
                    .into_iter()
                    .map(|x| CVector::from_element(1, c(x)))
                    .collect(),
                linear_lambda: None,
            }
        }
        _ => {
            let p = CoupledParams {
                lambda: get_real("lambda")?,
                mu: get_real("mu")?,
            };
            BuiltinSystem {
                name: "coupled2d",
                map: coupled_map(p),
                equilibria: vec![CVector::zeros(2)],
                linear_lambda: None,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::numerical_jacobian;
    use crate::stability::{classify_lambda, eigenvalues, Status};

    fn order(u: f64, v: f64) -> ComplexOrder {
        ComplexOrder::new(u, v).unwrap()
    }

    fn scalar(x: f64) -> CVector {
        CVector::from_element(1, c(x))
    }

    #[test]
    fn logistic_equilibria_and_slopes() {
        let p = LogisticParams { lambda: 1.5 };
        let eq = p.equilibria();
        assert_eq!(eq[0], 0.0);
        assert!((eq[1] - 1.0 / 3.0).abs() < 1e-15);
        let map = logistic_map(p);
        assert_eq!(map.jacobian_at(&scalar(0.0)).unwrap()[(0, 0)], c(1.5));
        assert!((map.jacobian_at(&scalar(eq[1])).unwrap()[(0, 0)] - c(0.5)).norm() < 1e-15);

        let eq = LogisticParams { lambda: -0.1 }.equilibria();
        assert!((eq[1] - 11.0).abs() < 1e-12);
        assert_eq!(LogisticParams { lambda: 1.0 }.equilibria(), vec![0.0, 0.0]);
        assert_eq!(LogisticParams { lambda: 0.0 }.equilibria(), vec![0.0]);
    }

    #[test]
    fn logistic_slope_at_second_equilibrium_is_two_minus_lambda() {
        for &l in &[-3.0, -0.1, 0.4, 1.5, 2.5, 7.0] {
            let p = LogisticParams { lambda: l };
            let x2 = p.equilibria()[1];
            assert!((p.derivative(c(x2)) - c(2.0 - l)).norm() < 1e-12, "λ = {l}");
        }
    }

    #[test]
    fn coupled_jacobian_at_origin() {
        let p = CoupledParams {
            lambda: -0.2,
            mu: 0.1,
        };
        let map = coupled_map(p);
        let j = map.jacobian_at(&CVector::zeros(2)).unwrap();
        let want = CMatrix::from_row_slice(2, 2, &[c(-0.2), c(0.1), c(-0.1), c(-0.2)]);
        assert_eq!(j, want);
        let mut ev = eigenvalues(&j).unwrap();
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - Complex64::new(-0.2, -0.1)).norm() < 1e-15);
        assert!((ev[1] - Complex64::new(-0.2, 0.1)).norm() < 1e-15);

        let zero = coupled_map(CoupledParams {
            lambda: 0.0,
            mu: 0.0,
        });
        let j0 = zero.jacobian_at(&CVector::zeros(2)).unwrap();
        assert!(eigenvalues(&j0).unwrap().iter().all(|e| e.norm() == 0.0));
    }

    #[test]
    fn analytic_jacobians_match_finite_differences() {
        let p = CoupledParams {
            lambda: -0.2,
            mu: 0.1,
        };
        let map = coupled_map(p);
        for pt in [
            CVector::zeros(2),
            CVector::from_vec(vec![Complex64::new(0.3, -0.1), Complex64::new(-0.4, 0.2)]),
        ] {
            let num = numerical_jacobian(&map, &pt).unwrap();
            assert!((num - map.jacobian_at(&pt).unwrap()).norm() < 1e-6);
        }
        let lmap = logistic_map(LogisticParams { lambda: 2.7 });
        let pt = CVector::from_element(1, Complex64::new(0.2, 0.4));
        assert!(
            (numerical_jacobian(&lmap, &pt).unwrap() - lmap.jacobian_at(&pt).unwrap()).norm()
                < 1e-7
        );
    }

    #[test]
    fn equilibrium_verdicts() {
        let a = order(0.8, 0.7);
        let stable = logistic_map(LogisticParams { lambda: -0.1 });
        assert_eq!(
            equilibrium_verdict(a, &stable, &scalar(0.0))
                .unwrap()
                .status,
            Status::Stable
        );
        let unstable = logistic_map(LogisticParams { lambda: 1.5 });
        assert_eq!(
            equilibrium_verdict(a, &unstable, &scalar(0.0))
                .unwrap()
                .status,
            Status::Unstable
        );
        assert_eq!(
            equilibrium_verdict(a, &unstable, &scalar(1.0 / 3.0))
                .unwrap()
                .status,
            Status::Stable
        );
        let coupled = coupled_map(CoupledParams {
            lambda: -0.2,
            mu: 0.1,
        });
        assert_eq!(
            equilibrium_verdict(order(0.7, 0.4), &coupled, &CVector::zeros(2))
                .unwrap()
                .status,
            Status::Stable
        );
        assert!(matches!(
            equilibrium_verdict(a, &unstable, &scalar(0.5)),
            Err(Error::NotEquilibrium { .. })
        ));
    }

    #[test]
    fn one_dimensional_reductions() {
        let a = order(0.8, 0.7);
        for &l in &[-0.1, 0.3, 1.5, 2.1] {
            let p = LogisticParams { lambda: l };
            let map = logistic_map(p);
            let eq = p.equilibria();
            assert_eq!(
                equilibrium_verdict(a, &map, &scalar(eq[0])).unwrap(),
                classify_lambda(a, c(l))
            );
            assert_eq!(
                equilibrium_verdict(a, &map, &scalar(eq[1])).unwrap().status,
                classify_lambda(a, c(2.0 - l)).status
            );
        }
    }

    #[test]
    fn registry() {
        let mut params = BTreeMap::new();
        params.insert("lambda".to_string(), c(1.5));
        let s = build_system("logistic", &params).unwrap();
        assert_eq!(s.equilibria.len(), 2);
        assert!(matches!(
            build_system("henon", &params),
            Err(Error::UnknownSystem(_))
        ));
        assert!(build_system("coupled2d", &params).is_err());
        params.insert("mu".to_string(), c(0.5));
        assert!(build_system("coupled2d", &params).is_ok());
        assert!(build_system("logistic", &params).is_err());

        let mut lin = BTreeMap::new();
        lin.insert("lambda".to_string(), Complex64::new(0.2, 0.5));
        assert_eq!(
            build_system("linear", &lin).unwrap().linear_lambda,
            Some(Complex64::new(0.2, 0.5))
        );
        let mut bad = BTreeMap::new();
        bad.insert("lambda".to_string(), Complex64::new(0.2, 0.5));
        assert!(build_system("logistic", &bad).is_err());
    }
}
