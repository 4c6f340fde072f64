//! Curve membership against the outside-root count for a few eigenvalues.

use std::f64::consts::FRAC_PI_4;

use fracstab::stability::{classify_lambda, count_roots_outside, DEFAULT_INNER_RADIUS};
use fracstab::{Complex64, ComplexOrder};

fn main() -> fracstab::Result<()> {
    let e = ComplexOrder::from_complex(Complex64::from_polar(1.0, FRAC_PI_4))?;
    let cases = [
        (e, Complex64::new(0.2, 0.5)),
        (e, Complex64::new(0.1, -2.0)),
        (e.conj(), Complex64::new(0.2, 0.5)),
        (ComplexOrder::new(0.7, 0.4)?, Complex64::new(-0.2, 0.1)),
        (ComplexOrder::new(0.7, 0.4)?, Complex64::new(-0.2, 0.5)),
        (ComplexOrder::new(0.4, 0.9)?, Complex64::new(0.5, 0.1)),
        (ComplexOrder::classical(), Complex64::new(1.0, 0.0)),
    ];
    println!(
        "{:<26} {:<14} {:<10} {:<40} roots",
        "order", "lambda", "status", "evidence"
    );
    for (order, lambda) in cases {
        let v = classify_lambda(order, lambda);
        let roots = count_roots_outside(order, lambda, DEFAULT_INNER_RADIUS)
            .map(|n| n.to_string())
            .unwrap_or_else(|e| e.to_string());
        println!(
            "{:<26} {:<14} {:<10} {:<40} {roots}",
            order.to_string(),
            format!("{lambda}"),
            format!("{:?}", v.status),
            v.reason()
        );
    }
    Ok(())
}
