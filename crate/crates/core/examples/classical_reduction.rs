//! α = 1 turns the fractional scheme into plain iteration.

use fracstab::solver::simulate_nonlinear;
use fracstab::stability::{boundary_curve, classify_lambda};
use fracstab::systems::{logistic_map, LogisticParams};
use fracstab::{CVector, Complex64, ComplexOrder};

fn main() -> fracstab::Result<()> {
    let one = ComplexOrder::classical();
    let tr = simulate_nonlinear(
        one,
        &logistic_map(LogisticParams { lambda: 2.5 }),
        &CVector::from_element(1, Complex64::new(0.3, 0.0)),
        100,
    )?;
    let mut x = 0.3f64;
    let mut worst: f64 = 0.0;
    for s in &tr.states {
        worst = worst.max((s[0].re - x).abs());
        x = 2.5 * x * (1.0 - x);
    }
    println!("logistic 2.5: max deviation from x ← f(x) over 100 steps = {worst:.1e}");

    let curve = boundary_curve(one, 1024)?;
    let dev = curve
        .samples
        .iter()
        .map(|s| (s.point.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    println!("boundary: max ||γ(t)| − 1| = {dev:.1e}");
    for lambda in [0.5, 0.99, 1.01, -1.2] {
        println!(
            "λ = {lambda}: {:?}",
            classify_lambda(one, Complex64::new(lambda, 0.0)).status
        );
    }
    Ok(())
}
