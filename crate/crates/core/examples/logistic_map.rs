//! Stable λ ranges of the logistic map and a few trajectories.

use fracstab::solver::simulate_nonlinear;
use fracstab::systems::{equilibrium_verdict, logistic_intervals, logistic_map, LogisticParams};
use fracstab::{CVector, Complex64, ComplexOrder};

fn main() -> fracstab::Result<()> {
    let order = ComplexOrder::new(0.8, 0.7)?;
    let iv = logistic_intervals(order)?;
    println!("x₁* = 0 stable for λ in {:?}", iv.x1);
    println!("x₂* = (λ−1)/λ stable for λ in {:?}", iv.x2);

    for (lambda, x0) in [(1.5, 0.3), (-0.1, 0.3), (-0.1, 10.2), (1.005, 0.01)] {
        let p = LogisticParams { lambda };
        let map = logistic_map(p);
        let tr = simulate_nonlinear(
            order,
            &map,
            &CVector::from_element(1, Complex64::new(x0, 0.0)),
            1000,
        )?;
        println!(
            "λ = {lambda}, x0 = {x0}: x(end) = {:.6}, diverged at {:?}",
            tr.last()[0],
            tr.diverged_at
        );
        for eq in p.equilibria() {
            let v = equilibrium_verdict(
                order,
                &map,
                &CVector::from_element(1, Complex64::new(eq, 0.0)),
            )?;
            println!("    equilibrium {eq:.6}: {:?} ({})", v.status, v.reason());
        }
    }
    Ok(())
}
