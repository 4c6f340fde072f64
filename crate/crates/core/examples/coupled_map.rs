//! Two-dimensional coupled map around the origin.

use fracstab::solver::simulate_nonlinear;
use fracstab::stability::{classify_eigenvalues, eigenvalues};
use fracstab::systems::{coupled_map, CoupledParams};
use fracstab::{CVector, Complex64, ComplexOrder};

fn main() -> fracstab::Result<()> {
    let order = ComplexOrder::new(0.7, 0.4)?;
    let x0 = CVector::from_element(2, Complex64::new(0.1, 0.0));
    for (lambda, mu) in [(-0.2, 0.1), (-0.2, 0.5), (-0.2, -0.5)] {
        let p = CoupledParams { lambda, mu };
        let ev = eigenvalues(&p.jacobian(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)))?;
        let verdict = classify_eigenvalues(order, &ev);
        let tr = simulate_nonlinear(order, &coupled_map(p), &x0, 500)?;
        println!("(λ, μ) = ({lambda}, {mu})");
        for e in &verdict.eigenvalues {
            println!("    eigenvalue {:.3}: {:?}", e.eigenvalue, e.verdict.status);
        }
        println!("    verdict {:?}", verdict.verdict.status);
        let norms = tr.norms();
        for t in [0, 50, 100, 250, 500]
            .into_iter()
            .filter(|&t| t < norms.len())
        {
            println!("    |x({t})| = {:.3e}", norms[t]);
        }
        println!("    diverged at {:?}", tr.diverged_at);
    }
    Ok(())
}
