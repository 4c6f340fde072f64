//! Classifies a dense matrix through its eigenvalues.

use fracstab::solver::simulate_linear;
use fracstab::stability::{classify_eigenvalues, eigenvalues};
use fracstab::{CMatrix, CVector, Complex64, ComplexOrder};

fn main() -> fracstab::Result<()> {
    let order = ComplexOrder::new(0.8, 0.7)?;
    let a = CMatrix::from_fn(5, 5, |i, j| {
        let x = (i * 5 + j) as f64;
        Complex64::new(0.12 * (x * 0.7).sin(), 0.05 * (x * 1.3).cos())
    });
    let ev = eigenvalues(&a)?;
    let v = classify_eigenvalues(order, &ev);
    for e in &v.eigenvalues {
        println!(
            "{:>24}  {:?}",
            format!("{:.5}", e.eigenvalue),
            e.verdict.status
        );
    }
    println!("matrix: {:?}", v.verdict.status);

    let tr = simulate_linear(
        order,
        &a,
        &CVector::from_element(5, Complex64::new(1.0, 0.0)),
        2000,
    )?;
    println!(
        "‖x(0)‖ = {:.3e}, ‖x(2000)‖ = {:.3e}, diverged at {:?}",
        tr.states[0].norm(),
        tr.last().norm(),
        tr.diverged_at
    );
    Ok(())
}
