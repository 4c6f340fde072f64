//! Memory weights φ̃(n) and the discrete convolution they define.

use fracstab::kernel::phi_coefficients;
use fracstab::special::cpow_principal;
use fracstab::{CVector, Complex64, ComplexOrder};

fn main() -> fracstab::Result<()> {
    let order = ComplexOrder::new(0.8, 0.7)?;
    let kernel = phi_coefficients(order, 400);
    for n in [0, 1, 2, 5, 10, 100, 400] {
        let w = kernel.weight(n)?;
        println!("φ̃({n:>3}) = {w:.6}  |φ̃| = {:.3e}", w.norm());
    }

    // weights are the Taylor coefficients of (1 − w)^{−α}
    let z = Complex64::new(0.0, 2.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for (j, w) in kernel.weights().iter().enumerate() {
        sum += w * z.powi(-(j as i32));
    }
    let exact = cpow_principal(1.0 - 1.0 / z, -order.as_complex())?;
    println!("Σ φ̃(j) z^−j at z = {z}: {sum:.10} vs {exact:.10}");

    let ones: Vec<CVector> = (0..8)
        .map(|_| CVector::from_element(1, Complex64::new(1.0, 0.0)))
        .collect();
    println!("(φ̃ * 1)(7) = {:.6}", kernel.convolve_at(&ones, 7)?[0]);
    Ok(())
}
