//! Complex log-Gamma and principal powers.

use std::f64::consts::PI;

use fracstab::special::{cpow_principal, gamma, log_gamma};
use fracstab::Complex64;

fn main() -> fracstab::Result<()> {
    for z in [
        Complex64::new(0.5, 0.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(-2.5, 0.3),
        Complex64::new(30.0, 40.0),
    ] {
        println!("log Γ({z}) = {}", log_gamma(z)?);
    }
    println!(
        "Γ(1/2)² = {} (π = {PI})",
        gamma(Complex64::new(0.5, 0.0))?.powi(2)
    );

    let z = Complex64::new(0.3, 2.0);
    let reflected = (log_gamma(z)? + log_gamma(1.0 - z)?).exp();
    println!(
        "Γ(z)Γ(1−z) − π/sin(πz) at {z}: {:.2e}",
        (reflected - PI / (PI * z).sin()).norm()
    );

    let alpha = Complex64::new(0.8, 0.7);
    println!("2^α = {}", cpow_principal(Complex64::new(2.0, 0.0), alpha)?);
    println!(
        "(−1)^(1/2) = {}",
        cpow_principal(Complex64::new(-1.0, 0.0), Complex64::new(0.5, 0.0))?
    );
    match log_gamma(Complex64::new(-3.0, 0.0)) {
        Err(e) => println!("log Γ(−3): {e}"),
        Ok(v) => println!("log Γ(−3) = {v}"),
    }
    Ok(())
}
