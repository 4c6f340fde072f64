//! Walks v upward for fixed u: cusp at √(2u−u²), first crossing past √(4u−u²).

use fracstab::stability::{boundary_curve, detect_self_intersection, is_simple_order};
use fracstab::ComplexOrder;

fn main() -> fracstab::Result<()> {
    let u: f64 = std::env::args()
        .nth(1)
        .map_or(Ok(0.3), |s| s.parse())
        .expect("u as a number");
    println!(
        "u = {u}: cusp at v = {:.4}, crossings from v = {:.4}",
        (2.0 * u - u * u).sqrt(),
        (4.0 * u - u * u).sqrt()
    );
    println!(
        "{:>6} {:>8} {:>10} {:>12}  crossing",
        "v", "simple", "area", "winding dir"
    );
    for k in 0..=30 {
        let v = 0.05 * k as f64;
        let order = ComplexOrder::new(u, v)?;
        let curve = boundary_curve(order, 2048)?;
        let area = curve.signed_area();
        let hit = detect_self_intersection(&curve)?;
        println!(
            "{v:>6.2} {:>8} {area:>10.4} {:>12}  {}",
            is_simple_order(order),
            if area > 0.0 { "ccw" } else { "cw" },
            hit.map_or("-".to_string(), |(a, b)| format!("t = {a:.6}, {b:.9}"))
        );
    }
    Ok(())
}
