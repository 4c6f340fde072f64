//! Samples γ(t) and reports its shape. Pass an order such as `0.4+0.9i`.

use fracstab::cli::parse_complex;
use fracstab::stability::{
    boundary_curve, detect_self_intersection, is_simple_order, real_axis_intervals_on,
};
use fracstab::ComplexOrder;

fn main() -> fracstab::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "0.8+0.7i".into());
    let order = ComplexOrder::from_complex(parse_complex(&arg)?)?;
    let curve = boundary_curve(order, 4096)?;
    let u = order.u();

    println!("order {order}");
    println!("samples {}", curve.samples.len());
    println!("simple-order test {}", is_simple_order(order));
    println!("threshold √(2u−u²) = {:.6}", (2.0 * u - u * u).sqrt());
    println!("crossing onset √(4u−u²) = {:.6}", (4.0 * u - u * u).sqrt());
    println!("self-intersection {:?}", detect_self_intersection(&curve)?);
    println!("signed area {:.6}", curve.signed_area());
    println!(
        "unresolved core radius around 1: {:.3e}",
        curve.core_radius()
    );
    if curve.is_simple {
        println!("stable real intervals {:?}", real_axis_intervals_on(&curve));
    }

    let (lo, hi) = curve
        .samples
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s.point.re), hi.max(s.point.re))
        });
    println!("real extent [{lo:.6}, {hi:.6}]");
    Ok(())
}
