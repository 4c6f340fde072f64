use fracstab::solver::{simulate_linear, simulate_nonlinear};
use fracstab::stability::{
    boundary_curve, classify_lambda, classify_matrix, count_roots_outside,
    detect_self_intersection, distance_to_polyline, is_simple_order, root_verdict,
    DEFAULT_INNER_RADIUS, DEFAULT_SAMPLES,
};
use fracstab::systems::{
    coupled_map, equilibrium_verdict, logistic_map, CoupledParams, LogisticParams,
};
use fracstab::{CMatrix, CVector, Complex64, ComplexOrder, Status};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn order(u: f64, v: f64) -> ComplexOrder {
    ComplexOrder::new(u, v).unwrap()
}

#[test]
fn crossings_start_at_the_exact_onset() {
    // two arcs of γ meet once v² > 4u − u²; at v² = 2u − u² the curve
    // doubles back on itself, so both thresholds are excluded
    for i in 1..=9 {
        let u = i as f64 / 10.0;
        let onset = (4.0 * u - u * u).sqrt();
        let fold = (2.0 * u - u * u).sqrt();
        for j in 1..=24 {
            let v = j as f64 * 0.05;
            if (v - onset).abs() < 0.02 || (v - fold).abs() < 0.02 {
                continue;
            }
            let curve = boundary_curve(order(u, v), DEFAULT_SAMPLES).unwrap();
            let hit = detect_self_intersection(&curve).unwrap();
            assert_eq!(hit.is_some(), v > onset, "u = {u}, v = {v}, hit = {hit:?}");
        }
    }
}

#[test]
fn orientation_reverses_at_the_simple_order_threshold() {
    for i in 1..=9 {
        let u = i as f64 / 10.0;
        let limit = (2.0 * u - u * u).sqrt();
        for v in [limit - 0.03, limit + 0.03] {
            let area = boundary_curve(order(u, v), DEFAULT_SAMPLES)
                .unwrap()
                .signed_area();
            assert_eq!(area > 0.0, v < limit, "u = {u}, v = {v}, area = {area}");
        }
    }
}

#[test]
fn conjugate_order_mirrors_the_curve() {
    // γ for the conjugate order is conj(γ(2π − t)): same crossings, same orientation
    for (u, v) in [
        (0.3, 0.5),
        (0.5, 0.8),
        (0.8, 0.7),
        (0.5, 0.95),
        (0.4, 0.9),
        (0.2, 1.0),
    ] {
        let a = order(u, v);
        for t in [0.1, 1.0, 3.0, 5.5] {
            let d = (fracstab::stability::curve_point(a.conj(), t)
                - fracstab::stability::curve_point(a, std::f64::consts::TAU - t).conj())
            .norm();
            assert!(d < 1e-12, "{a} t = {t}");
        }
        let p = boundary_curve(a, DEFAULT_SAMPLES).unwrap();
        let q = boundary_curve(a.conj(), DEFAULT_SAMPLES).unwrap();
        assert_eq!(
            detect_self_intersection(&p).unwrap().is_some(),
            detect_self_intersection(&q).unwrap().is_some(),
            "{a}"
        );
        assert_eq!(p.signed_area() > 0.0, q.signed_area() > 0.0, "{a}");
    }
}

#[test]
fn negative_imaginary_part_uses_detection() {
    // 0.5 − 0.95i is past the simple-order threshold in |v| but has no crossing
    assert!(!is_simple_order(order(0.5, 0.95)));
    assert!(is_simple_order(order(0.5, -0.95)));
    assert!(!is_simple_order(order(0.2, -1.0)));
    // its curve is clockwise, so no λ is enclosed with winding +1
    assert_eq!(
        classify_lambda(order(0.5, -0.95), c(0.3, 0.0)).status,
        Status::Unstable
    );
}

#[test]
fn membership_agrees_with_root_count_for_negative_imaginary_parts() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 60 {
        let u: f64 = rng.random_range(0.1..0.95);
        let v = -rng.random_range(0.0..0.95 * (2.0 * u - u * u).sqrt());
        let a = order(u, v);
        let curve = boundary_curve(a, DEFAULT_SAMPLES).unwrap();
        let lam = c(rng.random_range(-2.0..3.0), rng.random_range(-2.5..2.5));
        if distance_to_polyline(&curve.points(), lam, true) < 1e-3 || (lam - 1.0).norm() < 1e-3 {
            continue;
        }
        checked += 1;
        let stable = curve.classify(lam).status == Status::Stable;
        let roots = count_roots_outside(a, lam, DEFAULT_INNER_RADIUS).unwrap();
        assert_eq!(stable, roots == 0, "{a} lambda = {lam}: roots = {roots}");
    }
}

#[test]
fn non_simple_examples_have_roots_outside() {
    let a = order(0.4, 0.9);
    for lam in [c(1.1, -0.1), c(-0.1, -0.1), c(0.5, 0.1)] {
        assert_eq!(classify_lambda(a, lam).reason(), "non-simple curve");
        let v = root_verdict(a, lam).unwrap();
        assert_eq!(v.status, Status::Unstable, "{lam}: {v:?}");
    }
}

#[test]
fn block_matrix_goes_through_the_iterative_eigensolver() {
    let a = order(0.7, 0.4);
    let stable = CoupledParams {
        lambda: -0.2,
        mu: 0.1,
    }
    .jacobian(c(0.0, 0.0), c(0.0, 0.0));
    let unstable = CoupledParams {
        lambda: -0.2,
        mu: 0.5,
    }
    .jacobian(c(0.0, 0.0), c(0.0, 0.0));
    let block = |p: &CMatrix, q: &CMatrix| {
        let mut m = CMatrix::zeros(4, 4);
        m.view_mut((0, 0), (2, 2)).copy_from(p);
        m.view_mut((2, 2), (2, 2)).copy_from(q);
        m
    };
    assert_eq!(
        classify_matrix(a, &block(&stable, &stable)).unwrap().status,
        Status::Stable
    );
    assert_eq!(
        classify_matrix(a, &block(&stable, &unstable))
            .unwrap()
            .status,
        Status::Unstable
    );
}

#[test]
fn stable_verdicts_pull_nearby_states_in() {
    let cases = [
        (order(0.8, 0.7), 1.5, 1.0 / 3.0),
        (order(0.8, 0.7), -0.1, 0.0),
        (order(0.8, 0.7), 0.5, 0.0),
        (ComplexOrder::classical(), 2.5, 0.6),
    ];
    for (a, lambda, eq) in cases {
        let map = logistic_map(LogisticParams { lambda });
        let star = CVector::from_element(1, c(eq, 0.0));
        assert_eq!(
            equilibrium_verdict(a, &map, &star).unwrap().status,
            Status::Stable
        );
        let x0 = CVector::from_element(1, c(eq + 0.05, 0.0));
        let tr = simulate_nonlinear(a, &map, &x0, 1000).unwrap();
        let d = (tr.last() - &star).norm();
        assert!(d < 0.05 / 10.0, "{a} lambda = {lambda}: distance {d}");
    }
}

#[test]
fn unstable_verdicts_escape() {
    let a = order(0.8, 0.7);
    let map = logistic_map(LogisticParams { lambda: -0.1 });
    let star = CVector::from_element(1, c(11.0, 0.0));
    assert_eq!(
        equilibrium_verdict(a, &map, &star).unwrap().status,
        Status::Unstable
    );
    let tr = simulate_nonlinear(a, &map, &CVector::from_element(1, c(10.2, 0.0)), 500).unwrap();
    assert!(tr.diverged());

    let b = order(0.7, 0.4);
    for mu in [0.5, -0.5] {
        let p = CoupledParams { lambda: -0.2, mu };
        let tr = simulate_nonlinear(
            b,
            &coupled_map(p),
            &CVector::from_element(2, c(0.1, 0.0)),
            500,
        )
        .unwrap();
        assert!(tr.diverged(), "mu = {mu}");
    }
}

#[test]
fn scalar_verdicts_match_linear_dynamics() {
    // (order, λ) pairs whose roots sit well away from the unit circle
    let cases = [
        (ComplexOrder::classical(), c(0.5, 0.0)),
        (ComplexOrder::classical(), c(0.0, 1.2)),
        (order(0.7, 0.4), c(-0.2, 0.1)),
        (order(0.7, 0.4), c(-0.2, 0.5)),
        (order(0.8, 0.7), c(0.3, 0.0)),
        (order(0.8, 0.7), c(-0.5, 0.0)),
    ];
    for (a, lam) in cases {
        let v = classify_lambda(a, lam);
        let tr = simulate_linear(
            a,
            &CMatrix::from_element(1, 1, lam),
            &CVector::from_element(1, c(1.0, 0.0)),
            1000,
        )
        .unwrap();
        match v.status {
            Status::Stable => assert!(!tr.diverged() && tr.last().norm() < 1e-2, "{a} {lam}"),
            Status::Unstable => assert!(tr.diverged(), "{a} {lam}: {:?}", tr.diverged_at),
            Status::Boundary => panic!("{a} {lam} on the boundary"),
        }
    }
}
