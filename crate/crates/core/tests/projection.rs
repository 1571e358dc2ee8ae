use std::f64::consts::E;

use ortho_interval::family::FamilySpec;
use ortho_interval::projection::{gram, project};
use ortho_interval::quadrature::gauss_rule;

fn closed_form_specs() -> Vec<(FamilySpec, usize)> {
    vec![
        (FamilySpec::altered(), 128),
        (FamilySpec::rational(1.0), 128),
        (FamilySpec::rational(3.0), 128),
        (FamilySpec::exponential(2.0), 192),
        (FamilySpec::exponential(E), 192),
        (FamilySpec::logarithmic(2.0), 192),
        (FamilySpec::logarithmic(E), 192),
        (FamilySpec::transmuted(3), 128),
    ]
}

#[test]
fn gram_is_diagonal_up_to_twelve_members() {
    for (spec, order) in closed_form_specs() {
        let r = gram(&spec, 12, &gauss_rule(order).unwrap()).unwrap();
        assert!(r.passes(1e-10), "{:?}: off {:e} diag {:?}", spec, r.max_offdiag, r.max_diag_reldev);
    }
}

#[test]
fn doubling_the_order_changes_nothing() {
    for (spec, order) in closed_form_specs() {
        let a = gram(&spec, 8, &gauss_rule(order).unwrap()).unwrap();
        let b = gram(&spec, 8, &gauss_rule(2 * order).unwrap()).unwrap();
        for (ra, rb) in a.matrix.iter().zip(&b.matrix) {
            for (x, y) in ra.iter().zip(rb) {
                assert!((x - y).abs() <= 1e-11, "{:?}: {x} vs {y}", spec);
            }
        }
    }
}

#[test]
fn gram_examples() {
    let r = gram(&FamilySpec::altered(), 1, &gauss_rule(64).unwrap()).unwrap();
    assert!((r.matrix[0][0] - 0.25).abs() < 1e-15);
    let r = gram(&FamilySpec::exponential(2.0), 6, &gauss_rule(64).unwrap()).unwrap();
    assert!(r.max_offdiag <= 1e-11);
    assert!((r.matrix[0][0] - 1.0 / (2.0 * std::f64::consts::LN_2)).abs() < 1e-12);
}

#[test]
fn gram_is_deterministic() {
    let rule = gauss_rule(128).unwrap();
    let spec = FamilySpec::logarithmic(E);
    assert_eq!(gram(&spec, 6, &rule).unwrap(), gram(&spec, 6, &rule).unwrap());
}

#[test]
fn projection_is_idempotent() {
    let rule = gauss_rule(128).unwrap();
    for (spec, _) in closed_form_specs() {
        let first = project(|x| (x + 0.3).sqrt(), &spec, 6, &rule).unwrap();
        let again = project(|x| first.reconstruct(x).unwrap(), &spec, 6, &rule).unwrap();
        for (a, b) in first.coefficients.iter().zip(&again.coefficients) {
            assert!((a - b).abs() <= 1e-11, "{:?}: {a} vs {b}", spec);
        }
    }
}

#[test]
fn projecting_a_member_recovers_a_unit_vector() {
    let rule = gauss_rule(128).unwrap();
    let spec = FamilySpec::altered();
    let res = project(|x| spec.eval(2, x).unwrap(), &spec, 4, &rule).unwrap();
    for (i, c) in res.coefficients.iter().enumerate() {
        let want = if i == 1 { 1.0 } else { 0.0 };
        assert!((c - want).abs() <= 1e-11);
    }
}

#[test]
fn parseval_for_the_constant_approaches_one_half_from_below() {
    let rule = gauss_rule(256).unwrap();
    let spec = FamilySpec::altered();
    let mut prev = 0.0;
    for size in 1..=12 {
        let res = project(|_| 1.0, &spec, size, &rule).unwrap();
        let energy: f64 = res
            .coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| c * c * spec.norm(i + 1).unwrap())
            .sum();
        assert!(energy >= prev - 1e-15 && energy <= 0.5 + 1e-15, "N={size}: {energy}");
        if size <= 6 {
            assert!(energy > prev, "N={size}: {energy}");
        }
        prev = energy;
    }
    assert!(0.5 - prev < 1e-6);
}

#[test]
fn linear_function_is_never_reproduced_exactly() {
    let rule = gauss_rule(192).unwrap();
    let spec = FamilySpec::rational(1.0);
    let errors: Vec<f64> = (1..=12)
        .map(|n| project(|x| x, &spec, n, &rule).unwrap().weighted_l2_error)
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    let last = errors[11];
    assert!(last > 0.0);
    assert!(((last - 1.4099e-8) / 1.4099e-8).abs() < 1e-3, "N=12 error {last:e}");
}

#[test]
fn extrapolation_samples_outside_the_interval() {
    let rule = gauss_rule(128).unwrap();
    let spec = FamilySpec::exponential(2.0);
    let res = project(|x| (-x).exp(), &spec, 8, &rule).unwrap();
    let s = res.sample(|x| (-x).exp(), &[1.5, 2.0]).unwrap();
    assert!(s.iter().all(|p| (p.value - p.reconstruction).abs() < 1e-3));
}
