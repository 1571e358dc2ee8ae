use std::f64::consts::E;

use num_rational::BigRational;
use num_traits::Zero;
use ortho_interval::analysis::{find_extrema, find_zeros};
use ortho_interval::family::{logarithmic_beta, FamilySpec};
use ortho_interval::legendre::{shifted_jacobi, shifted_legendre, JacobiParams};
use ortho_interval::polynomial::{ratio, Polynomial};
use ortho_interval::projection::gram;
use ortho_interval::quadrature::gauss_rule;
use ortho_interval::roots::linspace;
use ortho_interval::transmuted::{transmuted_eval, transmuted_poly, TransmutationMap};
use ortho_interval::Error;

#[test]
fn legendre_exact_orthogonality() {
    for m in 0..=10 {
        for n in 0..=10 {
            let ip = (&shifted_legendre(m) * &shifted_legendre(n)).integrate_unit();
            let want = if m == n {
                ratio(1, 2 * n as i64 + 1)
            } else {
                BigRational::zero()
            };
            assert_eq!(ip, want, "m={m} n={n}");
        }
    }
}

#[test]
fn legendre_has_n_simple_roots_in_unit_interval() {
    for n in 1..=15 {
        let roots = shifted_legendre(n).real_roots(0.0, 1.0, 1e-13).unwrap();
        assert_eq!(roots.len(), n, "n={n}");
        assert!(roots.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn jacobi_orthogonality_by_quadrature() {
    let p = JacobiParams::new(1.0, 2.0).unwrap();
    let rule = gauss_rule(64).unwrap();
    for m in 0..6 {
        for n in 0..m {
            let pm = shifted_jacobi(m, p).unwrap();
            let pn = shifted_jacobi(n, p).unwrap();
            let ip = rule.integrate(|x| (1.0 - x) * x * x * pm.eval(x) * pn.eval(x));
            assert!(ip.abs() < 1e-13, "m={m} n={n} ip={ip}");
        }
    }
}

#[test]
fn generalized_altered_with_legendre_parameters_matches_altered_on_the_unit_interval() {
    let g = FamilySpec::generalized_altered(JacobiParams::new(0.0, 0.0).unwrap(), 1.0);
    let a = FamilySpec::altered();
    for n in 1..=8 {
        for x in linspace(0.0, 1.0, 33) {
            assert!((g.eval(n, x).unwrap() - a.eval(n, x).unwrap()).abs() < 1e-14);
        }
    }
    assert!(matches!(g.norm(2), Err(Error::Unsupported(_))));
}

#[test]
fn even_members_share_a_zero() {
    for c in [0.5, 1.0, 3.0] {
        let spec = FamilySpec::rational(c);
        for n in [2, 4, 6, 8] {
            let zeros = find_zeros(&spec, n, 0.0, 1.0, 1e-13).unwrap();
            assert!(zeros.iter().any(|z| (z - 1.0 / (c + 2.0)).abs() < 1e-10));
        }
    }
    for b in [2.0, E, 7.0] {
        let e_zero = (2.0 * b / (b + 1.0)).ln() / b.ln();
        let l_zero = (b.sqrt() - 1.0) / (b - 1.0);
        for n in [2, 4, 6] {
            let ez = find_zeros(&FamilySpec::exponential(b), n, 0.0, 1.0, 1e-13).unwrap();
            let lz = find_zeros(&FamilySpec::logarithmic(b), n, 0.0, 1.0, 1e-13).unwrap();
            assert!(ez.iter().any(|z| (z - e_zero).abs() < 1e-10), "b={b} n={n}");
            assert!(lz.iter().any(|z| (z - l_zero).abs() < 1e-10), "b={b} n={n}");
        }
    }
}

#[test]
fn members_have_n_minus_one_zeros_on_the_interval() {
    let specs = [
        FamilySpec::rational(1.0),
        FamilySpec::exponential(2.0),
        FamilySpec::logarithmic(E),
    ];
    for spec in specs {
        for n in 1..=10 {
            let zeros = find_zeros(&spec, n, 0.0, 1.0, 1e-12).unwrap();
            assert_eq!(zeros.len(), n - 1, "{} n={n}", spec.family);
        }
    }
}

#[test]
fn members_decay_beyond_the_interval() {
    for n in 1..=6 {
        // Rₙ ~ O(1/x) and Eₙ ~ O(2^{−x}) at infinity.
        let r = FamilySpec::rational(1.0).eval(n, 1e6).unwrap();
        let e = FamilySpec::exponential(2.0).eval(n, 60.0).unwrap();
        assert!(r.abs() < 1e-2 && e.abs() < 1e-12, "n={n} r={r} e={e}");
        let r_far = FamilySpec::rational(1.0).eval(n, 1e9).unwrap();
        assert!(r_far.abs() < r.abs() * 1e-2);
    }
    let beta = logarithmic_beta(2.0);
    assert!((beta - 3.0).abs() < 1e-15);
}

#[test]
fn domain_errors_are_reported() {
    assert!(matches!(
        FamilySpec::rational(1.0).eval(2, -1.0),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        FamilySpec::logarithmic(2.0).eval(2, -1.5),
        Err(Error::Domain { .. })
    ));
    assert!(FamilySpec::exponential(1.0).validate().is_err());
    assert!(FamilySpec::rational(0.0).validate().is_err());
    assert!(FamilySpec::transmuted(4).validate().is_err());
    assert!(FamilySpec::altered().eval(0, 0.5).is_err());
}

#[test]
fn extrema_count_on_natural_domain() {
    for n in 2..=7 {
        for spec in [
            FamilySpec::rational(1.0),
            FamilySpec::exponential(2.0),
            FamilySpec::logarithmic(2.0),
        ] {
            let rep = find_extrema(&spec, n, 1e-10).unwrap();
            assert_eq!(rep.abscissas.len(), n - 1, "{} n={n}", spec.family);
        }
    }
    let r2 = find_extrema(&FamilySpec::rational(1.0), 2, 1e-11).unwrap();
    assert!((r2.abscissas[0] - 5.0 / 3.0).abs() < 1e-6);
    assert!((r2.values[0] + 0.5625).abs() < 1e-12);
}

#[test]
fn transmuted_orthogonality_is_exact() {
    for nu in [3, 5] {
        let w = TransmutationMap::new(nu).unwrap().weight();
        for k in 0..=4 {
            for l in 0..=4 {
                let ip = (&(&w * &transmuted_poly(nu, k).unwrap()) * &transmuted_poly(nu, l).unwrap())
                    .integrate_unit();
                let want = if k == l {
                    ratio(1, 2 * k as i64 + 1)
                } else {
                    BigRational::zero()
                };
                assert_eq!(ip, want, "nu={nu} k={k} l={l}");
            }
        }
    }
}

#[test]
fn transmuted_structure() {
    for nu in [1, 3, 5, 7] {
        let map = TransmutationMap::new(nu).unwrap();
        for x in linspace(0.0, 1.0, 101) {
            if x > 0.0 && x < 1.0 {
                assert!(map.weight_eval(x) > 0.0, "nu={nu} x={x}");
            }
        }
        for n in 0..=6 {
            let p = transmuted_poly(nu, n).unwrap();
            assert_eq!(p.degree(), (nu as usize * n) as isize);
            assert_eq!(p.real_roots(0.0, 1.0, 1e-12).unwrap().len(), n, "nu={nu} n={n}");
            for x in linspace(0.0, 1.0, 17) {
                assert!((p.eval(x) - transmuted_eval(nu, n, x).unwrap()).abs() < 1e-9);
            }
        }
    }
    assert_eq!(transmuted_poly(1, 3).unwrap(), shifted_legendre(3).compose(&Polynomial::from_ints(&[1, -1])));
}

#[test]
fn transmuted_quadrature_agrees_with_exact_gram() {
    for nu in [3, 5] {
        let spec = FamilySpec::transmuted(nu);
        let q = gram(&spec, 6, &gauss_rule(128).unwrap()).unwrap();
        let exact = ortho_interval::projection::transmuted_gram_report_exact(nu, 6).unwrap();
        for (qr, er) in q.matrix.iter().zip(&exact.matrix) {
            for (a, b) in qr.iter().zip(er) {
                assert!((a - b).abs() <= 1e-12, "nu={nu}: {a} vs {b}");
            }
        }
    }
}
