//! Shifted Legendre and shifted Jacobi polynomials on `[0, 1]`.
//!
//! Both are the classical polynomials composed with `u = 2x − 1`, so the
//! shifted Legendre polynomials satisfy `P̃ₙ(1) = 1` and `P̃ₙ(0) = (−1)ⁿ`,
//! and the shifted Jacobi polynomials keep `P̃ₙ^(α,β)(1) = C(n+α, n)`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::{rat, rat_from_f64, Polynomial};

/// Exact shifted Legendre polynomial of degree `n`, built with the
/// recurrence `(k+1)P_{k+1}(u) = (2k+1)·u·P_k(u) − k·P_{k−1}(u)`.
pub fn shifted_legendre(n: usize) -> Polynomial {
    let u = Polynomial::from_ints(&[-1, 2]);
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = u.clone();
    for k in 1..n {
        let k = k as i64;
        let next = (&(&u * &cur).scale(&rat(2 * k + 1)) - &prev.scale(&rat(k)))
            .scale(&BigRational::new(1.into(), (k + 1).into()));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Floating-point `P̃ₙ(x)` from the three-term recurrence; no monomial
/// coefficients are formed.
pub fn shifted_legendre_eval(n: usize, x: f64) -> f64 {
    let u = 2.0 * x - 1.0;
    let (mut prev, mut cur) = (1.0, u);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0) * u * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi exponents `(α, β)`, both strictly greater than −1.
///
/// `α` weights the `x = 1` end and `β` the `x = 0` end of `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let p = Self { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha.is_finite() && self.alpha > -1.0) {
            return Err(Error::invalid("alpha", self.alpha, "Jacobi exponent must exceed -1"));
        }
        if !(self.beta.is_finite() && self.beta > -1.0) {
            return Err(Error::invalid("beta", self.beta, "Jacobi exponent must exceed -1"));
        }
        Ok(())
    }

    /// Whether this is the Legendre case `α = β = 0`.
    pub fn is_legendre(&self) -> bool {
        self.alpha == 0.0 && self.beta == 0.0
    }
}

/// Exact shifted Jacobi polynomial of degree `n`.
///
/// The exponents are taken at their exact binary values, so `α = β = 0`
/// reproduces [`shifted_legendre`] coefficient for coefficient.
pub fn shifted_jacobi(n: usize, p: JacobiParams) -> Result<Polynomial> {
    p.validate()?;
    let a = rat_from_f64("alpha", p.alpha)?;
    let b = rat_from_f64("beta", p.beta)?;
    let u = Polynomial::from_ints(&[-1, 2]);
    let one = rat(1);
    let two = rat(2);

    let mut prev = Polynomial::one();
    if n == 0 {
        return Ok(prev);
    }
    // P₁(u) = (α+1) + (α+β+2)(u−1)/2
    let mut cur = &Polynomial::constant(&a + &one)
        + &(&u - &Polynomial::one()).scale(&((&a + &b + &two) / &two));
    for k in 2..=n {
        let k = rat(k as i64);
        let s = &two * &k + &a + &b;
        let c1 = &two * &k * (&k + &a + &b) * (&s - &two);
        let c2 = (&s - &one) * (&a * &a - &b * &b);
        let c3 = (&s - &two) * (&s - &one) * &s;
        let c4 = &two * (&k + &a - &one) * (&k + &b - &one) * &s;
        let lin = &Polynomial::constant(c2) + &u.scale(&c3);
        let next = (&(&lin * &cur) - &prev.scale(&c4)).scale(&(one.clone() / c1));
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Floating-point shifted Jacobi value by the same recurrence as
/// [`shifted_jacobi`].
pub fn shifted_jacobi_eval(n: usize, p: JacobiParams, x: f64) -> f64 {
    let (a, b) = (p.alpha, p.beta);
    let u = 2.0 * x - 1.0;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = (a + 1.0) + (a + b + 2.0) * (u - 1.0) / 2.0;
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (a * a - b * b);
        let c3 = (s - 2.0) * (s - 1.0) * s;
        let c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = ((c2 + c3 * u) * cur - c4 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::ratio;
    use num_traits::{One, Zero};

    /// Monic Gram–Schmidt on `1, x, x², …` under `∫₀¹ p q w`, where the
    /// weight enters only through its exact moments `∫₀¹ x^k w dx`.
    fn gram_schmidt(degree: usize, moment: impl Fn(usize) -> BigRational) -> Vec<Polynomial> {
        let inner = |p: &Polynomial, q: &Polynomial| {
            let prod = p * q;
            prod.coeffs()
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (k, c)| acc + c * moment(k))
        };
        let mut basis: Vec<Polynomial> = Vec::new();
        for d in 0..=degree {
            let mut v = Polynomial::monomial(BigRational::one(), d);
            for q in &basis {
                let proj = inner(&v, q) / inner(q, q);
                v = &v - &q.scale(&proj);
            }
            basis.push(v);
        }
        basis
    }

    #[test]
    fn legendre_low_degrees() {
        assert_eq!(shifted_legendre(0), Polynomial::one());
        assert_eq!(shifted_legendre(1), Polynomial::from_ints(&[-1, 2]));
        let p1 = shifted_legendre(1);
        assert!(p1.eval_exact(&ratio(1, 2)).is_zero());
    }

    #[test]
    fn legendre_degree_two_matches_gram_schmidt() {
        let gs = gram_schmidt(2, |k| ratio(1, k as i64 + 1));
        let q = &gs[2];
        let normalized = q.scale(&(BigRational::one() / q.eval_exact(&rat(1))));
        assert_eq!(normalized, shifted_legendre(2));
        assert_eq!(shifted_legendre(2), Polynomial::from_ints(&[1, -6, 6]));
    }

    #[test]
    fn legendre_eval_spot_values() {
        assert_eq!(shifted_legendre_eval(5, 1.0), 1.0);
        assert_eq!(shifted_legendre_eval(5, 0.0), -1.0);
        assert!((shifted_legendre_eval(2, 0.25) + 0.125).abs() < 1e-15);
    }

    #[test]
    fn jacobi_zero_zero_is_legendre() {
        let p = JacobiParams::new(0.0, 0.0).unwrap();
        for k in 0..=8 {
            assert_eq!(shifted_jacobi(k, p).unwrap(), shifted_legendre(k));
        }
    }

    #[test]
    fn jacobi_one_one_degree_two_matches_gram_schmidt() {
        // weight (1−x)·x has moments 1/(k+2) − 1/(k+3)
        let gs = gram_schmidt(2, |k| ratio(1, k as i64 + 2) - ratio(1, k as i64 + 3));
        let q = &gs[2];
        let normalized = q.scale(&(rat(3) / q.eval_exact(&rat(1))));
        let p = shifted_jacobi(2, JacobiParams::new(1.0, 1.0).unwrap()).unwrap();
        assert_eq!(p, normalized);
        assert_eq!(p.eval_exact(&rat(1)), rat(3));
    }

    #[test]
    fn jacobi_float_matches_exact() {
        let p = JacobiParams::new(0.5, -0.25).unwrap();
        for n in 0..=10 {
            let exact = shifted_jacobi(n, p).unwrap();
            for &x in &[0.0, 0.13, 0.5, 0.77, 1.0] {
                let (a, b) = (exact.eval(x), shifted_jacobi_eval(n, p, x));
                assert!((a - b).abs() <= 1e-11 * a.abs().max(1.0), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn jacobi_rejects_bad_exponents() {
        assert!(JacobiParams::new(-1.0, 0.0).is_err());
        assert!(JacobiParams::new(0.0, -1.5).is_err());
        let bad = JacobiParams { alpha: 0.0, beta: -1.0 };
        assert!(shifted_jacobi(2, bad).is_err());
    }
}
