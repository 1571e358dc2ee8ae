//! Transmuted Legendre polynomials.
//!
//! For odd `ν = 2m − 1` the polynomial map `σ_ν(x) = 1 + Σ_{j=1}^{ν} (−x)^j`
//! is strictly decreasing on `[0, 1]` with `σ_ν(0) = 1` and `σ_ν(1) = 0`.
//! Composing shifted Legendre polynomials with it gives
//! `𝒫_{νn}(x) = P̃ₙ(σ_ν(x))`, of degree `νn`, orthogonal on `[0, 1]` under
//! the polynomial weight `w_ν = −σ_ν′` with `∫₀¹ w_ν 𝒫_{νk} 𝒫_{νl} = δ_kl/(2k+1)`.
//!
//! `𝒫_{νn}` has exactly `n` real zeros in `(0, 1)`; the remaining `(ν−1)n`
//! zeros are complex conjugate pairs. Every odd-`n` member vanishes where
//! `σ_ν(x) = 1/2`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::legendre::{shifted_legendre, shifted_legendre_eval};
use crate::polynomial::{ratio, Polynomial};
use crate::roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransmutationMap {
    nu: u32,
}

impl TransmutationMap {
    pub fn new(nu: u32) -> Result<Self> {
        if nu.is_multiple_of(2) {
            return Err(Error::invalid("nu", nu, "must be an odd integer >= 1"));
        }
        Ok(Self { nu })
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    /// `m` with `ν = 2m − 1`; also `w_ν(1)`.
    pub fn m(&self) -> u32 {
        self.nu.div_ceil(2)
    }

    /// Exact `σ_ν`.
    pub fn poly(&self) -> Polynomial {
        let coeffs = (0..=self.nu as usize)
            .map(|j| match j {
                0 => 1,
                _ if j % 2 == 1 => -1,
                _ => 1,
            })
            .collect::<Vec<i64>>();
        Polynomial::from_ints(&coeffs)
    }

    /// Exact weight `w_ν(x) = Σ_{j=1}^{ν} j(−x)^{j−1}`.
    pub fn weight(&self) -> Polynomial {
        -self.poly().derivative()
    }

    /// `σ_ν(x)` in floating point.
    pub fn eval(&self, x: f64) -> f64 {
        (0..=self.nu).rev().fold(0.0, |acc, j| {
            let c = if j == 0 || j % 2 == 0 { 1.0 } else { -1.0 };
            acc * x + c
        })
    }

    pub fn weight_eval(&self, x: f64) -> f64 {
        (1..=self.nu).rev().fold(0.0, |acc, j| {
            let c = if j % 2 == 1 { j as f64 } else { -(j as f64) };
            acc * x + c
        })
    }
}

pub fn transmutation_poly(nu: u32) -> Result<Polynomial> {
    Ok(TransmutationMap::new(nu)?.poly())
}

pub fn transmuted_weight(nu: u32) -> Result<Polynomial> {
    Ok(TransmutationMap::new(nu)?.weight())
}

/// Exact `𝒫_{νn} = P̃ₙ ∘ σ_ν`.
pub fn transmuted_poly(nu: u32, n: usize) -> Result<Polynomial> {
    let map = TransmutationMap::new(nu)?;
    if n == 0 {
        return Ok(Polynomial::one());
    }
    Ok(shifted_legendre(n).compose(&map.poly()))
}

/// Floating-point `𝒫_{νn}(x)` through the Legendre recurrence.
pub fn transmuted_eval(nu: u32, n: usize, x: f64) -> Result<f64> {
    let map = TransmutationMap::new(nu)?;
    Ok(shifted_legendre_eval(n, map.eval(x)))
}

/// Exact `∫₀¹ w_ν 𝒫_{νk} 𝒫_{νl} dx`.
pub fn transmuted_inner_exact(nu: u32, k: usize, l: usize) -> Result<BigRational> {
    let w = transmuted_weight(nu)?;
    let pk = transmuted_poly(nu, k)?;
    let pl = if k == l { pk.clone() } else { transmuted_poly(nu, l)? };
    Ok((&(&w * &pk) * &pl).integrate_unit())
}

/// Closed-form squared norm `1/(2k+1)`.
pub fn transmuted_norm_exact(k: usize) -> BigRational {
    ratio(1, 2 * k as i64 + 1)
}

/// The point `x* ∈ (0, 1)` with `σ_ν(x*) = 1/2`, shared zero of all
/// odd-index members.
pub fn transmuted_odd_zero(nu: u32, tol: f64) -> Result<f64> {
    let map = TransmutationMap::new(nu)?;
    if !(tol > 0.0) {
        return Err(Error::invalid("tol", tol, "must be positive"));
    }
    roots::bisect(|x| Ok(map.eval(x) - 0.5), 0.0, 1.0, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rat;
    use num_traits::Zero;

    #[test]
    fn maps_for_small_nu() {
        assert_eq!(transmutation_poly(1).unwrap(), Polynomial::from_ints(&[1, -1]));
        let s3 = transmutation_poly(3).unwrap();
        assert_eq!(s3, Polynomial::from_ints(&[1, -1, 1, -1]));
        assert!(s3.eval_exact(&rat(1)).is_zero());
        assert_eq!(
            transmutation_poly(5).unwrap(),
            Polynomial::from_ints(&[1, -1, 1, -1, 1, -1])
        );
    }

    #[test]
    fn even_nu_rejected() {
        assert!(transmutation_poly(2).is_err());
        assert!(transmutation_poly(0).is_err());
        assert!(transmuted_poly(4, 1).is_err());
    }

    #[test]
    fn weights_and_their_endpoint_values() {
        let w3 = transmuted_weight(3).unwrap();
        assert_eq!(w3, Polynomial::from_ints(&[1, -2, 3]));
        assert_eq!(w3.eval_exact(&rat(1)), rat(2));
        assert_eq!(transmuted_weight(1).unwrap(), Polynomial::one());
        assert_eq!(transmuted_weight(5).unwrap().eval_exact(&rat(1)), rat(3));
        let map = TransmutationMap::new(7).unwrap();
        assert_eq!(map.weight().eval_exact(&rat(1)), rat(map.m() as i64));
    }

    #[test]
    fn small_members() {
        assert_eq!(transmuted_poly(3, 0).unwrap(), Polynomial::one());
        assert_eq!(
            transmuted_poly(3, 2).unwrap(),
            Polynomial::from_ints_descending(&[6, -12, 18, -18, 12, -6, 1])
        );
        let p36 = transmuted_poly(3, 6).unwrap();
        assert_eq!(p36.degree(), 18);
        assert_eq!(p36.leading(), rat(924));
        assert_eq!(p36.coeff(0), rat(1));
    }

    #[test]
    fn nu_one_is_reflected_legendre() {
        let reflect = Polynomial::from_ints(&[1, -1]);
        for n in 0..=6 {
            assert_eq!(transmuted_poly(1, n).unwrap(), shifted_legendre(n).compose(&reflect));
        }
    }

    #[test]
    fn odd_zero_values() {
        assert!((transmuted_odd_zero(1, 1e-15).unwrap() - 0.5).abs() < 1e-14);
        let z3 = transmuted_odd_zero(3, 1e-14).unwrap();
        assert!((z3 - 0.647798871).abs() < 1e-9);
        let z5 = transmuted_odd_zero(5, 1e-14).unwrap();
        let z7 = transmuted_odd_zero(7, 1e-14).unwrap();
        assert!(z3 < z5 && z5 < z7 && z7 < 1.0);
        for n in [1, 3, 5] {
            assert!(transmuted_eval(3, n, z3).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn float_eval_agrees_with_exact() {
        for n in 0..=6 {
            let p = transmuted_poly(3, n).unwrap();
            for &x in &[0.0, 0.2, 0.5, 0.9, 1.0] {
                let a = p.eval(x);
                let b = transmuted_eval(3, n, x).unwrap();
                assert!((a - b).abs() < 1e-10, "n={n} x={x}");
            }
        }
    }
}
