//! Gauss–Legendre rules on `[0, 1]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 512;

/// Nodes (ascending, interior to `(0, 1)`) and positive weights summing to 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
}

/// `(P_n(u), P_n'(u))` for the classical Legendre polynomial.
fn legendre_with_derivative(n: usize, u: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, u);
    for k in 1..n {
        let k = k as f64;
        let p2 = ((2.0 * k + 1.0) * u * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    (p1, n * (u * p1 - p0) / (u * u - 1.0))
}

/// Gauss–Legendre rule with `order` points mapped to `[0, 1]`.
///
/// Roots of `P_order` come from Newton's method started at the Chebyshev-like
/// angles `cos(π(i − 1/4)/(order + 1/2))`; weights are `2/((1−u²)P'(u)²)`,
/// halved for the unit interval. Nodes are computed for one half and
/// mirrored, so the rule is symmetric about `1/2`.
pub fn gauss_rule(order: usize) -> Result<QuadratureRule> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(Error::invalid("order", order, "quadrature order must lie in 1..=512"));
    }
    if order == 1 {
        return Ok(QuadratureRule {
            nodes: vec![0.5],
            weights: vec![1.0],
            order,
        });
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut u = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, u);
            dp = d;
            let du = p / d;
            u -= du;
            if du.abs() <= 1e-16 * u.abs().max(1.0) {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, u);
        if d.is_finite() {
            dp = d;
        }
        let w = 1.0 / ((1.0 - u * u) * dp * dp);
        // u > 0 here; the unit-interval node is (1 + u)/2
        nodes[n - 1 - i] = 0.5 * (1.0 + u);
        nodes[i] = 0.5 * (1.0 - u);
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.5;
    }
    Ok(QuadratureRule { nodes, weights, order })
}

impl QuadratureRule {
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// As [`QuadratureRule::integrate`] for a fallible integrand; the sum runs
    /// in fixed node order.
    pub fn try_integrate<F: FnMut(f64) -> Result<f64>>(&self, mut f: F) -> Result<f64> {
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(x)?;
        }
        Ok(acc)
    }
}
