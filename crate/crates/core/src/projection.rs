//! Weighted inner products, Gram matrices and orthogonal-series projection.
//!
//! All integrals over `[0, 1]` use one unweighted Gauss–Legendre rule with
//! the family's weight folded into the integrand.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::quadrature::QuadratureRule;
use crate::roots::linspace;
use crate::transmuted::{transmuted_inner_exact, transmuted_norm_exact};

/// Points of the uniform grid used for the unweighted reconstruction error.
pub const ERROR_GRID_POINTS: usize = 1000;

/// `⟨f_m, f_n⟩_w` by quadrature.
pub fn weighted_inner(spec: &FamilySpec, m: usize, n: usize, rule: &QuadratureRule) -> Result<f64> {
    spec.validate()?;
    rule.try_integrate(|x| Ok(spec.weight(x)? * spec.eval(m, x)? * spec.eval(n, x)?))
}

/// Gram matrix of members `first_index .. first_index + size` together with
/// the closed-form diagonal and deviation statistics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramReport {
    pub spec: FamilySpec,
    pub size: usize,
    pub first_index: usize,
    pub matrix: Vec<Vec<f64>>,
    /// `None` when the family has no closed-form norm.
    pub expected_diagonal: Option<Vec<f64>>,
    pub max_offdiag: f64,
    /// Largest `|G_nn − expected_n| / expected_n`.
    pub max_diag_reldev: Option<f64>,
    /// Quadrature points used; 0 for the exact rational path.
    pub rule_order: usize,
}

impl GramReport {
    fn assemble(
        spec: FamilySpec,
        matrix: Vec<Vec<f64>>,
        expected: Option<Vec<f64>>,
        rule_order: usize,
    ) -> Self {
        let size = matrix.len();
        let mut max_offdiag = 0.0f64;
        for (i, row) in matrix.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if i != j {
                    max_offdiag = max_offdiag.max(v.abs());
                }
            }
        }
        let max_diag_reldev = expected.as_ref().map(|e| {
            e.iter()
                .enumerate()
                .map(|(i, &d)| ((matrix[i][i] - d) / d).abs())
                .fold(0.0, f64::max)
        });
        Self {
            first_index: spec.first_index(),
            spec,
            size,
            matrix,
            expected_diagonal: expected,
            max_offdiag,
            max_diag_reldev,
            rule_order,
        }
    }

    /// Both deviations within `tol`; families without a closed-form norm are
    /// judged on the off-diagonal alone.
    pub fn passes(&self, tol: f64) -> bool {
        self.max_offdiag <= tol && self.max_diag_reldev.is_none_or(|d| d <= tol)
    }
}

fn expected_diagonal(spec: &FamilySpec, size: usize) -> Result<Option<Vec<f64>>> {
    if spec.is_generalized() {
        return Ok(None);
    }
    let first = spec.first_index();
    (first..first + size)
        .map(|n| spec.norm(n))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

/// Quadrature Gram matrix. Member values are tabulated once per node and
/// every entry is summed in node order, so the result is deterministic.
pub fn gram(spec: &FamilySpec, size: usize, rule: &QuadratureRule) -> Result<GramReport> {
    spec.validate()?;
    if size == 0 {
        return Err(Error::invalid("N", size, "Gram size must be at least 1"));
    }
    let first = spec.first_index();
    let weights = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&x, &w)| Ok(w * spec.weight(x)?))
        .collect::<Result<Vec<_>>>()?;
    let table = (first..first + size)
        .map(|n| rule.nodes.iter().map(|&x| spec.eval(n, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut matrix = vec![vec![0.0; size]; size];
    for i in 0..size {
        for j in i..size {
            let v: f64 = (0..weights.len())
                .map(|q| weights[q] * table[i][q] * table[j][q])
                .sum();
            matrix[i][j] = v;
            matrix[j][i] = v;
        }
    }
    let expected = expected_diagonal(spec, size)?;
    Ok(GramReport::assemble(*spec, matrix, expected, rule.order))
}

/// Exact Gram matrix of a transmuted family in rational arithmetic.
#[allow(clippy::needless_range_loop)]
pub fn transmuted_gram_exact(nu: u32, size: usize) -> Result<Vec<Vec<BigRational>>> {
    let mut matrix = vec![vec![BigRational::zero(); size]; size];
    for k in 0..size {
        for l in k..size {
            let v = transmuted_inner_exact(nu, k, l)?;
            matrix[l][k] = v.clone();
            matrix[k][l] = v;
        }
    }
    Ok(matrix)
}

/// Exact transmuted Gram matrix reported in floating point; deviations are
/// computed exactly before rounding.
pub fn transmuted_gram_report_exact(nu: u32, size: usize) -> Result<GramReport> {
    if size == 0 {
        return Err(Error::invalid("N", size, "Gram size must be at least 1"));
    }
    let exact = transmuted_gram_exact(nu, size)?;
    let spec = FamilySpec::transmuted(nu);
    let matrix: Vec<Vec<f64>> = exact
        .iter()
        .map(|row| row.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect())
        .collect();
    let mut max_off = BigRational::zero();
    let mut max_dev = BigRational::zero();
    for (k, row) in exact.iter().enumerate() {
        for (l, v) in row.iter().enumerate() {
            if k == l {
                let norm = transmuted_norm_exact(k);
                let dev = ((v - &norm) / &norm).abs();
                if dev > max_dev {
                    max_dev = dev;
                }
            } else if v.abs() > max_off {
                max_off = v.abs();
            }
        }
    }
    let expected = (0..size).map(|k| 1.0 / (2 * k + 1) as f64).collect();
    let mut report = GramReport::assemble(spec, matrix, Some(expected), 0);
    report.max_offdiag = max_off.to_f64().unwrap_or(f64::NAN);
    report.max_diag_reldev = Some(max_dev.to_f64().unwrap_or(f64::NAN));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub x: f64,
    pub value: f64,
    pub reconstruction: f64,
}

/// Truncated orthogonal expansion of a function in one family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionResult {
    pub spec: FamilySpec,
    /// `c_n` for `n = first_index ..`.
    pub coefficients: Vec<f64>,
    pub truncation: usize,
    /// Unweighted `L²[0,1]` error, trapezoidal on a uniform 1000-point grid.
    pub l2_error: f64,
    /// Error in the family's own weighted norm, by quadrature.
    pub weighted_l2_error: f64,
    pub sampled_errors: Vec<Sample>,
}

impl ExpansionResult {
    pub fn reconstruct(&self, x: f64) -> Result<f64> {
        let first = self.spec.first_index();
        let mut acc = 0.0;
        for (i, c) in self.coefficients.iter().enumerate() {
            acc += c * self.spec.eval(first + i, x)?;
        }
        Ok(acc)
    }

    /// `(x, f(x), reconstruction)` at arbitrary points, including points
    /// outside `[0, 1]` inside the family's domain.
    pub fn sample<F: Fn(f64) -> f64>(&self, f: F, xs: &[f64]) -> Result<Vec<Sample>> {
        xs.iter()
            .map(|&x| {
                Ok(Sample {
                    x,
                    value: f(x),
                    reconstruction: self.reconstruct(x)?,
                })
            })
            .collect()
    }
}

/// Projects `f` onto the first `size` members:
/// `c_n = ⟨f, f_n⟩_w / ⟨f_n, f_n⟩_w`, both by quadrature.
pub fn project<F: Fn(f64) -> f64>(
    f: F,
    spec: &FamilySpec,
    size: usize,
    rule: &QuadratureRule,
) -> Result<ExpansionResult> {
    spec.validate()?;
    if size == 0 {
        return Err(Error::invalid("N", size, "expansion needs at least one term"));
    }
    let first = spec.first_index();
    let fx: Vec<f64> = rule.nodes.iter().map(|&x| f(x)).collect();
    let wx = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&x, &w)| Ok(w * spec.weight(x)?))
        .collect::<Result<Vec<_>>>()?;
    let mut coefficients = Vec::with_capacity(size);
    let mut recon_at_nodes = vec![0.0; rule.nodes.len()];
    for n in first..first + size {
        let vals = rule.nodes.iter().map(|&x| spec.eval(n, x)).collect::<Result<Vec<_>>>()?;
        let (mut num, mut den) = (0.0, 0.0);
        for q in 0..vals.len() {
            num += wx[q] * fx[q] * vals[q];
            den += wx[q] * vals[q] * vals[q];
        }
        let c = num / den;
        for q in 0..vals.len() {
            recon_at_nodes[q] += c * vals[q];
        }
        coefficients.push(c);
    }
    let weighted_l2_error = (0..fx.len())
        .map(|q| wx[q] * (fx[q] - recon_at_nodes[q]).powi(2))
        .sum::<f64>()
        .sqrt();

    let mut result = ExpansionResult {
        spec: *spec,
        coefficients,
        truncation: size,
        l2_error: 0.0,
        weighted_l2_error,
        sampled_errors: Vec::new(),
    };
    let grid = linspace(0.0, 1.0, ERROR_GRID_POINTS);
    let h = 1.0 / (ERROR_GRID_POINTS - 1) as f64;
    let mut sq = 0.0;
    for (i, &x) in grid.iter().enumerate() {
        let e = f(x) - result.reconstruct(x)?;
        let end = i == 0 || i + 1 == grid.len();
        sq += if end { 0.5 } else { 1.0 } * e * e;
    }
    result.l2_error = (sq * h).sqrt();
    result.sampled_errors = result.sample(&f, &linspace(0.0, 1.0, 11))?;
    Ok(result)
}
