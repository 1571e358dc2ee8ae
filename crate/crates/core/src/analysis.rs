//! Zeros, interior extrema, the equal-extrema experiment across the
//! rational, exponential and logarithmic families, and near-involution
//! metrics of the exponential map.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec};
use crate::quadrature::gauss_rule;
use crate::roots::{golden_min, linspace, scan_roots};
use crate::transform::{check_b, Transform};

/// Central-difference step for derivative sign scans, relative to `max(1, |x|)`.
pub const DERIVATIVE_STEP: f64 = 1e-6;

/// Order of the rule used for the involution distance.
pub const INVOLUTION_RULE_ORDER: usize = 128;

/// Relative distance from the singular end of a family's transform at which
/// extremum scans stop (`y = −a(1 − SINGULAR_MARGIN)`).
const SINGULAR_MARGIN: f64 = 1e-3;

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid("tol", tol, "must be positive"))
    }
}

fn check_interval(spec: &FamilySpec, lo: f64, hi: f64) -> Result<()> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::invalid("interval", format!("[{lo}, {hi}]"), "requires finite lo < hi"));
    }
    match spec.family {
        Family::Rational => {
            let pole = -1.0 / spec.c;
            if lo <= pole {
                return Err(Error::domain("rational family interval", lo, format!("x > {pole}")));
            }
        }
        Family::Logarithmic => {
            let bound = -1.0 / (spec.b - 1.0);
            if lo <= bound {
                return Err(Error::domain("logarithmic family interval", lo, format!("x > {bound}")));
            }
        }
        Family::Altered if spec.is_generalized() && spec.gamma.fract() != 0.0 && lo < -1.0 => {
            return Err(Error::domain("generalized altered interval", lo, "x >= -1"));
        }
        _ => {}
    }
    Ok(())
}

/// All zeros of `fₙ` in `[lo, hi]`, by a sign scan on at least `64·n`
/// points followed by bisection to `tol`.
pub fn find_zeros(spec: &FamilySpec, n: usize, lo: f64, hi: f64, tol: f64) -> Result<Vec<f64>> {
    spec.validate()?;
    check_tol(tol)?;
    check_interval(spec, lo, hi)?;
    spec.eval(n, lo)?;
    let grid = linspace(lo, hi, (64 * n).max(64) + 1);
    scan_roots(|x| spec.eval(n, x), &grid, tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Maximum,
    Minimum,
}

/// Interior local extrema of one member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremaReport {
    pub spec: FamilySpec,
    pub n: usize,
    /// Interval that was searched.
    pub domain: [f64; 2],
    /// Strictly increasing.
    pub abscissas: Vec<f64>,
    pub values: Vec<f64>,
    pub kinds: Vec<ExtremumKind>,
    /// Endpoint extrema are never reported.
    pub boundary_included: bool,
}

fn central_difference(spec: &FamilySpec, n: usize, x: f64) -> Result<f64> {
    let h = DERIVATIVE_STEP * x.abs().max(1.0);
    Ok((spec.eval(n, x + h)? - spec.eval(n, x - h)?) / (2.0 * h))
}

/// Sample points for an extremum scan over the family's natural domain.
///
/// For the transformed families the grid is uniform in the transformed
/// variable `y ∈ (−a, 1]` and mapped back, so the unbounded (rational,
/// exponential) or stretched (logarithmic) tail is covered evenly.
fn natural_grid(spec: &FamilySpec, points: usize) -> Result<Vec<f64>> {
    match (spec.transform(), spec.shift()) {
        (Some(t), Some(s)) => {
            let y_lo = -s.a * (1.0 - SINGULAR_MARGIN);
            let mut xs = linspace(1.0, y_lo, points)
                .into_iter()
                .map(|y| t.inverse(y))
                .collect::<Result<Vec<_>>>()?;
            xs[0] = 0.0;
            Ok(xs)
        }
        _ => {
            let (lo, hi) = spec.natural_domain();
            Ok(linspace(lo, hi, points))
        }
    }
}

/// Interior local extrema of `fₙ` on its natural domain: `[−a, 1]` for
/// altered polynomials, `[0, ∞)` for rational and exponential functions,
/// `[0, β]` for logarithmic functions and `[0, 1]` for transmuted
/// polynomials.
///
/// Candidates come from sign changes of a central-difference derivative
/// (step [`DERIVATIVE_STEP`]) and are refined by golden-section search down
/// to a bracket of width `tol`. Values are accurate to rounding; abscissas
/// only to about `√ε` relative, since the function is flat there.
pub fn find_extrema(spec: &FamilySpec, n: usize, tol: f64) -> Result<ExtremaReport> {
    spec.validate()?;
    let points = (64 * n).max(512) + 1;
    let grid = natural_grid(spec, points)?;
    extrema_on_grid(spec, n, &grid, tol)
}

/// Interior local extrema of `fₙ` on `[lo, hi]`.
pub fn find_extrema_in(spec: &FamilySpec, n: usize, lo: f64, hi: f64, tol: f64) -> Result<ExtremaReport> {
    spec.validate()?;
    check_interval(spec, lo, hi)?;
    let grid = linspace(lo, hi, (64 * n).max(512) + 1);
    extrema_on_grid(spec, n, &grid, tol)
}

fn extrema_on_grid(spec: &FamilySpec, n: usize, grid: &[f64], tol: f64) -> Result<ExtremaReport> {
    check_tol(tol)?;
    spec.eval(n, grid[0])?;
    // derivative at the very ends would step outside the domain
    let inner = &grid[1..grid.len() - 1];
    let slopes = inner
        .iter()
        .map(|&x| central_difference(spec, n, x))
        .collect::<Result<Vec<_>>>()?;

    let mut abscissas = Vec::new();
    let mut values = Vec::new();
    let mut kinds = Vec::new();
    for i in 0..slopes.len().saturating_sub(1) {
        let (s0, s1) = (slopes[i], slopes[i + 1]);
        if s0 == 0.0 || s0.signum() == s1.signum() {
            continue;
        }
        let kind = if s0 > 0.0 {
            ExtremumKind::Maximum
        } else {
            ExtremumKind::Minimum
        };
        let sign = if kind == ExtremumKind::Maximum { -1.0 } else { 1.0 };
        let (lo, hi) = (inner[i], inner[i + 1]);
        let x = golden_min(|x| Ok(sign * spec.eval(n, x)?), lo, hi, tol)?;
        if abscissas.last().is_some_and(|&p: &f64| x - p <= tol) {
            continue;
        }
        abscissas.push(x);
        values.push(spec.eval(n, x)?);
        kinds.push(kind);
    }
    Ok(ExtremaReport {
        spec: *spec,
        n,
        domain: [grid[0], grid[grid.len() - 1]],
        abscissas,
        values,
        kinds,
        boundary_included: false,
    })
}

/// One rank-matched extremum of `Rₙ`, `Eₙ` and `Lₙ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremaTriple {
    pub r: f64,
    pub e: f64,
    pub l: f64,
    pub value_r: f64,
    pub value_e: f64,
    pub value_l: f64,
}

impl ExtremaTriple {
    pub fn discrepancy(&self) -> f64 {
        let (a, b, c) = (self.value_r, self.value_e, self.value_l);
        (a - b).abs().max((a - c).abs()).max((b - c).abs())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub b: f64,
    pub c: f64,
    pub counts: [usize; 3],
    pub matched_triples: Vec<ExtremaTriple>,
    pub max_value_discrepancy: f64,
    pub counts_equal: bool,
    pub tolerance: f64,
    /// Discrepancy within `tolerance`; a flag, not an error.
    pub within_tolerance: bool,
}

/// Compares extremal values of `Rₙ`, `Eₙ` and `Lₙ` at `c = 1`, `b = 2`.
pub fn conjecture_check(n: usize, tol: f64) -> Result<ConjectureReport> {
    conjecture_check_with(n, 2.0, 1.0, tol)
}

/// As [`conjecture_check`] with the exponential/logarithmic base `b` and
/// the rational parameter `c` overridden.
///
/// Extrema are the interior ones on each family's natural domain, matched
/// by rank of abscissa. Abscissas are refined to `1e-10`.
pub fn conjecture_check_with(n: usize, b: f64, c: f64, tol: f64) -> Result<ConjectureReport> {
    check_tol(tol)?;
    if n == 0 {
        return Err(Error::invalid("n", n, "members are indexed from 1"));
    }
    const ABSCISSA_TOL: f64 = 1e-10;
    let r = find_extrema(&FamilySpec::rational(c), n, ABSCISSA_TOL)?;
    let e = find_extrema(&FamilySpec::exponential(b), n, ABSCISSA_TOL)?;
    let l = find_extrema(&FamilySpec::logarithmic(b), n, ABSCISSA_TOL)?;
    let counts = [r.abscissas.len(), e.abscissas.len(), l.abscissas.len()];
    let matched = counts.iter().copied().min().unwrap_or(0);
    let matched_triples: Vec<ExtremaTriple> = (0..matched)
        .map(|k| ExtremaTriple {
            r: r.abscissas[k],
            e: e.abscissas[k],
            l: l.abscissas[k],
            value_r: r.values[k],
            value_e: e.values[k],
            value_l: l.values[k],
        })
        .collect();
    let max_value_discrepancy = matched_triples
        .iter()
        .map(ExtremaTriple::discrepancy)
        .fold(0.0, f64::max);
    Ok(ConjectureReport {
        n,
        b,
        c,
        counts,
        matched_triples,
        max_value_discrepancy,
        counts_equal: counts[0] == counts[1] && counts[1] == counts[2],
        tolerance: tol,
        within_tolerance: max_value_discrepancy <= tol,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvolutionReport {
    pub b: f64,
    /// `(∫₀¹ (g − g⁻¹)² dx)^{1/2}`.
    pub l2_distance: f64,
    /// Solutions of `g(x) = g⁻¹(x)` in `[0, 1]`, ascending.
    pub fixed_points: Vec<f64>,
}

/// How far `g(x) = (b^{1−x} − 1)/(b − 1)` is from being its own inverse on
/// `[0, 1]`.
pub fn involution_metrics(b: f64, tol: f64) -> Result<InvolutionReport> {
    check_b(b)?;
    check_tol(tol)?;
    let t = Transform::exponential(b)?;
    let gap = |x: f64| -> Result<f64> { Ok(t.forward(x)? - t.inverse(x)?) };
    let rule = gauss_rule(INVOLUTION_RULE_ORDER)?;
    let l2_distance = rule.try_integrate(|x| Ok(gap(x)?.powi(2)))?.sqrt();

    let end_tol = tol.max(8.0 * f64::EPSILON);
    let mut fixed_points = Vec::new();
    if gap(0.0)?.abs() <= end_tol {
        fixed_points.push(0.0);
    }
    let grid = linspace(0.0, 1.0, 1025);
    let interior = &grid[1..grid.len() - 1];
    for x in scan_roots(gap, interior, tol)? {
        fixed_points.push(x);
    }
    if gap(1.0)?.abs() <= end_tol {
        fixed_points.push(1.0);
    }
    fixed_points.dedup_by(|a, b| (*a - *b).abs() <= tol);
    Ok(InvolutionReport {
        b,
        l2_distance,
        fixed_points,
    })
}
