//! The orthogonal families on `[0, 1]` and their parametric forms.
//!
//! Every non-polynomial family is an altered Legendre polynomial
//! `Aₙ(y) = α(y + a)·P̃_{n−1}(y)` composed with a transform `y = T(x)` that
//! swaps the ends of `[0, 1]`:
//!
//! | family      | transform                   | `α`        | `a`       |
//! |-------------|-----------------------------|------------|-----------|
//! | Rational    | `(1−x)/(1+cx)`              | `c/(c+1)`  | `1/c`     |
//! | Exponential | `(b^{1−x}−1)/(b−1)`         | `(b−1)/b`  | `1/(b−1)` |
//! | Logarithmic | `1 − log_b(1+(b−1)x)`       | `(b−1)/b`  | `1/(b−1)` |
//!
//! With `c = 1` or `b = 2` the altered polynomial is `(y+1)/2·P̃_{n−1}(y)`.
//!
//! These definitions are often written with a leading `(−1)^{n−1}` paired
//! with the reflected Legendre convention `P̃ₙ(1−x)`. Under the convention
//! used here (`P̃ₙ(1) = 1`) that sign is absorbed, and every member satisfies
//! `fₙ(0) = 1`.
//!
//! Evaluation never expands a closed form: the altered prefactor `α(y+a)` is
//! computed directly from `x` (it equals `1/(1+cx)`, `b^{−x}` and
//! `1 − (b−1)ℓ_b(x)/b` respectively) and `P̃_{n−1}(y)` comes from the
//! three-term recurrence.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::legendre::{shifted_jacobi_eval, shifted_legendre, shifted_legendre_eval, JacobiParams};
use crate::polynomial::{rat, rat_from_f64, Polynomial};
use crate::transform::{check_b, check_c, ell, Transform};
use crate::transmuted::{transmuted_eval, TransmutationMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Altered,
    Rational,
    Exponential,
    Logarithmic,
    Transmuted,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Altered,
        Family::Rational,
        Family::Exponential,
        Family::Logarithmic,
        Family::Transmuted,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Altered => "altered",
            Family::Rational => "rational",
            Family::Exponential => "exponential",
            Family::Logarithmic => "logarithmic",
            Family::Transmuted => "transmuted",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid("family", s, "unknown family"))
    }
}

/// Descriptor of one orthogonal family with all of its parameters.
///
/// Parameters that do not apply to the family are carried at their defaults
/// (`b = 2`, `c = 1`, `ν = 3`, `γ = 1`, no Jacobi exponents) and ignored.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub b: f64,
    pub c: f64,
    pub nu: u32,
    pub jacobi: Option<JacobiParams>,
    pub gamma: f64,
}

impl Default for FamilySpec {
    fn default() -> Self {
        Self {
            family: Family::Altered,
            b: 2.0,
            c: 1.0,
            nu: 3,
            jacobi: None,
            gamma: 1.0,
        }
    }
}

/// Scale and offset of an altered polynomial `α(x + a)·P̃_{n−1}(x)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlteredShift {
    pub alpha: f64,
    pub a: f64,
}

impl AlteredShift {
    pub fn from_b(b: f64) -> Self {
        Self {
            alpha: (b - 1.0) / b,
            a: 1.0 / (b - 1.0),
        }
    }

    pub fn from_c(c: f64) -> Self {
        Self {
            alpha: c / (c + 1.0),
            a: 1.0 / c,
        }
    }
}

impl FamilySpec {
    pub fn altered() -> Self {
        Self::default()
    }

    pub fn rational(c: f64) -> Self {
        Self {
            family: Family::Rational,
            c,
            ..Self::default()
        }
    }

    pub fn exponential(b: f64) -> Self {
        Self {
            family: Family::Exponential,
            b,
            ..Self::default()
        }
    }

    pub fn logarithmic(b: f64) -> Self {
        Self {
            family: Family::Logarithmic,
            b,
            ..Self::default()
        }
    }

    pub fn transmuted(nu: u32) -> Self {
        Self {
            family: Family::Transmuted,
            nu,
            ..Self::default()
        }
    }

    /// The three-parameter altered family `((x+1)/2)^γ·P̃_{n−1}^{(α,β)}(x)`.
    pub fn generalized_altered(jacobi: JacobiParams, gamma: f64) -> Self {
        Self {
            jacobi: Some(jacobi),
            gamma,
            ..Self::default()
        }
    }

    /// True when Jacobi exponents or a power `γ ≠ 1` are in play.
    pub fn is_generalized(&self) -> bool {
        self.jacobi.is_some() || self.gamma != 1.0
    }

    pub fn validate(&self) -> Result<()> {
        check_b(self.b)?;
        check_c(self.c)?;
        TransmutationMap::new(self.nu)?;
        if !(self.gamma.is_finite() && self.gamma > 0.0) {
            return Err(Error::invalid("gamma", self.gamma, "must be positive"));
        }
        if let Some(p) = self.jacobi {
            p.validate()?;
        }
        if self.is_generalized() {
            if self.family != Family::Altered {
                return Err(Error::Unsupported(format!(
                    "Jacobi exponents and gamma apply to the altered family only, not {}",
                    self.family
                )));
            }
            if self.b != 2.0 || self.c != 1.0 {
                return Err(Error::Unsupported(
                    "the generalized altered family uses the (x+1)/2 prefactor; leave b and c at defaults".into(),
                ));
            }
        }
        if self.family == Family::Altered && self.b != 2.0 && self.c != 1.0 {
            return Err(Error::Unsupported(
                "altered family takes either a b or a c parametrization, not both".into(),
            ));
        }
        Ok(())
    }

    /// Smallest member index: 0 for transmuted polynomials, 1 otherwise.
    pub fn first_index(&self) -> usize {
        match self.family {
            Family::Transmuted => 0,
            _ => 1,
        }
    }

    /// The altered prefactor `(α, a)` underlying this family.
    pub fn shift(&self) -> Option<AlteredShift> {
        match self.family {
            Family::Rational => Some(AlteredShift::from_c(self.c)),
            Family::Exponential | Family::Logarithmic => Some(AlteredShift::from_b(self.b)),
            Family::Altered if self.c != 1.0 => Some(AlteredShift::from_c(self.c)),
            Family::Altered => Some(AlteredShift::from_b(self.b)),
            Family::Transmuted => None,
        }
    }

    /// Transform `T` with `fₙ(x) = Aₙ(T(x))`, if the family has one.
    pub fn transform(&self) -> Option<Transform> {
        match self.family {
            Family::Rational => Some(Transform::Cayley { c: self.c }),
            Family::Exponential => Some(Transform::Exponential { b: self.b }),
            Family::Logarithmic => Some(Transform::Logarithmic { b: self.b }),
            Family::Altered | Family::Transmuted => None,
        }
    }

    /// Interval on which the family is defined and real: `[−a, 1]` for
    /// altered polynomials, `[0, ∞)` for rational and exponential
    /// functions, `[0, β]` for logarithmic functions with
    /// `β = (b^{b/(b−1)} − 1)/(b − 1)`, `[0, 1]` for transmuted polynomials.
    pub fn natural_domain(&self) -> (f64, f64) {
        match self.family {
            Family::Altered if self.is_generalized() => (-1.0, 1.0),
            Family::Altered => (-self.shift().map_or(1.0, |s| s.a), 1.0),
            Family::Rational | Family::Exponential => (0.0, f64::INFINITY),
            Family::Logarithmic => (0.0, logarithmic_beta(self.b)),
            Family::Transmuted => (0.0, 1.0),
        }
    }

    /// `fₙ(x)`.
    pub fn eval(&self, n: usize, x: f64) -> Result<f64> {
        self.validate()?;
        if n < self.first_index() {
            return Err(Error::invalid("n", n, "member index below the family's first index"));
        }
        match self.family {
            Family::Altered => altered_eval(n, x, self),
            Family::Rational => rational_eval(n, x, self.c),
            Family::Exponential => exponential_eval(n, x, self.b),
            Family::Logarithmic => logarithmic_eval(n, x, self.b),
            Family::Transmuted => transmuted_eval(self.nu, n, x),
        }
    }

    /// Orthogonality weight at `x ∈ [0, 1]`.
    pub fn weight(&self, x: f64) -> Result<f64> {
        weight_eval(self, x)
    }

    /// Closed-form squared norm of member `n`.
    pub fn norm(&self, n: usize) -> Result<f64> {
        family_norm(self, n)
    }
}

/// Zero `β` of every logarithmic member.
pub fn logarithmic_beta(b: f64) -> f64 {
    (b.powf(b / (b - 1.0)) - 1.0) / (b - 1.0)
}

fn check_index(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::invalid("n", n, "members are indexed from 1"))
    } else {
        Ok(())
    }
}

/// Altered Legendre value `Aₙ(x)` for the prefactor selected by `spec`.
///
/// For a generalized spec this is `((x+1)/2)^γ·P̃_{n−1}^{(α,β)}(x)`; a
/// non-integer `γ` is rejected for `x < −1`.
pub fn altered_eval(n: usize, x: f64, spec: &FamilySpec) -> Result<f64> {
    check_index(n)?;
    spec.validate()?;
    if spec.is_generalized() {
        let base = (x + 1.0) / 2.0;
        let g = spec.gamma;
        let pre = if g.fract() == 0.0 && g.abs() < i32::MAX as f64 {
            base.powi(g as i32)
        } else if base < 0.0 {
            return Err(Error::domain("generalized altered polynomial", x, "x >= -1 for non-integer gamma"));
        } else {
            base.powf(g)
        };
        let p = spec.jacobi.unwrap_or(JacobiParams { alpha: 0.0, beta: 0.0 });
        return Ok(pre * shifted_jacobi_eval(n - 1, p, x));
    }
    let s = spec.shift().unwrap_or(AlteredShift { alpha: 0.5, a: 1.0 });
    Ok(s.alpha * (x + s.a) * shifted_legendre_eval(n - 1, x))
}

/// Proper rational function `Rₙ(c; x)` with its single pole at `x = −1/c`.
pub fn rational_eval(n: usize, x: f64, c: f64) -> Result<f64> {
    check_index(n)?;
    let y = Transform::cayley(c)?.forward(x)?;
    Ok(shifted_legendre_eval(n - 1, y) / (1.0 + c * x))
}

/// Exponential function `Eₙ(b; x)`, a polynomial in `t = b^{−x}`.
pub fn exponential_eval(n: usize, x: f64, b: f64) -> Result<f64> {
    check_index(n)?;
    check_b(b)?;
    let t = b.powf(-x);
    if !t.is_finite() {
        return Err(Error::Overflow(format!("b^(-x) for b = {b}, x = {x}")));
    }
    let y = (b * t - 1.0) / (b - 1.0);
    Ok(t * shifted_legendre_eval(n - 1, y))
}

/// Logarithmic function `Lₙ(b; x)`, real for `x > −1/(b−1)`.
pub fn logarithmic_eval(n: usize, x: f64, b: f64) -> Result<f64> {
    check_index(n)?;
    check_b(b)?;
    let l = ell(b, x)?;
    Ok((1.0 - (b - 1.0) * l / b) * shifted_legendre_eval(n - 1, 1.0 - l))
}

/// Orthogonality weight on `[0, 1]`.
///
/// * altered `A_n(b;·)`/`A_n(c;·)`: `1/(x + a)²`, i.e. `1/(x+1)²` by default
/// * generalized altered: `(1−x)^α x^β / (x+1)^{2γ}`
/// * rational: `1`
/// * exponential: `b^x`
/// * logarithmic: `1/((x + 1/(b−1))·(1 − (b−1)ℓ_b(x)/b)²)`; at `b = 2` this is
///   `1/((1+x)/4 · log₂²((1+x)/4))`
/// * transmuted: `w_ν(x)`
pub fn weight_eval(spec: &FamilySpec, x: f64) -> Result<f64> {
    spec.validate()?;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain("orthogonality weight", x, "0 <= x <= 1"));
    }
    let b = spec.b;
    let w = match spec.family {
        Family::Altered if spec.is_generalized() => {
            let p = spec.jacobi.unwrap_or(JacobiParams { alpha: 0.0, beta: 0.0 });
            (1.0 - x).powf(p.alpha) * x.powf(p.beta) / (x + 1.0).powf(2.0 * spec.gamma)
        }
        Family::Altered => {
            let a = spec.shift().map_or(1.0, |s| s.a);
            1.0 / ((x + a) * (x + a))
        }
        Family::Rational => 1.0,
        Family::Exponential => b.powf(x),
        Family::Logarithmic => {
            let q = 1.0 - (b - 1.0) * ell(b, x)? / b;
            1.0 / ((x + 1.0 / (b - 1.0)) * q * q)
        }
        Family::Transmuted => TransmutationMap::new(spec.nu)?.weight_eval(x),
    };
    Ok(w)
}

/// Closed-form squared norm `⟨fₙ, fₙ⟩`:
///
/// * altered: `α²/(2n−1)`, which is `1/(4(2n−1))` by default
/// * rational: `1/((1+c)(2n−1))`
/// * exponential: `(b−1)/(b ln b (2n−1))`
/// * logarithmic: `ln b/(2n−1)`
/// * transmuted: `1/(2n+1)`
///
/// Generalized altered members have no closed form here; check them by
/// quadrature.
pub fn family_norm(spec: &FamilySpec, n: usize) -> Result<f64> {
    spec.validate()?;
    if spec.is_generalized() {
        return Err(Error::Unsupported(
            "no closed-form norm for the generalized altered family; verify by quadrature only".into(),
        ));
    }
    if spec.family == Family::Transmuted {
        return Ok(1.0 / (2 * n + 1) as f64);
    }
    check_index(n)?;
    let k = (2 * n - 1) as f64;
    let (b, c) = (spec.b, spec.c);
    Ok(match spec.family {
        Family::Altered => {
            let s = spec.shift().unwrap_or(AlteredShift { alpha: 0.5, a: 1.0 });
            s.alpha * s.alpha / k
        }
        Family::Rational => 1.0 / ((1.0 + c) * k),
        Family::Exponential => (b - 1.0) / (b * b.ln() * k),
        Family::Logarithmic => b.ln() / k,
        Family::Transmuted => unreachable!(),
    })
}

/// Numerator `N` and pole order `n` with `Rₙ(c; x) = N(x)/(1 + cx)ⁿ`.
///
/// Built exactly as `Σ_k p_k (1−x)^k (1+cx)^{n−1−k}` from the coefficients
/// `p_k` of `P̃_{n−1}`, with `c` taken at its exact binary value. The
/// supported range is `n ≤ 6` for `c = 1` and `n ≤ 4` otherwise;
/// [`rational_eval`] covers every `n`.
pub fn rational_closed_form(n: usize, c: f64) -> Result<(Polynomial, u32)> {
    check_index(n)?;
    check_c(c)?;
    let limit = if c == 1.0 { 6 } else { 4 };
    if n > limit {
        return Err(Error::Unsupported(format!(
            "closed-form rational numerator for n = {n} (supported up to {limit} at c = {c})"
        )));
    }
    let cq = rat_from_f64("c", c)?;
    let one_minus_x = Polynomial::from_ints(&[1, -1]);
    let one_plus_cx = Polynomial::from_coeffs(vec![BigRational::one(), cq]);
    let p = shifted_legendre(n - 1);
    let numerator = p
        .coeffs()
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (k, pk)| {
            let term = &one_minus_x.pow(k as u32) * &one_plus_cx.pow((n - 1 - k) as u32);
            &acc + &term.scale(pk)
        });
    Ok((numerator, n as u32))
}

/// `Fₙ(t)` with `Eₙ(x) = Fₙ(2^{−x})`, i.e. `t·P̃_{n−1}(2t − 1)`, for `n ≤ 6`.
pub fn exponential_closed_form(n: usize) -> Result<Polynomial> {
    check_index(n)?;
    if n > 6 {
        return Err(Error::Unsupported(format!(
            "closed-form exponential polynomial for n = {n} (supported up to 6)"
        )));
    }
    let t = Polynomial::x();
    Ok(&t * &shifted_legendre(n - 1).compose(&Polynomial::from_ints(&[-1, 2])))
}

/// `Gₙ(t)` with `Lₙ(b; x) = Gₙ(log_b(1 + (b−1)x))`:
/// `Gₙ(t) = (1 − (b−1)t/b)·P̃_{n−1}(1 − t)`, which at `b = 2` is
/// `(−1)^{n−1}(1 − t/2)·P̃_{n−1}(t)`.
pub fn logarithmic_closed_form(n: usize, b: f64) -> Result<Polynomial> {
    check_index(n)?;
    check_b(b)?;
    let bq = rat_from_f64("b", b)?;
    let slope = (&bq - rat(1)) / &bq;
    let pre = Polynomial::from_coeffs(vec![BigRational::one(), -slope]);
    Ok(&pre * &shifted_legendre(n - 1).compose(&Polynomial::from_ints(&[1, -1])))
}
