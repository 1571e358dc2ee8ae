//! Variable transforms that carry `[0, 1]` onto itself with the ends swapped.
//!
//! * `Cayley(c)`: `x ↦ (1−x)/(1+cx)`, an involution for every `c > 0`.
//! * `Exponential(b)`: `x ↦ (b^{1−x} − 1)/(b − 1)`.
//! * `Logarithmic(b)`: `x ↦ 1 − log_b(1 + (b−1)x)`, the inverse of the
//!   exponential map.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Transform {
    Cayley { c: f64 },
    Exponential { b: f64 },
    Logarithmic { b: f64 },
}

pub(crate) fn check_c(c: f64) -> Result<()> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("c", c, "rational parameter must be positive"))
    }
}

pub(crate) fn check_b(b: f64) -> Result<()> {
    if b.is_finite() && b > 1.0 {
        Ok(())
    } else {
        Err(Error::invalid("b", b, "base must exceed 1"))
    }
}

/// `h(b; x) = (b^{1−x} − 1)/(b − 1)`, written through `b^{−x}` so large `x`
/// cannot overflow.
fn exp_map(b: f64, x: f64) -> Result<f64> {
    let t = b.powf(-x);
    if !t.is_finite() {
        return Err(Error::Overflow(format!("b^(1-x) for b = {b}, x = {x}")));
    }
    Ok((b * t - 1.0) / (b - 1.0))
}

/// `ℓ_b(x) = log_b(1 + (b−1)x)`, finite for `x > −1/(b−1)`.
pub(crate) fn ell(b: f64, x: f64) -> Result<f64> {
    let bound = -1.0 / (b - 1.0);
    if !(x > bound) || !x.is_finite() {
        return Err(Error::domain(
            "logarithmic transform",
            x,
            format!("x > {bound}"),
        ));
    }
    Ok(((b - 1.0) * x).ln_1p() / b.ln())
}

fn log_map(b: f64, x: f64) -> Result<f64> {
    Ok(1.0 - ell(b, x)?)
}

fn cayley_map(c: f64, x: f64) -> Result<f64> {
    let den = 1.0 + c * x;
    if den == 0.0 || !x.is_finite() {
        return Err(Error::domain("Cayley transform", x, format!("x != {}", -1.0 / c)));
    }
    Ok((1.0 - x) / den)
}

impl Transform {
    pub fn cayley(c: f64) -> Result<Self> {
        check_c(c)?;
        Ok(Transform::Cayley { c })
    }

    pub fn exponential(b: f64) -> Result<Self> {
        check_b(b)?;
        Ok(Transform::Exponential { b })
    }

    pub fn logarithmic(b: f64) -> Result<Self> {
        check_b(b)?;
        Ok(Transform::Logarithmic { b })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Transform::Cayley { c } => check_c(c),
            Transform::Exponential { b } | Transform::Logarithmic { b } => check_b(b),
        }
    }

    pub fn forward(&self, x: f64) -> Result<f64> {
        self.validate()?;
        match *self {
            Transform::Cayley { c } => cayley_map(c, x),
            Transform::Exponential { b } => exp_map(b, x),
            Transform::Logarithmic { b } => log_map(b, x),
        }
    }

    pub fn inverse(&self, x: f64) -> Result<f64> {
        self.validate()?;
        match *self {
            Transform::Cayley { c } => cayley_map(c, x),
            Transform::Exponential { b } => log_map(b, x),
            Transform::Logarithmic { b } => exp_map(b, x),
        }
    }

    /// Analytic derivative of [`Transform::forward`].
    pub fn derivative(&self, x: f64) -> Result<f64> {
        self.validate()?;
        match *self {
            Transform::Cayley { c } => {
                cayley_map(c, x)?;
                let den = 1.0 + c * x;
                Ok(-(1.0 + c) / (den * den))
            }
            Transform::Exponential { b } => {
                let t = b.powf(1.0 - x);
                if !t.is_finite() {
                    return Err(Error::Overflow(format!("b^(1-x) for b = {b}, x = {x}")));
                }
                Ok(-t * b.ln() / (b - 1.0))
            }
            Transform::Logarithmic { b } => {
                ell(b, x)?;
                Ok(-(b - 1.0) / ((1.0 + (b - 1.0) * x) * b.ln()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_is_an_involution() {
        let t = Transform::cayley(1.0).unwrap();
        let y = t.forward(t.forward(0.3).unwrap()).unwrap();
        assert!((y - 0.3).abs() < 1e-15);
        let t = Transform::cayley(3.5).unwrap();
        let y = t.forward(t.forward(0.71).unwrap()).unwrap();
        assert!((y - 0.71).abs() < 1e-14);
    }

    #[test]
    fn exponential_swaps_unit_ends() {
        let t = Transform::exponential(2.0).unwrap();
        assert_eq!(t.forward(0.0).unwrap(), 1.0);
        assert_eq!(t.forward(1.0).unwrap(), 0.0);
        // −1 is the image of +∞
        assert!(t.inverse(-1.0).is_err());
        assert!(t.forward(1e6).unwrap() + 1.0 < 1e-300);
    }

    #[test]
    fn logarithmic_sends_three_to_minus_one() {
        let t = Transform::logarithmic(2.0).unwrap();
        assert!((t.forward(3.0).unwrap() + 1.0).abs() < 1e-15);
        assert!((t.inverse(-1.0).unwrap() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn domain_errors_name_the_bound() {
        let t = Transform::logarithmic(3.0).unwrap();
        match t.forward(-0.5) {
            Err(Error::Domain { bound, .. }) => assert_eq!(bound, "x > -0.5"),
            other => panic!("unexpected {other:?}"),
        }
        let c = Transform::cayley(2.0).unwrap();
        assert!(c.forward(-0.5).is_err());
        assert!(Transform::exponential(1.0).is_err());
        assert!(Transform::cayley(0.0).is_err());
    }

    #[test]
    fn derivative_matches_central_difference() {
        let ts = [
            Transform::cayley(1.7).unwrap(),
            Transform::exponential(std::f64::consts::E).unwrap(),
            Transform::logarithmic(5.0).unwrap(),
        ];
        for t in ts {
            for &x in &[0.05, 0.4, 0.9] {
                let h = 1e-6;
                let fd = (t.forward(x + h).unwrap() - t.forward(x - h).unwrap()) / (2.0 * h);
                assert!((fd - t.derivative(x).unwrap()).abs() < 1e-8, "{t:?} {x}");
            }
        }
    }
}
