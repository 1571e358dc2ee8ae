//! Gram matrices by Gauss–Legendre quadrature against the closed-form norms.

use std::f64::consts::E;

use ortho_interval::projection::gram;
use ortho_interval::quadrature::gauss_rule;
use ortho_interval::{FamilySpec, Result};

fn main() -> Result<()> {
    let rule = gauss_rule(192)?;
    for spec in [
        FamilySpec::altered(),
        FamilySpec::rational(3.0),
        FamilySpec::exponential(E),
        FamilySpec::logarithmic(E),
        FamilySpec::transmuted(5),
    ] {
        let r = gram(&spec, 8, &rule)?;
        println!(
            "{:<12} max off-diagonal {:.2e}, max diagonal deviation {:.2e}",
            spec.family.name(),
            r.max_offdiag,
            r.max_diag_reldev.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
