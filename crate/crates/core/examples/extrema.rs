//! Zeros and extrema of the rational, exponential and logarithmic members,
//! and the comparison of their extremal values.

use ortho_interval::analysis::{conjecture_check, find_extrema, find_zeros};
use ortho_interval::{FamilySpec, Result};

fn main() -> Result<()> {
    let specs = [
        FamilySpec::rational(1.0),
        FamilySpec::exponential(2.0),
        FamilySpec::logarithmic(2.0),
    ];
    for spec in &specs {
        let zeros = find_zeros(spec, 4, 0.0, 1.0, 1e-13)?;
        let ext = find_extrema(spec, 4, 1e-10)?;
        println!("{} n=4 zeros {zeros:.9?}", spec.family.name());
        println!("  extrema at {:.6?} with values {:.9?}", ext.abscissas, ext.values);
    }
    for n in 2..=8 {
        let r = conjecture_check(n, 1e-6)?;
        println!(
            "n={n}: counts {:?}, max extremal value discrepancy {:.1e}",
            r.counts, r.max_value_discrepancy
        );
    }
    Ok(())
}
