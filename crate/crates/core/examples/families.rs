//! Tabulates the first members of every family on a coarse grid.

use ortho_interval::roots::linspace;
use ortho_interval::{FamilySpec, Result};

fn main() -> Result<()> {
    let specs = [
        ("A_n", FamilySpec::altered()),
        ("R_n (c=1)", FamilySpec::rational(1.0)),
        ("E_n (b=2)", FamilySpec::exponential(2.0)),
        ("L_n (b=2)", FamilySpec::logarithmic(2.0)),
        ("P_3n", FamilySpec::transmuted(3)),
    ];
    let xs = linspace(0.0, 1.0, 5);
    for (label, spec) in specs {
        println!("{label}");
        let first = spec.first_index();
        for n in first..first + 4 {
            let row = xs
                .iter()
                .map(|&x| spec.eval(n, x).map(|v| format!("{v:>9.5}")))
                .collect::<Result<Vec<_>>>()?;
            println!("  n={n}: {}", row.join(" "));
        }
    }
    Ok(())
}
