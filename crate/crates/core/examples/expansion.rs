//! Orthogonal expansions, including evaluation of the series outside `[0, 1]`.

use ortho_interval::projection::project;
use ortho_interval::quadrature::gauss_rule;
use ortho_interval::{FamilySpec, Result};

fn main() -> Result<()> {
    let rule = gauss_rule(192)?;
    let one = project(|_| 1.0, &FamilySpec::altered(), 5, &rule)?;
    println!("1 = sum c_n A_n with c = {:?}", one.coefficients);

    let spec = FamilySpec::rational(1.0);
    for n in [2, 4, 8, 12] {
        let r = project(|x| x, &spec, n, &rule)?;
        println!("x in R_n, N={n:>2}: weighted L2 error {:.3e}", r.weighted_l2_error);
    }

    let f = |x: f64| (-x).exp();
    let r = project(f, &FamilySpec::exponential(2.0), 8, &rule)?;
    for s in r.sample(f, &[0.5, 1.5, 3.0])? {
        println!("exp(-x) at {:.1}: {:.8} vs series {:.8}", s.x, s.value, s.reconstruction);
    }
    Ok(())
}
