//! How close the exponential map is to being its own inverse.

use ortho_interval::analysis::involution_metrics;
use ortho_interval::Result;

fn main() -> Result<()> {
    for b in [1.5, 2.0, std::f64::consts::E, 5.0, 10.0] {
        let r = involution_metrics(b, 1e-14)?;
        println!("b={b:<8.5} L2 distance {:.9}  fixed points {:.9?}", r.l2_distance, r.fixed_points);
    }
    Ok(())
}
