//! Exact closed forms: rational numerators, exponential and logarithmic
//! polynomials in `t`, and transmuted polynomials.

use ortho_interval::family::{exponential_closed_form, logarithmic_closed_form, rational_closed_form};
use ortho_interval::transmuted::transmuted_poly;
use ortho_interval::Result;

fn main() -> Result<()> {
    for n in 1..=6 {
        let (num, order) = rational_closed_form(n, 1.0)?;
        println!("R_{n}(x) = ({num}) / (1 + x)^{order}");
    }
    for n in 1..=4 {
        let (num, order) = rational_closed_form(n, 0.5)?;
        println!("R_{n}(1/2; x) = ({num}) / (1 + x/2)^{order}");
    }
    for n in 1..=6 {
        let f = exponential_closed_form(n)?;
        println!("F_{n}(t) = {}", f.to_string().replace('x', "t"));
    }
    for n in 1..=4 {
        let g = logarithmic_closed_form(n, 2.0)?;
        println!("G_{n}(t) = {}", g.to_string().replace('x', "t"));
    }
    for n in 0..=3 {
        println!("P_3{n}(x) = {}", transmuted_poly(3, n)?);
    }
    Ok(())
}
