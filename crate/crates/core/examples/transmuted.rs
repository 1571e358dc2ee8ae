//! Transmuted polynomials: exact orthogonality and the shared odd-index zero.

use ortho_interval::projection::transmuted_gram_exact;
use ortho_interval::transmuted::{transmuted_odd_zero, transmuted_poly, TransmutationMap};
use ortho_interval::Result;

fn main() -> Result<()> {
    for nu in [1, 3, 5, 7] {
        let map = TransmutationMap::new(nu)?;
        let zero = transmuted_odd_zero(nu, 1e-14)?;
        println!("nu={nu}: sigma = {}, weight = {}, odd zero {zero:.12}", map.poly(), map.weight());
    }
    let g = transmuted_gram_exact(3, 5)?;
    for row in &g {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
        println!("{}", cells.join(" "));
    }
    let p = transmuted_poly(5, 3)?;
    println!("P_53 has degree {} and real zeros {:?}", p.degree(), p.real_roots(0.0, 1.0, 1e-13)?);
    Ok(())
}
