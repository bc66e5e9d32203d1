//! Perp graphs on nonisotropic points of GF(3) spaces: parameters, the
//! locally-Σ chain and the μ-graph test.

use geomforge::canon::is_locally;
use geomforge::spaces::{gf3_mu_perp_check, gf3_plus_graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for eps in [1, -1] {
        for n in 4..=7 {
            let g = gf3_plus_graph(n, eps)?;
            let p = g.srg_params().map(|p| (p.v, p.k, p.lambda, p.mu));
            let local = n > 4 && is_locally(&g, &gf3_plus_graph(n - 1, eps)?);
            let mu = gf3_mu_perp_check(n, eps).map(|r| r.holds()).unwrap_or(false);
            println!("n {n} eps {eps:+}: srg {p:?}  locally previous {local}  μ = isotropic perp {mu}");
        }
    }
    Ok(())
}
