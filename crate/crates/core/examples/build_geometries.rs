//! Builds the classical polar spaces and prints their sizes, GQ orders and
//! collinearity-graph parameters.

use geomforge::spaces::{polar_space, PolarKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in PolarKind::ALL {
        let geo = polar_space(kind)?;
        let col = geo.collinearity_graph();
        let srg = col.srg_params().map(|p| format!("srg({},{},{},{})", p.v, p.k, p.lambda, p.mu));
        println!(
            "{:<9} points {:>5}  lines {:>6}  gq {:?}  {}",
            kind.name(),
            geo.point_count(),
            geo.lines().len(),
            geo.gq_order(),
            srg.unwrap_or_else(|| "not strongly regular".into())
        );
    }
    Ok(())
}
