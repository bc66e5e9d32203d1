//! Repeated extension by involution classes: from the 14-vertex Σ₂ to the
//! locally-Σ₃ graph on 100 vertices, with the fixed-subgraph row.

use geomforge::synthesis::suzuki::{fix_row, sigma2, suzuki_extend};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut g = sigma2();
    for step in 2..4 {
        let ext = suzuki_extend(&g)?;
        let p = ext.graph.srg_params().ok_or("extension is not strongly regular")?;
        println!("Σ{step} |Aut| {:>6} -> Σ{} = srg({},{},{},{})", ext.group.order(), step + 1, p.v, p.k, p.lambda, p.mu);
        for t in &ext.trials {
            println!("  class of {:>3}: fix {:>2} result {:?} locally {}", t.size, t.fixed_points, t.result_order, t.locally_delta);
        }
        if step == 3 {
            println!("  fix row: {:?}", fix_row(&ext, &g)?.entries);
        }
        g = ext.graph;
    }
    Ok(())
}
