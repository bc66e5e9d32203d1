//! All connected graphs that are locally the 3x3 rook graph.

use geomforge::graph::Graph;
use geomforge::synthesis::locally::locally_delta_search;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let res = locally_delta_search(&Graph::rook(3), 40)?.require_complete()?;
    for g in &res.graphs {
        let p = g.srg_params();
        println!("{} vertices, diameter {:?}, srg {:?}", g.order(), g.diameter(), p.map(|p| (p.v, p.k, p.lambda, p.mu)));
    }
    Ok(())
}
