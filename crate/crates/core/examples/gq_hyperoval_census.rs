//! Full hyperoval census of the two GQ(3,3)s: totals by size and the
//! isomorphism types with their outside-point profiles.

use geomforge::hyperovals::{enumerate_hyperovals, SearchOptions};
use geomforge::spaces::{polar_space, PolarKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for kind in [PolarKind::W3, PolarKind::Q4_3] {
        let census = enumerate_hyperovals(&polar_space(kind)?, &SearchOptions::default())?;
        println!("{}: {} hyperovals, by size {:?}", kind.name(), census.total, census.totals);
        for t in &census.types {
            println!(
                "  size {:>2} count {:>4} stab {:>4} connected {:<5} outside {:?}",
                t.size, t.count, t.stabilizer_order, t.connected, t.outside_profile
            );
        }
    }
    Ok(())
}
