//! Rank-3 polar spaces over GF(4): hyperoval types of Q+(5,4) and H(5,4),
//! and the emptiness certificates for W(5,4) and Q-(7,4).
//!
//! Takes about ten seconds in release mode.

use geomforge::hyperovals::{hyperovals_of_gf4_rank3, Gf4Rank3Outcome, SearchOptions};
use geomforge::spaces::PolarKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SearchOptions::default();
    for kind in [PolarKind::Q5plus4, PolarKind::H5_4, PolarKind::S5_4, PolarKind::Q7minus4] {
        match hyperovals_of_gf4_rank3(kind, &opts)? {
            Gf4Rank3Outcome::Types(report) => {
                println!("{}:", kind.name());
                for t in &report.types {
                    println!("  size {:>3} count {:>8} outside {:?}", t.size, t.count, t.outside_profile);
                }
            }
            Gf4Rank3Outcome::Empty(e) => println!("{}: no hyperovals\n{}", kind.name(), serde_json::to_string_pretty(&e)?),
        }
    }
    Ok(())
}
