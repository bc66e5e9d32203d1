//! The 162-vertex graph built from PG(2,4) and a class of hyperovals, its
//! extended generalized hexagon and the automorphism group order.

use geomforge::spaces::pg24_with_hyperovals;
use geomforge::synthesis::hexagon::hexagon_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pg = pg24_with_hyperovals()?;
    println!("{}", serde_json::to_string_pretty(&hexagon_report(&pg)?)?);
    Ok(())
}
