//! The 162-point hyperoval of H(5,4), reached directly and as the symmetric
//! difference of two 126-point hyperovals meeting in 45 points.

use geomforge::hyperovals::{hyperovals_of_gf4_rank3, SearchOptions};
use geomforge::spaces::{polar_space, PolarKind};
use geomforge::synthesis::egq162::{egq_report, two_routes};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h5 = polar_space(PolarKind::H5_4)?;
    let out = hyperovals_of_gf4_rank3(PolarKind::H5_4, &SearchOptions::default())?;
    let rep126 = &out.types().iter().find(|t| t.size == 126).ok_or("no 126-point type")?.representative;
    let routes = two_routes(&h5, rep126)?;
    println!("same certificate: {}", routes.brouwer_certificate == routes.difference_certificate);
    println!("45-point intersection matches the GF(3) model: {}", routes.intersection_matches_gf3);
    println!("{}", serde_json::to_string_pretty(&egq_report(&h5, &routes.brouwer)?)?);
    Ok(())
}
