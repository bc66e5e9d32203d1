//! Flag geometries of W(2) and W(4) are generalized octagons; counts the
//! classes of sub-octagons of the larger one.

use geomforge::spaces::{flag_geometry, w_s};
use geomforge::synthesis::octagon::subgo_classes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for s in [2, 4] {
        let (oct, _) = flag_geometry(&w_s(s)?)?;
        let inc = oct.incidence_graph();
        println!("W({s}) flags: {} points, girth {:?}, diameter {:?}", oct.point_count(), inc.girth(), inc.diameter());
    }
    println!("{}", serde_json::to_string_pretty(&subgo_classes(4)?)?);
    Ok(())
}
