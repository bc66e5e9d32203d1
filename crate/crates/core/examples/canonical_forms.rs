//! Canonical labelling: W(3) and the hermitian graph U4 are the same graph,
//! Q(4,3) is not, although all three are srg(40,12,2,4).

use std::collections::BTreeSet;

use geomforge::canon::{canonical_form, Coloring};
use geomforge::spaces::{hermitian_nonisotropic_graph, polar_space, PolarKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("W(3)", polar_space(PolarKind::W3)?.collinearity_graph()),
        ("Q(4,3)", polar_space(PolarKind::Q4_3)?.collinearity_graph()),
        ("U4", hermitian_nonisotropic_graph(4)?),
    ];
    for (name, g) in &graphs {
        let cf = canonical_form(g, &Coloring::trivial(g.order()));
        println!(
            "{name:<7} |Aut| = {:>6}  orbits {}  cert {}",
            cf.group_order,
            cf.orbits.iter().collect::<BTreeSet<_>>().len(),
            &cf.certificate.hex_digest()[..16]
        );
    }
    Ok(())
}
