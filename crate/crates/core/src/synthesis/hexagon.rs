//! The 162-vertex extension of the flag hexagon GH(4,1) of PG(2,4), and
//! the 81-vertex subgraph ℳ.

use serde::Serialize;

use super::SynthesisError;
use crate::bitset::VertexSet;
use std::collections::BTreeSet;

use crate::canon::{are_isomorphic, canonical_form, is_locally, Coloring};
use crate::hyperovals::set_orbit;
use crate::graph::{Graph, SrgParams};
use crate::spaces::{Geometry, PlaneWithHyperovals};

/// Point set, blocks and point graph of an extended geometry.
#[derive(Debug, Clone, Serialize)]
pub struct ExtendedGeometry {
    pub points: usize,
    pub blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    pub graph: Graph,
}

/// Vertex 0 is `q`, vertices `1..=105` are the flags in the order of
/// `pg.flags`, the rest are the hyperovals of the chosen class.
#[derive(Debug, Clone)]
pub struct ExtendedHexagon {
    pub graph: Graph,
    /// Hyperoval indices (into `pg.hyperovals`) of the vertices after the flags.
    pub class: Vec<usize>,
}

/// Lines of PG(2,4) missing the hyperoval (the dual hyperoval).
fn dual_hyperoval(plane: &Geometry, h: &[usize]) -> Vec<usize> {
    (0..plane.lines().len())
        .filter(|&l| plane.lines()[l].iter().all(|p| !h.contains(p)))
        .collect()
}

fn flag_on(plane: &Geometry, flag: (usize, usize), h: &[usize]) -> bool {
    h.contains(&flag.0) || dual_hyperoval(plane, h).contains(&flag.1)
}

/// Distance-1-or-3 graph of the flag hexagon.
pub fn hexagon_local_graph(pg: &PlaneWithHyperovals) -> Graph {
    pg.hexagon.collinearity_graph().distance_graph(&[1, 3])
}

pub fn extended_hexagon_162(pg: &PlaneWithHyperovals, class_index: usize) -> Result<ExtendedHexagon, SynthesisError> {
    let class = pg
        .classes
        .get(class_index)
        .ok_or_else(|| SynthesisError::PreconditionViolated(format!("no hyperoval class {class_index}")))?
        .clone();
    let local = hexagon_local_graph(pg);
    let nf = pg.flags.len();
    let n = 1 + nf + class.len();
    let mut g = Graph::empty(n);
    for f in 0..nf {
        g.add_edge(0, 1 + f);
    }
    for (a, b) in local.edges() {
        g.add_edge(1 + a, 1 + b);
    }
    for (i, &h) in class.iter().enumerate() {
        let oval = &pg.hyperovals[h];
        for (f, &flag) in pg.flags.iter().enumerate() {
            if flag_on(&pg.plane, flag, oval) {
                g.add_edge(1 + nf + i, 1 + f);
            }
        }
        for (j, &h2) in class.iter().enumerate().skip(i + 1) {
            let common = oval.iter().filter(|p| pg.hyperovals[h2].contains(p)).count();
            if common == 2 {
                g.add_edge(1 + nf + i, 1 + nf + j);
            }
        }
    }
    if !g.is_connected() {
        return Err(SynthesisError::DisconnectedResult);
    }
    Ok(ExtendedHexagon { graph: g, class })
}

/// Blocks are the images of `{q} ∪ L`, `L` a hexagon line, under
/// Aut(𝒟).
pub fn extended_geometry(ext: &ExtendedHexagon, pg: &PlaneWithHyperovals) -> ExtendedGeometry {
    let g = &ext.graph;
    let gens = canonical_form(g, &Coloring::trivial(g.order())).generators;
    let mut blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
    for line in pg.hexagon.lines() {
        let mut b: Vec<usize> = std::iter::once(0).chain(line.iter().map(|&f| 1 + f)).collect();
        b.sort_unstable();
        if !blocks.contains(&b) {
            blocks.extend(set_orbit(&gens, &b));
        }
    }
    ExtendedGeometry {
        points: g.order(),
        blocks: blocks.into_iter().collect(),
        graph: g.clone(),
    }
}

/// The subgraph ℳ for a hyperoval `O` outside the chosen class: `q`, the 60
/// flags on `O` or its dual, and the 20 class members meeting `O` in 3 points.
pub fn m_subgraph(ext: &ExtendedHexagon, pg: &PlaneWithHyperovals, other: usize) -> Result<Vec<usize>, SynthesisError> {
    if ext.class.contains(&other) {
        return Err(SynthesisError::PreconditionViolated("O must lie outside the chosen class".into()));
    }
    let o = &pg.hyperovals[other];
    let nf = pg.flags.len();
    let mut verts = vec![0];
    verts.extend((0..nf).filter(|&f| flag_on(&pg.plane, pg.flags[f], o)).map(|f| 1 + f));
    for (i, &h) in ext.class.iter().enumerate() {
        if pg.hyperovals[h].iter().filter(|p| o.contains(p)).count() == 3 {
            verts.push(1 + nf + i);
        }
    }
    Ok(verts)
}

#[derive(Debug, Clone, Serialize)]
pub struct HexagonReport {
    pub vertices: usize,
    pub srg: Option<SrgParams>,
    pub locally_hexagon: bool,
    pub blocks: usize,
    /// Blocks through `q` are exactly `{q} ∪ L` for the 42 hexagon lines.
    pub residue_is_hexagon: bool,
    pub automorphism_order: u128,
    /// (|ℳ|, flags in ℳ, hyperovals in ℳ)
    pub m_layers: (usize, usize, usize),
    pub m_srg: Option<SrgParams>,
    pub m_complement_isomorphic: bool,
}

pub fn hexagon_report(pg: &PlaneWithHyperovals) -> Result<HexagonReport, SynthesisError> {
    let ext = extended_hexagon_162(pg, 0)?;
    let g = &ext.graph;
    let geo = extended_geometry(&ext, pg);
    let mut at_q: Vec<Vec<usize>> = geo
        .blocks
        .iter()
        .filter(|b| b[0] == 0)
        .map(|b| b[1..].iter().map(|&v| v - 1).collect())
        .collect();
    at_q.sort();
    let mut lines: Vec<Vec<usize>> = pg.hexagon.lines().to_vec();
    lines.sort();
    let other = pg.classes[1][0];
    let m = m_subgraph(&ext, pg, other)?;
    let nf = pg.flags.len();
    let flags_in = m.iter().filter(|&&v| (1..=nf).contains(&v)).count();
    let mg = g.induced_ordered(&m);
    let ms = VertexSet::from_indices(g.order(), m.iter().copied());
    let rest: Vec<usize> = (0..g.order()).filter(|&v| !ms.contains(v)).collect();
    let cg = g.induced_ordered(&rest);
    Ok(HexagonReport {
        vertices: g.order(),
        srg: g.srg_params(),
        locally_hexagon: is_locally(g, &hexagon_local_graph(pg)),
        blocks: geo.blocks.len(),
        residue_is_hexagon: at_q == lines,
        automorphism_order: canonical_form(g, &Coloring::trivial(g.order())).group_order,
        m_layers: (m.len(), flags_in, m.len() - 1 - flags_in),
        m_srg: mg.srg_params(),
        m_complement_isomorphic: are_isomorphic(&mg, &cg),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::pg24_with_hyperovals;

    #[test]
    fn local_graph_valency() {
        let pg = pg24_with_hyperovals().unwrap();
        let l = hexagon_local_graph(&pg);
        assert_eq!(l.order(), 105);
        assert!((0..105).all(|v| l.degree(v) == 72));
    }
}
