//! Sub-octagons of the flag octagon W(s)^F coming from sub-GQ(1,s)
//! (class 𝒪) and sub-GQ(s,1) (class 𝒪*) of W(s).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::SynthesisError;
use crate::bitset::VertexSet;
use crate::canon::{certificate, Coloring};
use crate::graph::Graph;
use crate::spaces::{flag_geometry, w_s, Geometry};

/// Sub-GQ(1,s) of a GQ(s,s) with regular points: for non-collinear `x, y`,
/// the points `{x,y}^⊥ ∪ {x,y}^⊥⊥` and the lines joining the two halves.
/// Returns (points, lines) pairs, deduplicated.
fn dual_grids(gq: &Geometry) -> Vec<(Vec<usize>, Vec<usize>)> {
    let col = gq.collinearity_graph();
    let n = gq.point_count();
    let mut line_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (li, l) in gq.lines().iter().enumerate() {
        for &a in l {
            for &b in l {
                if a != b {
                    line_of.insert((a, b), li);
                }
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if col.adjacent(x, y) {
                continue;
            }
            let perp = col.common_neighbors(x, y);
            let mut hyp = VertexSet::full(n);
            for z in perp.iter() {
                hyp.intersect_with(&col.neighbors(z));
            }
            let mut pts = perp.clone();
            pts.union_with(&hyp);
            let pts_v = pts.to_vec();
            if !seen.insert(pts_v.clone()) {
                continue;
            }
            let mut lines: Vec<usize> = perp
                .iter()
                .flat_map(|a| hyp.iter().map(move |b| (a, b)))
                .map(|(a, b)| line_of[&(a, b)])
                .collect();
            lines.sort_unstable();
            lines.dedup();
            out.push((pts_v, lines));
        }
    }
    out
}

/// Dual geometry (points are lines, lines are point pencils) and, per dual
/// line, the original point.
fn dual(gq: &Geometry) -> (Geometry, Vec<usize>) {
    let pencils: Vec<Vec<usize>> = (0..gq.point_count()).map(|p| gq.lines_through(p).to_vec()).collect();
    let d = Geometry::from_lines(format!("{}*", gq.kind()), gq.lines().len(), pencils.clone());
    let point_of: HashMap<&Vec<usize>, usize> = pencils.iter().enumerate().map(|(p, l)| (l, p)).collect();
    let map = d.lines().iter().map(|l| point_of[l]).collect();
    (d, map)
}

#[derive(Debug, Clone, Serialize)]
pub struct SubGoReport {
    pub s: u32,
    pub flags: usize,
    /// Flag-index sets of the sub-octagons in each class.
    pub class_o: Vec<Vec<usize>>,
    pub class_o_star: Vec<Vec<usize>>,
    /// For a fixed Ω ∈ 𝒪: |Ω ∩ Ξ| → number of Ξ ∈ 𝒪 ∖ {Ω}.
    pub same_class: BTreeMap<usize, usize>,
    /// Over all pairs (Ω, Ξ) ∈ 𝒪 × 𝒪*: |Ω ∩ Ξ| → count.
    pub cross_class: BTreeMap<usize, usize>,
    /// Every nonempty cross-class intersection induces an 8-cycle in the
    /// octagon's collinearity graph.
    pub cross_are_octagons: bool,
}

pub fn subgo_classes(s: u32) -> Result<SubGoReport, SynthesisError> {
    let gq = w_s(s)?;
    let (oct, flags) = flag_geometry(&gq)?;
    let index: HashMap<(usize, usize), usize> = flags.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let index = &index;
    let lift = |pts: &[usize], lines: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = pts
            .iter()
            .flat_map(|&p| lines.iter().filter_map(move |&l| index.get(&(p, l)).copied()))
            .collect();
        out.sort_unstable();
        out
    };
    let class_o: Vec<Vec<usize>> = dual_grids(&gq).iter().map(|(p, l)| lift(p, l)).collect();
    // sub-GQ(s,1) of W(s) are the sub-GQ(1,s) of its dual
    let (dgq, point_of) = dual(&gq);
    let class_o_star: Vec<Vec<usize>> = dual_grids(&dgq)
        .iter()
        .map(|(dl, dp)| {
            let pts: Vec<usize> = dp.iter().map(|&i| point_of[i]).collect();
            lift(&pts, dl)
        })
        .collect();
    let nf = flags.len();
    let sets = |c: &[Vec<usize>]| -> Vec<VertexSet> {
        c.iter().map(|x| VertexSet::from_indices(nf, x.iter().copied())).collect()
    };
    let (so, ss) = (sets(&class_o), sets(&class_o_star));
    let mut same_class = BTreeMap::new();
    for x in &so[1..] {
        *same_class.entry(so[0].intersection_count(x)).or_insert(0) += 1;
    }
    let col = oct.collinearity_graph();
    let c8 = certificate(&Graph::cycle(8), &Coloring::trivial(8));
    let mut cross_class = BTreeMap::new();
    let mut cross_are_octagons = true;
    for a in &so {
        for b in &ss {
            let mut i = a.clone();
            i.intersect_with(b);
            let k = i.count();
            *cross_class.entry(k).or_insert(0) += 1;
            if k > 0 && (k != 8 || certificate(&col.induced(&i), &Coloring::trivial(8)) != c8) {
                cross_are_octagons = false;
            }
        }
    }
    Ok(SubGoReport {
        s,
        flags: nf,
        class_o,
        class_o_star,
        same_class,
        cross_class,
        cross_are_octagons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w2_classes() {
        let r = subgo_classes(2).unwrap();
        assert_eq!(r.class_o.len(), 10);
        assert_eq!(r.class_o_star.len(), 10);
        assert_eq!(r.same_class.get(&6), Some(&9));
        assert!(r.cross_are_octagons, "{:?}", r.cross_class);
    }
}
