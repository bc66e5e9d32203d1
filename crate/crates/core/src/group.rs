//! Explicit permutation groups: closure from generators, conjugacy classes of
//! involutions, and fixed-point subgraphs.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::canon::{certificate, Coloring};
use crate::graph::Graph;

/// Default element cap for [`group_closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group closure exceeded the cap of {cap} elements (order at least {lower_bound})")]
    CapExceeded { cap: usize, lower_bound: usize },
    #[error("generators act on domains of different sizes")]
    DomainMismatch,
    #[error("group elements are not automorphisms of the graph")]
    NotAutomorphisms,
}

pub type Perm = Vec<u32>;

pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    // apply a, then b
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

pub fn identity(n: usize) -> Perm {
    (0..n as u32).collect()
}

pub fn to_perm(images: &[usize]) -> Perm {
    images.iter().map(|&x| x as u32).collect()
}

/// A finite permutation group held as an explicit element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_involution(&self, i: usize) -> bool {
        let p = &self.elements[i];
        p.iter().enumerate().any(|(a, &b)| a as u32 != b)
            && p.iter().enumerate().all(|(a, &b)| p[b as usize] == a as u32)
    }

    pub fn commute(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.elements[i], &self.elements[j]);
        (0..self.degree).all(|x| b[a[x] as usize] == a[b[x] as usize])
    }

    pub fn fixed_points(&self, i: usize) -> VertexSet {
        let p = &self.elements[i];
        VertexSet::from_indices(
            self.degree,
            (0..self.degree).filter(|&x| p[x] as usize == x),
        )
    }

    /// Conjugacy class of element `i`, as sorted element indices.
    pub fn conjugacy_class(&self, i: usize) -> Vec<usize> {
        let gens: Vec<(Perm, Perm)> = self
            .generators
            .iter()
            .map(|g| (inverse(g), g.clone()))
            .collect();
        let mut seen = vec![false; self.elements.len()];
        let mut stack = vec![i];
        seen[i] = true;
        let mut out = vec![i];
        while let Some(x) = stack.pop() {
            for (ginv, g) in &gens {
                let y = compose(&compose(ginv, &self.elements[x]), g);
                let j = self.index[&y];
                if !seen[j] {
                    seen[j] = true;
                    out.push(j);
                    stack.push(j);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// All elements generated by `gens`, in breadth-first order from the identity.
pub fn group_closure(gens: &[Perm], cap: usize) -> Result<PermGroup, GroupError> {
    let degree = gens.first().map_or(0, |g| g.len());
    if gens.iter().any(|g| g.len() != degree) {
        return Err(GroupError::DomainMismatch);
    }
    let id = identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut head = 0;
    while head < elements.len() {
        for g in gens {
            let y = compose(&elements[head], g);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded {
                        cap,
                        lower_bound: elements.len() + 1,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        head += 1;
    }
    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        elements,
        index,
    })
}

fn check_automorphisms(grp: &PermGroup, g: &Graph) -> Result<(), GroupError> {
    if grp.degree() != g.order() {
        return Err(GroupError::NotAutomorphisms);
    }
    let edges = g.edges();
    for p in grp.generators() {
        if !edges
            .iter()
            .all(|&(u, v)| g.adjacent(p[u] as usize, p[v] as usize))
        {
            return Err(GroupError::NotAutomorphisms);
        }
    }
    Ok(())
}

/// A conjugacy class of involutions with the fixed subgraph of one member.
#[derive(Debug, Clone)]
pub struct InvolutionClass {
    /// Element indices, sorted; the first is the representative.
    pub members: Vec<usize>,
    pub fixed: VertexSet,
    pub fix_graph: Graph,
    pub fix_certificate: String,
}

/// Involutions of `grp` split into conjugacy classes, sorted by class size
/// and then by the number of fixed vertices.
pub fn involution_classes(grp: &PermGroup, g: &Graph) -> Result<Vec<InvolutionClass>, GroupError> {
    check_automorphisms(grp, g)?;
    let mut assigned = vec![false; grp.order()];
    let mut classes = Vec::new();
    for i in 0..grp.order() {
        if assigned[i] || !grp.is_involution(i) {
            continue;
        }
        let members = grp.conjugacy_class(i);
        for &m in &members {
            assigned[m] = true;
        }
        let fixed = grp.fixed_points(members[0]);
        let fix_graph = g.induced(&fixed);
        let fix_certificate = certificate(&fix_graph, &Coloring::trivial(fix_graph.order())).hex_digest();
        classes.push(InvolutionClass {
            members,
            fixed,
            fix_graph,
            fix_certificate,
        });
    }
    classes.sort_by_key(|c| (c.members.len(), c.fixed.count(), c.members[0]));
    Ok(classes)
}

/// One row entry of a pairwise fixed-subgraph histogram.
#[derive(Debug, Clone)]
pub struct FixIntersection {
    pub certificate: String,
    pub graph: Graph,
    pub count: usize,
}

/// Histogram of `Fix(g₀) ∩ Fix(h)` isomorphism types over `h` in the class,
/// `h ≠ g₀`, with `g₀` the class representative. Entries are sorted by
/// decreasing vertex count.
pub fn pairwise_fix_table(grp: &PermGroup, g: &Graph, class: &InvolutionClass) -> Vec<FixIntersection> {
    let g0 = class.members[0];
    let f0 = grp.fixed_points(g0);
    let mut hist: BTreeMap<String, FixIntersection> = BTreeMap::new();
    for &h in &class.members[1..] {
        let mut common = grp.fixed_points(h);
        common.intersect_with(&f0);
        let sub = g.induced(&common);
        let cert = certificate(&sub, &Coloring::trivial(sub.order())).hex_digest();
        hist.entry(cert.clone())
            .or_insert(FixIntersection {
                certificate: cert,
                graph: sub,
                count: 0,
            })
            .count += 1;
    }
    let mut out: Vec<FixIntersection> = hist.into_values().collect();
    out.sort_by(|a, b| {
        b.graph
            .order()
            .cmp(&a.graph.order())
            .then(a.certificate.cmp(&b.certificate))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let id = identity(4);
        assert_eq!(group_closure(&[id], 10).unwrap().order(), 1);
        let cyc = vec![1, 2, 3, 0];
        let swap = vec![1, 0, 2, 3];
        assert_eq!(group_closure(&[cyc.clone(), swap.clone()], 100).unwrap().order(), 24);
        assert_eq!(
            group_closure(&[cyc, swap], 10).unwrap_err(),
            GroupError::CapExceeded { cap: 10, lower_bound: 11 }
        );
        assert_eq!(group_closure(&[vec![0, 1], vec![0]], 10).unwrap_err(), GroupError::DomainMismatch);
    }

    #[test]
    fn involutions_of_square_symmetries() {
        // dihedral group of order 8 acting on the 4-cycle
        let c4 = Graph::cycle(4);
        let grp = group_closure(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], 100).unwrap();
        assert_eq!(grp.order(), 8);
        let classes = involution_classes(&grp, &c4).unwrap();
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2]);
        let trivial = group_closure(&[identity(4)], 10).unwrap();
        assert!(involution_classes(&trivial, &c4).unwrap().is_empty());
        let bad = group_closure(&[vec![1, 0, 2, 3]], 10).unwrap();
        assert_eq!(involution_classes(&bad, &c4).unwrap_err(), GroupError::NotAutomorphisms);
    }
}
