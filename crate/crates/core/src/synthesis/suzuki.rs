//! Suzuki's extension: from a graph Δ and a class S of involutions of
//! Aut(Δ), the graph on `{∞} ∪ VΔ ∪ S`.

use serde::Serialize;

use super::SynthesisError;
use crate::canon::{canonical_form, certificate, is_locally, Coloring};
use crate::graph::Graph;
use crate::group::{group_closure, involution_classes, pairwise_fix_table, to_perm, PermGroup, DEFAULT_CLOSURE_CAP};
use crate::spaces::projective_plane;

/// Incidence graph of the 2-(7,4,2) design (complements of Fano lines).
/// Points are vertices `0..7`, blocks `7..14`.
pub fn sigma2() -> Graph {
    let fano = projective_plane(2).expect("PG(2,2)");
    let mut g = Graph::empty(14);
    for (b, line) in fano.lines().iter().enumerate() {
        for p in (0..7).filter(|p| !line.contains(p)) {
            g.add_edge(p, 7 + b);
        }
    }
    g
}

/// One Suzuki step. Vertex 0 is `∞`, vertices `1..=|VΔ|` are Δ, the rest
/// are the members of `class` (element indices of `grp`) in order.
pub fn suzuki_step(delta: &Graph, grp: &PermGroup, class: &[usize]) -> Result<Graph, SynthesisError> {
    let n = delta.order();
    if grp.degree() != n {
        return Err(SynthesisError::PreconditionViolated("group does not act on Δ".into()));
    }
    let m = class.len();
    let commute: Vec<Vec<bool>> = class
        .iter()
        .map(|&a| class.iter().map(|&b| grp.commute(a, b)).collect())
        .collect();
    let mut g = Graph::empty(1 + n + m);
    for v in 0..n {
        g.add_edge(0, 1 + v);
    }
    for (u, v) in delta.edges() {
        g.add_edge(1 + u, 1 + v);
    }
    for (i, &x) in class.iter().enumerate() {
        for v in grp.fixed_points(x).iter() {
            g.add_edge(1 + n + i, 1 + v);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if !commute[i][j] && (0..m).any(|k| commute[k][i] && commute[k][j]) {
                g.add_edge(1 + n + i, 1 + n + j);
            }
        }
    }
    if !g.is_connected() {
        return Err(SynthesisError::DisconnectedResult);
    }
    Ok(g)
}

/// Full automorphism group of `g` as an explicit permutation group.
pub fn automorphism_group(g: &Graph, cap: usize) -> Result<PermGroup, SynthesisError> {
    let cf = canonical_form(g, &Coloring::trivial(g.order()));
    let gens: Vec<_> = if cf.generators.is_empty() {
        vec![to_perm(&(0..g.order()).collect::<Vec<_>>())]
    } else {
        cf.generators.iter().map(|p| to_perm(p)).collect()
    };
    let grp = group_closure(&gens, cap)?;
    debug_assert_eq!(grp.order() as u128, cf.group_order);
    Ok(grp)
}

/// One class of involutions tried for the extension.
#[derive(Debug, Clone, Serialize)]
pub struct ClassTrial {
    pub size: usize,
    pub fixed_points: usize,
    /// Vertex count of the step graph, if connected.
    pub result_order: Option<usize>,
    pub locally_delta: bool,
}

/// Result of extending Δ: the chosen class is the first (by size) whose
/// step graph is connected and locally Δ.
#[derive(Debug, Clone)]
pub struct SuzukiExtension {
    pub graph: Graph,
    pub group: PermGroup,
    /// Element indices of the chosen class, sorted.
    pub class: Vec<usize>,
    pub trials: Vec<ClassTrial>,
}

pub fn suzuki_extend(delta: &Graph) -> Result<SuzukiExtension, SynthesisError> {
    let group = automorphism_group(delta, DEFAULT_CLOSURE_CAP)?;
    let classes = involution_classes(&group, delta)?;
    let mut trials = Vec::new();
    let mut chosen = None;
    for c in &classes {
        let step = suzuki_step(delta, &group, &c.members);
        let (result_order, locally_delta) = match &step {
            Ok(g) => (Some(g.order()), is_locally(g, delta)),
            Err(_) => (None, false),
        };
        trials.push(ClassTrial {
            size: c.members.len(),
            fixed_points: c.fixed.count(),
            result_order,
            locally_delta,
        });
        if locally_delta && chosen.is_none() {
            chosen = Some((step.unwrap(), c.members.clone()));
        }
    }
    let (graph, class) =
        chosen.ok_or_else(|| SynthesisError::NotFound("no involution class gives a locally Δ extension".into()))?;
    Ok(SuzukiExtension {
        graph,
        group,
        class,
        trials,
    })
}

/// Histogram of `Fix(g) ∩ Fix(h)` over the chosen class, with each
/// isomorphism type named when it matches a small complete (multipartite)
/// graph.
#[derive(Debug, Clone, Serialize)]
pub struct FixRow {
    /// (name, vertex count, number of h)
    pub entries: Vec<(String, usize, usize)>,
}

/// Names `K_n`, `K_{n×m}` (`m` parts of size `n`) and the empty graph.
pub fn small_graph_name(g: &Graph) -> String {
    let n = g.order();
    if n == 0 {
        return "∅".into();
    }
    let cert = certificate(g, &Coloring::trivial(n));
    if cert == certificate(&Graph::complete(n), &Coloring::trivial(n)) {
        return format!("K{n}");
    }
    for parts in 2..=n {
        if n % parts == 0 {
            let size = n / parts;
            let km = Graph::complete_multipartite(size, parts);
            if certificate(&km, &Coloring::trivial(n)) == cert {
                return format!("K_{{{size}×{parts}}}");
            }
        }
    }
    format!("graph on {n} vertices with {} edges", g.edge_count())
}

pub fn fix_row(delta_ext: &SuzukiExtension, on: &Graph) -> Result<FixRow, SynthesisError> {
    let classes = involution_classes(&delta_ext.group, on)?;
    let class = classes
        .iter()
        .find(|c| c.members == delta_ext.class)
        .ok_or_else(|| SynthesisError::NotFound("chosen class".into()))?;
    let table = pairwise_fix_table(&delta_ext.group, on, class);
    Ok(FixRow {
        entries: table
            .into_iter()
            .map(|e| (small_graph_name(&e.graph), e.graph.order(), e.count))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma2_is_locally_four_isolated_vertices() {
        let s2 = sigma2();
        assert_eq!(s2.order(), 14);
        assert!(is_locally(&s2, &Graph::empty(4)));
        assert_eq!(crate::canon::automorphism_group_order(&s2), 336);
    }

    #[test]
    fn sigma3_from_sigma2() {
        let ext = suzuki_extend(&sigma2()).unwrap();
        assert_eq!(ext.class.len(), 21);
        let p = ext.graph.srg_params().unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (36, 14, 4, 6));
        // the other class does not give a locally Σ2 graph
        let other = ext.trials.iter().find(|t| t.size == 28).unwrap();
        assert!(!other.locally_delta);
    }

    #[test]
    fn names() {
        assert_eq!(small_graph_name(&Graph::complete(3)), "K3");
        assert_eq!(small_graph_name(&Graph::complete_multipartite(2, 4)), "K_{2×4}");
        assert_eq!(small_graph_name(&Graph::complete_multipartite(4, 2)), "K_{4×2}");
        assert_eq!(small_graph_name(&Graph::empty(0)), "∅");
    }
}
