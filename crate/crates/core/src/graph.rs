//! Dense undirected simple graphs and the structural metrics used to
//! certify constructions: strongly regular parameters, intersection arrays,
//! μ-graphs, locality, the triple property and covers.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{intersection_count, words_for, BitIter, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertices {0} and {1} are not at distance 2")]
    DistanceNotTwo(usize, usize),
    #[error("graph has diameter greater than 2")]
    DiameterExceedsTwo,
    #[error("fiber partition does not match the quotient graph: {0}")]
    BadPartition(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// Dense graph on vertices `0..n`; adjacency rows are fixed-width bit arrays.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={})", self.n, self.edge_count())
    }
}

/// `(v, k, λ, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    pub const fn new(v: usize, k: usize, lambda: usize, mu: usize) -> Self {
        SrgParams { v, k, lambda, mu }
    }

    /// `k(k − λ − 1) = (v − k − 1) μ`.
    pub fn is_feasible(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// `{b_0, …, b_{d−1}; c_1, …, c_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from a symmetric adjacency predicate, evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adj: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adj(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Builds a graph from adjacency rows computed independently per vertex.
    pub fn from_rows_fn(n: usize, row: impl Fn(usize) -> VertexSet + Sync + Send) -> Self {
        use rayon::prelude::*;
        let words = words_for(n);
        let built: Vec<VertexSet> = (0..n).into_par_iter().map(row).collect();
        let mut rows = vec![0; n * words];
        for (u, r) in built.into_iter().enumerate() {
            rows[u * words..(u + 1) * words].copy_from_slice(r.words());
        }
        let g = Graph { n, words, rows };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn row_words(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n);
        self.rows[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.rows[v * self.words + (u >> 6)] |= 1 << (u & 63);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + (v >> 6)] &= !(1 << (v & 63));
        self.rows[v * self.words + (u >> 6)] &= !(1 << (u & 63));
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + (v >> 6)] >> (v & 63) & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row_words(u).to_vec())
    }

    pub fn neighbor_iter(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row_words(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row_words(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbor_iter(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        intersection_count(self.row_words(u), self.row_words(v))
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        let w: Vec<u64> = self
            .row_words(u)
            .iter()
            .zip(self.row_words(v))
            .map(|(a, b)| a & b)
            .collect();
        VertexSet::from_words(self.n, w)
    }

    /// Symmetric with zero diagonal.
    pub fn check_invariants(&self) -> Result<(), String> {
        for u in 0..self.n {
            if self.adjacent(u, u) {
                return Err(format!("loop at {u}"));
            }
            for v in self.neighbor_iter(u) {
                if v >= self.n || !self.adjacent(v, u) {
                    return Err(format!("asymmetric edge {u}-{v}"));
                }
            }
        }
        Ok(())
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.adjacent(u, v))
    }

    /// Induced subgraph; new vertex `i` is the `i`-th smallest member of `s`.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let verts = s.to_vec();
        self.induced_ordered(&verts)
    }

    /// Induced subgraph on an explicit vertex sequence.
    pub fn induced_ordered(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels: vertex `u` becomes `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Breadth-first distances from `s` (`usize::MAX` when unreachable).
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbor_iter(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }

    /// Diameter, `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            let d = self.distances_from(s);
            for &x in &d {
                if x == usize::MAX {
                    return None;
                }
                best = best.max(x);
            }
        }
        Some(best)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for v in self.neighbor_iter(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let d = self.distances_from(s);
            let comp: Vec<usize> = (0..self.n).filter(|&v| d[v] != usize::MAX).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Strongly regular parameters, if the graph is connected, regular, and
    /// every edge (non-edge) has a constant number λ (μ > 0) of common neighbors.
    pub fn srg_params(&self) -> Option<SrgParams> {
        let n = self.n;
        if n < 2 || !self.is_connected() {
            return None;
        }
        let k = self.degree(0);
        if (1..n).any(|u| self.degree(u) != k) {
            return None;
        }
        let mut lambda = None;
        let mut mu = None;
        for u in 0..n {
            for v in u + 1..n {
                let c = self.common_neighbor_count(u, v);
                let slot = if self.adjacent(u, v) {
                    &mut lambda
                } else {
                    &mut mu
                };
                match *slot {
                    None => *slot = Some(c),
                    Some(x) if x != c => return None,
                    _ => {}
                }
            }
        }
        let mu = mu?;
        if mu == 0 {
            return None;
        }
        Some(SrgParams::new(n, k, lambda.unwrap_or(0), mu))
    }

    /// Intersection array, if the graph is connected and distance-regular.
    pub fn intersection_array(&self) -> Option<IntersectionArray> {
        let n = self.n;
        if n == 0 || !self.is_connected() {
            return None;
        }
        let mut b: Vec<Option<usize>> = Vec::new();
        let mut c: Vec<Option<usize>> = Vec::new();
        let mut diam = None;
        for s in 0..n {
            let dist = self.distances_from(s);
            let d = *dist.iter().max().unwrap();
            match diam {
                None => {
                    diam = Some(d);
                    b = vec![None; d + 1];
                    c = vec![None; d + 1];
                }
                Some(x) if x != d => return None,
                _ => {}
            }
            for v in 0..n {
                let i = dist[v];
                let (mut ci, mut bi) = (0, 0);
                for w in self.neighbor_iter(v) {
                    if dist[w] + 1 == i {
                        ci += 1;
                    } else if dist[w] == i + 1 {
                        bi += 1;
                    }
                }
                for (slot, val) in [(&mut b[i], bi), (&mut c[i], ci)] {
                    match *slot {
                        None => *slot = Some(val),
                        Some(x) if x != val => return None,
                        _ => {}
                    }
                }
            }
        }
        let d = diam.unwrap();
        Some(IntersectionArray {
            b: (0..d).map(|i| b[i].unwrap()).collect(),
            c: (1..=d).map(|i| c[i].unwrap()).collect(),
        })
    }

    /// `Γ(u) ∩ Γ(w)` for vertices at distance 2.
    pub fn mu_graph(&self, u: usize, w: usize) -> Result<VertexSet, GraphError> {
        for x in [u, w] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange(x));
            }
        }
        if u == w || self.adjacent(u, w) || self.common_neighbor_count(u, w) == 0 {
            return Err(GraphError::DistanceNotTwo(u, w));
        }
        Ok(self.common_neighbors(u, w))
    }

    /// Triple-graph test: for each non-edge `{u,v}` there is exactly one
    /// `w ∉ {u,v}` with `Γ(u,v) = Γ(u,w) = Γ(v,w)`.
    pub fn triple_witnesses(&self) -> Result<TripleReport, GraphError> {
        self.tuple_witnesses(1)
    }

    /// Generalization: each non-edge must have exactly `others` further
    /// vertices sharing its μ-graph (1 for triples, 2 for quadruples).
    pub fn tuple_witnesses(&self, others: usize) -> Result<TripleReport, GraphError> {
        let n = self.n;
        if self.diameter().is_none_or(|d| d > 2) {
            return Err(GraphError::DiameterExceedsTwo);
        }
        // a witness w for (u,v) forms non-edges with u and v sharing the
        // same μ-set, so only vertices seen with that μ-set are candidates
        let mut pairs = Vec::new();
        let mut by_mu: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    continue;
                }
                let mu = self.common_neighbors(u, v);
                let e = by_mu.entry(mu.clone()).or_default();
                e.push(u);
                e.push(v);
                pairs.push(((u, v), mu));
            }
        }
        for vs in by_mu.values_mut() {
            vs.sort_unstable();
            vs.dedup();
        }
        let mut witnesses = Vec::with_capacity(pairs.len());
        let mut ok = true;
        for ((u, v), mu) in pairs {
            let found: Vec<usize> = by_mu[&mu]
                .iter()
                .copied()
                .filter(|&w| {
                    w != u
                        && w != v
                        && !self.adjacent(u, w)
                        && !self.adjacent(v, w)
                        && self.common_neighbors(u, w) == mu
                        && self.common_neighbors(v, w) == mu
                })
                .collect();
            if found.len() != others {
                ok = false;
            }
            witnesses.push(((u, v), found));
        }
        Ok(TripleReport { holds: ok, witnesses })
    }

    /// Checks that `fibers` (one vertex list per vertex of `h`) defines a
    /// cover: the fiber map sends edges to edges and is a bijection from
    /// each neighborhood `Γ(v)` onto `h(φ(v))` that preserves adjacency.
    pub fn check_cover(&self, h: &Graph, fibers: &[Vec<usize>]) -> Result<bool, GraphError> {
        let phi = fiber_map(self.n, h.n, fibers)?;
        for (u, v) in self.edges() {
            if phi[u] == phi[v] || !h.adjacent(phi[u], phi[v]) {
                return Ok(false);
            }
        }
        for v in 0..self.n {
            let nb: Vec<usize> = self.neighbor_iter(v).collect();
            let image: Vec<usize> = nb.iter().map(|&x| phi[x]).collect();
            let mut sorted = image.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != nb.len() || sorted.len() != h.degree(phi[v]) {
                return Ok(false);
            }
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if self.adjacent(nb[i], nb[j]) != h.adjacent(image[i], image[j]) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Weaker covering-map test: edges go to edges and each neighborhood
    /// `Γ(v)` is mapped bijectively onto `h(φ(v))`, ignoring adjacency
    /// inside the neighborhoods.
    pub fn check_covering_map(&self, h: &Graph, fibers: &[Vec<usize>]) -> Result<bool, GraphError> {
        let phi = fiber_map(self.n, h.n, fibers)?;
        for v in 0..self.n {
            let mut image: Vec<usize> = self.neighbor_iter(v).map(|x| phi[x]).collect();
            let deg = image.len();
            image.sort_unstable();
            image.dedup();
            if image.len() != deg
                || deg != h.degree(phi[v])
                || image.iter().any(|&y| !h.adjacent(phi[v], y))
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Graph on the same vertices where `u ~ v` iff `dist(u,v) ∈ dists`.
    pub fn distance_graph(&self, dists: &[usize]) -> Graph {
        let all: Vec<Vec<usize>> = (0..self.n).map(|s| self.distances_from(s)).collect();
        Graph::from_fn(self.n, |u, v| dists.contains(&all[u][v]))
    }

    /// Graphviz `graph` text.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name.replace('"', "'"));
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Petersen graph (outer 5-cycle 0..5, inner pentagram 5..10).
    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// `m × m` rook's graph (`K_m □ K_m`).
    pub fn rook(m: usize) -> Graph {
        Graph::from_fn(m * m, |u, v| u / m == v / m || u % m == v % m)
    }

    /// Complete multipartite graph with `parts` parts of size `size`.
    pub fn complete_multipartite(size: usize, parts: usize) -> Graph {
        Graph::from_fn(size * parts, |u, v| u / size != v / size)
    }

    /// Disjoint union.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Replaces each vertex by a clique of size `m`; two vertices are adjacent
    /// iff they are in the same clique or their original vertices are adjacent.
    pub fn clique_extension(&self, m: usize) -> Graph {
        Graph::from_fn(self.n * m, |u, v| {
            let (a, b) = (u / m, v / m);
            a == b || self.adjacent(a, b)
        })
    }
}

fn fiber_map(n: usize, m: usize, fibers: &[Vec<usize>]) -> Result<Vec<usize>, GraphError> {
    if fibers.len() != m {
        return Err(GraphError::BadPartition(format!(
            "{} fibers for a quotient on {m} vertices",
            fibers.len()
        )));
    }
    let mut phi = vec![usize::MAX; n];
    for (i, fib) in fibers.iter().enumerate() {
        for &v in fib {
            if v >= n || phi[v] != usize::MAX {
                return Err(GraphError::BadPartition(format!("vertex {v} misplaced")));
            }
            phi[v] = i;
        }
    }
    if phi.contains(&usize::MAX) {
        return Err(GraphError::BadPartition("fibers do not cover all vertices".into()));
    }
    Ok(phi)
}

/// Outcome of a triple/quadruple test with the witnesses found per non-edge.
#[derive(Debug, Clone)]
pub struct TripleReport {
    pub holds: bool,
    pub witnesses: Vec<((usize, usize), Vec<usize>)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_examples() {
        let k4 = Graph::complete(4);
        let k3 = k4.induced(&VertexSet::from_indices(4, [0, 2, 3]));
        assert_eq!(k3, Graph::complete(3));
        let p = Graph::petersen();
        let nb = p.induced(&p.neighbors(0));
        assert_eq!(nb.order(), 3);
        assert_eq!(nb.edge_count(), 0);
    }

    #[test]
    fn srg_examples() {
        assert_eq!(Graph::petersen().srg_params(), Some(SrgParams::new(10, 3, 0, 1)));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.srg_params(), None);
        assert_eq!(Graph::complete(5).srg_params(), None);
        assert!(SrgParams::new(10, 3, 0, 1).is_feasible());
        assert_eq!(Graph::rook(3).srg_params(), Some(SrgParams::new(9, 4, 1, 2)));
    }

    #[test]
    fn intersection_array_examples() {
        let c6 = Graph::cycle(6).intersection_array().unwrap();
        assert_eq!(c6.b, vec![2, 1, 1]);
        assert_eq!(c6.c, vec![1, 1, 2]);
        let pet = Graph::petersen().intersection_array().unwrap();
        assert_eq!(pet.to_string(), "{3,2;1,1}");
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.intersection_array(), None);
    }

    #[test]
    fn mu_graph_examples() {
        let p = Graph::petersen();
        let mu = p.mu_graph(0, 2).unwrap();
        assert_eq!(mu.to_vec(), vec![1]);
        assert_eq!(p.mu_graph(2, 0).unwrap(), mu);
        assert_eq!(p.mu_graph(0, 1), Err(GraphError::DistanceNotTwo(0, 1)));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(two.mu_graph(0, 2).is_err());
    }

    #[test]
    fn triple_examples() {
        let c5 = Graph::cycle(5);
        assert!(!c5.triple_witnesses().unwrap().holds);
        let c8 = Graph::cycle(8);
        assert_eq!(c8.triple_witnesses().unwrap_err(), GraphError::DiameterExceedsTwo);
        // K_{3x3}: non-edges inside a part; the third member of the part is the witness
        let k333 = Graph::complete_multipartite(3, 3);
        assert!(k333.triple_witnesses().unwrap().holds);
    }

    #[test]
    fn cover_examples() {
        let c6 = Graph::cycle(6);
        let k3 = Graph::complete(3);
        let fib = [vec![0, 3], vec![1, 4], vec![2, 5]];
        // a double cover as a covering map, but neighborhoods 2K1 vs K2 differ
        assert!(c6.check_covering_map(&k3, &fib).unwrap());
        assert!(!c6.check_cover(&k3, &fib).unwrap());
        let k33 = Graph::complete_multipartite(3, 2);
        let fib2 = [vec![0, 3], vec![1, 4], vec![2, 5]];
        assert!(!k33.check_covering_map(&k3, &fib2).unwrap());
        let k4 = Graph::complete(4);
        assert!(k4
            .check_cover(&k4, &[vec![0], vec![1], vec![2], vec![3]])
            .unwrap());
        let c4 = Graph::cycle(4);
        let k2 = Graph::complete(2);
        assert!(!c4.check_cover(&k2, &[vec![0, 2], vec![1, 3]]).unwrap());
        assert!(matches!(
            c4.check_cover(&k2, &[vec![0, 2]]),
            Err(GraphError::BadPartition(_))
        ));
    }

    #[test]
    fn girth_and_diameter() {
        assert_eq!(Graph::petersen().girth(), Some(5));
        assert_eq!(Graph::petersen().diameter(), Some(2));
        assert_eq!(Graph::cycle(7).girth(), Some(7));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 2)]).girth(), None);
    }
}
