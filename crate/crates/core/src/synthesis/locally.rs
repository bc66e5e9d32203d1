//! Bounded search for all connected locally-Δ graphs. A partial graph has
//! "closed" vertices whose neighborhood is final and isomorphic to Δ. A pair
//! of vertices is decided once one of them is closed or both lie in the
//! neighborhood of a closed vertex. Each step closes one open vertex in all
//! possible ways; isomorphic partial graphs are merged level by level.

use std::collections::BTreeMap;

use serde::Serialize;

use super::SynthesisError;
use crate::bitset::VertexSet;
use crate::canon::{certificate, is_locally, Coloring};
use crate::graph::Graph;

#[derive(Debug, Clone, Serialize)]
pub struct LocallyDeltaResult {
    #[serde(skip)]
    pub graphs: Vec<Graph>,
    pub orders: Vec<usize>,
    pub certificates: Vec<String>,
    pub bound: usize,
    /// No branch was cut by the vertex bound.
    pub complete: bool,
}

impl LocallyDeltaResult {
    /// Fails with `BoundExceeded` unless the search was exhaustive.
    pub fn require_complete(self) -> Result<Self, SynthesisError> {
        if self.complete {
            Ok(self)
        } else {
            Err(SynthesisError::BoundExceeded { bound: self.bound })
        }
    }
}

#[derive(Clone)]
struct Partial {
    adj: Vec<VertexSet>,
    closed: VertexSet,
}

impl Partial {
    fn order(&self) -> usize {
        self.adj.len()
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }

    fn decided(&self, x: usize, y: usize) -> bool {
        self.closed.contains(x)
            || self.closed.contains(y)
            || self.closed.iter().any(|z| self.adjacent(z, x) && self.adjacent(z, y))
    }

    fn graph(&self) -> Graph {
        let n = self.order();
        Graph::from_fn(n, |u, v| self.adjacent(u, v))
    }

    fn certificate(&self) -> [u8; 32] {
        let n = self.order();
        let colors: Vec<u32> = (0..n).map(|v| self.closed.contains(v) as u32).collect();
        certificate(&self.graph(), &Coloring::from_colors(&colors)).digest()
    }
}

/// Image of a Δ-vertex: an existing vertex or the next new one.
#[derive(Clone, Copy, PartialEq)]
enum Slot {
    Old(usize),
    New,
}

struct Closer<'a> {
    delta: &'a Graph,
    order: Vec<usize>,
    state: &'a Partial,
    c: usize,
    bound: usize,
    must: VertexSet,
    out: Vec<Partial>,
    cut: bool,
}

impl Closer<'_> {
    fn rec(&mut self, i: usize, map: &mut Vec<Slot>, used: &mut VertexSet, new_count: usize) {
        let k = self.delta.order();
        let missing = self.must.iter().filter(|&x| !used.contains(x)).count();
        if missing > k - i {
            return;
        }
        if i == k {
            self.finish(map, new_count);
            return;
        }
        let d = self.order[i];
        let n = self.state.order();
        let mut options: Vec<Slot> = (0..n)
            .filter(|&x| {
                x != self.c
                    && !used.contains(x)
                    && (self.state.adjacent(self.c, x) || !self.state.decided(self.c, x))
            })
            .map(Slot::Old)
            .collect();
        options.push(Slot::New);
        for opt in options {
            if opt == Slot::New && n + new_count + 1 > self.bound {
                self.cut = true;
                continue;
            }
            let ok = (0..i).all(|j| {
                let e = self.order[j];
                let want = self.delta.adjacent(d, e);
                match (opt, map[j]) {
                    (Slot::Old(x), Slot::Old(y)) => {
                        if self.state.decided(x, y) {
                            self.state.adjacent(x, y) == want
                        } else {
                            true
                        }
                    }
                    (Slot::Old(x), Slot::New) | (Slot::New, Slot::Old(x)) => !want || !self.state.closed.contains(x),
                    (Slot::New, Slot::New) => true,
                }
            });
            if !ok {
                continue;
            }
            map.push(opt);
            let nc = match opt {
                Slot::Old(x) => {
                    used.insert(x);
                    new_count
                }
                Slot::New => new_count + 1,
            };
            self.rec(i + 1, map, used, nc);
            if let Slot::Old(x) = opt {
                used.remove(x);
            }
            map.pop();
        }
    }

    fn finish(&mut self, map: &[Slot], new_count: usize) {
        let k = self.delta.order();
        let n = self.state.order();
        let total = n + new_count;
        let mut adj: Vec<VertexSet> = self
            .state
            .adj
            .iter()
            .map(|s| VertexSet::from_indices(total, s.iter()))
            .collect();
        adj.resize(total, VertexSet::new(total));
        let mut next_new = n;
        let verts: Vec<usize> = map
            .iter()
            .map(|s| match *s {
                Slot::Old(x) => x,
                Slot::New => {
                    next_new += 1;
                    next_new - 1
                }
            })
            .collect();
        let link = |a: usize, b: usize, adj: &mut Vec<VertexSet>| {
            adj[a].insert(b);
            adj[b].insert(a);
        };
        for i in 0..k {
            link(self.c, verts[i], &mut adj);
            for j in 0..i {
                if self.delta.adjacent(self.order[i], self.order[j]) {
                    link(verts[i], verts[j], &mut adj);
                }
            }
        }
        if adj.iter().any(|s| s.count() > k) {
            return;
        }
        let mut closed = VertexSet::from_indices(total, self.state.closed.iter());
        closed.insert(self.c);
        self.out.push(Partial { adj, closed });
    }
}

/// Δ-vertices in breadth-first order so that adjacency constraints bind early.
fn bfs_order(delta: &Graph) -> Vec<usize> {
    let k = delta.order();
    let mut seen = vec![false; k];
    let mut order = Vec::new();
    for s in 0..k {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = order.len();
        order.push(s);
        while i < order.len() {
            let v = order[i];
            for w in delta.neighbor_iter(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// All connected locally-Δ graphs on at most `max_vertices` vertices, up to
/// isomorphism, sorted by (order, certificate).
pub fn locally_delta_search(delta: &Graph, max_vertices: usize) -> Result<LocallyDeltaResult, SynthesisError> {
    let k = delta.order();
    if k == 0 {
        return Err(SynthesisError::PreconditionViolated("Δ must be nonempty".into()));
    }
    let order = bfs_order(delta);
    // start: a vertex with nothing around it yet
    let start = Partial {
        adj: vec![VertexSet::new(1)],
        closed: VertexSet::new(1),
    };
    let mut level: BTreeMap<[u8; 32], Partial> = BTreeMap::from([(start.certificate(), start)]);
    let mut found: BTreeMap<(usize, [u8; 32]), Graph> = BTreeMap::new();
    let mut complete = true;
    while !level.is_empty() {
        let mut next: BTreeMap<[u8; 32], Partial> = BTreeMap::new();
        for state in level.values() {
            let n = state.order();
            let open: Vec<usize> = (0..n).filter(|&v| !state.closed.contains(v)).collect();
            let Some(&c) = open.iter().max_by_key(|&&v| (state.adj[v].count(), std::cmp::Reverse(v))) else {
                let g = state.graph();
                if g.is_connected() && is_locally(&g, delta) {
                    let cert = certificate(&g, &Coloring::trivial(n)).digest();
                    found.insert((n, cert), g);
                }
                continue;
            };
            let mut closer = Closer {
                delta,
                order: order.clone(),
                state,
                c,
                bound: max_vertices,
                must: state.adj[c].clone(),
                out: Vec::new(),
                cut: false,
            };
            closer.rec(0, &mut Vec::new(), &mut VertexSet::new(n), 0);
            complete &= !closer.cut;
            for p in closer.out {
                next.entry(p.certificate()).or_insert(p);
            }
        }
        level = next;
    }
    let (keys, graphs): (Vec<_>, Vec<_>) = found.into_iter().unzip();
    Ok(LocallyDeltaResult {
        orders: graphs.iter().map(|g: &Graph| g.order()).collect(),
        certificates: keys.iter().map(|(_, d)| hex::encode(d)).collect(),
        graphs,
        bound: max_vertices,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_gives_k4() {
        let r = locally_delta_search(&Graph::complete(3), 10).unwrap();
        assert!(r.complete);
        assert_eq!(r.orders, vec![4]);
    }

    #[test]
    fn pentagon_gives_icosahedron() {
        let r = locally_delta_search(&Graph::cycle(5), 16).unwrap();
        assert!(r.complete);
        assert_eq!(r.orders, vec![12]);
        let g = &r.graphs[0];
        assert_eq!(g.edge_count(), 30);
        assert!(is_locally(g, &Graph::cycle(5)));
    }

    #[test]
    fn small_bound_is_reported() {
        let r = locally_delta_search(&Graph::cycle(5), 8).unwrap();
        assert!(!r.complete);
        assert!(matches!(r.require_complete(), Err(SynthesisError::BoundExceeded { bound: 8 })));
    }
}
