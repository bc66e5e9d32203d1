//! Canonical labeling of vertex-colored graphs by individualization and
//! refinement, with automorphism generators and orbit pruning.
//!
//! Search nodes are ordered partitions refined to equitable ones. Each
//! refinement emits a hash trace; leaves are ranked by (trace sequence,
//! relabeled adjacency) and the largest one defines the canonical form.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::bitset::{words_for, VertexSet};
use crate::graph::Graph;

/// Format tag written at the head of every certificate.
pub const CERT_FORMAT: &[u8; 4] = b"GFC1";

/// Ordered partition of the vertices into color classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    pub fn trivial(n: usize) -> Self {
        Coloring {
            classes: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    /// Classes ordered by color value.
    pub fn from_colors(colors: &[u32]) -> Self {
        let mut map: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            map.entry(c).or_default().push(v);
        }
        Coloring {
            classes: map.into_values().collect(),
        }
    }

    /// Two classes: vertices outside `subset` first, then members.
    pub fn marking(n: usize, subset: &VertexSet) -> Self {
        let colors: Vec<u32> = (0..n).map(|v| subset.contains(v) as u32).collect();
        let mut c = Self::from_colors(&colors);
        if subset.is_empty() {
            c.classes.push(vec![]);
        } else if subset.count() == n {
            c.classes.insert(0, vec![]);
        }
        c
    }

    /// Explicit classes; empty classes are kept so that sizes stay aligned.
    pub fn from_classes(n: usize, classes: Vec<Vec<usize>>) -> Result<Self, String> {
        let mut seen = vec![false; n];
        for cl in &classes {
            for &v in cl {
                if v >= n || seen[v] {
                    return Err(format!("vertex {v} repeated or out of range"));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err("coloring misses some vertices".into());
        }
        Ok(Coloring { classes })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn color_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for (i, cl) in self.classes.iter().enumerate() {
            for &v in cl {
                out[v] = i;
            }
        }
        out
    }
}

/// Bytes determined by the isomorphism class of a colored graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn digest(&self) -> [u8; 32] {
        Sha256::digest(&self.0).into()
    }

    /// `"gfc1:" + sha256 hex`, the form used in reports.
    pub fn hex_digest(&self) -> String {
        format!("gfc1:{}", hex::encode(self.digest()))
    }
}

impl std::fmt::Debug for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Certificate({})", self.hex_digest())
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub certificate: Certificate,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Generators of the color-preserving automorphism group, as images.
    pub generators: Vec<Vec<usize>>,
    /// Orbit index per vertex (the smallest vertex of its orbit).
    pub orbits: Vec<usize>,
    pub group_order: u128,
    pub nodes: u64,
}

impl CanonicalForm {
    /// The canonically relabeled graph.
    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        g.permuted(&self.labeling)
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone)]
struct Partition {
    elems: Vec<u32>,
    pos: Vec<u32>,
    /// start of the cell containing each position
    cell_of: Vec<u32>,
    /// for a cell start, its end (exclusive)
    cell_end: Vec<u32>,
    cells: usize,
}

impl Partition {
    fn new(n: usize, coloring: &Coloring) -> (Self, Vec<u32>) {
        let mut elems = Vec::with_capacity(n);
        let mut cell_of = vec![0u32; n];
        let mut cell_end = vec![0u32; n];
        let mut starts = Vec::new();
        for cl in coloring.classes() {
            if cl.is_empty() {
                continue;
            }
            let s = elems.len();
            let mut sorted = cl.clone();
            sorted.sort_unstable();
            elems.extend(sorted.iter().map(|&v| v as u32));
            for p in s..elems.len() {
                cell_of[p] = s as u32;
            }
            cell_end[s] = elems.len() as u32;
            starts.push(s as u32);
        }
        let mut pos = vec![0u32; n];
        for (p, &v) in elems.iter().enumerate() {
            pos[v as usize] = p as u32;
        }
        let cells = starts.len();
        (
            Partition {
                elems,
                pos,
                cell_of,
                cell_end,
                cells,
            },
            starts,
        )
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    /// First largest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.elems.len() {
            let e = self.cell_end[s] as usize;
            let size = e - s;
            if size > 1 && best.is_none_or(|(_, b)| size > b) {
                best = Some((s, size));
            }
            s = e;
        }
        best.map(|(s, _)| s)
    }

    /// Moves `v` to the front of its cell as a singleton; returns its start.
    fn individualize(&mut self, v: usize) -> u32 {
        let p = self.pos[v] as usize;
        let s = self.cell_of[p] as usize;
        let e = self.cell_end[s] as usize;
        let other = self.elems[s];
        self.elems.swap(s, p);
        self.pos[v] = s as u32;
        self.pos[other as usize] = p as u32;
        self.cell_end[s] = s as u32 + 1;
        self.cell_end[s + 1] = e as u32;
        for q in s + 1..e {
            self.cell_of[q] = s as u32 + 1;
        }
        self.cells += 1;
        s as u32
    }

    /// Refines to the coarsest equitable partition finer than the current
    /// one, starting from the given splitter cells. Returns a trace hash.
    fn refine(&mut self, g: &Graph, splitters: &[u32], scratch: &mut Scratch) -> u64 {
        let mut h = mix(0, self.cells as u64);
        let mut queue: VecDeque<u32> = splitters.iter().copied().collect();
        for &s in splitters {
            scratch.in_queue[s as usize] = true;
        }
        while let Some(w) = queue.pop_front() {
            scratch.in_queue[w as usize] = false;
            if self.is_discrete() {
                break;
            }
            let wend = self.cell_end[w as usize];
            h = mix(h, w as u64);
            scratch.touched.clear();
            for p in w..wend {
                let u = self.elems[p as usize] as usize;
                for v in g.neighbor_iter(u) {
                    if scratch.count[v] == 0 {
                        scratch.touched.push(v as u32);
                    }
                    scratch.count[v] += 1;
                }
            }
            scratch.cells.clear();
            for &v in &scratch.touched {
                let c = self.cell_of[self.pos[v as usize] as usize];
                if !scratch.cell_mark[c as usize] {
                    scratch.cell_mark[c as usize] = true;
                    scratch.cells.push(c);
                }
            }
            scratch.cells.sort_unstable();
            let cells = std::mem::take(&mut scratch.cells);
            for &c in &cells {
                scratch.cell_mark[c as usize] = false;
                let (cs, ce) = (c as usize, self.cell_end[c as usize] as usize);
                if ce - cs == 1 {
                    h = mix(h, (c as u64) << 32 | scratch.count[self.elems[cs] as usize] as u64);
                    continue;
                }
                let count = &scratch.count;
                self.elems[cs..ce].sort_unstable_by_key(|&v| (count[v as usize], v));
                let first = count[self.elems[cs] as usize];
                let last = count[self.elems[ce - 1] as usize];
                if first == last {
                    h = mix(h, (c as u64) << 32 | first as u64);
                    continue;
                }
                // split into fragments by count
                let was_queued = scratch.in_queue[cs];
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut a = cs;
                while a < ce {
                    let k = count[self.elems[a] as usize];
                    let mut b = a + 1;
                    while b < ce && count[self.elems[b] as usize] == k {
                        b += 1;
                    }
                    h = mix(h, (k as u64) << 32 | (b - a) as u64);
                    frags.push((a, b));
                    a = b;
                }
                for &(a, b) in &frags {
                    self.cell_end[a] = b as u32;
                    for q in a..b {
                        self.cell_of[q] = a as u32;
                        self.pos[self.elems[q] as usize] = q as u32;
                    }
                }
                self.cells += frags.len() - 1;
                let skip = if was_queued {
                    usize::MAX
                } else {
                    let mut big = 0;
                    for (i, &(a, b)) in frags.iter().enumerate() {
                        if b - a > frags[big].1 - frags[big].0 {
                            big = i;
                        }
                    }
                    big
                };
                for (i, &(a, _)) in frags.iter().enumerate() {
                    if i != skip && !scratch.in_queue[a] {
                        scratch.in_queue[a] = true;
                        queue.push_back(a as u32);
                    }
                }
            }
            scratch.cells = cells;
            for &v in &scratch.touched {
                scratch.count[v as usize] = 0;
            }
        }
        for s in queue {
            scratch.in_queue[s as usize] = false;
        }
        debug_assert!(scratch.in_queue.iter().all(|&b| !b));
        mix(h, self.cells as u64)
    }
}

struct Scratch {
    count: Vec<u32>,
    touched: Vec<u32>,
    cells: Vec<u32>,
    cell_mark: Vec<bool>,
    in_queue: Vec<bool>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            count: vec![0; n],
            touched: Vec::new(),
            cells: Vec::new(),
            cell_mark: vec![false; n],
            in_queue: vec![false; n],
        }
    }
}

struct Leaf {
    traces: Vec<u64>,
    path: Vec<usize>,
    elems: Vec<u32>,
    adj: Vec<u64>,
}

/// Union-find whose roots are orbit minima.
struct Orbits {
    parent: Vec<u32>,
    applied: usize,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n as u32).collect(),
            applied: 0,
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut y = x;
        while self.parent[y] as usize != r {
            let next = self.parent[y] as usize;
            self.parent[y] = r as u32;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }

    /// Folds in generators found since the last call that fix `path`.
    fn absorb(&mut self, gens: &[Vec<usize>], path: &[usize]) {
        for gen in &gens[self.applied..] {
            if path.iter().all(|&p| gen[p] == p) {
                for (v, &w) in gen.iter().enumerate() {
                    self.union(v, w);
                }
            }
        }
        self.applied = gens.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    words: usize,
    scratch: Scratch,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    /// orbit length of the first-path child at each first-path level
    level_orbits: Vec<u128>,
    nodes: u64,
}

enum Flow {
    Continue,
    JumpTo(usize),
}

impl<'a> Search<'a> {
    fn leaf_adj(&self, part: &Partition) -> Vec<u64> {
        let mut adj = vec![0u64; self.n * self.words];
        for (i, &u) in part.elems.iter().enumerate() {
            let row = &mut adj[i * self.words..(i + 1) * self.words];
            for v in self.g.neighbor_iter(u as usize) {
                let j = part.pos[v] as usize;
                row[j >> 6] |= 1 << (j & 63);
            }
        }
        adj
    }

    fn add_generator(&mut self, from: &[u32], to: &[u32]) {
        let mut gen = vec![0usize; self.n];
        for (a, b) in from.iter().zip(to) {
            gen[*a as usize] = *b as usize;
        }
        if gen.iter().enumerate().any(|(i, &x)| i != x) {
            self.gens.push(gen);
        }
    }

    fn common_prefix(a: &[usize], b: &[usize]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    #[allow(clippy::too_many_arguments)]
    fn explore(
        &mut self,
        part: Partition,
        path: &mut Vec<usize>,
        traces: &mut Vec<u64>,
        on_first: bool,
        eq_first: bool,
        cmp_best: Ordering,
    ) -> Flow {
        self.nodes += 1;
        let level = path.len();
        if part.is_discrete() {
            return self.at_leaf(part, path, traces, eq_first, cmp_best);
        }
        let target = part.target_cell().expect("non-discrete partition has a target");
        let end = part.cell_end[target] as usize;
        let mut cell: Vec<usize> = part.elems[target..end].iter().map(|&v| v as usize).collect();
        cell.sort_unstable();
        let mut orbits = Orbits::new(self.n);
        for (ci, &v) in cell.iter().enumerate() {
            orbits.absorb(&self.gens, path);
            if orbits.find(v) != v {
                continue;
            }
            let mut child = part.clone();
            let s = child.individualize(v);
            let t = child.refine(self.g, &[s], &mut self.scratch);
            let t = mix(t, s as u64);
            let child_first = on_first && ci == 0 && self.first.is_none();
            let next_eq_first = child_first
                || (eq_first
                    && self
                        .first
                        .as_ref()
                        .is_some_and(|f| f.traces.get(level) == Some(&t)));
            let next_cmp = match cmp_best {
                Ordering::Equal => match &self.best {
                    None => Ordering::Equal,
                    Some(b) => match b.traces.get(level) {
                        None => Ordering::Greater,
                        Some(bt) => t.cmp(bt),
                    },
                },
                other => other,
            };
            if !next_eq_first && next_cmp == Ordering::Less {
                continue;
            }
            path.push(v);
            traces.push(t);
            let flow = self.explore(
                child,
                path,
                traces,
                child_first,
                next_eq_first,
                next_cmp,
            );
            path.pop();
            traces.pop();
            if let Flow::JumpTo(l) = flow {
                if l < level {
                    return flow;
                }
            }
        }
        if on_first {
            orbits.absorb(&self.gens, path);
            let root = orbits.find(cell[0]);
            let size = cell.iter().filter(|&&v| orbits.find(v) == root).count();
            if self.level_orbits.len() <= level {
                self.level_orbits.resize(level + 1, 1);
            }
            self.level_orbits[level] = size as u128;
        }
        Flow::Continue
    }

    fn at_leaf(
        &mut self,
        part: Partition,
        path: &[usize],
        traces: &[u64],
        eq_first: bool,
        cmp_best: Ordering,
    ) -> Flow {
        let adj = self.leaf_adj(&part);
        let leaf = Leaf {
            traces: traces.to_vec(),
            path: path.to_vec(),
            elems: part.elems,
            adj,
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                traces: leaf.traces.clone(),
                path: leaf.path.clone(),
                elems: leaf.elems.clone(),
                adj: leaf.adj.clone(),
            });
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if eq_first && first.traces.len() == leaf.traces.len() && first.adj == leaf.adj {
            let (from, jump) = (first.elems.clone(), Self::common_prefix(&first.path, &leaf.path));
            self.add_generator(&from, &leaf.elems);
            return Flow::JumpTo(jump);
        }
        let best = self.best.as_ref().expect("best leaf set with first");
        let mut ord = cmp_best;
        if ord == Ordering::Equal && best.traces.len() > leaf.traces.len() {
            ord = Ordering::Less;
        }
        let ord = ord.then_with(|| leaf.adj.cmp(&best.adj));
        match ord {
            Ordering::Equal => {
                let (from, jump) = (best.elems.clone(), Self::common_prefix(&best.path, &leaf.path));
                self.add_generator(&from, &leaf.elems);
                Flow::JumpTo(jump)
            }
            Ordering::Greater => {
                self.best = Some(leaf);
                Flow::Continue
            }
            Ordering::Less => Flow::Continue,
        }
    }
}

/// Canonical form of `g` under color-preserving relabelings.
pub fn canonical_form(g: &Graph, coloring: &Coloring) -> CanonicalForm {
    let n = g.order();
    let (mut part, starts) = Partition::new(n, coloring);
    let mut search = Search {
        g,
        n,
        words: words_for(n),
        scratch: Scratch::new(n),
        first: None,
        best: None,
        gens: Vec::new(),
        level_orbits: Vec::new(),
        nodes: 0,
    };
    // the root trace is shared by every leaf, so it is not recorded
    part.refine(g, &starts, &mut search.scratch);
    let mut path = Vec::new();
    let mut traces = Vec::new();
    if n > 0 {
        search.explore(part, &mut path, &mut traces, true, true, Ordering::Equal);
    }

    let mut bytes = Vec::new();
    bytes.extend_from_slice(CERT_FORMAT);
    bytes.extend_from_slice(&(n as u64).to_le_bytes());
    let sizes: Vec<usize> = coloring.classes().iter().map(|c| c.len()).collect();
    bytes.extend_from_slice(&(sizes.len() as u64).to_le_bytes());
    for s in &sizes {
        bytes.extend_from_slice(&(*s as u64).to_le_bytes());
    }
    let mut labeling = vec![0usize; n];
    if let Some(best) = &search.best {
        for w in &best.adj {
            bytes.extend_from_slice(&w.to_le_bytes());
        }
        for (i, &v) in best.elems.iter().enumerate() {
            labeling[v as usize] = i;
        }
    }
    let mut orbits = Orbits::new(n);
    orbits.absorb(&search.gens, &[]);
    let orbit_ids = (0..n).map(|v| orbits.find(v)).collect();
    CanonicalForm {
        certificate: Certificate(bytes),
        labeling,
        generators: search.gens,
        orbits: orbit_ids,
        group_order: search.level_orbits.iter().product(),
        nodes: search.nodes,
    }
}

pub fn certificate(g: &Graph, coloring: &Coloring) -> Certificate {
    canonical_form(g, coloring).certificate
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && certificate(g, &Coloring::trivial(g.order()))
            == certificate(h, &Coloring::trivial(h.order()))
}

/// Automorphism group order of an uncolored graph.
pub fn automorphism_group_order(g: &Graph) -> u128 {
    canonical_form(g, &Coloring::trivial(g.order())).group_order
}

/// Whether every open neighborhood of `g` is isomorphic to `delta`.
/// Neighborhoods are compared for one vertex per automorphism orbit.
pub fn is_locally(g: &Graph, delta: &Graph) -> bool {
    locally_failures(g, delta).is_empty()
}

/// Orbit representatives whose neighborhood is not isomorphic to `delta`.
pub fn locally_failures(g: &Graph, delta: &Graph) -> Vec<usize> {
    let n = g.order();
    let target = certificate(delta, &Coloring::trivial(delta.order()));
    let cf = canonical_form(g, &Coloring::trivial(n));
    let reps: Vec<usize> = (0..n).filter(|&v| cf.orbits[v] == v).collect();
    reps.into_par_iter()
        .filter(|&v| {
            let nb = g.neighbors(v);
            nb.count() != delta.order()
                || certificate(&g.induced(&nb), &Coloring::trivial(delta.order())) != target
        })
        .collect()
}

/// Certificate of `ambient` with `subset` marked.
pub fn subset_certificate(ambient: &Graph, subset: &VertexSet) -> Certificate {
    certificate(ambient, &Coloring::marking(ambient.order(), subset))
}

/// One isomorphism class of marked subsets.
#[derive(Debug, Clone)]
pub struct SubsetClass {
    pub representative: VertexSet,
    pub multiplicity: usize,
    pub digest: [u8; 32],
}

/// Groups subsets of `ambient` by the certificate of the marked ambient
/// graph. Classes come out sorted by (size, digest); each representative is
/// the lexicographically least member, so the output does not depend on
/// input order.
pub fn dedupe_subsets(ambient: &Graph, subsets: &[VertexSet]) -> Vec<SubsetClass> {
    let digests: Vec<[u8; 32]> = subsets
        .par_iter()
        .map(|s| subset_certificate(ambient, s).digest())
        .collect();
    let mut classes: BTreeMap<(usize, [u8; 32]), (Vec<usize>, usize)> = BTreeMap::new();
    for (s, d) in subsets.iter().zip(digests) {
        let key = (s.count(), d);
        let members = s.to_vec();
        let entry = classes.entry(key).or_insert_with(|| (members.clone(), 0));
        if members < entry.0 {
            entry.0 = members;
        }
        entry.1 += 1;
    }
    classes
        .into_iter()
        .map(|((_, digest), (rep, multiplicity))| SubsetClass {
            representative: VertexSet::from_indices(ambient.order(), rep),
            multiplicity,
            digest,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_aut_order(g: &Graph) -> u128 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        permute_all(&mut perm, 0, &mut |p| {
            if g.edges().iter().all(|&(u, v)| g.adjacent(p[u], p[v])) {
                count += 1;
            }
        });
        count
    }

    fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn petersen_group() {
        let cf = canonical_form(&Graph::petersen(), &Coloring::trivial(10));
        assert_eq!(cf.group_order, 120);
        assert_eq!(brute_aut_order(&Graph::petersen()), 120);
        assert!(cf.orbits.iter().all(|&o| o == 0));
    }

    #[test]
    fn discrete_coloring() {
        let g = Graph::empty(3);
        let c = Coloring::from_colors(&[0, 1, 2]);
        let cf = canonical_form(&g, &c);
        assert_eq!(cf.group_order, 1);
        assert!(cf.generators.is_empty());
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [Graph::petersen(), Graph::rook(3), Graph::cycle(9), Graph::complete(5)] {
            let cf = canonical_form(&g, &Coloring::trivial(g.order()));
            for gen in &cf.generators {
                assert!(g.edges().iter().all(|&(u, v)| g.adjacent(gen[u], gen[v])));
            }
            assert_eq!(cf.group_order, brute_aut_order(&g));
        }
    }

    #[test]
    fn relabeling_invariance() {
        let g = Graph::rook(3);
        let perm = vec![4, 7, 1, 0, 8, 2, 6, 3, 5];
        let h = g.permuted(&perm);
        assert!(are_isomorphic(&g, &h));
        assert!(!are_isomorphic(&Graph::cycle(6), &Graph::cycle(3).disjoint_union(&Graph::cycle(3))));
        let cf = canonical_form(&g, &Coloring::trivial(9));
        assert_eq!(cf.canonical_graph(&g), canonical_form(&h, &Coloring::trivial(9)).canonical_graph(&h));
    }

    #[test]
    fn dedupe_examples() {
        let g = Graph::empty(4);
        let subs = vec![VertexSet::from_indices(4, [2]), VertexSet::from_indices(4, [1])];
        let classes = dedupe_subsets(&g, &subs);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].multiplicity, 2);
        assert_eq!(classes[0].representative.to_vec(), vec![1]);
    }
}
