//! Hyperovals of point-line geometries: sets meeting every line in 0 or 2
//! points. Enumeration is a depth-first search over point states with
//! per-line occupancy counters and unit propagation on half-open lines.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, certificate, Coloring};
use crate::fields::{projective_points, Elem};
use crate::graph::Graph;
use crate::spaces::{polar_space, Geometry, PolarKind, SpaceError};

#[derive(Debug, Error)]
pub enum HyperovalError {
    #[error("search infeasible within limits: {reason} after {nodes} nodes")]
    Infeasible { reason: String, nodes: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("computed constants {computed:?} differ from expected {expected:?}")]
    ConstantsMismatch {
        computed: (usize, usize, usize),
        expected: (usize, usize, usize),
    },
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// Resource limits; exceeding one aborts the search with an error.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub node_cap: u64,
    pub time_cap: Option<Duration>,
    /// Stop extending sets larger than this.
    pub max_size: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_cap: 2_000_000_000,
            time_cap: None,
            max_size: None,
        }
    }
}

/// Shared counters so that parallel workers honor one budget.
struct Budget {
    opts: SearchOptions,
    start: Instant,
    nodes: AtomicU64,
    aborted: AtomicBool,
}

impl Budget {
    fn new(opts: SearchOptions) -> Self {
        Budget {
            opts,
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
        }
    }

    fn charge(&self, local: u64) -> Result<(), HyperovalError> {
        let total = self.nodes.fetch_add(local, AtomicOrdering::Relaxed) + local;
        let fail = |reason: String| {
            self.aborted.store(true, AtomicOrdering::Relaxed);
            Err(HyperovalError::Infeasible { reason, nodes: total })
        };
        if self.aborted.load(AtomicOrdering::Relaxed) {
            return fail("another worker hit a limit".into());
        }
        if total > self.opts.node_cap {
            return fail(format!("node cap {}", self.opts.node_cap));
        }
        if let Some(t) = self.opts.time_cap {
            if self.start.elapsed() > t {
                return fail(format!("time cap {}s", t.as_secs()));
            }
        }
        Ok(())
    }
}

const FREE: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Engine<'g> {
    geo: &'g Geometry,
    state: Vec<u8>,
    occ: Vec<u8>,
    free: Vec<u16>,
    half_open: Vec<u32>,
    half_pos: Vec<u32>,
    trail: Vec<u32>,
    members: Vec<u32>,
    queue: Vec<(u32, u8)>,
    cand_pool: Vec<Vec<usize>>,
    depth: usize,
    local_nodes: u64,
    max_size: Option<usize>,
}

impl<'g> Engine<'g> {
    fn new(geo: &'g Geometry, max_size: Option<usize>) -> Self {
        let nl = geo.lines().len();
        Engine {
            geo,
            state: vec![FREE; geo.point_count()],
            occ: vec![0; nl],
            free: geo.lines().iter().map(|l| l.len() as u16).collect(),
            half_open: Vec::new(),
            half_pos: vec![u32::MAX; nl],
            trail: Vec::new(),
            members: Vec::new(),
            queue: Vec::new(),
            cand_pool: Vec::new(),
            depth: 0,
            local_nodes: 0,
            max_size,
        }
    }

    fn open_line(&mut self, l: usize) {
        self.half_pos[l] = self.half_open.len() as u32;
        self.half_open.push(l as u32);
    }

    fn close_line(&mut self, l: usize) {
        let i = self.half_pos[l] as usize;
        let last = *self.half_open.last().unwrap();
        self.half_open.swap_remove(i);
        if last as usize != l {
            self.half_pos[last as usize] = i as u32;
        }
        self.half_pos[l] = u32::MAX;
    }

    fn first_free(&self, l: usize) -> usize {
        let geo = self.geo;
        geo.lines()[l].iter().copied().find(|&x| self.state[x] == FREE).unwrap()
    }

    /// Applies queued assignments with propagation; false on contradiction.
    fn propagate(&mut self) -> bool {
        let geo = self.geo;
        while let Some((p, target)) = self.queue.pop() {
            let p = p as usize;
            match self.state[p] {
                s if s == target => continue,
                FREE => {}
                _ => {
                    self.queue.clear();
                    return false;
                }
            }
            self.state[p] = target;
            self.trail.push(p as u32);
            let mut ok = true;
            if target == IN {
                self.members.push(p as u32);
                for &l in geo.lines_through(p) {
                    self.free[l] -= 1;
                    self.occ[l] += 1;
                    match self.occ[l] {
                        1 => {
                            self.open_line(l);
                            match self.free[l] {
                                0 => ok = false,
                                1 => {
                                    let x = self.first_free(l);
                                    self.queue.push((x as u32, IN));
                                }
                                _ => {}
                            }
                        }
                        2 => {
                            self.close_line(l);
                            for &x in &geo.lines()[l] {
                                if self.state[x] == FREE {
                                    self.queue.push((x as u32, OUT));
                                }
                            }
                        }
                        _ => ok = false,
                    }
                }
            } else {
                for &l in geo.lines_through(p) {
                    self.free[l] -= 1;
                    if self.occ[l] == 1 {
                        match self.free[l] {
                            0 => ok = false,
                            1 => {
                                let x = self.first_free(l);
                                self.queue.push((x as u32, IN));
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !ok {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        let geo = self.geo;
        while self.trail.len() > mark {
            let p = self.trail.pop().unwrap() as usize;
            let s = self.state[p];
            self.state[p] = FREE;
            if s == IN {
                self.members.pop();
                for &l in geo.lines_through(p) {
                    self.free[l] += 1;
                    self.occ[l] -= 1;
                    match self.occ[l] {
                        0 => self.close_line(l),
                        1 => self.open_line(l),
                        _ => {}
                    }
                }
            } else {
                for &l in geo.lines_through(p) {
                    self.free[l] += 1;
                }
            }
        }
    }

    fn assign(&mut self, items: impl IntoIterator<Item = (usize, u8)>) -> bool {
        for (p, s) in items {
            self.queue.push((p as u32, s));
        }
        self.propagate()
    }

    fn search(&mut self, budget: &Budget, out: &mut Vec<Vec<usize>>) -> Result<(), HyperovalError> {
        self.local_nodes += 1;
        if self.local_nodes >= 4096 {
            budget.charge(self.local_nodes)?;
            self.local_nodes = 0;
        }
        if self.half_open.is_empty() {
            let mut set: Vec<usize> = self.members.iter().map(|&p| p as usize).collect();
            set.sort_unstable();
            out.push(set);
            return Ok(());
        }
        if self.max_size.is_some_and(|m| self.members.len() >= m) {
            return Ok(());
        }
        let line = *self
            .half_open
            .iter()
            .min_by_key(|&&l| (self.free[l as usize], l))
            .unwrap() as usize;
        if self.cand_pool.len() <= self.depth {
            self.cand_pool.push(Vec::new());
        }
        let mut cands = std::mem::take(&mut self.cand_pool[self.depth]);
        cands.clear();
        cands.extend(self.geo.lines()[line].iter().copied().filter(|&x| self.state[x] == FREE));
        let mark = self.trail.len();
        self.depth += 1;
        let mut result = Ok(());
        for i in 0..cands.len() {
            let items = cands[..i].iter().map(|&x| (x, OUT)).chain([(cands[i], IN)]);
            if self.assign(items) {
                result = self.search(budget, out);
            }
            self.undo(mark);
            if result.is_err() {
                break;
            }
        }
        self.depth -= 1;
        self.cand_pool[self.depth] = cands;
        result
    }
}

/// Connected hyperovals containing all of `seed` and avoiding `excluded`.
/// Every result is connected through `seed` in the collinearity graph.
pub fn extend_seed(
    geo: &Geometry,
    seed: &[usize],
    excluded: &VertexSet,
    opts: &SearchOptions,
) -> Result<Vec<Vec<usize>>, HyperovalError> {
    let budget = Budget::new(*opts);
    extend_with_budget(geo, seed, excluded, &budget)
}

fn extend_with_budget(
    geo: &Geometry,
    seed: &[usize],
    excluded: &VertexSet,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>, HyperovalError> {
    if seed.is_empty() {
        return Err(HyperovalError::PreconditionViolated("empty seed".into()));
    }
    let mut e = Engine::new(geo, budget.opts.max_size);
    let mut out = Vec::new();
    let items = excluded
        .iter()
        .map(|p| (p, OUT))
        .chain(seed.iter().map(|&p| (p, IN)));
    if e.assign(items) {
        e.search(budget, &mut out)?;
    }
    budget.charge(e.local_nodes)?;
    out.sort();
    Ok(out)
}

/// Every connected hyperoval, found once from its smallest point. Anchors run
/// in parallel; output is sorted.
pub fn all_connected_hyperovals(geo: &Geometry, opts: &SearchOptions) -> Result<Vec<Vec<usize>>, HyperovalError> {
    let budget = Budget::new(*opts);
    let n = geo.point_count();
    let parts: Vec<Result<Vec<Vec<usize>>, HyperovalError>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let excluded = VertexSet::from_indices(n, 0..a);
            extend_with_budget(geo, &[a], &excluded, &budget)
        })
        .collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    out.sort();
    Ok(out)
}

/// Disjoint unions of two or more pairwise non-collinear connected
/// hyperovals, i.e. the disconnected hyperovals.
pub fn assemble_disconnected(geo: &Geometry, connected: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = geo.point_count();
    let col = geo.collinearity_graph();
    let closed: Vec<VertexSet> = connected
        .iter()
        .map(|h| {
            let mut s = VertexSet::from_indices(n, h.iter().copied());
            for &p in h {
                s.union_with(&col.neighbors(p));
            }
            s
        })
        .collect();
    let sets: Vec<VertexSet> = connected
        .iter()
        .map(|h| VertexSet::from_indices(n, h.iter().copied()))
        .collect();
    let m = connected.len();
    let compatible = |i: usize, j: usize| closed[i].intersection_count(&sets[j]) == 0;
    let mut out = Vec::new();
    // cliques of size >= 2 in the compatibility graph
    fn grow(
        chosen: &mut Vec<usize>,
        start: usize,
        m: usize,
        compatible: &dyn Fn(usize, usize) -> bool,
        sets: &[VertexSet],
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() >= 2 {
            let mut u = sets[chosen[0]].clone();
            for &c in &chosen[1..] {
                u.union_with(&sets[c]);
            }
            out.push(u.to_vec());
        }
        for j in start..m {
            if chosen.iter().all(|&i| compatible(i, j)) {
                chosen.push(j);
                grow(chosen, j + 1, m, compatible, sets, out);
                chosen.pop();
            }
        }
    }
    let mut chosen = Vec::new();
    grow(&mut chosen, 0, m, &compatible, &sets, &mut out);
    out.sort();
    out
}

/// Every line meets `set` in 0 or 2 points.
pub fn is_hyperoval(geo: &Geometry, set: &[usize]) -> bool {
    let s = VertexSet::from_indices(geo.point_count(), set.iter().copied());
    !set.is_empty()
        && geo.lines().iter().all(|l| {
            let k = l.iter().filter(|&&p| s.contains(p)).count();
            k == 0 || k == 2
        })
}

/// Orbit of a point set under permutations given as images.
pub fn set_orbit(gens: &[Vec<usize>], set: &[usize]) -> Vec<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = vec![set.to_vec()];
    seen.insert(set.to_vec());
    while let Some(s) = queue.pop() {
        for g in gens {
            let mut img: Vec<usize> = s.iter().map(|&p| g[p]).collect();
            img.sort_unstable();
            if seen.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort();
    out
}

/// Representatives of the orbits of `sets` under the group generated by
/// `gens` (the family must be invariant). Returns (representative, orbit size)
/// with the smallest member as representative.
pub fn orbit_representatives(gens: &[Vec<usize>], sets: &[Vec<usize>]) -> Vec<(Vec<usize>, usize)> {
    let index: HashMap<&Vec<usize>, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut seen = vec![false; sets.len()];
    let mut out = Vec::new();
    for i in 0..sets.len() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        let mut stack = vec![i];
        let mut members = vec![i];
        while let Some(x) = stack.pop() {
            for g in gens {
                let mut img: Vec<usize> = sets[x].iter().map(|&p| g[p]).collect();
                img.sort_unstable();
                let j = *index
                    .get(&img)
                    .expect("set family is not invariant under the generators");
                if !seen[j] {
                    seen[j] = true;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        let rep = members.iter().map(|&j| &sets[j]).min().unwrap().clone();
        out.push((rep, members.len()));
    }
    out.sort();
    out
}

/// One isomorphism type of hyperovals with its statistics.
#[derive(Debug, Clone, Serialize)]
pub struct TypeReport {
    pub size: usize,
    pub certificate: String,
    pub representative: Vec<usize>,
    /// Number of hyperovals of this type in the host.
    pub count: usize,
    /// `|x^⊥ ∩ Φ|` for points `x ∉ Φ` → number of such points.
    pub outside_profile: BTreeMap<usize, usize>,
    pub connected: bool,
    /// Order of the stabilizer of Φ in the automorphism group of the
    /// collinearity graph.
    pub stabilizer_order: u128,
}

/// Outside-point profile of `set`.
pub fn outside_profile(col: &Graph, set: &[usize]) -> BTreeMap<usize, usize> {
    let n = col.order();
    let s = VertexSet::from_indices(n, set.iter().copied());
    let mut prof = BTreeMap::new();
    for x in 0..n {
        if !s.contains(x) {
            *prof.entry(col.neighbors(x).intersection_count(&s)).or_insert(0) += 1;
        }
    }
    prof
}

/// Groups a census into types by colored certificate. Types come sorted by
/// (size, certificate).
pub fn classify_types(geo: &Geometry, census: &[Vec<usize>]) -> Vec<TypeReport> {
    let col = geo.collinearity_graph();
    let n = geo.point_count();
    let sets: Vec<VertexSet> = census
        .iter()
        .map(|h| VertexSet::from_indices(n, h.iter().copied()))
        .collect();
    let classes = crate::canon::dedupe_subsets(&col, &sets);
    classes
        .into_par_iter()
        .map(|c| {
            let rep = c.representative.to_vec();
            let cf = canonical_form(&col, &Coloring::marking(n, &c.representative));
            TypeReport {
                size: rep.len(),
                certificate: cf.certificate.hex_digest(),
                count: c.multiplicity,
                outside_profile: outside_profile(&col, &rep),
                connected: col.induced(&c.representative).is_connected(),
                stabilizer_order: cf.group_order,
                representative: rep,
            }
        })
        .collect()
}

/// Histogram of `|Φ ∩ Φ'|` over `others`, split by the isomorphism type of
/// the induced intersection graph: (size, certificate) → count.
pub fn intersection_profile(
    col: &Graph,
    phi: &[usize],
    others: &[Vec<usize>],
) -> BTreeMap<(usize, String), usize> {
    let n = col.order();
    let s = VertexSet::from_indices(n, phi.iter().copied());
    let mut out = BTreeMap::new();
    for o in others {
        let common: Vec<usize> = o.iter().copied().filter(|&p| s.contains(p)).collect();
        let sub = col.induced_ordered(&common);
        let cert = certificate(&sub, &Coloring::trivial(sub.order())).hex_digest();
        *out.entry((common.len(), cert)).or_insert(0) += 1;
    }
    out
}

/// Full census of a generalized quadrangle.
#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub geometry: String,
    pub points: usize,
    pub seeds: usize,
    pub seed_orbits: usize,
    pub types: Vec<TypeReport>,
    /// size → number of hyperovals
    pub totals: BTreeMap<usize, usize>,
    pub total: usize,
    #[serde(skip)]
    pub hyperovals: Vec<Vec<usize>>,
}

/// Seeds at point `x0`: hyperovals of the sub-geometry `x0^⊥` containing
/// `x0`, up to the stabilizer of `x0` in the automorphism group of `col`.
/// Returns the total number of seeds (by orbit-stabilizer) and one
/// representative per orbit.
pub fn perp_seeds(
    geo: &Geometry,
    col: &Graph,
    x0: usize,
    opts: &SearchOptions,
) -> Result<(usize, Vec<Vec<usize>>), HyperovalError> {
    let n = geo.point_count();
    let mut perp = col.neighbors(x0);
    perp.insert(x0);
    let members = perp.to_vec();
    let sub = geo.restrict(&perp);
    let local_x0 = members.iter().position(|&p| p == x0).unwrap();
    let budget = Budget::new(*opts);
    let mut found = Vec::new();
    pruned_search(col, &sub, &members, vec![local_x0], PRUNE_LEVELS, &budget, &mut found)?;
    let mut classes: BTreeMap<[u8; 32], (Vec<usize>, u128)> = BTreeMap::new();
    for local in found {
        let set: Vec<usize> = local.iter().map(|&i| members[i]).collect();
        let cf = canonical_form(col, &seed_coloring(n, x0, &set));
        let e = classes
            .entry(cf.certificate.digest())
            .or_insert_with(|| (set.clone(), cf.group_order));
        if set < e.0 {
            e.0 = set;
        }
    }
    let stab = canonical_form(col, &Coloring::from_classes(n, point_classes(n, &[], &[x0])).unwrap());
    let total: u128 = classes.values().map(|(_, o)| stab.group_order / o).sum();
    let mut reps: Vec<Vec<usize>> = classes.into_values().map(|(s, _)| s).collect();
    reps.sort();
    Ok((total as usize, reps))
}

const PRUNE_LEVELS: usize = 6;

/// Ordered classes: unmarked points, the marked set, then singletons.
fn point_classes(n: usize, marked: &[usize], singles: &[usize]) -> Vec<Vec<usize>> {
    let mut tag = vec![0u8; n];
    for &p in marked {
        tag[p] = 1;
    }
    for &p in singles {
        tag[p] = 2;
    }
    let mut classes = vec![
        (0..n).filter(|&p| tag[p] == 0).collect::<Vec<_>>(),
        (0..n).filter(|&p| tag[p] == 1).collect(),
    ];
    classes.extend(singles.iter().map(|&p| vec![p]));
    classes
}

fn seed_coloring(n: usize, x0: usize, set: &[usize]) -> Coloring {
    let rest: Vec<usize> = set.iter().copied().filter(|&p| p != x0).collect();
    Coloring::from_classes(n, point_classes(n, &rest, &[x0])).unwrap()
}

/// Hyperovals of `sub` containing `seed` (local indices), complete up to the
/// automorphisms of `col` fixing the seed pointwise. `members` maps local
/// points of `sub` to vertices of `col`, increasingly. Near the root the
/// search branches only on orbit representatives of the stabilizer of the
/// chosen points and of the branching line.
fn pruned_search(
    col: &Graph,
    sub: &Geometry,
    members: &[usize],
    seed: Vec<usize>,
    levels: usize,
    budget: &Budget,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), HyperovalError> {
    let mut e = Engine::new(sub, budget.opts.max_size);
    if !e.assign(seed.iter().map(|&p| (p, IN))) {
        return Ok(());
    }
    if levels == 0 || e.half_open.is_empty() {
        e.search(budget, out)?;
        return budget.charge(e.local_nodes);
    }
    let line = *e
        .half_open
        .iter()
        .min_by_key(|&&l| (e.free[l as usize], l))
        .unwrap() as usize;
    let cands: Vec<usize> = sub.lines()[line]
        .iter()
        .copied()
        .filter(|&x| e.state[x] == FREE)
        .collect();
    let fixed: Vec<usize> = e.members.iter().map(|&p| members[p as usize]).collect();
    let marked: Vec<usize> = cands.iter().map(|&c| members[c]).collect();
    let n = col.order();
    let cf = canonical_form(col, &Coloring::from_classes(n, point_classes(n, &marked, &fixed)).unwrap());
    if cf.group_order == 1 {
        e.search(budget, out)?;
        return budget.charge(e.local_nodes);
    }
    budget.charge(e.local_nodes + 1)?;
    let base: Vec<usize> = e.members.iter().map(|&p| p as usize).collect();
    for &c in &cands {
        if cf.orbits[members[c]] != members[c] {
            continue;
        }
        let mut next = base.clone();
        next.push(c);
        pruned_search(col, sub, members, next, levels - 1, budget, out)?;
    }
    Ok(())
}

/// Hyperoval census of a point-transitive geometry, seeded at point 0:
/// seed representatives are extended, the resulting connected types are
/// expanded to full orbits under the automorphism group, and disconnected
/// hyperovals are assembled from non-collinear unions.
pub fn enumerate_hyperovals(geo: &Geometry, opts: &SearchOptions) -> Result<Census, HyperovalError> {
    let n = geo.point_count();
    let col = geo.collinearity_graph();
    let (seed_count, reps) = perp_seeds(geo, &col, 0, opts)?;
    let budget = Budget::new(*opts);
    let found: Vec<Result<Vec<Vec<usize>>, HyperovalError>> = reps
        .par_iter()
        .map(|seed| {
            let mut perp = col.neighbors(0);
            perp.insert(0);
            let mut excluded = perp;
            for &p in seed {
                excluded.remove(p);
            }
            extend_with_budget(geo, seed, &excluded, &budget)
        })
        .collect();
    let mut through_x0 = Vec::new();
    for f in found {
        through_x0.extend(f?);
    }
    through_x0.sort();
    through_x0.dedup();
    let aut = canonical_form(&col, &Coloring::trivial(n));
    let mut connected: Vec<Vec<usize>> = Vec::new();
    let mut seen_types = HashSet::new();
    for h in &through_x0 {
        let d = crate::canon::subset_certificate(&col, &VertexSet::from_indices(n, h.iter().copied())).digest();
        if seen_types.insert(d) {
            connected.extend(set_orbit(&aut.generators, h));
        }
    }
    connected.sort();
    connected.dedup();
    let mut all = connected.clone();
    all.extend(assemble_disconnected(geo, &connected));
    all.sort();
    for h in &all {
        debug_assert!(is_hyperoval(geo, h));
    }
    let types = classify_types(geo, &all);
    let mut totals = BTreeMap::new();
    for h in &all {
        *totals.entry(h.len()).or_insert(0) += 1;
    }
    Ok(Census {
        geometry: geo.kind().to_string(),
        points: n,
        seeds: seed_count,
        seed_orbits: reps.len(),
        total: all.len(),
        types,
        totals,
        hyperovals: all,
    })
}

/// Types of hyperovals of a rank-3 polar space through a fixed point,
/// found by extending orbit representatives of hyperovals of `x0^⊥`.
#[derive(Debug, Clone, Serialize)]
pub struct RankThreeReport {
    pub geometry: String,
    pub points: usize,
    pub seeds: usize,
    pub seed_orbits: usize,
    pub automorphism_order: u128,
    pub types: Vec<TypeReport>,
    /// Largest number of points collinear with no point of a found
    /// hyperoval. A disconnected hyperoval would need a second component of
    /// at least the smallest type size inside that region.
    pub max_free_region: usize,
    pub disconnected_possible: bool,
}

/// Hyperoval types of a point-transitive polar space by hierarchical seeding.
pub fn hierarchical_types(geo: &Geometry, opts: &SearchOptions) -> Result<RankThreeReport, HyperovalError> {
    let n = geo.point_count();
    let col = geo.collinearity_graph();
    let (seed_count, reps) = perp_seeds(geo, &col, 0, opts)?;
    let budget = Budget::new(*opts);
    let mut perp = col.neighbors(0);
    perp.insert(0);
    let found: Vec<Result<Vec<Vec<usize>>, HyperovalError>> = reps
        .par_iter()
        .map(|seed| {
            let mut excluded = perp.clone();
            for &p in seed {
                excluded.remove(p);
            }
            extend_with_budget(geo, seed, &excluded, &budget)
        })
        .collect();
    let mut hs = Vec::new();
    for f in found {
        hs.extend(f?);
    }
    hs.sort();
    hs.dedup();
    let aut = canonical_form(&col, &Coloring::trivial(n));
    let mut types = classify_types(geo, &hs);
    for t in &mut types {
        // number of hyperovals of the type in the whole space
        t.count = (aut.group_order / t.stabilizer_order) as usize;
    }
    let max_free_region = types
        .iter()
        .map(|t| t.outside_profile.get(&0).copied().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let min_size = types.iter().map(|t| t.size).min().unwrap_or(0);
    Ok(RankThreeReport {
        max_free_region,
        disconnected_possible: !types.is_empty() && min_size <= max_free_region,
        geometry: geo.kind().to_string(),
        points: n,
        seeds: seed_count,
        seed_orbits: reps.len(),
        automorphism_order: aut.group_order,
        types,
    })
}

/// Hyperovals of `host` whose trace on the subspace `sub` (given as host
/// point indices) is exactly `section`, connected through the section.
pub fn extensions_of_section(
    host: &Geometry,
    sub: &VertexSet,
    section: &[usize],
    opts: &SearchOptions,
) -> Result<Vec<Vec<usize>>, HyperovalError> {
    let mut excluded = sub.clone();
    for &p in section {
        excluded.remove(p);
    }
    extend_seed(host, section, &excluded, opts)
}

/// Result of the rank-3 search in S5(4) and Q7−(4).
#[derive(Debug, Clone, Serialize)]
pub struct EmptinessReport {
    pub geometry: String,
    pub points: usize,
    /// Sizes of the sub-space hyperoval types that were tried as sections.
    pub sections_tried: Vec<usize>,
    pub extensions_found: usize,
    /// Whether the reduction sub-structure was matched by certificate.
    pub reduction_verified: bool,
}

/// Q+(5,4) points inside the symplectic model S5(4) (same coordinates).
fn quadric_in_symplectic(s5: &Geometry, q5: &Geometry) -> VertexSet {
    VertexSet::from_indices(
        s5.point_count(),
        q5.points().iter().map(|p| s5.point_index(p).expect("quadric point lies in S5(4)")),
    )
}

/// S5(4) has no hyperovals: every Q+(5,4)-type section is tried.
pub fn s5_4_emptiness(q5_types: &[TypeReport], opts: &SearchOptions) -> Result<EmptinessReport, HyperovalError> {
    let s5 = polar_space(PolarKind::S5_4)?;
    let q5 = polar_space(PolarKind::Q5plus4)?;
    let sub = quadric_in_symplectic(&s5, &q5);
    // the quadric's lines must all be lines of S5(4)
    let line_set: HashSet<&Vec<usize>> = s5.lines().iter().collect();
    let map = |p: usize| s5.point_index(&q5.points()[p]).unwrap();
    let reduction_verified = q5.lines().iter().all(|l| {
        let mut m: Vec<usize> = l.iter().map(|&p| map(p)).collect();
        m.sort_unstable();
        line_set.contains(&m)
    }) && s5
        .lines()
        .iter()
        .all(|l| matches!(l.iter().filter(|&&p| sub.contains(p)).count(), 1 | 5));
    let mut found = 0;
    let mut tried = Vec::new();
    for t in q5_types {
        let section: Vec<usize> = t.representative.iter().map(|&p| map(p)).collect();
        found += extensions_of_section(&s5, &sub, &section, opts)?.len();
        tried.push(t.size);
    }
    Ok(EmptinessReport {
        geometry: "s5_4".into(),
        points: s5.point_count(),
        sections_tried: tried,
        extensions_found: found,
        reduction_verified,
    })
}

/// Q7−(4) has no hyperovals: a nondegenerate hyperplane section is a copy
/// of S5(4) (checked by certificate), every point lies on such a section,
/// and S5(4) has none.
pub fn q7minus4_reduction(s5_report: &EmptinessReport) -> Result<EmptinessReport, HyperovalError> {
    let q7 = polar_space(PolarKind::Q7minus4)?;
    let form = q7.form().expect("classical model").clone();
    // a vector with Q(a) ≠ 0; its polar hyperplane is nondegenerate
    let f = form.field().clone();
    let a = projective_points(&f, 8)
        .into_iter()
        .find(|v| form.quadratic_value(v) != 0)
        .expect("nonsingular vector exists");
    let section = q7.perp_section(&a);
    let sub = q7.restrict(&section);
    let s5 = polar_space(PolarKind::S5_4)?;
    let iso = sub.point_count() == s5.point_count()
        && certificate(&sub.collinearity_graph(), &Coloring::trivial(sub.point_count()))
            == certificate(&s5.collinearity_graph(), &Coloring::trivial(s5.point_count()));
    // each point of Q7−(4) lies in the perp of some nonsingular vector
    let nonsingular: Vec<Vec<Elem>> = projective_points(&f, 8)
        .into_iter()
        .filter(|v| form.quadratic_value(v) != 0)
        .collect();
    let every_point_covered = (0..q7.point_count()).into_par_iter().all(|p| {
        let x: &[Elem] = &q7.points()[p];
        nonsingular.iter().any(|v| form.eval_unchecked(v, x) == 0)
    });
    Ok(EmptinessReport {
        geometry: "q7minus4".into(),
        points: q7.point_count(),
        sections_tried: vec![sub.point_count()],
        extensions_found: s5_report.extensions_found,
        reduction_verified: iso && every_point_covered && s5_report.reduction_verified,
    })
}

/// Outcome of [`hyperovals_of_gf4_rank3`].
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Gf4Rank3Outcome {
    Types(RankThreeReport),
    Empty(EmptinessReport),
}

impl Gf4Rank3Outcome {
    pub fn types(&self) -> &[TypeReport] {
        match self {
            Gf4Rank3Outcome::Types(r) => &r.types,
            Gf4Rank3Outcome::Empty(_) => &[],
        }
    }
}

/// Hyperoval types of Q+(5,4) and H(5,4) by hierarchical seeding; for S5(4)
/// and Q7−(4), emptiness through the Q+(5,4) sections.
pub fn hyperovals_of_gf4_rank3(kind: PolarKind, opts: &SearchOptions) -> Result<Gf4Rank3Outcome, HyperovalError> {
    match kind {
        PolarKind::Q5plus4 | PolarKind::H5_4 => {
            let geo = polar_space(kind)?;
            Ok(Gf4Rank3Outcome::Types(hierarchical_types(&geo, opts)?))
        }
        PolarKind::S5_4 | PolarKind::Q7minus4 => {
            let q5 = hierarchical_types(&polar_space(PolarKind::Q5plus4)?, opts)?;
            let s5 = s5_4_emptiness(&q5.types, opts)?;
            if kind == PolarKind::S5_4 {
                Ok(Gf4Rank3Outcome::Empty(s5))
            } else {
                Ok(Gf4Rank3Outcome::Empty(q7minus4_reduction(&s5)?))
            }
        }
        other => Err(HyperovalError::PreconditionViolated(format!(
            "{} is not a rank-3 polar space over GF(4)",
            other.name()
        ))),
    }
}

/// Constants and equation check showing H(6,4) has no hyperovals.
#[derive(Debug, Clone, Serialize)]
pub struct H6Certificate {
    pub points: usize,
    /// H(5,4)-type hyperplane sections (perps of nonisotropic points).
    pub sections: usize,
    pub sections_through_point: usize,
    pub sections_through_noncollinear_pair: usize,
    pub section_size: usize,
    /// Graph on sections, adjacent when they meet in a degenerate hyperplane.
    pub section_graph_connected: bool,
    /// `(a, |O|)` solving the point-incidence equation alone.
    pub first_equation_solutions: Vec<(usize, usize)>,
    /// `(a, |O|)` solving both equations.
    pub joint_solutions: Vec<(usize, usize)>,
}

/// Counting argument for H(6,4).
pub fn h6_counting_check() -> Result<H6Certificate, HyperovalError> {
    let h6 = polar_space(PolarKind::H6_4)?;
    let form = h6.form().expect("classical model").clone();
    let f = form.field().clone();
    let noniso: Vec<Vec<Elem>> = projective_points(&f, 7)
        .into_iter()
        .filter(|v| !form.is_singular(v))
        .collect();
    let s = noniso.len();
    let n = h6.point_count();
    // per point: which sections contain it
    let incidence: Vec<VertexSet> = (0..n)
        .into_par_iter()
        .map(|p| {
            let c = form.functional(&h6.points()[p]);
            VertexSet::from_indices(s, (0..s).filter(|&i| form.apply_functional(&c, &noniso[i]) == 0))
        })
        .collect();
    let per_point: HashSet<usize> = incidence.iter().map(|v| v.count()).collect();
    let col = h6.collinearity_graph();
    let per_pair: HashSet<usize> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let col = &col;
            let incidence = &incidence;
            (x + 1..n)
                .filter(move |&y| !col.adjacent(x, y))
                .map(move |y| incidence[x].intersection_count(&incidence[y]))
                .collect::<HashSet<usize>>()
        })
        .collect();
    let section_sizes: HashSet<usize> = (0..s)
        .into_par_iter()
        .map(|i| (0..n).filter(|&p| incidence[p].contains(i)).count())
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let single = |h: &HashSet<usize>| (h.len() == 1).then(|| *h.iter().next().unwrap());
    let (tp, tpair, ssize) = match (single(&per_point), single(&per_pair), single(&section_sizes)) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => {
            return Err(HyperovalError::ConstantsMismatch {
                computed: (s, per_point.len(), per_pair.len()),
                expected: (2752, 1, 1),
            })
        }
    };
    if (s, tp, tpair) != (2752, 704, 176) {
        return Err(HyperovalError::ConstantsMismatch {
            computed: (s, tp, tpair),
            expected: (2752, 704, 176),
        });
    }
    // sections p^⊥, q^⊥ meet in a degenerate hyperplane iff the line pq is
    // tangent: the form restricted to <p, q> is degenerate
    let det2 = |i: usize, j: usize| {
        let (a, b) = (&noniso[i], &noniso[j]);
        let faa = form.eval_unchecked(a, a);
        let fbb = form.eval_unchecked(b, b);
        let fab = form.eval_unchecked(a, b);
        let fba = form.eval_unchecked(b, a);
        f.sub(f.mul(faa, fbb), f.mul(fab, fba))
    };
    let sec_graph = Graph::from_rows_fn(s, |i| VertexSet::from_indices(s, (0..s).filter(|&j| j != i && det2(i, j) == 0)));
    let section_graph_connected = sec_graph.is_connected();
    let (first, joint) = solve_h6_equations(s, n, tp, tpair, ssize);
    Ok(H6Certificate {
        points: n,
        sections: s,
        sections_through_point: tp,
        sections_through_noncollinear_pair: tpair,
        section_size: ssize,
        section_graph_connected,
        first_equation_solutions: first,
        joint_solutions: joint,
    })
}

/// Brute force over `a ∈ [0, sections]`, `|O| ∈ [1, points]` of
/// `tp·|O| = 162a + 126(S − a)` and
/// `tpair·|O|(|O| − 166) = 162·116·a + 126·80·(S − a)`.
pub fn solve_h6_equations(
    sections: usize,
    points: usize,
    tp: usize,
    tpair: usize,
    _section_size: usize,
) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut first = Vec::new();
    let mut joint = Vec::new();
    for a in 0..=sections as i64 {
        for o in 1..=points as i64 {
            let s = sections as i64;
            let eq1 = tp as i64 * o == 162 * a + 126 * (s - a);
            if !eq1 {
                continue;
            }
            first.push((a as usize, o as usize));
            let eq2 = tpair as i64 * o * (o - 166) == 162 * 116 * a + 126 * 80 * (s - a);
            if eq2 {
                joint.push((a as usize, o as usize));
            }
        }
    }
    (first, joint)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{projective_plane, w_s};

    #[test]
    fn plane_hyperovals_by_engine() {
        let plane = projective_plane(4).unwrap();
        let all = all_connected_hyperovals(&plane, &SearchOptions::default()).unwrap();
        assert_eq!(all.len(), 168);
        assert!(all.iter().all(|h| h.len() == 6 && is_hyperoval(&plane, h)));
    }

    #[test]
    fn line_is_never_a_hyperoval() {
        let w2 = w_s(2).unwrap();
        assert!(!is_hyperoval(&w2, &w2.lines()[0]));
        let all = all_connected_hyperovals(&w2, &SearchOptions::default()).unwrap();
        assert!(all.iter().all(|h| is_hyperoval(&w2, h)));
        assert!(!all.contains(&w2.lines()[0]));
    }

    #[test]
    fn node_cap_is_an_error() {
        let plane = projective_plane(4).unwrap();
        let opts = SearchOptions {
            node_cap: 10,
            ..Default::default()
        };
        assert!(matches!(
            all_connected_hyperovals(&plane, &opts),
            Err(HyperovalError::Infeasible { .. })
        ));
    }

    #[test]
    fn equations_first_alone_solvable() {
        let (first, joint) = solve_h6_equations(2752, 2709, 704, 176, 693);
        assert!(!first.is_empty());
        assert!(joint.is_empty());
        assert!(first.contains(&(48, 495)));
    }
}
