//! Canonical forms checked against brute force over all permutations and
//! against Burnside counts of unlabeled graphs.

use std::collections::{HashMap, HashSet};

use geomforge::canon::{canonical_form, certificate, Coloring};
use geomforge::graph::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let ps = pairs(n);
    let edges: Vec<_> = ps
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges)
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, out);
            p.swap(k, i);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}

/// Smallest edge mask over all relabelings, plus the number of
/// relabelings fixing the mask (colors must be preserved).
fn brute(n: usize, mask: u64, colors: &[u32], perms: &[Vec<usize>]) -> (u64, u64) {
    let ps = pairs(n);
    let index: HashMap<(usize, usize), usize> = ps.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut best = u64::MAX;
    let mut fixing = 0;
    for p in perms {
        if (0..n).any(|v| colors[p[v]] != colors[v]) {
            continue;
        }
        let mut m = 0u64;
        for (i, &(u, v)) in ps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                m |= 1 << index[&(a, b)];
            }
        }
        if m == mask {
            fixing += 1;
        }
        best = best.min(m);
    }
    (best, fixing)
}

#[test]
fn all_graphs_up_to_six_vertices_match_brute_force() {
    for n in 1..=6 {
        let perms = all_perms(n);
        let m = pairs(n).len();
        let colors = vec![0u32; n];
        let results: Vec<(u64, Vec<u8>, u64, u128)> = (0..1u64 << m)
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask);
                let cf = canonical_form(&g, &Coloring::trivial(n));
                for gen in &cf.generators {
                    assert!(g.edges().iter().all(|&(u, v)| g.adjacent(gen[u], gen[v])));
                }
                let (b, fix) = brute(n, mask, &colors, &perms);
                (b, cf.certificate.as_bytes().to_vec(), fix, cf.group_order)
            })
            .collect();
        let mut by_brute: HashMap<u64, Vec<u8>> = HashMap::new();
        let mut certs = HashSet::new();
        for (b, cert, fix, order) in &results {
            assert_eq!(*fix as u128, *order, "automorphism count, n={n}");
            let prev = by_brute.entry(*b).or_insert_with(|| cert.clone());
            assert_eq!(prev, cert, "isomorphic graphs got different certificates");
            certs.insert(cert.clone());
        }
        assert_eq!(certs.len(), by_brute.len(), "non-isomorphic graphs share a certificate");
        let expected = [1, 1, 2, 4, 11, 34, 156][n];
        assert_eq!(certs.len(), expected);
    }
}

/// Burnside: unlabeled graphs on n vertices = average over S_n of
/// 2^(cycles of the induced action on vertex pairs).
fn burnside_graph_count(n: usize) -> u64 {
    let ps = pairs(n);
    let index: HashMap<(usize, usize), usize> = ps.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let perms = all_perms(n);
    let mut total = 0u64;
    for p in &perms {
        let mut seen = vec![false; ps.len()];
        let mut cycles = 0;
        for s in 0..ps.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                let (u, v) = ps[i];
                i = index[&(p[u].min(p[v]), p[u].max(p[v]))];
            }
        }
        total += 1 << cycles;
    }
    total / perms.len() as u64
}

#[test]
fn seven_vertex_class_count_matches_burnside() {
    let n = 7;
    let expected = burnside_graph_count(n);
    assert_eq!(expected, 1044);
    let certs: HashSet<[u8; 32]> = (0..1u64 << 21)
        .into_par_iter()
        .map(|mask| certificate(&graph_from_mask(n, mask), &Coloring::trivial(n)).digest())
        .collect();
    assert_eq!(certs.len() as u64, expected);
}

#[test]
fn colored_graphs_match_brute_force_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [5usize, 6, 7] {
        let perms = all_perms(n);
        let m = pairs(n).len();
        let mut by_brute: HashMap<(Vec<u32>, u64), Vec<u8>> = HashMap::new();
        let mut by_cert: HashMap<Vec<u8>, (Vec<u32>, u64)> = HashMap::new();
        for _ in 0..400 {
            let mask = rng.gen_range(0..1u64 << m);
            // colors sorted so that color class sizes are a fixed sequence
            let mut colors: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            colors.sort_unstable();
            let mut distinct = colors.clone();
            distinct.dedup();
            for c in colors.iter_mut() {
                *c = distinct.iter().position(|d| d == c).unwrap() as u32;
            }
            let mut labels: Vec<usize> = (0..n).collect();
            labels.shuffle(&mut rng);
            let shuffled_colors: Vec<u32> = (0..n).map(|v| colors[labels[v]]).collect();
            let g = graph_from_mask(n, mask);
            let cf = canonical_form(&g, &Coloring::from_colors(&shuffled_colors));
            let (_, fix) = brute(n, mask, &shuffled_colors, &perms);
            assert_eq!(fix as u128, cf.group_order);
            // brute-force key: minimal mask over color-preserving maps onto a
            // fixed sorted coloring
            let target: Vec<usize> = {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by_key(|&v| (shuffled_colors[v], v));
                let mut t = vec![0; n];
                for (i, &v) in order.iter().enumerate() {
                    t[v] = i;
                }
                t
            };
            let relabeled = g.permuted(&target);
            let rmask = pairs(n)
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| relabeled.adjacent(u, v))
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            let (key, _) = brute(n, rmask, &colors, &perms);
            let cert = cf.certificate.as_bytes().to_vec();
            let k = (colors.clone(), key);
            assert_eq!(by_brute.entry(k.clone()).or_insert_with(|| cert.clone()), &cert);
            assert_eq!(by_cert.entry(cert).or_insert(k.clone()), &k);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn certificate_invariant_under_relabeling(n in 8usize..=14, density in 0.1f64..0.9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(density));
        let base = certificate(&g, &Coloring::trivial(n));
        for _ in 0..5 {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            prop_assert_eq!(&certificate(&g.permuted(&p), &Coloring::trivial(n)), &base);
        }
    }
}
