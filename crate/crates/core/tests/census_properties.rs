//! Structural properties of hyperoval censuses that hold independently of
//! the search strategy.

use geomforge::bitset::VertexSet;
use geomforge::canon::dedupe_subsets;
use geomforge::hyperovals::{enumerate_hyperovals, is_hyperoval, SearchOptions};
use geomforge::spaces::{polar_space, Geometry, PolarKind};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn relabel(geo: &Geometry, perm: &[usize]) -> Geometry {
    let lines = geo.lines().iter().map(|l| l.iter().map(|&p| perm[p]).collect()).collect();
    Geometry::from_lines("relabelled", geo.point_count(), lines)
}

#[test]
fn w3_hyperovals_are_triangle_free_and_regular() {
    let w3 = polar_space(PolarKind::W3).unwrap();
    let (_, t) = w3.gq_order().unwrap();
    let col = w3.collinearity_graph();
    let census = enumerate_hyperovals(&w3, &SearchOptions::default()).unwrap();
    assert_eq!(census.total, census.hyperovals.len());
    for h in &census.hyperovals {
        assert!(is_hyperoval(&w3, h));
        let sub = col.induced_ordered(h);
        assert!((0..sub.order()).all(|v| sub.degree(v) == t + 1));
        assert!(sub.girth().is_none_or(|g| g > 3), "triangle in {h:?}");
    }
}

#[test]
fn w3_size_eight_hyperovals_form_one_class() {
    let w3 = polar_space(PolarKind::W3).unwrap();
    let col = w3.collinearity_graph();
    let census = enumerate_hyperovals(&w3, &SearchOptions::default()).unwrap();
    let eights: Vec<VertexSet> = census
        .hyperovals
        .iter()
        .filter(|h| h.len() == 8)
        .map(|h| VertexSet::from_indices(40, h.iter().copied()))
        .collect();
    assert_eq!(eights.len(), 45);
    let classes = dedupe_subsets(&col, &eights);
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].multiplicity, 45);
    for s in &eights {
        assert_eq!(s.intersection_count(s), s.count());
    }
}

#[test]
fn h3_4_census_is_consistent() {
    let h3 = polar_space(PolarKind::H3_4).unwrap();
    assert_eq!(h3.gq_order(), Some((4, 2)));
    let census = enumerate_hyperovals(&h3, &SearchOptions::default()).unwrap();
    assert_eq!(census.totals.values().sum::<usize>(), census.total);
    assert_eq!(census.types.iter().map(|t| t.count).sum::<usize>(), census.total);
    assert!(census.hyperovals.iter().all(|h| is_hyperoval(&h3, h)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn census_is_invariant_under_relabelling(seed in any::<u64>()) {
        let w3 = polar_space(PolarKind::W3).unwrap();
        let mut perm: Vec<usize> = (0..40).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let opts = SearchOptions::default();
        let a = enumerate_hyperovals(&w3, &opts).unwrap();
        let b = enumerate_hyperovals(&relabel(&w3, &perm), &opts).unwrap();
        prop_assert_eq!(&a.totals, &b.totals);
        let certs = |c: &geomforge::hyperovals::Census| {
            let mut v: Vec<(usize, String, usize)> =
                c.types.iter().map(|t| (t.size, t.certificate.clone(), t.count)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(certs(&a), certs(&b));
        let mut mapped: Vec<Vec<usize>> = a
            .hyperovals
            .iter()
            .map(|h| {
                let mut m: Vec<usize> = h.iter().map(|&p| perm[p]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        mapped.sort();
        let mut found = b.hyperovals.clone();
        found.sort();
        prop_assert_eq!(mapped, found);
    }
}
