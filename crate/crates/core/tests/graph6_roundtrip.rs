use geomforge::graph::Graph;
use geomforge::graph6::{from_graph6, to_graph6};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..140, any::<u64>(), 0u32..=100).prop_map(|(n, seed, density)| {
        // cheap deterministic edge mask from a 64-bit mixer
        let mix = |u: usize, v: usize| {
            let mut x = seed ^ ((u as u64) << 32 | v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            x ^= x >> 31;
            x = x.wrapping_mul(0xBF58_476D_1CE4_E5B9);
            x ^= x >> 29;
            (x % 100) < density as u64
        };
        Graph::from_fn(n, |u, v| mix(u.min(v), u.max(v)))
    })
}

proptest! {
    #[test]
    fn roundtrip(g in arb_graph()) {
        let s = to_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        let h = from_graph6(&s).unwrap();
        prop_assert_eq!(h.order(), g.order());
        prop_assert_eq!(h.edges(), g.edges());
        prop_assert_eq!(to_graph6(&h), s);
    }
}

#[test]
fn header_switches_above_62() {
    assert!(!to_graph6(&Graph::empty(62)).starts_with('~'));
    assert!(to_graph6(&Graph::empty(63)).starts_with('~'));
    let g = Graph::cycle(300);
    assert_eq!(from_graph6(&to_graph6(&g)).unwrap().edges(), g.edges());
}
