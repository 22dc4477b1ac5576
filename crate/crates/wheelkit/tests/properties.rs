use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use wheelkit::graph::{blocks, parse_graph, write_graph, write_graph6, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut b = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[b] {
                        edges.push((u, v));
                    }
                    b += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph(14)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        prop_assert_eq!(parse_graph(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn degree_sum_counts_edges_twice(g in arb_graph(14)) {
        let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn blocks_partition_edges_and_flag_cuts(g in arb_graph(12)) {
        let dec = blocks(&g);
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for b in &dec.blocks {
            for &e in &b.edges {
                prop_assert!(seen.insert(e), "edge {:?} in two blocks", e);
            }
            prop_assert_eq!(b.is_edge, b.edges.len() == 1);
            // two blocks share at most one vertex, so membership count
            // tells cut vertices apart
        }
        let all: BTreeSet<(usize, usize)> = g.edges().collect();
        prop_assert_eq!(seen, all);

        let mut membership: BTreeMap<usize, usize> = BTreeMap::new();
        for b in &dec.blocks {
            for &v in &b.vertices {
                *membership.entry(v).or_default() += 1;
            }
        }
        let cuts: Vec<usize> = membership
            .iter()
            .filter(|&(_, &count)| count >= 2)
            .map(|(&v, _)| v)
            .collect();
        prop_assert_eq!(cuts, dec.cut_vertices.clone());
    }
}
