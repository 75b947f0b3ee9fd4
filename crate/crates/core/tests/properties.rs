use std::sync::OnceLock;

use noncent::analysis::{cent_count, center_index, h_subgroup, maximal_centralizers};
use noncent::catalog::shipped;
use noncent::graph::oracle_graph;
use noncent::{beta_partition, build_graph, is_induced_regular, is_regular, FiniteGroup};
use proptest::prelude::*;

fn pool() -> &'static [(String, FiniteGroup)] {
    static POOL: OnceLock<Vec<(String, FiniteGroup)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut groups = Vec::new();
        for name in ["small", "odd", "order8", "order16", "order32"] {
            groups.extend(shipped(name).unwrap().groups().unwrap());
        }
        groups.extend(noncent::theorems::family_instances().into_iter().filter(|(_, g)| g.order() <= 256));
        groups
    })
}

fn any_group() -> impl Strategy<Value = usize> {
    0..pool().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn partition_covers_group_with_center_first(i in any_group()) {
        let (_, g) = &pool()[i];
        let p = beta_partition(g);
        let mut seen = vec![false; g.order()];
        for class in p.classes() {
            for &x in class {
                prop_assert!(!seen[x]);
                seen[x] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        let center = g.center();
        prop_assert_eq!(p.class(0), center.members());
        for k in 1..p.class_count() {
            prop_assert!(p.class(k).len().is_multiple_of(p.class(0).len()));
        }
    }

    #[test]
    fn center_size_divides_every_degree(i in any_group()) {
        let (_, g) = &pool()[i];
        let z = g.center().size();
        let graph = build_graph(g, false);
        for v in 0..graph.vertex_count() {
            prop_assert_eq!(graph.degree(v) % z, 0);
        }
    }

    #[test]
    fn regular_iff_cent_count_equals_index(i in any_group()) {
        let (_, g) = &pool()[i];
        if !g.is_abelian() {
            prop_assert_eq!(is_regular(g).is_some(), cent_count(g) == center_index(g));
        }
    }

    #[test]
    fn graph_matches_oracle(i in any_group(), induced in any::<bool>()) {
        let (_, g) = &pool()[i];
        let graph = build_graph(g, induced);
        let edges: std::collections::BTreeSet<_> = graph.edges().collect();
        prop_assert_eq!(&edges, &oracle_graph(g, induced).unwrap());
        prop_assert_eq!(graph.edge_count(), edges.len());
    }

    #[test]
    fn graph_regularity_agrees_with_analysis(i in any_group()) {
        let (_, g) = &pool()[i];
        let full = build_graph(g, false);
        prop_assert_eq!(full.is_regular(), is_regular(g).is_some());
        if let Some(d) = is_regular(g) {
            prop_assert!(full.degree_sequence().iter().all(|&x| x == d));
        }
        if !g.is_abelian() {
            prop_assert_eq!(build_graph(g, true).is_regular(), is_induced_regular(g).is_some());
        }
    }

    #[test]
    fn maximal_classes_with_center_are_subgroups(i in any_group()) {
        let (_, g) = &pool()[i];
        if g.is_abelian() {
            return Ok(());
        }
        let z = g.center();
        for (k, c) in maximal_centralizers(g).unwrap() {
            let h = h_subgroup(g, k).unwrap();
            prop_assert!(z.is_subset(&h));
            prop_assert!(h.is_subset(&c));
        }
    }

    #[test]
    fn edge_count_formula(i in any_group()) {
        let (_, g) = &pool()[i];
        let p = beta_partition(g);
        let n = g.order();
        let squares: usize = p.sizes().iter().map(|s| s * s).sum();
        prop_assert_eq!(build_graph(g, false).edge_count(), (n * n - squares) / 2);
    }
}
