use num_bigint::BigUint;
use proptest::prelude::*;

use homvec::graph::{
    canonical_form, enumerate_graphs, enumerate_trees, is_connected, parse_graph6, write_graph6, Graph,
};
use homvec::homcount::{count_hom, count_hom_cycle, count_hom_tree_dp, count_inj, count_sur};
use homvec::vectors::{left_vector, ClassSpec, NamedClass};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.vertex_count()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_with_perm(9)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_form(&canonical_form(&g).to_graph()), canonical_form(&g));
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn hom_is_multiplicative_in_the_source(f1 in graph(3), f2 in graph(3), h in graph(4)) {
        prop_assert_eq!(count_hom(&f1.disjoint_union(&f2), &h), count_hom(&f1, &h) * count_hom(&f2, &h));
    }

    #[test]
    fn hom_into_products_multiplies(f in graph(4), h1 in graph(3), h2 in graph(3)) {
        prop_assert_eq!(count_hom(&f, &h1.tensor_product(&h2)), count_hom(&f, &h1) * count_hom(&f, &h2));
    }

    #[test]
    fn connected_sources_split_over_target_unions(f in graph(4), h1 in graph(3), h2 in graph(3)) {
        prop_assume!(is_connected(&f) && f.vertex_count() > 0);
        prop_assert_eq!(count_hom(&f, &h1.disjoint_union(&h2)), count_hom(&f, &h1) + count_hom(&f, &h2));
    }

    #[test]
    fn counts_are_ordered(f in graph(4), h in graph(4)) {
        let hom = count_hom(&f, &h);
        prop_assert!(count_inj(&f, &h) <= hom);
        prop_assert!(count_sur(&f, &h) <= hom);
    }

    #[test]
    fn cycle_path_matches_search(k in 1usize..=6, g in graph(5)) {
        let c = match k {
            1 => Graph::new(1, []).unwrap(),
            2 => Graph::new(2, [(0, 1)]).unwrap(),
            _ => Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap(),
        };
        // C1 and C2 are the vertex and the edge, counted by closed walks
        let walks = count_hom_cycle(k, &g).unwrap();
        if k >= 3 {
            prop_assert_eq!(walks, count_hom(&c, &g));
        } else {
            let want = if k == 1 { g.vertex_count() } else { 2 * g.edge_count() };
            prop_assert_eq!(walks, BigUint::from(want));
        }
    }
}

#[test]
fn tree_dp_matches_search() {
    let targets = enumerate_graphs(4).unwrap();
    for n in 1..=7 {
        for t in enumerate_trees(n).unwrap() {
            for g in &targets {
                assert_eq!(count_hom_tree_dp(&t, g).unwrap(), count_hom(&t, g), "{t:?} -> {g:?}");
            }
        }
    }
}

#[test]
fn left_vectors_over_all_graphs_determine_isomorphism() {
    let graphs = enumerate_graphs(5).unwrap();
    let members = ClassSpec::named(NamedClass::All, 5);
    let vectors: Vec<_> =
        graphs.iter().map(|g| left_vector(g, &members).unwrap().counts().cloned().collect::<Vec<_>>()).collect();
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            assert_ne!(vectors[i], vectors[j], "{:?} {:?}", graphs[i], graphs[j]);
        }
    }
}
