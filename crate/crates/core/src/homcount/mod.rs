//! Homomorphism counting: `hom`, `inj`, `sur`, `aut`, existence, weighted
//! counts over a semiring, the tree and cycle fast paths, and the
//! surjective/injective decomposition of `hom`.

mod decomposition;
mod fast;
mod search;
mod weighted;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::BigCount;
use crate::graph::component_vertex_sets as vertex_sets;
use crate::graph::{Graph, WeightedGraph};
use search::{count_isomorphisms, count_plan, for_each_hom, Plan};

pub use decomposition::{decomposition_check, Decomposition};
pub use fast::{closed_walk_counts, count_hom_cycle, count_hom_tree_dp};
pub use weighted::count_hom_weighted;

/// A total vertex map, indexed by source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomAssignment(pub Vec<usize>);

impl HomAssignment {
    /// Whether the map sends every edge of `g` to an edge of `h`.
    pub fn is_homomorphism(&self, g: &Graph, h: &Graph) -> bool {
        self.0.len() == g.vertex_count()
            && self.0.iter().all(|&a| a < h.vertex_count())
            && g.edges().iter().all(|&(u, v)| h.has_edge(self.0[u], self.0[v]))
    }

    /// Same for a looped weighted target, where an edge may land on a loop.
    pub fn is_weighted_homomorphism(&self, g: &Graph, w: &WeightedGraph) -> bool {
        self.0.len() == g.vertex_count()
            && self.0.iter().all(|&a| a < w.vertex_count())
            && g.edges().iter().all(|&(u, v)| w.has_edge(self.0[u], self.0[v]))
    }
}

/// `hom(G, H)`, with `hom(empty, H) = 1`. Components of `G` are counted
/// separately and multiplied.
pub fn count_hom(g: &Graph, h: &Graph) -> BigCount {
    let mut total = BigUint::one();
    for comp in vertex_sets(g) {
        if comp.len() == 1 {
            total *= BigUint::from(h.vertex_count());
            continue;
        }
        let plan = Plan::new(g, Some(&comp));
        total *= BigUint::from(count_plan(h, &plan));
        if total == BigUint::default() {
            break;
        }
    }
    total
}

/// Injective homomorphisms.
pub fn count_inj(g: &Graph, h: &Graph) -> BigCount {
    let mut count = 0u128;
    for_each_hom(g, h, true, |_| {
        count += 1;
        true
    });
    BigUint::from(count)
}

/// Homomorphisms whose image is all of `h`: every vertex and every edge of
/// `h` is hit.
pub fn count_sur(g: &Graph, h: &Graph) -> BigCount {
    let (n, m) = (h.vertex_count(), h.edge_count());
    if g.vertex_count() < n || g.edge_count() < m {
        return BigUint::default();
    }
    let mut edge_index = vec![usize::MAX; n * n];
    for (i, &(a, b)) in h.edges().iter().enumerate() {
        edge_index[a * n + b] = i;
        edge_index[b * n + a] = i;
    }
    let mut vertex_hit = vec![false; n];
    let mut edge_hit = vec![false; m];
    let mut count = 0u128;
    for_each_hom(g, h, false, |map| {
        vertex_hit.iter_mut().for_each(|x| *x = false);
        edge_hit.iter_mut().for_each(|x| *x = false);
        for &a in map {
            vertex_hit[a] = true;
        }
        for &(u, v) in g.edges() {
            edge_hit[edge_index[map[u] * n + map[v]]] = true;
        }
        if vertex_hit.iter().all(|&x| x) && edge_hit.iter().all(|&x| x) {
            count += 1;
        }
        true
    });
    BigUint::from(count)
}

/// Automorphisms: bijections preserving both edges and non-edges.
pub fn count_aut(g: &Graph) -> BigCount {
    BigUint::from(count_isomorphisms(g, g))
}

/// Whether some homomorphism `g -> h` exists; stops at the first one.
pub fn hom_exists(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() == 0 {
        return true;
    }
    if h.vertex_count() == 0 {
        return false;
    }
    vertex_sets(g).iter().all(|comp| {
        if comp.len() == 1 {
            return true;
        }
        let sub = g.induced(comp);
        let mut found = false;
        for_each_hom(&sub, h, false, |_| {
            found = true;
            false
        });
        found
    })
}

/// One homomorphism `g -> h`, if any.
pub fn find_hom(g: &Graph, h: &Graph) -> Option<HomAssignment> {
    let mut found = None;
    for_each_hom(g, h, false, |map| {
        found = Some(HomAssignment(map.to_vec()));
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, gen_frac_pair, gen_kneser, gen_standard, StandardKind::*};

    fn std(kind: crate::graph::StandardKind, n: usize) -> Graph {
        gen_standard(kind, n).unwrap()
    }

    /// Counts maps by trying all `|V(H)|^|V(G)|` of them.
    fn brute(g: &Graph, h: &Graph) -> (u64, u64, u64) {
        let (n, k) = (g.vertex_count(), h.vertex_count());
        let (mut hom, mut inj, mut sur) = (0, 0, 0);
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let d = (c % k as u64) as usize;
                    c /= k as u64;
                    d
                })
                .collect();
            if !HomAssignment(map.clone()).is_homomorphism(g, h) {
                continue;
            }
            hom += 1;
            let mut seen = map.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() == n {
                inj += 1;
            }
            let mut edges: Vec<_> = g.edges().iter().map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v]))).collect();
            edges.sort_unstable();
            edges.dedup();
            if seen.len() == k && edges.len() == h.edge_count() {
                sur += 1;
            }
        }
        (hom, inj, sur)
    }

    #[test]
    fn small_values() {
        assert_eq!(count_hom(&std(Cycle, 3), &std(Clique, 3)), BigUint::from(6u32));
        assert_eq!(count_inj(&std(Clique, 2), &std(Clique, 3)), BigUint::from(6u32));
        assert_eq!(count_sur(&std(Path, 3), &std(Clique, 2)), BigUint::from(2u32));
        assert_eq!(count_aut(&std(Cycle, 4)), BigUint::from(8u32));
        assert_eq!(count_hom(&Graph::empty(), &std(Clique, 3)), BigUint::one());
        assert_eq!(count_hom(&std(Cycle, 3), &std(Cycle, 6)), BigUint::default());
    }

    #[test]
    fn edge_and_independent_sources() {
        for g in enumerate_graphs(5).unwrap() {
            assert_eq!(count_hom(&std(Clique, 2), &g), BigUint::from(2 * g.edge_count()));
        }
        let petersen = gen_kneser(5, 2).unwrap();
        for m in 1..5 {
            assert_eq!(count_hom(&std(Independent, m), &petersen), BigUint::from(10u32).pow(m as u32));
        }
    }

    #[test]
    fn matches_brute_force() {
        let graphs = enumerate_graphs(4).unwrap();
        for g in &graphs {
            for h in &graphs {
                let (hom, inj, sur) = brute(g, h);
                assert_eq!(count_hom(g, h), BigUint::from(hom), "hom {g:?} {h:?}");
                assert_eq!(count_inj(g, h), BigUint::from(inj), "inj {g:?} {h:?}");
                assert_eq!(count_sur(g, h), BigUint::from(sur), "sur {g:?} {h:?}");
                assert_eq!(hom_exists(g, h), hom > 0);
                assert!(count_inj(g, h) <= count_hom(g, h));
            }
            assert!(count_aut(g) <= count_inj(g, g));
        }
    }

    #[test]
    fn existence() {
        assert!(hom_exists(&std(Cycle, 5), &gen_kneser(5, 2).unwrap()));
        assert!(!hom_exists(&std(Clique, 3), &std(Clique, 2)));
        let (g3, _) = gen_frac_pair(3).unwrap();
        assert!(hom_exists(&g3, &g3));
        let map = find_hom(&std(Cycle, 6), &std(Clique, 2)).unwrap();
        assert!(map.is_homomorphism(&std(Cycle, 6), &std(Clique, 2)));
    }

    #[test]
    fn automorphisms_versus_injective_maps() {
        assert_eq!(count_aut(&std(Path, 3)), BigUint::from(2u32));
        assert_eq!(count_aut(&Graph::new(4, [(0, 1)]).unwrap()), BigUint::from(4u32));
        // between different graphs injective homomorphisms need not reflect non-edges
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let c4 = std(Cycle, 4);
        assert_eq!(count_isomorphisms(&two_edges, &c4), 0);
        // 8 ordered images of the first edge, 2 of the opposite one
        assert_eq!(count_inj(&two_edges, &c4), BigUint::from(16u32));
    }
}
