use num_rational::BigRational;
use num_traits::One;

use super::{Graph, WeightedGraph};
use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardKind {
    Clique,
    Cycle,
    Path,
    Independent,
}

/// Cliques, cycles, paths and independent sets on `n >= 1` vertices.
///
/// `Cycle` with `n = 1` is the single vertex and with `n = 2` the single edge
/// (the degenerate cycles).
pub fn gen_standard(kind: StandardKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("standard graphs need at least one vertex"));
    }
    let edges: Vec<(usize, usize)> = match kind {
        StandardKind::Clique => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        StandardKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
        StandardKind::Cycle => {
            let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            if n >= 3 {
                e.push((0, n - 1));
            }
            e
        }
        StandardKind::Independent => Vec::new(),
    };
    Graph::new(n, edges)
}

/// The Kneser graph on the `b`-subsets of `{1..a}`; subsets are adjacent when
/// disjoint. Vertices are numbered in lexicographic order of the sorted subsets.
pub fn gen_kneser(a: usize, b: usize) -> Result<Graph> {
    if b == 0 {
        return Err(invalid("kneser graphs need b >= 1"));
    }
    if a < 2 * b {
        return Err(invalid(format!("kneser graph needs a >= 2b, got a={a}, b={b}")));
    }
    if a > 63 {
        return Err(invalid("kneser graphs are limited to a <= 63"));
    }
    let count = binomial(a, b);
    crate::guard::KNESER_VERTICES.check(count)?;
    let mut subsets: Vec<u64> = Vec::with_capacity(count);
    let mut current: Vec<usize> = (0..b).collect();
    loop {
        subsets.push(current.iter().fold(0u64, |m, &i| m | (1 << i)));
        // advance to the next combination in lexicographic order
        let mut i = b;
        while i > 0 && current[i - 1] == a - b + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        current[i - 1] += 1;
        for j in i..b {
            current[j] = current[j - 1] + 1;
        }
    }
    let mut edges = Vec::new();
    for (i, &s) in subsets.iter().enumerate() {
        for (j, &t) in subsets.iter().enumerate().skip(i + 1) {
            if s & t == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_sorted(subsets.len(), edges))
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The fractionally isomorphic pair `(G_n, H_n)`.
///
/// `G_n` is two disjoint copies of `K_n` on `0..n` and `n..2n`. `H_n` removes
/// the edge `(0, 1)` from the first copy and `(n, n+1)` from the second, then
/// adds the cross edges `(0, n)` and `(1, n+1)`. Every edge of `K_n` lies in one
/// automorphism orbit, so the choice of removed edge does not matter up to
/// isomorphism.
pub fn gen_frac_pair(n: usize) -> Result<(Graph, Graph)> {
    if n < 3 {
        return Err(invalid(format!("fractional pair needs n >= 3, got {n}")));
    }
    let clique = gen_standard(StandardKind::Clique, n)?;
    let g = clique.disjoint_union(&clique);
    let edges = g.edges().iter().copied().filter(|&e| e != (0, 1) && e != (n, n + 1)).chain([(0, n), (1, n + 1)]);
    let h = Graph::new(2 * n, edges)?;
    Ok((g, h))
}

/// The chromatically equivalent pair `X1 = I1 + P3` and `X2 = P2 + P2`.
///
/// `X1` has the isolated vertex 0 and the path 1-2-3.
pub fn gen_chrom_pair() -> (Graph, Graph) {
    let x1 = Graph::new(4, [(1, 2), (2, 3)]).expect("static graph");
    let x2 = Graph::new(4, [(0, 1), (2, 3)]).expect("static graph");
    (x1, x2)
}

/// `K_{k,y}`: the looped clique with unit vertex and edge weights and loop
/// weight `1 + y`.
pub fn gen_weighted_clique(k: usize, y: &BigRational) -> Result<WeightedGraph> {
    if k == 0 {
        return Err(invalid("weighted clique needs k >= 1"));
    }
    let one = BigRational::one();
    let loop_weight = &one + y;
    let mut edges = Vec::new();
    for u in 0..k {
        edges.push(((u, u), loop_weight.clone()));
        for v in u + 1..k {
            edges.push(((u, v), one.clone()));
        }
    }
    WeightedGraph::new(vec![one; k], edges)
}

/// `L_{x,y}`: vertex `a = 0` of weight `x`, vertex `b = 1` of weight `y`, the
/// edge `(a, b)` and the loop `(b, b)`, both of weight one.
pub fn gen_lollipop(x: &BigRational, y: &BigRational) -> WeightedGraph {
    let one = BigRational::one();
    WeightedGraph::new(vec![x.clone(), y.clone()], [((0, 1), one.clone()), ((1, 1), one)]).expect("static graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic, is_tree};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn degenerate_cycles() {
        let c1 = gen_standard(StandardKind::Cycle, 1).unwrap();
        assert_eq!((c1.vertex_count(), c1.edge_count()), (1, 0));
        let c2 = gen_standard(StandardKind::Cycle, 2).unwrap();
        assert_eq!((c2.vertex_count(), c2.edge_count()), (2, 1));
        for n in 3..9 {
            assert_eq!(gen_standard(StandardKind::Cycle, n).unwrap().edge_count(), n);
        }
    }

    #[test]
    fn standard_sizes() {
        assert_eq!(gen_standard(StandardKind::Clique, 4).unwrap().edge_count(), 6);
        assert_eq!(gen_standard(StandardKind::Path, 5).unwrap().edge_count(), 4);
        assert!(is_tree(&gen_standard(StandardKind::Path, 5).unwrap()));
        assert!(gen_standard(StandardKind::Independent, 0).is_err());
    }

    #[test]
    fn kneser_graphs() {
        let petersen = gen_kneser(5, 2).unwrap();
        assert_eq!(petersen.vertex_count(), 10);
        assert_eq!(petersen.edge_count(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));

        let k2 = gen_kneser(2, 1).unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);

        let matching = gen_kneser(4, 2).unwrap();
        assert_eq!(matching.vertex_count(), 6);
        assert_eq!(matching.edge_count(), 3);
        assert!((0..6).all(|v| matching.degree(v) == 1));

        assert!(gen_kneser(3, 2).is_err());
    }

    #[test]
    fn kneser_vertex_order_is_lexicographic() {
        // {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}: {1,2} is disjoint only from {3,4}
        let g = gen_kneser(4, 2).unwrap();
        assert!(g.has_edge(0, 5));
        assert!(g.has_edge(1, 4));
        assert!(g.has_edge(2, 3));
    }

    #[test]
    fn frac_pair_shapes() {
        let (g3, h3) = gen_frac_pair(3).unwrap();
        assert_eq!((g3.vertex_count(), g3.edge_count()), (6, 6));
        assert_eq!((h3.vertex_count(), h3.edge_count()), (6, 6));
        assert!(is_isomorphic(&h3, &gen_standard(StandardKind::Cycle, 6).unwrap()));

        let (g4, h4) = gen_frac_pair(4).unwrap();
        for g in [&g4, &h4] {
            assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
            assert!((0..8).all(|v| g.degree(v) == 3));
        }
        assert!(gen_frac_pair(2).is_err());
    }

    #[test]
    fn chrom_pair_shapes() {
        let (x1, x2) = gen_chrom_pair();
        assert_eq!(x1.degree(0), 0);
        assert!((0..4).all(|v| x2.degree(v) == 1));
        assert!(!is_isomorphic(&x1, &x2));
    }

    #[test]
    fn weighted_generators() {
        let k = gen_weighted_clique(2, &r(-1, 1)).unwrap();
        assert_eq!(k.edge_weight(0, 0), Some(&r(0, 1)));
        assert_eq!(k.edge_weight(0, 1), Some(&r(1, 1)));

        let k = gen_weighted_clique(1, &r(3, 1)).unwrap();
        assert_eq!(k.vertex_count(), 1);
        assert_eq!(k.edge_weight(0, 0), Some(&r(4, 1)));

        let k = gen_weighted_clique(3, &r(1, 2)).unwrap();
        let loops: Vec<_> = k.weighted_edges().filter(|((u, v), _)| u == v).collect();
        assert_eq!(loops.len(), 3);
        assert!(loops.iter().all(|(_, w)| **w == r(3, 2)));
        assert_eq!(k.weighted_edges().count(), 6);

        let l = gen_lollipop(&r(2, 3), &r(5, 1));
        assert_eq!(l.vertex_weight(0), &r(2, 3));
        assert_eq!(l.vertex_weight(1), &r(5, 1));
        assert_eq!(l.edge_weight(1, 1), Some(&r(1, 1)));
        assert!(!l.has_edge(0, 0));
        let l = gen_lollipop(&r(0, 1), &r(1, 1));
        assert_eq!(l.vertex_weight(0), &r(0, 1));
    }
}
