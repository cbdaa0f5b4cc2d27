//! Finite simple graphs, weighted looped graphs, and everything structural:
//! generators, operations, canonical forms, enumeration and I/O.

mod canon;
mod enumerate;
mod generators;
mod io;
mod ops;
mod predicates;
mod treewidth;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{invalid, Result};

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalCode};
pub use enumerate::{enumerate_graphs, enumerate_graphs_exact, enumerate_trees, enumerate_treewidth_le};
pub use generators::{
    gen_chrom_pair, gen_frac_pair, gen_kneser, gen_lollipop, gen_standard, gen_weighted_clique, StandardKind,
};
pub use io::{parse_graph6, parse_weighted_json, write_graph6, write_weighted_json};
pub use ops::disjoint_union;
pub(crate) use predicates::component_vertex_sets;
pub use predicates::{
    components, contains_clique_subgraph, girth, independent_sets, is_bipartite, is_connected, is_forest, is_tree,
};
pub use treewidth::treewidth;

/// A finite, simple, undirected graph on the vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted; neighbour lists and a
/// dense adjacency matrix are derived once at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Self::from_sorted(n, normalized))
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut neighbors = vec![Vec::new(); n];
        let mut matrix = vec![false; n * n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph { n, edges, neighbors, matrix }
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self::from_sorted(0, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    /// Row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|u| (0..self.n).map(|v| self.has_edge(u, v) as u8).collect()).collect()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        let edges = self.edges.iter().map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        });
        let mut edges: Vec<_> = edges.collect();
        edges.sort_unstable();
        Self::from_sorted(self.n, edges)
    }

    /// The subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                let (a, b) = (index[u], index[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        Self::from_sorted(vertices.len(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

/// Builds a graph from `n` and an edge list.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

/// An undirected graph that may carry self-loops, with a rational weight on
/// every vertex, edge and loop.
///
/// Edge keys are normalized pairs `(u, v)` with `u <= v`; `u == v` is a loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    vertex_weights: Vec<BigRational>,
    edge_weights: BTreeMap<(usize, usize), BigRational>,
    neighbors: Vec<Vec<usize>>,
}

impl WeightedGraph {
    /// `edges` may contain loops `(v, v)`. A repeated edge is an error since it
    /// would carry two weights.
    pub fn new(
        vertex_weights: Vec<BigRational>,
        edges: impl IntoIterator<Item = ((usize, usize), BigRational)>,
    ) -> Result<Self> {
        let n = vertex_weights.len();
        let mut edge_weights = BTreeMap::new();
        for ((u, v), w) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            let key = (u.min(v), u.max(v));
            if edge_weights.insert(key, w).is_some() {
                return Err(invalid(format!("edge ({u},{v}) given twice")));
            }
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edge_weights.keys() {
            neighbors[u].push(v);
            if u != v {
                neighbors[v].push(u);
            }
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(WeightedGraph { n, vertex_weights, edge_weights, neighbors })
    }

    /// Lifts a simple graph with every weight equal to one.
    pub fn lift(g: &Graph) -> Self {
        let one = BigRational::one();
        Self::new(vec![one.clone(); g.vertex_count()], g.edges().iter().map(|&e| (e, one.clone())))
            .expect("a simple graph always lifts")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertex_weight(&self, v: usize) -> &BigRational {
        &self.vertex_weights[v]
    }

    pub fn vertex_weights(&self) -> &[BigRational] {
        &self.vertex_weights
    }

    /// Weight of the edge or loop `{u, v}`, if present.
    pub fn edge_weight(&self, u: usize, v: usize) -> Option<&BigRational> {
        self.edge_weights.get(&(u.min(v), u.max(v)))
    }

    /// All edges and loops with their weights, loops included as `(v, v)`.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (&(usize, usize), &BigRational)> {
        self.edge_weights.iter()
    }

    /// Neighbours including `v` itself when `v` carries a loop.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_weights.contains_key(&(u.min(v), u.max(v)))
    }
}
