use super::Graph;
use crate::error::{invalid, Result};

impl Graph {
    /// `self + other`, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let edges =
            self.edges().iter().copied().chain(other.edges().iter().map(|&(u, v)| (u + shift, v + shift))).collect();
        Graph::from_sorted(shift + other.vertex_count(), edges)
    }

    /// `n` disjoint copies; zero copies give the empty graph.
    pub fn n_fold_union(&self, n: usize) -> Graph {
        (0..n).fold(Graph::empty(), |acc, _| acc.disjoint_union(self))
    }

    /// Categorical (tensor) product. Vertex `(u, a)` is numbered `u * |V(other)| + a`.
    pub fn tensor_product(&self, other: &Graph) -> Graph {
        let m = other.vertex_count();
        let mut edges = Vec::with_capacity(2 * self.edge_count() * other.edge_count());
        for &(u, v) in self.edges() {
            for &(a, b) in other.edges() {
                for (x, y) in [(u * m + a, v * m + b), (u * m + b, v * m + a)] {
                    edges.push((x.min(y), x.max(y)));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_sorted(self.vertex_count() * m, edges)
    }

    /// The graph with the extra edge `(u, v)`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u == v {
            return Err(invalid("add_edge needs two distinct vertices"));
        }
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return Err(invalid(format!("vertex out of range in add_edge({u},{v})")));
        }
        Graph::new(self.vertex_count(), self.edges().iter().copied().chain([(u, v)]))
    }

    /// Merges the non-adjacent vertices `u` and `v`. The merged vertex keeps
    /// `u`'s position; vertices after `v` shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.vertex_count();
        if u == v {
            return Err(invalid("contract needs two distinct vertices"));
        }
        if u >= n || v >= n {
            return Err(invalid(format!("vertex out of range in contract({u},{v})")));
        }
        if self.has_edge(u, v) {
            return Err(invalid(format!("cannot contract adjacent vertices {u} and {v}")));
        }
        let rename = |x: usize| {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        };
        Graph::new(n - 1, self.edges().iter().map(|&(a, b)| (rename(a), rename(b))))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let edges =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !self.has_edge(u, v)).collect();
        Graph::from_sorted(n, edges)
    }
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    g.disjoint_union(h)
}
