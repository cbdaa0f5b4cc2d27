//! Canonical labelling by individualization and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, branch on every vertex of the first non-singleton cell, and
//! read a labelling off every discrete leaf. The canonical code is the
//! lexicographically smallest upper-triangular adjacency string (graph6 bit
//! order) over all leaves. Branches on a vertex whose transposition with an
//! already-explored cell-mate is an automorphism are skipped; their subtrees
//! produce the same codes.

use std::fmt;

use super::io::{encode_graph6_bits, write_graph6};
use super::Graph;

/// Byte string identifying an isomorphism type. It is the graph6 encoding of
/// the canonically relabelled graph, so it can be decoded back to a
/// representative with [`CanonicalCode::to_graph`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ascii")
    }

    pub fn to_graph(&self) -> Graph {
        super::parse_graph6(self.as_str()).expect("canonical codes are valid graph6")
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).1
}

/// Returns `(perm, code)` where `g.permute(&perm)` is the canonical
/// representative.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalCode) {
    let n = g.vertex_count();
    if n == 0 {
        return (Vec::new(), CanonicalCode(write_graph6(g).into_bytes()));
    }
    let mut search = Search { g, best: None };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    search.descend(cells);
    let (bits, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (perm, CanonicalCode(encode_graph6_bits(n, &bits)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<_> = (0..x.vertex_count()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let bits = leaf_bits(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
                self.best = Some((bits, order));
            }
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut next);
            self.descend(next);
        }
    }
}

/// `u` and `v` have the same neighbours apart from each other.
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.vertex_count()).filter(|&w| w != u && w != v).all(|w| g.has_edge(u, w) == g.has_edge(v, w))
}

fn leaf_bits(g: &Graph, order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

/// Splits cells by neighbour counts into every cell until the partition is
/// equitable. Sub-cells are ordered by their count vectors, so the result
/// depends only on the isomorphism type of `(g, cells)`.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(k);
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u32; k];
                    for &w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let done = next.len() == k;
        *cells = next;
        if done {
            return;
        }
    }
}
