use std::collections::VecDeque;

use super::Graph;
use crate::error::Result;
use crate::guard;

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
pub(crate) fn component_vertex_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Connected components as graphs of their own.
pub fn components(g: &Graph) -> Vec<Graph> {
    component_vertex_sets(g).iter().map(|c| g.induced(c)).collect()
}

/// The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    component_vertex_sets(g).len() <= 1
}

/// Two-colourability by BFS.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + component_vertex_sets(g).len() == g.vertex_count()
}

pub fn is_tree(g: &Graph) -> bool {
    g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g)
}

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Whether `K_k` is a subgraph. `k = 0` is always contained.
pub fn contains_clique_subgraph(g: &Graph, k: usize) -> bool {
    fn extend(g: &Graph, candidates: &[usize], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if candidates.len() < need {
            return false;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let rest: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            if extend(g, &rest, need - 1) {
                return true;
            }
        }
        false
    }
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    extend(g, &all, k)
}

/// All independent sets, the empty set included, as sorted vertex lists in
/// lexicographic order. Fails once the count passes the independent-set guard.
pub fn independent_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    fn rec(g: &Graph, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) -> Result<()> {
        out.push(current.clone());
        guard::INDEPENDENT_SETS.check(out.len())?;
        for v in start..g.vertex_count() {
            if current.iter().all(|&u| !g.has_edge(u, v)) {
                current.push(v);
                rec(g, v + 1, current, out)?;
                current.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(g, 0, &mut Vec::new(), &mut out)?;
    Ok(out)
}
