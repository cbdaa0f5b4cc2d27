use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::BigCount;
use crate::error::{invalid, Result};
use crate::graph::{is_tree, Graph};

/// `hom(T, G)` for a tree `T` by rooted dynamic programming: the count for a
/// vertex mapped to `a` is the product over children of the summed counts of
/// the child over the neighbours of `a`.
pub fn count_hom_tree_dp(tree: &Graph, g: &Graph) -> Result<BigCount> {
    if !is_tree(tree) {
        return Err(invalid("count_hom_tree_dp needs a tree"));
    }
    let n = tree.vertex_count();
    let k = g.vertex_count();
    // BFS order from vertex 0; children are processed before parents when reversed
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut table: Vec<Vec<BigUint>> = vec![vec![BigUint::one(); k]; n];
    for &v in order.iter().rev() {
        if v == 0 {
            break;
        }
        // fold v's finished table into its parent
        let child = std::mem::take(&mut table[v]);
        let p = parent[v];
        #[allow(clippy::needless_range_loop)]
        for a in 0..k {
            if table[p][a].is_zero() {
                continue;
            }
            let sum: BigUint = g.neighbors(a).iter().map(|&b| &child[b]).sum();
            table[p][a] *= sum;
        }
    }
    Ok(table[0].iter().sum())
}

/// Traces of `A^1 .. A^kmax` (closed walk counts), exact.
pub fn closed_walk_counts(g: &Graph, kmax: usize) -> Vec<BigCount> {
    match closed_walks_u128(g, kmax) {
        Some(v) => v.into_iter().map(BigUint::from).collect(),
        None => closed_walks_big(g, kmax),
    }
}

fn closed_walks_u128(g: &Graph, kmax: usize) -> Option<Vec<u128>> {
    let n = g.vertex_count();
    let mut power: Vec<u128> = (0..n * n).map(|i| g.has_edge(i / n, i % n) as u128).collect();
    let mut traces = Vec::with_capacity(kmax);
    if kmax >= 1 {
        traces.push(0);
    }
    let mut next = vec![0u128; n * n];
    for _ in 2..=kmax {
        for i in 0..n {
            let row = &power[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = 0u128;
                for &l in g.neighbors(j) {
                    acc = acc.checked_add(row[l])?;
                }
                next[i * n + j] = acc;
            }
        }
        std::mem::swap(&mut power, &mut next);
        let mut t = 0u128;
        for i in 0..n {
            t = t.checked_add(power[i * n + i])?;
        }
        traces.push(t);
    }
    Some(traces)
}

fn closed_walks_big(g: &Graph, kmax: usize) -> Vec<BigUint> {
    let n = g.vertex_count();
    let mut power: Vec<BigUint> = (0..n * n).map(|i| BigUint::from(g.has_edge(i / n, i % n) as u8)).collect();
    let mut traces = Vec::with_capacity(kmax);
    if kmax >= 1 {
        traces.push(BigUint::zero());
    }
    for _ in 2..=kmax {
        let mut next = vec![BigUint::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                next[i * n + j] = g.neighbors(j).iter().map(|&l| &power[i * n + l]).sum();
            }
        }
        power = next;
        traces.push((0..n).map(|i| &power[i * n + i]).sum());
    }
    traces
}

/// `hom(C_k, G)` including the degenerate cycles: `C_1` is a single vertex
/// and `C_2` a single edge.
pub fn count_hom_cycle(k: usize, g: &Graph) -> Result<BigCount> {
    match k {
        0 => Err(invalid("cycle length must be at least 1")),
        1 => Ok(BigUint::from(g.vertex_count())),
        2 => Ok(BigUint::from(2 * g.edge_count())),
        _ => Ok(closed_walk_counts(g, k).pop().expect("k >= 3 traces")),
    }
}
