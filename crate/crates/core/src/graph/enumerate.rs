//! Isomorphism-type enumeration by canonical augmentation.
//!
//! Types on `k` vertices come from types on `k - 1` vertices plus one new
//! vertex joined to every possible neighbour subset, deduplicated by canonical
//! code. Lists are ordered by vertex count, then edge count, then code bytes,
//! and each representative is the canonically relabelled graph.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use super::{canonical_labeling, treewidth, CanonicalCode, Graph};
use crate::error::Result;
use crate::guard;

type Level = Arc<Vec<Graph>>;

fn cache(kind: &'static str) -> &'static Mutex<HashMap<usize, Level>> {
    static GRAPHS: OnceLock<Mutex<HashMap<usize, Level>>> = OnceLock::new();
    static TREES: OnceLock<Mutex<HashMap<usize, Level>>> = OnceLock::new();
    match kind {
        "trees" => TREES.get_or_init(Default::default),
        _ => GRAPHS.get_or_init(Default::default),
    }
}

fn sorted_level(codes: BTreeSet<(usize, CanonicalCode)>) -> Vec<Graph> {
    codes.into_iter().map(|(_, code)| code.to_graph()).collect()
}

fn augment(prev: &[Graph], all_subsets: bool) -> Vec<Graph> {
    let candidates: BTreeSet<(usize, CanonicalCode)> = prev
        .par_iter()
        .flat_map_iter(|g| {
            let k = g.vertex_count();
            let choices: Vec<Vec<usize>> = if all_subsets {
                (0u32..1 << k).map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect()).collect()
            } else {
                (0..k).map(|v| vec![v]).collect()
            };
            choices.into_iter().map(move |nbrs| {
                let edges = g.edges().iter().copied().chain(nbrs.into_iter().map(|u| (u, k)));
                let h = Graph::new(k + 1, edges).expect("augmentation stays simple");
                let (_, code) = canonical_labeling(&h);
                (h.edge_count(), code)
            })
        })
        .collect();
    sorted_level(candidates)
}

fn level(kind: &'static str, k: usize) -> Level {
    if let Some(l) = cache(kind).lock().expect("enumeration cache poisoned").get(&k) {
        return l.clone();
    }
    let computed: Vec<Graph> = if k == 0 {
        Vec::new()
    } else if k == 1 {
        vec![Graph::new(1, []).expect("single vertex")]
    } else {
        let prev = level(kind, k - 1);
        augment(&prev, kind == "graphs")
    };
    let computed = Arc::new(computed);
    cache(kind).lock().expect("enumeration cache poisoned").insert(k, computed.clone());
    computed
}

/// One representative per isomorphism type with exactly `n` vertices.
pub fn enumerate_graphs_exact(n: usize) -> Result<Vec<Graph>> {
    guard::ENUMERATE_GRAPHS.check(n)?;
    Ok(level("graphs", n).as_ref().clone())
}

/// One representative per isomorphism type on `1..=n` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    guard::ENUMERATE_GRAPHS.check(n)?;
    Ok((1..=n).flat_map(|k| level("graphs", k).as_ref().clone()).collect())
}

/// Trees on `1..=n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    guard::ENUMERATE_TREES.check(n)?;
    Ok((1..=n).flat_map(|k| level("trees", k).as_ref().clone()).collect())
}

/// Graphs on `1..=n` vertices of treewidth at most `w`.
pub fn enumerate_treewidth_le(w: usize, n: usize) -> Result<Vec<Graph>> {
    let all = enumerate_graphs(n)?;
    let widths: Vec<Result<usize>> = all.par_iter().map(treewidth).collect();
    let mut out = Vec::new();
    for (g, tw) in all.into_iter().zip(widths) {
        if tw? <= w {
            out.push(g);
        }
    }
    Ok(out)
}
