//! Colour refinement (`k = 1`) and the `k`-dimensional Weisfeiler–Leman
//! algorithm on `k`-tuples.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::guard;

/// A stable colouring of the vertices (`k = 1`) or `k`-tuples of a graph.
///
/// Tuples are indexed in base `n`: tuple `(t_0, ..., t_{k-1})` lives at
/// `t_0 n^{k-1} + ... + t_{k-1}`. Colour ids are ranks of refinement
/// signatures, so they do not depend on the vertex labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPartition {
    pub k: usize,
    pub vertex_count: usize,
    pub colors: Vec<u32>,
    /// Number of refinement rounds until stability.
    pub rounds: usize,
}

impl ColorPartition {
    /// `(colour, multiplicity)` pairs sorted by colour.
    pub fn histogram(&self) -> Vec<(u32, usize)> {
        let mut counts = BTreeMap::new();
        for &c in &self.colors {
            *counts.entry(c).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn class_count(&self) -> usize {
        self.histogram().len()
    }

    /// Class sizes in descending order.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.histogram().into_iter().map(|(_, s)| s).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

fn check_dimension(g: &Graph, k: usize) -> Result<()> {
    if !(1..=3).contains(&k) {
        return Err(invalid(format!("WL dimension must be 1, 2 or 3, got {k}")));
    }
    if k >= 2 {
        guard::WL_VERTICES.check(g.vertex_count())?;
    }
    Ok(())
}

/// Stable `k`-WL colouring of `g`.
pub fn wl_refine(g: &Graph, k: usize) -> Result<ColorPartition> {
    check_dimension(g, k)?;
    Ok(refine_jointly(&[g], k).pop().expect("one graph in, one partition out"))
}

/// Whether `k`-WL fails to distinguish `g` and `h`.
///
/// Both graphs are refined in lockstep over one shared palette: every round
/// ranks the signatures of all tuples of both graphs together, so equal colour
/// ids mean the same thing on each side. Refinement stops once the number of
/// classes over both graphs stops growing; the verdict compares histograms.
pub fn wl_equivalent(g: &Graph, h: &Graph, k: usize) -> Result<bool> {
    check_dimension(g, k)?;
    check_dimension(h, k)?;
    if g.vertex_count() != h.vertex_count() {
        return Ok(false);
    }
    let parts = refine_jointly(&[g, h], k);
    Ok(parts[0].histogram() == parts[1].histogram())
}

fn tuple(mut index: usize, n: usize, k: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for slot in t.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    t
}

/// Equality and adjacency pattern of a tuple, pair by pair.
fn atomic_type(g: &Graph, t: &[usize]) -> Vec<u32> {
    let mut out = Vec::with_capacity(t.len() * t.len());
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            out.push(if t[i] == t[j] { 2 } else { g.has_edge(t[i], t[j]) as u32 });
        }
    }
    out
}

/// Replaces every signature by its rank among all distinct signatures.
fn rank(signatures: Vec<Vec<Vec<u32>>>) -> (Vec<Vec<u32>>, usize) {
    let mut palette: BTreeMap<&Vec<u32>, u32> = BTreeMap::new();
    for sigs in &signatures {
        for s in sigs {
            palette.insert(s, 0);
        }
    }
    for (i, id) in palette.values_mut().enumerate() {
        *id = i as u32;
    }
    let classes = palette.len();
    let colors = signatures.iter().map(|sigs| sigs.iter().map(|s| palette[s]).collect()).collect();
    (colors, classes)
}

fn refine_jointly(graphs: &[&Graph], k: usize) -> Vec<ColorPartition> {
    let initial: Vec<Vec<Vec<u32>>> = graphs
        .iter()
        .map(|g| {
            let n = g.vertex_count();
            (0..n.pow(k as u32)).map(|i| atomic_type(g, &tuple(i, n, k))).collect()
        })
        .collect();
    let (mut colors, mut classes) = rank(initial);
    let mut rounds = 0;
    loop {
        let signatures: Vec<Vec<Vec<u32>>> =
            graphs.iter().zip(&colors).map(|(g, c)| (0..c.len()).map(|i| signature(g, k, c, i)).collect()).collect();
        let (next, next_classes) = rank(signatures);
        rounds += 1;
        if next_classes == classes {
            break;
        }
        colors = next;
        classes = next_classes;
    }
    graphs
        .iter()
        .zip(colors)
        .map(|(g, colors)| ColorPartition { k, vertex_count: g.vertex_count(), colors, rounds })
        .collect()
}

/// Old colour followed by the sorted multiset of neighbour data: for `k = 1`
/// the colours of adjacent vertices, for `k >= 2` one `k`-vector per vertex
/// `w` holding the colours of `t` with each coordinate replaced by `w`.
fn signature(g: &Graph, k: usize, colors: &[u32], index: usize) -> Vec<u32> {
    let n = g.vertex_count();
    let mut sig = vec![colors[index]];
    if k == 1 {
        let mut nb: Vec<u32> = g.neighbors(index).iter().map(|&w| colors[w]).collect();
        nb.sort_unstable();
        sig.extend(nb);
        return sig;
    }
    let t = tuple(index, n, k);
    let mut place = vec![0usize; k];
    for (i, p) in place.iter_mut().enumerate() {
        *p = n.pow((k - 1 - i) as u32);
    }
    let mut items: Vec<Vec<u32>> = (0..n)
        .map(|w| {
            (0..k)
                .map(|i| {
                    let j = index - t[i] * place[i] + w * place[i];
                    colors[j]
                })
                .collect()
        })
        .collect();
    items.sort_unstable();
    sig.extend(items.into_iter().flatten());
    sig
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, gen_frac_pair, gen_standard, is_isomorphic, StandardKind::*};
    use crate::homcount::count_hom_cycle;

    fn std(kind: crate::graph::StandardKind, n: usize) -> Graph {
        gen_standard(kind, n).unwrap()
    }

    #[test]
    fn colour_refinement_classes() {
        let (g3, h3) = gen_frac_pair(3).unwrap();
        assert_eq!(wl_refine(&g3, 1).unwrap().class_sizes(), vec![6]);
        assert_eq!(wl_refine(&g3, 1).unwrap().rounds, 1);
        let k2_i1 = std(Clique, 2).disjoint_union(&std(Independent, 1));
        assert_eq!(wl_refine(&k2_i1, 1).unwrap().class_sizes(), vec![2, 1]);
        assert_eq!(wl_refine(&std(Cycle, 5), 1).unwrap().class_sizes(), vec![5]);
        assert_eq!(wl_refine(&std(Path, 5), 1).unwrap().class_sizes(), vec![2, 2, 1]);
        assert!(wl_equivalent(&g3, &h3, 1).unwrap());
        assert!(!wl_equivalent(&std(Clique, 3), &std(Clique, 4), 1).unwrap());
    }

    #[test]
    fn two_dimensional_sees_triangles() {
        let (g3, h3) = gen_frac_pair(3).unwrap();
        assert!(!wl_equivalent(&g3, &h3, 2).unwrap());
        let (g4, h4) = gen_frac_pair(4).unwrap();
        assert!(wl_equivalent(&g4, &h4, 1).unwrap());
        assert!(!wl_equivalent(&g4, &h4, 2).unwrap());
    }

    #[test]
    fn partitions_ignore_labels() {
        let p = std(Path, 4).permute(&[2, 0, 3, 1]);
        for k in 1..=3 {
            let a = wl_refine(&std(Path, 4), k).unwrap();
            let b = wl_refine(&p, k).unwrap();
            assert_eq!(a.histogram(), b.histogram(), "k = {k}");
        }
    }

    #[test]
    fn equivalence_is_reflexive_and_respects_isomorphism() {
        let graphs = enumerate_graphs(4).unwrap();
        for g in &graphs {
            for k in 1..=2 {
                assert!(wl_equivalent(g, &g.permute(&(0..g.vertex_count()).rev().collect::<Vec<_>>()), k).unwrap());
            }
        }
        // below five vertices, 2-WL already separates all non-isomorphic pairs
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                assert!(!wl_equivalent(g, h, 2).unwrap() || is_isomorphic(g, h));
            }
        }
    }

    #[test]
    fn two_wl_equivalence_preserves_cycle_counts() {
        let graphs = enumerate_graphs(5).unwrap();
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                if g.vertex_count() == h.vertex_count() && wl_equivalent(g, h, 2).unwrap() {
                    for k in 1..=5 {
                        assert_eq!(count_hom_cycle(k, g).unwrap(), count_hom_cycle(k, h).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_and_guard() {
        let g = std(Cycle, 4);
        assert!(wl_refine(&g, 0).is_err());
        assert!(wl_refine(&g, 4).is_err());
        assert!(wl_refine(&std(Cycle, 11), 2).is_err());
        assert!(wl_refine(&std(Cycle, 11), 1).is_ok());
    }
}
