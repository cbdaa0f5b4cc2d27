use num_rational::BigRational;

use super::search::Plan;
use crate::arith::Semiring;
use crate::error::Result;
use crate::graph::{Graph, WeightedGraph};

/// Weighted homomorphism count into a looped, weighted target over `semiring`.
///
/// Sums, over every map `h` sending edges of `g` to edges or loops of `w`,
/// the product of `w(h(u))` for each vertex `u` of `g` (in vertex order)
/// followed by `w(h(e))` for each edge `e` of `g` (in edge order). The empty
/// source graph gives the semiring's one.
pub fn count_hom_weighted(g: &Graph, w: &WeightedGraph, semiring: &Semiring) -> Result<BigRational> {
    for x in w.vertex_weights() {
        semiring.check(x)?;
    }
    for (_, x) in w.weighted_edges() {
        semiring.check(x)?;
    }
    let plan = Plan::new(g, None);
    let back = &plan.back;
    let n = g.vertex_count();
    let mut image: Vec<usize> = Vec::with_capacity(n);
    let mut assignment = vec![0usize; n];
    let mut total = semiring.zero();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Graph,
        w: &WeightedGraph,
        s: &Semiring,
        plan: &Plan,
        back: &[Vec<usize>],
        image: &mut Vec<usize>,
        assignment: &mut [usize],
        total: &mut BigRational,
    ) {
        let i = image.len();
        if i == plan.order.len() {
            let vertex_part = assignment.iter().map(|&a| w.vertex_weight(a));
            let edge_part =
                g.edges().iter().map(|&(u, v)| w.edge_weight(assignment[u], assignment[v]).expect("edge-preserving"));
            let term = s.product(vertex_part.chain(edge_part));
            *total = s.add(total, &term);
            return;
        }
        let cands: Vec<usize> = match back[i].split_first() {
            None => (0..w.vertex_count()).collect(),
            Some((&first, rest)) => w
                .neighbors(image[first])
                .iter()
                .copied()
                .filter(|&c| rest.iter().all(|&p| w.has_edge(image[p], c)))
                .collect(),
        };
        for c in cands {
            image.push(c);
            assignment[plan.order[i]] = c;
            rec(g, w, s, plan, back, image, assignment, total);
            image.pop();
        }
    }
    rec(g, w, semiring, &plan, back, &mut image, &mut assignment, &mut total);
    if n == 0 {
        return Ok(semiring.one());
    }
    Ok(total)
}
