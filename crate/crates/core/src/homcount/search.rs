//! Backtracking over vertex maps with forward pruning.

use crate::graph::Graph;

/// Vertex order for a search: BFS from a maximum-degree vertex in every
/// component, plus, for each position, the earlier positions adjacent to it.
pub(crate) struct Plan {
    pub order: Vec<usize>,
    pub back: Vec<Vec<usize>>,
}

impl Plan {
    /// Plan over `vertices` (all of `g` when `None`).
    pub fn new(g: &Graph, vertices: Option<&[usize]>) -> Plan {
        let n = g.vertex_count();
        let mut allowed = vec![vertices.is_none(); n];
        if let Some(vs) = vertices {
            for &v in vs {
                allowed[v] = true;
            }
        }
        let mut placed = vec![false; n];
        let mut order = Vec::new();
        loop {
            // highest degree unplaced vertex, lowest index on ties
            let start =
                (0..n).filter(|&v| allowed[v] && !placed[v]).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
            let Some(start) = start else { break };
            placed[start] = true;
            let first = order.len();
            order.push(start);
            let mut i = first;
            while i < order.len() {
                let v = order[i];
                i += 1;
                for &w in g.neighbors(v) {
                    if allowed[w] && !placed[w] {
                        placed[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| g.neighbors(v).iter().map(|&w| pos[w]).filter(|&p| p < i).collect())
            .collect();
        Plan { order, back }
    }
}

/// Candidate images for position `i` given the images of earlier positions.
#[inline]
pub(crate) fn candidates<'a>(
    h: &'a Graph,
    back: &'a [usize],
    image: &'a [usize],
) -> Box<dyn Iterator<Item = usize> + 'a> {
    match back.split_first() {
        None => Box::new(0..h.vertex_count()),
        Some((&first, rest)) => Box::new(
            h.neighbors(image[first]).iter().copied().filter(move |&c| rest.iter().all(|&p| h.has_edge(image[p], c))),
        ),
    }
}

/// Number of homomorphisms from the vertices of `plan` into `h`.
pub(crate) fn count_plan(h: &Graph, plan: &Plan) -> u128 {
    fn rec(h: &Graph, plan: &Plan, image: &mut Vec<usize>, i: usize) -> u128 {
        let last = i + 1 == plan.order.len();
        let back = &plan.back[i];
        if last {
            return candidates(h, back, image).count() as u128;
        }
        let mut total = 0u128;
        let cands: Vec<usize> = candidates(h, back, image).collect();
        for c in cands {
            image.push(c);
            total += rec(h, plan, image, i + 1);
            image.pop();
        }
        total
    }
    if plan.order.is_empty() {
        return 1;
    }
    let mut image = Vec::with_capacity(plan.order.len());
    rec(h, plan, &mut image, 0)
}

/// Visits every homomorphism `g -> h` (as an array indexed by vertex of `g`)
/// until `visit` returns `false`. With `injective`, only injective maps are
/// visited. Returns `false` if the visit was cut short.
pub(crate) fn for_each_hom(g: &Graph, h: &Graph, injective: bool, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let plan = Plan::new(g, None);
    let n = g.vertex_count();
    let mut image: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; h.vertex_count()];
    let mut assignment = vec![0usize; n];

    fn rec(
        h: &Graph,
        plan: &Plan,
        injective: bool,
        image: &mut Vec<usize>,
        used: &mut [bool],
        assignment: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let i = image.len();
        if i == plan.order.len() {
            return visit(assignment);
        }
        let cands: Vec<usize> = candidates(h, &plan.back[i], image).collect();
        for c in cands {
            if injective && used[c] {
                continue;
            }
            used[c] = true;
            image.push(c);
            assignment[plan.order[i]] = c;
            let go_on = rec(h, plan, injective, image, used, assignment, visit);
            image.pop();
            used[c] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
    if injective && n > h.vertex_count() {
        return true;
    }
    rec(h, &plan, injective, &mut image, &mut used, &mut assignment, &mut visit)
}

/// Visits every isomorphism `g -> h`: bijections preserving edges and non-edges.
pub(crate) fn count_isomorphisms(g: &Graph, h: &Graph) -> u128 {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return 0;
    }
    let plan = Plan::new(g, None);
    fn rec(g: &Graph, h: &Graph, plan: &Plan, image: &mut Vec<usize>, used: &mut [bool]) -> u128 {
        let i = image.len();
        if i == plan.order.len() {
            return 1;
        }
        let v = plan.order[i];
        let mut total = 0;
        for c in 0..h.vertex_count() {
            if used[c] || g.degree(v) != h.degree(c) {
                continue;
            }
            let consistent = (0..i).all(|p| g.has_edge(plan.order[p], v) == h.has_edge(image[p], c));
            if !consistent {
                continue;
            }
            used[c] = true;
            image.push(c);
            total += rec(g, h, plan, image, used);
            image.pop();
            used[c] = false;
        }
        total
    }
    rec(g, h, &plan, &mut Vec::with_capacity(n), &mut vec![false; n])
}
