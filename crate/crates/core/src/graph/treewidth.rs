use super::Graph;
use crate::error::Result;
use crate::guard;

/// Exact treewidth by dynamic programming over elimination prefixes.
///
/// `tw(S)` is the best width achievable when the vertices of `S` are
/// eliminated first; eliminating `v` after `S` creates a bag of size
/// `|Q(S, v)| + 1` where `Q(S, v)` are the vertices outside `S + v` reachable
/// from `v` through `S`. The empty graph has treewidth 0 by convention.
pub fn treewidth(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    guard::TREEWIDTH.check(n)?;
    if n == 0 {
        return Ok(0);
    }
    if n > 24 {
        return Err(crate::error::Error::Guard { guard: guard::TREEWIDTH.name, limit: 24, actual: n });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))).collect();
    let neighbourhood = |set: u32| {
        let mut out = 0u32;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= adj[v];
        }
        out
    };
    let q_size = |s: u32, v: usize| -> u32 {
        let mut comp = 1u32 << v;
        loop {
            let grown = comp | (neighbourhood(comp) & s);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        (neighbourhood(comp) & !s & !(1u32 << v)).count_ones()
    };
    let full = (1u32 << n) - 1;
    let mut best = vec![u32::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        let mut rest = s;
        let mut value = u32::MAX;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let cand = best[without as usize].max(q_size(without, v));
            value = value.min(cand);
        }
        best[s as usize] = value;
    }
    Ok(best[full as usize] as usize)
}
