use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;
use crate::lp::{solve_lp, LpProgram, Relation};

/// A doubly stochastic rational `X` (rows indexed by `V(g)`, columns by
/// `V(h)`) with `A_g X = X A_h`, if one exists.
///
/// Solved as an exact feasibility LP over the `n²` entries. Graphs of
/// different orders are never fractionally isomorphic.
pub fn fractional_isomorphism_lp(g: &Graph, h: &Graph) -> Option<Vec<Vec<BigRational>>> {
    let n = g.vertex_count();
    if n != h.vertex_count() {
        return None;
    }
    let var = |u: usize, v: usize| u * n + v;
    let zero = BigRational::zero;
    let one = BigRational::one;
    let mut p = LpProgram::feasibility(n * n);
    for u in 0..n {
        for v in 0..n {
            // (AX)_{uv} - (XB)_{uv} = Σ_w A_uw X_wv - Σ_w X_uw B_wv
            let mut row = vec![zero(); n * n];
            for &w in g.neighbors(u) {
                row[var(w, v)] += one();
            }
            for &w in h.neighbors(v) {
                row[var(u, w)] -= one();
            }
            if row.iter().any(|c| !c.is_zero()) {
                p.add(row, Relation::Eq, zero());
            }
        }
    }
    for u in 0..n {
        let mut row = vec![zero(); n * n];
        let mut col = vec![zero(); n * n];
        for v in 0..n {
            row[var(u, v)] = one();
            col[var(v, u)] = one();
        }
        p.add(row, Relation::Eq, one());
        p.add(col, Relation::Eq, one());
    }
    let solution = solve_lp(&p).expect("well-formed program");
    if !solution.is_optimal() {
        return None;
    }
    let x: Vec<Vec<BigRational>> = solution.values.chunks(n).map(|r| r.to_vec()).collect();
    debug_assert!(is_fractional_isomorphism(g, h, &x));
    Some(x)
}

/// Exact check of a certificate: `X >= 0`, unit row and column sums, and
/// `A_g X = X A_h`.
pub fn is_fractional_isomorphism(g: &Graph, h: &Graph, x: &[Vec<BigRational>]) -> bool {
    let n = g.vertex_count();
    if h.vertex_count() != n || x.len() != n || x.iter().any(|r| r.len() != n) {
        return false;
    }
    if x.iter().flatten().any(|c| c.is_negative()) {
        return false;
    }
    for i in 0..n {
        let row: BigRational = x[i].iter().sum();
        let col: BigRational = x.iter().map(|r| &r[i]).sum();
        if !row.is_one() || !col.is_one() {
            return false;
        }
    }
    (0..n).all(|u| {
        (0..n).all(|v| {
            let ax: BigRational = g.neighbors(u).iter().map(|&w| &x[w][v]).sum();
            let xb: BigRational = h.neighbors(v).iter().map(|&w| &x[u][w]).sum();
            ax == xb
        })
    })
}
