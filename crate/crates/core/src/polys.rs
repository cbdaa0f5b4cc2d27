//! The chromatic, characteristic, cluster expansion and independence
//! polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::Polynomial;
use crate::error::{invalid, Error, Result};
use crate::graph::{canonical_form, component_vertex_sets, independent_sets, CanonicalCode, Graph};
use crate::guard;
use crate::homcount::closed_walk_counts;

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `x (x - 1) ... (x - n + 1)`
pub fn falling_factorial(n: usize) -> Polynomial {
    (0..n as i64).fold(Polynomial::one(1), |acc, i| &acc * &Polynomial::from_coeffs([int(-i), int(1)]))
}

/// `χ(G, x)`, the number of proper colourings with `x` colours.
///
/// Uses addition–contraction: for non-adjacent `u, v`,
/// `χ(G) = χ(G + uv) + χ(G / uv)`, bottoming out at cliques. Components are
/// multiplied, a vertex whose neighbourhood is a clique of size `d` peels off a
/// factor `x - d`, and results are memoized by canonical code.
pub fn chromatic_polynomial(g: &Graph) -> Result<Polynomial> {
    if g.vertex_count() == 0 {
        return Err(invalid("chromatic polynomial of the empty graph"));
    }
    guard::CHROMATIC_VERTICES.check(g.vertex_count())?;
    let mut memo = HashMap::new();
    Ok(chromatic(g, &mut memo))
}

fn chromatic(g: &Graph, memo: &mut HashMap<CanonicalCode, Polynomial>) -> Polynomial {
    let comps = component_vertex_sets(g);
    if comps.len() > 1 {
        return comps.iter().fold(Polynomial::one(1), |acc, c| {
            let part = if c.len() == 1 { Polynomial::x() } else { chromatic(&g.induced(c), memo) };
            &acc * &part
        });
    }
    let n = g.vertex_count();
    if g.edge_count() == n * (n - 1) / 2 {
        return falling_factorial(n);
    }
    if let Some(v) = (0..n).find(|&v| is_simplicial(g, v)) {
        let rest: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        let factor = Polynomial::from_coeffs([int(-(g.degree(v) as i64)), int(1)]);
        return &factor * &chromatic(&g.induced(&rest), memo);
    }
    let code = canonical_form(g);
    if let Some(p) = memo.get(&code) {
        return p.clone();
    }
    // the non-adjacent pair with the most common neighbours
    let mut best = (0, 0, 0);
    let mut found = false;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common = g.neighbors(u).iter().filter(|&&w| g.has_edge(v, w)).count();
            if !found || common > best.0 {
                best = (common, u, v);
                found = true;
            }
        }
    }
    let (_, u, v) = best;
    let added = g.add_edge(u, v).expect("non-adjacent pair");
    let contracted = g.contract(u, v).expect("non-adjacent pair");
    let p = &chromatic(&added, memo) + &chromatic(&contracted, memo);
    memo.insert(code, p.clone());
    p
}

fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v);
    nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// `det(xI - A)`, from the power sums `trace(A^k)` via Newton's identities.
pub fn characteristic_polynomial(g: &Graph) -> Result<Polynomial> {
    let n = g.vertex_count();
    guard::CHARPOLY_VERTICES.check(n)?;
    let traces: Vec<BigRational> =
        closed_walk_counts(g, n).into_iter().map(|t| BigRational::from_integer(t.into())).collect();
    // e[k] are the elementary symmetric functions of the eigenvalues
    let mut e = vec![BigRational::one()];
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &traces[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / int(k as i64));
    }
    // det(xI - A) = Σ (-1)^k e_k x^(n-k)
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (k, ek) in e.into_iter().enumerate() {
        coeffs[n - k] = if k % 2 == 0 { ek } else { -ek };
    }
    let p = Polynomial::from_coeffs(coeffs);
    if !p.is_integral() {
        return Err(Error::Internal("characteristic polynomial has a non-integer coefficient".into()));
    }
    Ok(p)
}

/// `Σ_{A ⊆ E} x^{c(A)} y^{|A|}` where `c(A)` counts the components of `(V, A)`.
pub fn cluster_expansion_polynomial(g: &Graph) -> Result<Polynomial> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    guard::CEP_EDGES.check(m)?;
    let edges = g.edges();
    let chunk_bits = m.min(6);
    let chunks = 1u64 << chunk_bits;
    let per_chunk = 1u64 << (m - chunk_bits);
    let table = (0..chunks)
        .into_par_iter()
        .map(|hi| {
            let mut local = vec![vec![0u64; m + 1]; n + 1];
            let mut parent = vec![0usize; n];
            for lo in 0..per_chunk {
                let mask = (hi << (m - chunk_bits)) | lo;
                parent.iter_mut().enumerate().for_each(|(i, p)| *p = i);
                let mut comps = n;
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        if a != b {
                            parent[a] = b;
                            comps -= 1;
                        }
                    }
                }
                local[comps][mask.count_ones() as usize] += 1;
            }
            local
        })
        .reduce(
            || vec![vec![0u64; m + 1]; n + 1],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    for (x, y) in ra.iter_mut().zip(rb) {
                        *x += y;
                    }
                }
                a
            },
        );
    let mut p = Polynomial::zero(2);
    for (c, row) in table.into_iter().enumerate() {
        for (size, count) in row.into_iter().enumerate() {
            if count > 0 {
                p = &p + &Polynomial::monomial(BigRational::from_integer(count.into()), c as u32, size as u32, 2);
            }
        }
    }
    Ok(p)
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// `Σ_U x^{|U|} y^{|V \ U|}` over the independent sets `U`, the empty set included.
pub fn independence_polynomial(g: &Graph) -> Result<Polynomial> {
    let n = g.vertex_count();
    let mut by_size = vec![0u64; n + 1];
    for set in independent_sets(g)? {
        by_size[set.len()] += 1;
    }
    let mut p = Polynomial::zero(2);
    for (k, count) in by_size.into_iter().enumerate() {
        if count > 0 {
            p = &p + &Polynomial::monomial(BigRational::from_integer(count.into()), k as u32, (n - k) as u32, 2);
        }
    }
    Ok(p)
}
