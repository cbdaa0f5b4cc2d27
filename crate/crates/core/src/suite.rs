//! Reproduction suites: each runs an exhaustive check over small graphs and
//! reports every sub-check it made. All comparisons are exact.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{count_to_rational, poly_interpolate, Polynomial, Semiring};
use crate::error::Result;
use crate::graph::{
    contains_clique_subgraph, enumerate_graphs, gen_chrom_pair, gen_frac_pair, gen_lollipop, gen_standard,
    gen_weighted_clique, is_bipartite, is_isomorphic, Graph, StandardKind,
};
use crate::homcount::{
    count_hom, count_hom_cycle, count_hom_tree_dp, count_hom_weighted, decomposition_check, hom_exists, HomAssignment,
};
use crate::polys::{
    characteristic_polynomial, chromatic_polynomial, cluster_expansion_polynomial, falling_factorial,
    independence_polynomial,
};
use crate::relax::{
    chromatic_number, clique_number, fractional_chromatic_number, fractional_isomorphism_lp, fractional_parameters,
    is_fractional_isomorphism, kneser_colorable, wl_equivalent,
};
use crate::vectors::hom_routed;

/// Names accepted by [`run_suite`], in order.
pub const SUITES: [&str; 11] = [
    "decomposition",
    "distinguishers",
    "fractional-isomorphism",
    "clique-witnesses",
    "cospectrality",
    "chromatic",
    "x1-x2-dominance",
    "semiring-identities",
    "fractional-parameters",
    "boolean-gadgets",
    "fast-paths",
];

/// Outcome of one suite: how many sub-checks ran, and the labels of those that
/// failed.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub index: usize,
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:>2} {:<24} {}/{} checks",
            self.index,
            self.name,
            self.checks - self.failures.len(),
            self.checks
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, "; first failure: {first}")?;
        }
        Ok(())
    }
}

struct Checks {
    count: usize,
    failures: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks { count: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn merge(&mut self, (count, failures): (usize, Vec<String>)) {
        self.count += count;
        self.failures.extend(failures);
    }
}

/// Runs the suite called `name` (see [`SUITES`]).
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let index = SUITES
        .iter()
        .position(|&s| s == name)
        .ok_or_else(|| crate::error::Error::Validation(format!("unknown suite `{name}`")))?;
    let start = Instant::now();
    let mut c = Checks::new();
    match index {
        0 => decomposition(&mut c)?,
        1 => distinguishers(&mut c)?,
        2 => fractional_isomorphism(&mut c)?,
        3 => clique_witnesses(&mut c)?,
        4 => cospectrality(&mut c)?,
        5 => chromatic(&mut c)?,
        6 => x1_x2_dominance(&mut c)?,
        7 => semiring_identities(&mut c)?,
        8 => fractional_parameters_suite(&mut c)?,
        9 => boolean_gadgets(&mut c)?,
        _ => fast_paths(&mut c)?,
    }
    Ok(SuiteReport {
        index: index + 1,
        name: SUITES[index],
        checks: c.count,
        failures: c.failures,
        elapsed: start.elapsed(),
    })
}

/// Runs every suite in order.
pub fn run_all() -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|s| run_suite(s)).collect()
}

fn std(kind: StandardKind, n: usize) -> Graph {
    gen_standard(kind, n).expect("n >= 1")
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

/// Collects `(checks, failures)` from a parallel sweep.
fn sweep<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Vec<(bool, String)>> + Sync + Send,
) -> Result<(usize, Vec<String>)> {
    let results: Vec<Result<Vec<(bool, String)>>> = items.par_iter().map(f).collect();
    let mut count = 0;
    let mut failures = Vec::new();
    for r in results {
        for (ok, label) in r? {
            count += 1;
            if !ok {
                failures.push(label);
            }
        }
    }
    Ok((count, failures))
}

fn pairs(graphs: &[Graph]) -> Vec<(&Graph, &Graph)> {
    graphs.iter().enumerate().flat_map(|(i, g)| graphs[i..].iter().map(move |h| (g, h))).collect()
}

fn decomposition(c: &mut Checks) -> Result<()> {
    let graphs = enumerate_graphs(4)?;
    c.check(graphs.len() == 18, || format!("{} types on at most 4 vertices", graphs.len()));
    let all: Vec<(&Graph, &Graph)> = graphs.iter().flat_map(|d| graphs.iter().map(move |g| (d, g))).collect();
    c.merge(sweep(&all, |&(d, g)| {
        let r = decomposition_check(d, g)?;
        Ok(vec![(r.holds(), format!("hom({d}, {g}): {} vs {}", r.lhs, r.rhs))])
    })?);
    Ok(())
}

fn distinguishers(c: &mut Checks) -> Result<()> {
    let graphs = enumerate_graphs(5)?;
    // rows of hom(F, G) and hom(G, F) for every G, over F up to five vertices
    let left: Vec<Vec<BigUint>> =
        graphs.par_iter().map(|g| graphs.iter().map(|f| hom_routed(f, g)).collect()).collect();
    let right: Vec<Vec<BigUint>> =
        graphs.par_iter().map(|g| graphs.iter().map(|f| count_hom(g, f)).collect()).collect();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            c.check(left[i] != left[j], || format!("no left distinguisher for {} / {}", graphs[i], graphs[j]));
            c.check(right[i] != right[j], || format!("no right distinguisher for {} / {}", graphs[i], graphs[j]));
        }
    }
    Ok(())
}

fn fractional_isomorphism(c: &mut Checks) -> Result<()> {
    for n in 3..=4 {
        let (g, h) = gen_frac_pair(n)?;
        c.check(wl_equivalent(&g, &h, 1)?, || format!("colour refinement separates the n = {n} pair"));
        let x = fractional_isomorphism_lp(&g, &h);
        c.check(x.as_ref().is_some_and(|x| is_fractional_isomorphism(&g, &h, x)), || {
            format!("no verified doubly stochastic certificate for n = {n}")
        });
    }
    let (g3, h3) = gen_frac_pair(3)?;
    c.check(!wl_equivalent(&g3, &h3, 2)?, || "2-WL fails to separate the n = 3 pair".into());
    let graphs = enumerate_graphs(5)?;
    let same_size: Vec<_> = pairs(&graphs).into_iter().filter(|(g, h)| g.vertex_count() == h.vertex_count()).collect();
    c.merge(sweep(&same_size, |&(g, h)| {
        let wl = wl_equivalent(g, h, 1)?;
        let lp = fractional_isomorphism_lp(g, h).is_some();
        Ok(vec![(wl == lp, format!("{g} / {h}: refinement {wl}, LP {lp}"))])
    })?);
    Ok(())
}

fn clique_witnesses(c: &mut Checks) -> Result<()> {
    let targets = enumerate_graphs(6)?;
    for n in 3..=4 {
        let (g, h) = gen_frac_pair(n)?;
        c.merge(sweep(&targets, |d| {
            let kn = contains_clique_subgraph(d, n);
            let kn1 = contains_clique_subgraph(d, n - 1);
            Ok(vec![
                (hom_exists(&g, d) == kn, format!("G_{n} -> {d} vs K_{n} in it ({kn})")),
                (hom_exists(&h, d) == kn1, format!("H_{n} -> {d} vs K_{} in it ({kn1})", n - 1)),
            ])
        })?);
    }
    Ok(())
}

fn cospectrality(c: &mut Checks) -> Result<()> {
    let c4_i1 = std(StandardKind::Cycle, 4).disjoint_union(&std(StandardKind::Independent, 1));
    let star = Graph::new(5, (1..5).map(|v| (0, v)))?;
    let target = Polynomial::from_coeffs([0, 0, 0, -4, 0, 1].map(int));
    c.check(characteristic_polynomial(&c4_i1)? == target, || "p(C4 + I1) != x^5 - 4x^3".into());
    c.check(characteristic_polynomial(&star)? == target, || "p(K_{1,4}) != x^5 - 4x^3".into());
    for k in 1..=5 {
        c.check(count_hom_cycle(k, &c4_i1)? == count_hom_cycle(k, &star)?, || {
            format!("hom(C_{k}) differs on the star pair")
        });
    }
    let graphs = enumerate_graphs(5)?;
    let polys: Vec<Polynomial> = graphs.iter().map(characteristic_polynomial).collect::<Result<_>>()?;
    let cycles: Vec<Vec<BigUint>> =
        graphs.iter().map(|g| (1..=5).map(|k| count_hom_cycle(k, g)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let index: Vec<(usize, usize)> = (0..graphs.len()).flat_map(|i| (i..graphs.len()).map(move |j| (i, j))).collect();
    c.merge(sweep(&index, |&(i, j)| {
        let (g, h) = (&graphs[i], &graphs[j]);
        let n = g.vertex_count().max(h.vertex_count());
        let spectral = polys[i] == polys[j];
        let walks = cycles[i][..n] == cycles[j][..n];
        let mut out = vec![(spectral == walks, format!("{g} / {h}: spectra {spectral}, cycle counts {walks}"))];
        if wl_equivalent(g, h, 2)? {
            out.push((spectral, format!("{g} / {h}: 2-WL equivalent but not cospectral")));
        }
        Ok(out)
    })?);
    Ok(())
}

fn chromatic(c: &mut Checks) -> Result<()> {
    let x = Polynomial::x();
    let x1 = &x - &Polynomial::one(1);
    for n in 1..=8 {
        c.check(chromatic_polynomial(&std(StandardKind::Independent, n))? == x.pow(n as u32), || format!("chi(I_{n})"));
        c.check(chromatic_polynomial(&std(StandardKind::Clique, n))? == falling_factorial(n), || format!("chi(K_{n})"));
    }
    for n in 3..=8u32 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let closed = &x1.pow(n) + &x1.scale(&int(sign));
        c.check(chromatic_polynomial(&std(StandardKind::Cycle, n as usize))? == closed, || format!("chi(C_{n})"));
    }
    let (a, b) = gen_chrom_pair();
    let target = &x.pow(2) * &x1.pow(2);
    c.check(chromatic_polynomial(&a)? == target, || "chi(X1) != x^2 (x-1)^2".into());
    c.check(chromatic_polynomial(&b)? == target, || "chi(X2) != x^2 (x-1)^2".into());
    let c8 = chromatic_polynomial(&std(StandardKind::Cycle, 8))?;
    let c4c4 = chromatic_polynomial(&std(StandardKind::Cycle, 4).n_fold_union(2))?;
    c.check(c8 == &x1.pow(8) + &x1, || "chi(C8) closed form".into());
    c.check(c4c4 == (&x1.pow(4) + &x1).pow(2), || "chi(C4 + C4) closed form".into());
    c.check(c8 != c4c4, || "C8 and C4 + C4 chromatically equivalent".into());
    let graphs = enumerate_graphs(5)?;
    c.merge(sweep(&graphs, |g| {
        let p = chromatic_polynomial(g)?;
        let mut out = Vec::new();
        let mut points = Vec::new();
        for k in 0..=5usize {
            let hom = if k == 0 {
                BigRational::zero()
            } else {
                count_to_rational(&count_hom(g, &std(StandardKind::Clique, k)))
            };
            out.push((p.eval(&[int(k as i64)])? == hom, format!("chi({g}, {k}) vs hom(G, K_{k})")));
            points.push((int(k as i64), hom));
        }
        let n = g.vertex_count();
        out.push((poly_interpolate(&points[..=n], n)? == p, format!("interpolated chi({g})")));
        Ok(out)
    })?);
    Ok(())
}

/// `I_m + n K_2`
fn matching_with_isolated(m: usize, n: usize) -> Graph {
    Graph::new(m, []).expect("no edges").disjoint_union(&std(StandardKind::Clique, 2).n_fold_union(n))
}

fn is_matching_with_isolated(f: &Graph) -> bool {
    (0..f.vertex_count()).all(|v| f.degree(v) <= 1)
}

fn x1_x2_dominance(c: &mut Checks) -> Result<()> {
    let (x1, x2) = gen_chrom_pair();
    let graphs = enumerate_graphs(6)?;
    c.merge(sweep(&graphs, |f| {
        let (a, b) = (count_hom(f, &x1), count_hom(f, &x2));
        let equal_expected = !is_bipartite(f) || is_matching_with_isolated(f);
        Ok(vec![
            (a >= b, format!("hom({f}, X1) = {a} < hom({f}, X2) = {b}")),
            ((a == b) == equal_expected, format!("hom({f}, X1) = {a}, hom({f}, X2) = {b}: equality unexpected")),
        ])
    })?);
    let c8 = std(StandardKind::Cycle, 8);
    let c4c4 = std(StandardKind::Cycle, 4).n_fold_union(2);
    for m in 0..=3usize {
        for n in 0..=3 - m {
            let f = matching_with_isolated(m, n);
            let expected = BigUint::from(8u32).pow(m as u32) * BigUint::from(16u32).pow(n as u32);
            c.check(count_hom(&f, &c8) == expected, || format!("hom(I_{m} + {n}K2, C8)"));
            c.check(count_hom(&f, &c4c4) == expected, || format!("hom(I_{m} + {n}K2, C4 + C4)"));
        }
    }
    Ok(())
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=5).into())
}

fn semiring_identities(c: &mut Checks) -> Result<()> {
    let q = Semiring::rationals();
    let five = enumerate_graphs(5)?;
    c.merge(sweep(&five, |g| {
        let cep = cluster_expansion_polynomial(g)?;
        let chi = chromatic_polynomial(g)?;
        (1..=4)
            .map(|k| Ok((cep.eval(&[int(k), int(-1)])? == chi.eval(&[int(k)])?, format!("CEP({g}; {k}, -1)"))))
            .collect()
    })?);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for g in enumerate_graphs(4)? {
        let cep = cluster_expansion_polynomial(&g)?;
        for _ in 0..3 {
            let k = rng.gen_range(1..=4usize);
            let y = random_rational(&mut rng);
            let lhs = cep.eval(&[int(k as i64), y.clone()])?;
            let rhs = count_hom_weighted(&g, &gen_weighted_clique(k, &y)?, &q)?;
            c.check(lhs == rhs, || format!("CEP({g}; {k}, {y}) vs weighted clique"));
        }
    }
    for g in &five {
        let ind = independence_polynomial(g)?;
        for _ in 0..3 {
            let (x, y) = (random_rational(&mut rng), random_rational(&mut rng));
            let lhs = ind.eval(&[x.clone(), y.clone()])?;
            let rhs = count_hom_weighted(g, &gen_lollipop(&x, &y), &q)?;
            c.check(lhs == rhs, || format!("I({g}; {x}, {y}) vs lollipop"));
        }
    }
    Ok(())
}

fn fractional_parameters_suite(c: &mut Checks) -> Result<()> {
    for n in 2..=3i64 {
        let cycle = std(StandardKind::Cycle, (2 * n + 1) as usize);
        let expected = int(2) + BigRational::new(1.into(), n.into());
        c.check(fractional_chromatic_number(&cycle)? == expected, || format!("chi_f(C_{})", 2 * n + 1));
    }
    let graphs = enumerate_graphs(6)?;
    c.merge(sweep(&graphs, |g| {
        let f = fractional_parameters(g)?;
        let omega = int(clique_number(g)? as i64);
        let chi = int(chromatic_number(g)? as i64);
        Ok(vec![(omega <= f && f <= chi, format!("{g}: omega {omega}, chi_f {f}, chi {chi}"))])
    })?);
    let c5 = std(StandardKind::Cycle, 5);
    let f = fractional_chromatic_number(&c5)?;
    c.check(int(clique_number(&c5)? as i64) < f && f < int(chromatic_number(&c5)? as i64), || {
        "C5 sandwich not strict".into()
    });
    c.check(kneser_colorable(&c5, 5, 2)?, || "C5 does not map to K(5:2)".into());
    c.check(!kneser_colorable(&c5, 2, 1)?, || "C5 maps to K(2:1)".into());
    Ok(())
}

fn boolean_gadgets(c: &mut Checks) -> Result<()> {
    for l in 1..=4usize {
        for m in 1..=4usize {
            let exists = hom_exists(&std(StandardKind::Cycle, 2 * l + 1), &std(StandardKind::Cycle, 2 * m + 1));
            c.check(exists == (m <= l), || format!("C_{} -> C_{}", 2 * l + 1, 2 * m + 1));
        }
    }
    let k2 = std(StandardKind::Clique, 2);
    let sources: Vec<Graph> = enumerate_graphs(5)?.into_iter().filter(|d| d.edge_count() > 0).collect();
    c.merge(sweep(&sources, |d| {
        let f = d.tensor_product(&k2);
        // the first projection is an explicit witness
        let projection = HomAssignment((0..f.vertex_count()).map(|x| x / 2).collect());
        Ok(vec![
            (is_bipartite(&f), format!("{d} x K2 not bipartite")),
            (hom_exists(&f, d) && projection.is_homomorphism(&f, d), format!("{d} x K2 -/-> {d}")),
        ])
    })?);
    Ok(())
}

/// A uniformly random labelled tree on `n` vertices from a random Prüfer code.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 2 {
        return std(StandardKind::Path, n.max(1));
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("valid tree")
}

/// An Erdős–Rényi graph with edge probability `num/den`.
pub fn random_graph(n: usize, num: u32, den: u32, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_ratio(num, den)).collect();
    Graph::new(n, edges).expect("valid graph")
}

fn fast_paths(c: &mut Checks) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let limit = Duration::from_secs(1);
    let tree = random_tree(20, &mut rng);
    let big = random_graph(200, 1, 20, &mut rng);
    let start = Instant::now();
    let count = count_hom_tree_dp(&tree, &big)?;
    let took = start.elapsed();
    c.check(took < limit, || format!("tree DP on 20 -> 200 vertices took {took:?}"));
    c.check(!count.is_zero() || big.edge_count() == 0, || "tree count into a graph with edges is zero".into());
    for _ in 0..5 {
        let t = random_tree(rng.gen_range(2..=8), &mut rng);
        let g = random_graph(10, 1, 3, &mut rng);
        c.check(count_hom_tree_dp(&t, &g)? == count_hom(&t, &g), || format!("tree DP {t} -> {g}"));
    }
    let hundred = random_graph(100, 1, 10, &mut rng);
    for k in 1..=12 {
        let start = Instant::now();
        count_hom_cycle(k, &hundred)?;
        let took = start.elapsed();
        c.check(took < limit, || format!("hom(C_{k}) into 100 vertices took {took:?}"));
    }
    let small = random_graph(9, 1, 2, &mut rng);
    for k in 3..=7 {
        c.check(count_hom_cycle(k, &small)? == count_hom(&std(StandardKind::Cycle, k), &small), || {
            format!("cycle trace vs backtracking, k = {k}")
        });
    }
    c.check(is_isomorphic(&tree, &tree.permute(&(0..20).rev().collect::<Vec<_>>())), || "tree relabelling".into());
    Ok(())
}
