use num_rational::BigRational;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::graph::{contains_clique_subgraph, gen_kneser, gen_standard, independent_sets, Graph, StandardKind};
use crate::homcount::hom_exists;
use crate::lp::{solve_lp, LpProgram, Relation, Sense};

fn nonempty(g: &Graph, what: &str) -> Result<()> {
    if g.vertex_count() == 0 {
        Err(invalid(format!("{what} of the empty graph")))
    } else {
        Ok(())
    }
}

/// Least `k` with a homomorphism into `K_k`.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    nonempty(g, "chromatic number")?;
    let k = (1..=g.vertex_count())
        .find(|&k| hom_exists(g, &gen_standard(StandardKind::Clique, k).expect("k >= 1")))
        .expect("every graph maps into K_n");
    Ok(k)
}

/// Largest `k` with `K_k ⊆ g`.
pub fn clique_number(g: &Graph) -> Result<usize> {
    nonempty(g, "clique number")?;
    Ok((1..=g.vertex_count()).take_while(|&k| contains_clique_subgraph(g, k)).last().unwrap_or(1))
}

fn membership(g: &Graph) -> Result<(Vec<Vec<usize>>, usize)> {
    Ok((independent_sets(g)?, g.vertex_count()))
}

/// The covering program `min Σ x_U` over independent sets `U` (the empty set
/// included) with `Σ_{U ∋ v} x_U >= 1` for every vertex.
pub fn fractional_chromatic_program(g: &Graph) -> Result<LpProgram> {
    let (sets, n) = membership(g)?;
    let one = BigRational::one;
    let mut p = LpProgram::new(Sense::Min, vec![one(); sets.len()]);
    for v in 0..n {
        let row = sets.iter().map(|s| BigRational::from_integer((s.contains(&v) as i64).into())).collect();
        p.add(row, Relation::Ge, one());
    }
    Ok(p)
}

/// The packing program `max Σ y_v` with `Σ_{v ∈ U} y_v <= 1` for every
/// independent set `U`; the dual of [`fractional_chromatic_program`].
pub fn fractional_clique_program(g: &Graph) -> Result<LpProgram> {
    let (sets, n) = membership(g)?;
    let one = BigRational::one;
    let mut p = LpProgram::new(Sense::Max, vec![one(); n]);
    for s in &sets {
        let mut row = vec![BigRational::from_integer(0.into()); n];
        for &v in s {
            row[v] = one();
        }
        p.add(row, Relation::Le, one());
    }
    Ok(p)
}

fn optimum(p: &LpProgram) -> Result<BigRational> {
    let s = solve_lp(p)?;
    if !s.is_optimal() {
        return Err(Error::Internal(format!("covering/packing program not optimal: {:?}", s.status)));
    }
    Ok(s.objective)
}

/// `χ_f(g)`, the optimum of the covering program.
pub fn fractional_chromatic_number(g: &Graph) -> Result<BigRational> {
    nonempty(g, "fractional chromatic number")?;
    optimum(&fractional_chromatic_program(g)?)
}

/// `ω_f(g)`, the optimum of the packing program, solved on its own.
pub fn fractional_clique_number(g: &Graph) -> Result<BigRational> {
    nonempty(g, "fractional clique number")?;
    optimum(&fractional_clique_program(g)?)
}

/// Both fractional parameters from two separate solves; unequal optima would
/// contradict LP duality and are reported as an internal error.
pub fn fractional_parameters(g: &Graph) -> Result<BigRational> {
    let chi_f = fractional_chromatic_number(g)?;
    let omega_f = fractional_clique_number(g)?;
    if chi_f != omega_f {
        return Err(Error::Internal(format!("primal optimum {chi_f} differs from dual optimum {omega_f}")));
    }
    Ok(chi_f)
}

/// Whether `g` maps into the Kneser graph `K_{a:b}`.
pub fn kneser_colorable(g: &Graph, a: usize, b: usize) -> Result<bool> {
    Ok(hom_exists(g, &gen_kneser(a, b)?))
}

/// Smallest `a/b` with `g -> K_{a:b}` over `b <= max_b` and `a <= b·χ(g)`.
/// An upper bound on `χ_f(g)` that meets it once `max_b` is large enough.
pub fn kneser_fraction(g: &Graph, max_b: usize) -> Result<BigRational> {
    let chi = chromatic_number(g)?;
    let mut best = BigRational::from_integer(chi.into());
    for b in 1..=max_b.max(1) {
        for a in 2 * b..=b * chi {
            let r = BigRational::new(a.into(), b.into());
            if r >= best {
                break;
            }
            if kneser_colorable(g, a, b)? {
                best = r;
                break;
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::graph::{enumerate_graphs, gen_frac_pair, StandardKind::*};
    use crate::lp::dualize;

    fn std(kind: StandardKind, n: usize) -> Graph {
        gen_standard(kind, n).unwrap()
    }

    #[test]
    fn integer_parameters() {
        assert_eq!(chromatic_number(&std(Cycle, 5)).unwrap(), 3);
        assert_eq!(clique_number(&std(Cycle, 5)).unwrap(), 2);
        let petersen = gen_kneser(5, 2).unwrap();
        assert_eq!((chromatic_number(&petersen).unwrap(), clique_number(&petersen).unwrap()), (3, 2));
        for n in 1..=6 {
            assert_eq!(chromatic_number(&std(Clique, n)).unwrap(), n);
        }
        assert_eq!(clique_number(&std(Independent, 3)).unwrap(), 1);
        assert!(chromatic_number(&Graph::empty()).is_err());
        assert!(clique_number(&Graph::empty()).is_err());
    }

    #[test]
    fn fractional_values() {
        assert_eq!(fractional_parameters(&std(Cycle, 5)).unwrap(), rational(5, 2));
        assert_eq!(fractional_parameters(&std(Cycle, 7)).unwrap(), rational(7, 3));
        for n in 1..=5 {
            assert_eq!(fractional_parameters(&std(Clique, n)).unwrap(), rational(n as i64, 1));
        }
        assert_eq!(fractional_parameters(&std(Path, 4)).unwrap(), rational(2, 1));
        assert_eq!(fractional_parameters(&gen_frac_pair(3).unwrap().1).unwrap(), rational(2, 1));
        assert!(fractional_chromatic_number(&Graph::empty()).is_err());
    }

    #[test]
    fn programs_are_mutually_dual() {
        let c5 = std(Cycle, 5);
        let primal = fractional_chromatic_program(&c5).unwrap();
        let dual = fractional_clique_program(&c5).unwrap();
        assert_eq!((dual.var_count(), dual.constraints.len()), (5, 11));
        assert_eq!(dualize(&primal).unwrap(), dual);
    }

    #[test]
    fn sandwich_on_small_graphs() {
        for g in enumerate_graphs(5).unwrap() {
            let f = fractional_parameters(&g).unwrap();
            let omega = BigRational::from_integer(clique_number(&g).unwrap().into());
            let chi = BigRational::from_integer(chromatic_number(&g).unwrap().into());
            assert!(omega <= f && f <= chi, "{g:?}");
        }
    }

    #[test]
    fn kneser_targets() {
        let c5 = std(Cycle, 5);
        assert!(kneser_colorable(&c5, 5, 2).unwrap());
        assert!(!kneser_colorable(&c5, 2, 1).unwrap());
        assert!(kneser_colorable(&std(Clique, 3), 3, 1).unwrap());
        assert!(kneser_colorable(&c5, 3, 2).is_err());
        assert_eq!(kneser_fraction(&c5, 3).unwrap(), rational(5, 2));
        assert_eq!(kneser_fraction(&std(Cycle, 7), 3).unwrap(), rational(7, 3));
    }
}
