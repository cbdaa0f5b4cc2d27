use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{count_aut, count_hom, count_inj, count_sur};
use crate::arith::BigCount;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_graphs, CanonicalCode, Graph};
use crate::guard;

/// Both sides of `hom(D, G) = Σ_E sur(D, E) · inj(E, G) / aut(E)`, plus the
/// non-zero terms of the right-hand side keyed by the type `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub lhs: BigCount,
    pub rhs: BigCount,
    pub terms: Vec<(CanonicalCode, BigCount)>,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of the surjective/injective decomposition of
/// `hom(d, g)`. `E` ranges over isomorphism types on at most `|V(d)|` vertices.
///
/// Each division by `aut(E)` must be exact; a remainder means one of the
/// counters is wrong and is reported as [`Error::Internal`].
pub fn decomposition_check(d: &Graph, g: &Graph) -> Result<Decomposition> {
    guard::DECOMPOSITION.check(d.vertex_count())?;
    guard::DECOMPOSITION.check(g.vertex_count())?;
    let lhs = count_hom(d, g);
    let mut rhs = BigUint::zero();
    let mut terms = Vec::new();
    if d.vertex_count() == 0 {
        // only the empty type contributes, with every factor one
        rhs = BigUint::one();
        terms.push((canonical_form(d), BigUint::one()));
    }
    for e in enumerate_graphs(d.vertex_count())? {
        if e.edge_count() > d.edge_count() {
            continue;
        }
        let sur = count_sur(d, &e);
        if sur.is_zero() {
            continue;
        }
        let inj = count_inj(&e, g);
        if inj.is_zero() {
            continue;
        }
        let aut = count_aut(&e);
        let (term, rem) = (sur * inj).div_rem(&aut);
        if !rem.is_zero() {
            return Err(Error::Internal(format!("sur·inj not divisible by aut({aut}) for E = {}", canonical_form(&e))));
        }
        rhs += &term;
        terms.push((canonical_form(&e), term));
    }
    Ok(Decomposition { lhs, rhs, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_standard, StandardKind::*};

    #[test]
    fn edge_into_triangle() {
        let k2 = gen_standard(Clique, 2).unwrap();
        let k3 = gen_standard(Clique, 3).unwrap();
        let d = decomposition_check(&k2, &k3).unwrap();
        assert_eq!(d.lhs, BigUint::from(6u32));
        assert_eq!(d.rhs, BigUint::from(6u32));
        assert_eq!(d.terms, vec![(canonical_form(&k2), BigUint::from(6u32))]);
    }

    #[test]
    fn single_vertex_source() {
        let i1 = gen_standard(Independent, 1).unwrap();
        let c5 = gen_standard(Cycle, 5).unwrap();
        let d = decomposition_check(&i1, &c5).unwrap();
        assert_eq!((d.lhs.clone(), d.terms.len()), (BigUint::from(5u32), 1));
        assert!(d.holds());
    }

    #[test]
    fn identity_on_all_small_pairs() {
        let graphs = enumerate_graphs(4).unwrap();
        for d in &graphs {
            for g in &graphs {
                assert!(decomposition_check(d, g).unwrap().holds(), "{d:?} {g:?}");
            }
        }
    }

    #[test]
    fn guarded() {
        let c6 = gen_standard(Cycle, 6).unwrap();
        assert!(matches!(decomposition_check(&c6, &c6), Err(Error::Guard { .. })));
        let empty = Graph::empty();
        assert!(decomposition_check(&empty, &c6.induced(&[0, 1, 2])).unwrap().holds());
    }
}
