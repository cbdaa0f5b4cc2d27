//! Left and right homomorphism vectors over finite or bounded graph classes,
//! distinguisher search, and the injective/surjective closures of a class.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::BigCount;
use crate::error::{invalid, Result};
use crate::graph::{
    canonical_form, enumerate_graphs, enumerate_trees, enumerate_treewidth_le, gen_standard, is_connected,
    is_isomorphic, is_tree, CanonicalCode, Graph, StandardKind,
};
use crate::guard;
use crate::homcount::{count_hom, count_hom_cycle, count_hom_tree_dp, count_inj, count_sur};

/// A named infinite class, always used together with a vertex bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedClass {
    All,
    Trees,
    /// Cycles including the degenerate `C_1 = I_1` and `C_2 = K_2`.
    Cycles,
    Paths,
    Cliques,
    Independents,
    TreewidthLe(usize),
}

impl FromStr for NamedClass {
    type Err = crate::error::Error;

    /// `all`, `trees`, `cycles`, `paths`, `cliques`, `independents` or `tw<=w`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => NamedClass::All,
            "trees" => NamedClass::Trees,
            "cycles" => NamedClass::Cycles,
            "paths" => NamedClass::Paths,
            "cliques" => NamedClass::Cliques,
            "independents" => NamedClass::Independents,
            _ => match s.strip_prefix("tw<=").map(str::parse::<usize>) {
                Some(Ok(w)) => NamedClass::TreewidthLe(w),
                _ => return Err(invalid(format!("unknown class `{s}`"))),
            },
        })
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedClass::All => f.write_str("all"),
            NamedClass::Trees => f.write_str("trees"),
            NamedClass::Cycles => f.write_str("cycles"),
            NamedClass::Paths => f.write_str("paths"),
            NamedClass::Cliques => f.write_str("cliques"),
            NamedClass::Independents => f.write_str("independents"),
            NamedClass::TreewidthLe(w) => write!(f, "tw<={w}"),
        }
    }
}

/// A finite class of graphs: a named class cut off at `bound` vertices, or an
/// explicit list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    Named { class: NamedClass, bound: usize },
    Explicit(Vec<Graph>),
}

impl ClassSpec {
    pub fn named(class: NamedClass, bound: usize) -> Self {
        ClassSpec::Named { class, bound }
    }

    /// Members in canonical order: by vertex count, then edge count, then
    /// canonical code. Explicit lists are sorted the same way and isomorphic
    /// duplicates dropped.
    pub fn expand(&self) -> Result<Vec<Graph>> {
        match *self {
            ClassSpec::Explicit(ref list) => {
                let mut keyed: Vec<_> = list
                    .iter()
                    .map(|g| {
                        let code = canonical_form(g);
                        ((g.vertex_count(), g.edge_count(), code.clone()), code.to_graph())
                    })
                    .collect();
                keyed.sort_by(|a, b| a.0.cmp(&b.0));
                keyed.dedup_by(|a, b| a.0 == b.0);
                Ok(keyed.into_iter().map(|(_, g)| g).collect())
            }
            ClassSpec::Named { class, bound } => match class {
                NamedClass::All => enumerate_graphs(bound),
                NamedClass::Trees => enumerate_trees(bound),
                NamedClass::TreewidthLe(w) => enumerate_treewidth_le(w, bound),
                NamedClass::Cycles | NamedClass::Paths | NamedClass::Cliques | NamedClass::Independents => {
                    guard::FAMILY_BOUND.check(bound)?;
                    let kind = match class {
                        NamedClass::Cycles => StandardKind::Cycle,
                        NamedClass::Paths => StandardKind::Path,
                        NamedClass::Cliques => StandardKind::Clique,
                        _ => StandardKind::Independent,
                    };
                    // canonical representatives keep the ordering convention uniform
                    (1..=bound).map(|n| Ok(canonical_form(&gen_standard(kind, n)?).to_graph())).collect()
                }
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `hom(F, G)` for members `F`.
    Left,
    /// `hom(G, F)` for members `F`.
    Right,
}

impl FromStr for Side {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(invalid(format!("side must be `left` or `right`, got `{s}`"))),
        }
    }
}

/// A homomorphism vector of the graph with canonical code `anchor`, one entry
/// per class member in class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomVector {
    pub side: Side,
    pub anchor: CanonicalCode,
    pub entries: Vec<(CanonicalCode, BigCount)>,
}

impl HomVector {
    pub fn counts(&self) -> impl Iterator<Item = &BigCount> {
        self.entries.iter().map(|(_, c)| c)
    }

    /// `member_graph6,count` rows under a header line.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(["member_graph6", "count"]).expect("in-memory write");
        for (code, count) in &self.entries {
            w.write_record([code.as_str(), &count.to_string()]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }
}

/// `hom(f, g)`, sending trees and cycles to their fast paths.
pub fn hom_routed(f: &Graph, g: &Graph) -> BigCount {
    if f.vertex_count() > 0 && is_tree(f) {
        return count_hom_tree_dp(f, g).expect("checked tree");
    }
    if f.vertex_count() >= 3 && is_connected(f) && (0..f.vertex_count()).all(|v| f.degree(v) == 2) {
        return count_hom_cycle(f.vertex_count(), g).expect("cycle length >= 3");
    }
    count_hom(f, g)
}

fn vector(g: &Graph, members: &[Graph], side: Side) -> HomVector {
    let entries = members
        .par_iter()
        .map(|f| {
            let count = match side {
                Side::Left => hom_routed(f, g),
                Side::Right => count_hom(g, f),
            };
            (canonical_form(f), count)
        })
        .collect();
    HomVector { side, anchor: canonical_form(g), entries }
}

/// `⟨hom(F, G)⟩` over the members `F` of `class`.
pub fn left_vector(g: &Graph, class: &ClassSpec) -> Result<HomVector> {
    Ok(vector(g, &class.expand()?, Side::Left))
}

/// `⟨hom(G, F)⟩` over the members `F` of `class`.
pub fn right_vector(g: &Graph, class: &ClassSpec) -> Result<HomVector> {
    Ok(vector(g, &class.expand()?, Side::Right))
}

/// The first class member whose counts differ, with both counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinguisher {
    pub member: Graph,
    pub count_g: BigCount,
    pub count_h: BigCount,
}

/// Walks the class in order and stops at the first member that tells `g` and
/// `h` apart on the given side.
pub fn first_distinguisher(g: &Graph, h: &Graph, side: Side, class: &ClassSpec) -> Result<Option<Distinguisher>> {
    for f in class.expand()? {
        let (a, b) = match side {
            Side::Left => (hom_routed(&f, g), hom_routed(&f, h)),
            Side::Right => (count_hom(g, &f), count_hom(h, &f)),
        };
        if a != b {
            return Ok(Some(Distinguisher { member: f, count_g: a, count_h: b }));
        }
    }
    Ok(None)
}

/// Some member admits an injective homomorphism from `g`.
pub fn inj_closure_member(members: &[Graph], g: &Graph) -> bool {
    members.iter().any(|f| !count_inj(g, f).is_zero())
}

/// Some member maps onto `g`, hitting every vertex and edge.
pub fn sur_closure_member(members: &[Graph], g: &Graph) -> bool {
    members.iter().any(|f| !count_sur(f, g).is_zero())
}

/// Member of both closures.
pub fn ext_member(members: &[Graph], g: &Graph) -> bool {
    inj_closure_member(members, g) && sur_closure_member(members, g)
}

/// Bounded check that the class equals its extension class: every graph on at
/// most `bound` vertices (the largest member size for explicit lists) that is
/// an extension member is isomorphic to some member.
pub fn ext_closed_check(class: &ClassSpec) -> Result<bool> {
    let members = class.expand()?;
    let bound = match class {
        ClassSpec::Named { bound, .. } => *bound,
        ClassSpec::Explicit(_) => members.iter().map(Graph::vertex_count).max().unwrap_or(0),
    };
    let candidates = enumerate_graphs(bound)?;
    Ok(candidates.par_iter().filter(|e| ext_member(&members, e)).all(|e| members.iter().any(|f| is_isomorphic(f, e))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_chrom_pair, gen_frac_pair, StandardKind::*};
    use num_bigint::BigUint;

    fn std(kind: StandardKind, n: usize) -> Graph {
        gen_standard(kind, n).unwrap()
    }

    fn counts(v: &HomVector) -> Vec<u64> {
        v.counts().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn class_expansion() {
        let cycles = ClassSpec::named(NamedClass::Cycles, 4).expand().unwrap();
        assert_eq!(
            cycles.iter().map(|g| (g.vertex_count(), g.edge_count())).collect::<Vec<_>>(),
            [(1, 0), (2, 1), (3, 3), (4, 4)]
        );
        let explicit = ClassSpec::Explicit(vec![std(Cycle, 4), std(Clique, 2), std(Cycle, 4).permute(&[1, 0, 3, 2])]);
        assert_eq!(explicit.expand().unwrap().len(), 2);
        assert_eq!(explicit.expand().unwrap()[0], canonical_form(&std(Clique, 2)).to_graph());
        assert!(ClassSpec::named(NamedClass::Paths, 40).expand().is_err());
        assert!(ClassSpec::named(NamedClass::All, 9).expand().is_err());
        for name in ["all", "trees", "cycles", "paths", "cliques", "independents", "tw<=2"] {
            assert_eq!(name.parse::<NamedClass>().unwrap().to_string(), name);
        }
        assert!("forests".parse::<NamedClass>().is_err());
    }

    #[test]
    fn named_vectors() {
        let c5 = std(Cycle, 5);
        let right = right_vector(&c5, &ClassSpec::named(NamedClass::Cliques, 3)).unwrap();
        assert_eq!(counts(&right), [0, 0, 30]);
        let petersen = crate::graph::gen_kneser(5, 2).unwrap();
        let left = left_vector(&petersen, &ClassSpec::named(NamedClass::Cycles, 2)).unwrap();
        assert_eq!(counts(&left), [10, 30]);
        let (x1, x2) = gen_chrom_pair();
        let c6 = ClassSpec::Explicit(vec![std(Cycle, 6)]);
        assert_eq!(counts(&left_vector(&x1, &c6).unwrap()), [16]);
        assert_eq!(counts(&left_vector(&x2, &c6).unwrap()), [4]);
    }

    #[test]
    fn routing_agrees_with_backtracking() {
        for f in enumerate_graphs(5).unwrap() {
            for g in enumerate_graphs(4).unwrap().iter().step_by(2) {
                assert_eq!(hom_routed(&f, g), count_hom(&f, g));
            }
        }
    }

    #[test]
    fn distinguishers() {
        let (g3, h3) = gen_frac_pair(3).unwrap();
        let d = first_distinguisher(&g3, &h3, Side::Left, &ClassSpec::named(NamedClass::All, 3)).unwrap().unwrap();
        assert!(is_isomorphic(&d.member, &std(Clique, 3)));
        assert_eq!((d.count_g, d.count_h), (BigUint::from(12u32), BigUint::zero()));
        let trees = ClassSpec::named(NamedClass::Trees, 6);
        assert!(first_distinguisher(&g3, &h3, Side::Left, &trees).unwrap().is_none());
        let indep = ClassSpec::named(NamedClass::Independents, 1);
        assert!(first_distinguisher(&std(Clique, 2), &std(Clique, 3), Side::Right, &indep).unwrap().is_none());
    }

    #[test]
    fn closures() {
        let k3 = [std(Clique, 3)];
        assert!(!ext_member(&k3, &std(Path, 3)));
        assert!(inj_closure_member(&k3, &std(Clique, 2)));
        assert!(!sur_closure_member(&k3, &std(Clique, 2)));
        assert!(sur_closure_member(&[std(Path, 3)], &std(Clique, 2)));
    }

    #[test]
    fn extension_closed_classes() {
        assert!(ext_closed_check(&ClassSpec::named(NamedClass::Trees, 5)).unwrap());
        assert!(ext_closed_check(&ClassSpec::named(NamedClass::Cliques, 5)).unwrap());
        // a triangle only maps onto graphs containing a triangle
        assert!(ext_closed_check(&ClassSpec::Explicit(vec![std(Clique, 3)])).unwrap());
        // P3 maps onto K2, which also embeds back into P3
        assert!(!ext_closed_check(&ClassSpec::Explicit(vec![std(Path, 3)])).unwrap());
        assert!(ext_closed_check(&ClassSpec::named(NamedClass::Paths, 5)).unwrap());
        // C4 folds onto P3
        assert!(!ext_closed_check(&ClassSpec::named(NamedClass::Cycles, 4)).unwrap());
    }

    #[test]
    fn csv_export() {
        let v = left_vector(&std(Path, 3), &ClassSpec::named(NamedClass::Cycles, 3)).unwrap();
        assert_eq!(v.to_csv(), "member_graph6,count\n@,3\nA_,4\nBw,0\n");
    }
}
