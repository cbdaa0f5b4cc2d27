//! Relaxations of isomorphism and the graph parameters around them.

mod fractional;
mod params;
mod wl;

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::homcount::hom_exists;
use crate::polys::{characteristic_polynomial, chromatic_polynomial};

pub use fractional::{fractional_isomorphism_lp, is_fractional_isomorphism};
pub use params::{
    chromatic_number, clique_number, fractional_chromatic_number, fractional_chromatic_program,
    fractional_clique_number, fractional_clique_program, fractional_parameters, kneser_colorable, kneser_fraction,
};
pub use wl::{wl_equivalent, wl_refine, ColorPartition};

/// Equal characteristic polynomials.
pub fn cospectral(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(characteristic_polynomial(g)? == characteristic_polynomial(h)?)
}

/// Equal chromatic polynomials.
pub fn chromatically_equivalent(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(chromatic_polynomial(g)? == chromatic_polynomial(h)?)
}

/// Homomorphisms exist in both directions.
pub fn hom_equivalent(g: &Graph, h: &Graph) -> bool {
    hom_exists(g, h) && hom_exists(h, g)
}

/// The equivalence relations the library can decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equivalence {
    Isomorphic,
    FractionallyIsomorphic,
    /// `k`-WL indistinguishability.
    Wl(usize),
    Cospectral,
    ChromaticallyEquivalent,
    HomEquivalent,
}

impl Equivalence {
    pub fn decide(self, g: &Graph, h: &Graph) -> Result<bool> {
        match self {
            Equivalence::Isomorphic => Ok(is_isomorphic(g, h)),
            Equivalence::FractionallyIsomorphic => Ok(fractional_isomorphism_lp(g, h).is_some()),
            Equivalence::Wl(k) => wl_equivalent(g, h, k),
            Equivalence::Cospectral => cospectral(g, h),
            Equivalence::ChromaticallyEquivalent => chromatically_equivalent(g, h),
            Equivalence::HomEquivalent => Ok(hom_equivalent(g, h)),
        }
    }
}

impl FromStr for Equivalence {
    type Err = crate::error::Error;

    /// `iso`, `fraciso`, `wl:k`, `cospectral`, `chromeq` or `homeq`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "iso" => Equivalence::Isomorphic,
            "fraciso" => Equivalence::FractionallyIsomorphic,
            "cospectral" => Equivalence::Cospectral,
            "chromeq" => Equivalence::ChromaticallyEquivalent,
            "homeq" => Equivalence::HomEquivalent,
            _ => match s.strip_prefix("wl:").map(str::parse::<usize>) {
                Some(Ok(k)) => Equivalence::Wl(k),
                _ => return Err(invalid(format!("unknown relation `{s}`"))),
            },
        })
    }
}

impl fmt::Display for Equivalence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equivalence::Isomorphic => f.write_str("iso"),
            Equivalence::FractionallyIsomorphic => f.write_str("fraciso"),
            Equivalence::Wl(k) => write!(f, "wl:{k}"),
            Equivalence::Cospectral => f.write_str("cospectral"),
            Equivalence::ChromaticallyEquivalent => f.write_str("chromeq"),
            Equivalence::HomEquivalent => f.write_str("homeq"),
        }
    }
}
