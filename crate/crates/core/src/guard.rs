//! Size guards for the exponential parts of the library.
//!
//! Every guard has a base limit; the effective limit is the base limit times a
//! global rational scale (default 1), floored. The CLI sets the scale from
//! `HOMVEC_GUARD_SCALE`.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

static SCALE: RwLock<Option<BigRational>> = RwLock::new(None);

/// A named size limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub name: &'static str,
    pub base: usize,
}

pub const ENUMERATE_GRAPHS: Guard = Guard { name: "enumerate_graphs.max_vertices", base: 8 };
pub const ENUMERATE_TREES: Guard = Guard { name: "enumerate_trees.max_vertices", base: 12 };
pub const TREEWIDTH: Guard = Guard { name: "treewidth.max_vertices", base: 10 };
pub const DECOMPOSITION: Guard = Guard { name: "decomposition.max_vertices", base: 5 };
pub const WL_VERTICES: Guard = Guard { name: "wl.max_vertices", base: 10 };
pub const CHROMATIC_VERTICES: Guard = Guard { name: "chromatic_polynomial.max_vertices", base: 12 };
pub const CHARPOLY_VERTICES: Guard = Guard { name: "characteristic_polynomial.max_vertices", base: 16 };
pub const CEP_EDGES: Guard = Guard { name: "cluster_expansion.max_edges", base: 20 };
pub const INDEPENDENT_SETS: Guard = Guard { name: "independent_sets.max_count", base: 1 << 15 };
pub const KNESER_VERTICES: Guard = Guard { name: "kneser.max_vertices", base: 4096 };
pub const FAMILY_BOUND: Guard = Guard { name: "class.family_bound", base: 32 };

impl Guard {
    /// Effective limit under the current scale.
    pub fn limit(&self) -> usize {
        let scale = SCALE.read().expect("guard scale lock poisoned");
        match scale.as_ref() {
            None => self.base,
            Some(s) => {
                let scaled = (s * BigInt::from(self.base)).floor();
                scaled.to_integer().to_usize().unwrap_or(usize::MAX)
            }
        }
    }

    pub fn check(&self, actual: usize) -> Result<()> {
        let limit = self.limit();
        if actual > limit {
            Err(Error::Guard { guard: self.name, limit, actual })
        } else {
            Ok(())
        }
    }
}

/// Sets the global guard multiplier. Non-positive scales are rejected.
pub fn set_scale(scale: BigRational) -> Result<()> {
    if !scale.is_positive() {
        return Err(Error::Validation(format!("guard scale must be positive, got {scale}")));
    }
    let mut slot = SCALE.write().expect("guard scale lock poisoned");
    *slot = if scale.is_one() { None } else { Some(scale) };
    Ok(())
}

pub fn scale() -> BigRational {
    SCALE.read().expect("guard scale lock poisoned").clone().unwrap_or_else(BigRational::one)
}
