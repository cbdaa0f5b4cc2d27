//! Exact homomorphism counting between finite graphs, restricted left and
//! right homomorphism vectors, and the relaxations of graph isomorphism they
//! characterize: fractional isomorphism, Weisfeiler–Leman equivalence,
//! cospectrality, chromatic equivalence and homomorphic equivalence.
//!
//! All arithmetic is exact. Counts are [`BigCount`]s, weights and LP data are
//! [`Rational`]s, and polynomials carry rational coefficients.

pub mod arith;
pub mod cli;
pub mod error;
pub mod graph;
pub mod guard;
pub mod homcount;
pub mod lp;
pub mod polys;
pub mod relax;
pub mod suite;
pub mod vectors;

pub use arith::{BigCount, Polynomial, Rational, Semiring};
pub use error::{Error, Result};
pub use graph::{CanonicalCode, Graph, WeightedGraph};
