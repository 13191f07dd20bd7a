//! Exact computation toolkit for graph independence polynomials and the
//! alternating number of independent sets `I(G;-1)`.
//!
//! The crate provides:
//! - bit-set graphs with the deletion operations the recursions need
//!   ([`graph`]),
//! - exact polynomial arithmetic generic over the integer scalar, with the
//!   path/cycle/Fibonacci closed forms ([`poly`]),
//! - the recursion engine with pluggable pivot strategies and a brute-force
//!   oracle ([`engine`]),
//! - constructors for the closed-form graph families ([`families`]),
//! - structural analysis: cyclomatic number, girth, well-coveredness
//!   ([`analysis`]),
//! - exhaustive generators for free trees and small connected graphs
//!   ([`enumerate`]),
//! - the verification suites and the `(nu, q)` search harness ([`verify`],
//!   [`search`]),
//! - graph6 / edge-list / family-spec formats ([`io`]).

pub mod analysis;
pub mod bitset;
pub mod canon;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod poly;
pub mod rand_graphs;
pub mod rng;
pub mod search;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use graph::Graph;

/// Exact integer scalar used by the engine and everything downstream.
pub type Int = num_bigint::BigInt;

/// Concrete polynomial type used by the engine: exact arbitrary-precision
/// integer coefficients.
pub type Poly = poly::Polynomial<Int>;

/// Fixed-width variant, handy for small closed-form cross-checks.
pub type Poly64 = poly::Polynomial<i64>;
