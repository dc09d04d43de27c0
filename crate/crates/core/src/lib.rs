//! Weak modular products of graphs.
//!
//! The weak modular product `G ∇ H` joins `(x, y)` and `(x', y')` when
//! `x != x'`, `y != y'`, and `{x, x'}`, `{y, y'}` are either both edges or
//! both non-edges of their factors. This crate builds such products and
//! answers two questions about them:
//!
//! * whether `G ∇ H` is perfect, decided in polynomial time from the factors
//!   by [`classifier::classify`] and independently by the odd-hole oracle in
//!   [`perfection`];
//! * whether two `n`-vertex graphs are isomorphic, via an `n`-clique in their
//!   product ([`kozen::iso_via_product`]).
//!
//! Graphs are immutable bitset values on at most 64 vertices, see [`Graph`].
//! They can be written as expressions (`"K2+E1"`, `"3*K2"`, `"K2,3"`) with
//! [`parse_expr`] or read from graph6 with [`parse_graph6`].

pub mod census;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod expr;
pub mod graph;
pub mod graph6;
pub mod kozen;
pub mod named;
pub mod patterns;
pub mod perfection;
pub mod products;
pub mod sweep;

pub use classifier::{classify, explain, Case, Classification, Orientation, Verdict};
pub use error::{Error, Result};
pub use expr::parse_expr;
pub use graph::{are_isomorphic_bruteforce, Graph, VertexSet, MAX_VERTICES};
pub use graph6::{encode_graph6, parse_graph6};
pub use kozen::{iso_via_product, max_clique, CliqueResult, IsoWitness};
pub use patterns::{classify_shape, find_induced, ClassLabel, Pattern};
pub use perfection::{find_odd_hole, is_perfect_oracle, HoleKind, HoleWitness, PerfectionVerdict};
pub use products::{tensor_product, weak_modular_product, ProductGraph};
