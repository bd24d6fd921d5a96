//! Toolkit for the chromatic-to-clique ratio function
//! `f(n) = max { χ(G)/ω(G) : |V(G)| = n }`.
//!
//! The crate is split by concern:
//!
//! - [`graph`]: 64-vertex bitset graphs, exact ω/α/χ solvers, named
//!   constructions and the greedy independent-set coloring.
//! - [`ramsey`]: exact small Ramsey numbers by canonical vertex-by-vertex
//!   search, classical upper bounds and a table of known bounds.
//! - [`asymptotics`]: binary entropy, the φ rate function and its maximum,
//!   the diagonal constant and the finite envelope curves for `f(n)`.
//! - [`extremal`]: exact `f(n)` by isomorph-free enumeration and certified
//!   lower bounds for larger `n`.
//! - [`conjectures`]: consistency checks of diagonal-type Ramsey
//!   conjectures against a bounds table.

pub mod asymptotics;
pub mod conjectures;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod ramsey;

pub use error::{Error, Result};
pub use graph::{ColoringCertificate, Graph, VertexSet};
