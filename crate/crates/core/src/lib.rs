//! Combinatorial certificates for topological graph theory: planarity and
//! apex sets, minor containment and linkless embeddability, Delta-Y families
//! and interval bounds on the Colin de Verdiere invariant.

pub mod canon;
pub mod catalog;
pub mod error;
pub mod graph;
pub mod io;

pub use canon::{canonical_form, is_isomorphic, orbits, validate_isomorphism, CanonicalForm, OrbitPartition};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet, MAX_VERTICES};
pub mod minor;
pub mod moves;
pub mod mu;
pub mod planarity;
