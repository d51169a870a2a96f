//! Combinatorics of parameter spaces: planar trees and causal orderings,
//! associahedron fundamental chains, colored multiplihedron strata, and
//! gluing-parameter monoids of decorated trees.

mod associahedron;
mod decorated;
mod monoid;
mod mww;
mod planar;
mod random;
mod suite;

use thiserror::Error;

pub use associahedron::{associahedron_boundary, boundary_squared, corolla_faces, face_sign, FormalChain, GluedTree};
pub use decorated::{Child, DecoratedTree, Scale, Vertex};
pub use monoid::{monoid_check, MAX_SATURATION_EDGES, GluingMonoid, MonoidReport, SearchBounds};
pub use mww::{mww_boundary, mww_counts, mww_dimension, mww_strata, MwwCounts, MwwStratum, Shape};
pub use planar::{causal_orderings_brute_force, planar_trees, PlanarTree};
pub use random::random_decorated_tree;
pub use suite::{combinatorics_suite, monoid_suite, CODIM_ONE_TREE, CORNER_TREE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid decoration: {0}")]
    Decoration(String),
}
