//! Eccentric graphs and eccentricity matrices.
//!
//! The crate builds the eccentric graph `E(G)` and the eccentricity matrix of
//! a connected graph, decomposes trees along their diametrical paths, forms
//! Cartesian and Kronecker products, and evaluates exact integer determinants.
//! Alongside every construction there is a `check_*` or `predicted_*` routine
//! so that the known girth and invertibility classifications can be verified
//! by direct computation.
//!
//! Vertices are always `0..n`.

pub mod catalog;
pub mod eccentric;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod product;
pub mod tree;

pub use catalog::{build_family, expected_eccentric, FamilySpec};
pub use eccentric::{
    eccentric_girth, eccentric_graph, eccentricity_matrix, EccentricityProfile,
};
pub use error::{Error, Result};
pub use graph::{DistanceData, Graph};
pub use matrix::IntMatrix;
pub use product::ProductIndexMap;
pub use tree::Tree;
