//! Spectral extremal graph theory toolkit: graph families, spectral radii,
//! forbidden-substructure detectors and exhaustive verification searches.

pub mod constructions;
pub mod detectors;
pub mod error;
pub mod graph;
pub mod report;
pub mod search;
pub mod spectral;

pub use constructions::{build, family_catalog, BuiltGraph, Family, FamilySpec};
pub use error::{Error, Result};
pub use graph::{canonical_form, from_graph6, to_graph6, Graph, VertexSet};
pub use spectral::{spectral_radius, Partition, Polynomial, QuotientMatrix, SpectrumResult};
