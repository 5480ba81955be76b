//! Distance spectral radius of graphs: exact distances, certified Perron
//! pairs, isomorph-free enumeration and extremal-graph verification.
//!
//! Numeric routines are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the usual `f64` choice.

pub mod charpoly;
pub mod corpus;
pub mod enumeration;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod family;
pub mod format;
pub mod graph;
pub mod metric;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use family::{order_for_size, FamilySpec};
pub use format::{from_graph6, to_graph6, EdgeList};
pub use graph::{ComponentKind, Graph, Structure};
pub use metric::{distances, DistanceMatrix, SpectralBounds};
pub use scalar::Scalar;
pub use spectral::{distance_spectral_radius, perron_pair, Method, Solver, SpectralResult};

pub type SpectralResult64 = SpectralResult<f64>;
pub type SpectralResult32 = SpectralResult<f32>;
pub type SpectralBounds64 = SpectralBounds<f64>;
