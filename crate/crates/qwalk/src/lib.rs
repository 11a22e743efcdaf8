//! Quantum walks on edge-colored regular graphs: coined and
//! continuous-time evolution, trapped-subspace analysis, measured-walk
//! hitting times, and group-representation predictors for infinite hitting
//! times.

pub mod cli;
pub mod error;
pub mod graph;
pub mod hitting;
pub mod group;
pub mod linalg;
pub mod scalar;
pub mod spectral;
pub mod walk;

/// Default scalar type for concrete work; the modules themselves are generic
/// over [`scalar::Scalar`].
pub type Real = f64;
/// Dense complex matrix over the default scalar.
pub type CMat = linalg::CMatrix<Real>;
/// Dense complex column vector over the default scalar.
pub type CVec = linalg::CVector<Real>;

pub use error::{Error, Result};
pub use graph::ColoredGraph;
pub use scalar::Scalar;
pub use walk::{Coin, WalkKind, WalkOperator};
