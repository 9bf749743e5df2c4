//! Exact computations in the Zeeman topology of Minkowski spacetime.

pub mod compactness;
pub mod error;
pub mod homotopy;
pub mod minkowski;
pub mod numerics;
pub mod region;
pub mod sampling;
pub mod zeno;
pub mod zfunction;

pub use error::{Result, ZkitError};
pub use numerics::{qe_cmp, OneDimSet, QuadExt, Rat};
