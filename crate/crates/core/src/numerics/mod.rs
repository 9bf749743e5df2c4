//! Exact scalars and one-dimensional set algebra.

mod onedim;
mod quad;
mod rat;
mod simplest;

pub use onedim::{Endpoint, OneDimSet, Piece};
pub use quad::{qe_cmp, quadratic_roots, QuadExt, QuadraticRoots};
pub use rat::Rat;
pub use simplest::{simplest_in, simplest_in_piece};
