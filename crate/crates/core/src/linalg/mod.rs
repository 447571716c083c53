//! Exact linear algebra over ℚ on the blade coordinates of `Λᵏ(ℝⁿ)`.

pub mod echelon;
pub mod map;
pub mod matrix;
pub mod modp;
pub mod rational;
pub mod subspace;

pub use map::{induced_quotient_map, LinearMap, QuotientSpace, SpaceDescriptor};
pub use matrix::QMatrix;
pub use rational::{Rational, SparseVec};
pub use subspace::{Projector, Subspace};
