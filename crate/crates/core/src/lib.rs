//! Exact-arithmetic exterior algebra over ℝⁿ with certification of prime and
//! complete-prime subspaces through symbol-complex exactness.
//!
//! The crate is organised bottom-up:
//!
//! - [`exterior`]: blades, forms, wedge, Hodge star and the derived operators
//!   (multiplication maps, 2-form rank, `T_α`, eigenspaces).
//! - [`linalg`]: exact rational elimination, subspaces in RREF, quotient spaces
//!   realised on orthogonal complements, and modular rank bounds.
//! - [`primeness`]: prime verdicts, witnesses and the type I / type II / dual
//!   symbol complexes.
//! - [`holonomy`]: the G₂ and Spin(7) decompositions, relation tables,
//!   classification scans and the verification suites.
//! - [`mp`]: extension lemmas for prime subspaces of Λ² and the lower-bound
//!   search with replayable certificates.

pub mod config;
pub mod error;
pub mod exterior;
pub mod holonomy;
pub mod json;
pub mod linalg;
pub mod mp;
pub mod primeness;
pub mod report;

pub use error::{Error, Result};
pub use exterior::{Blade, Form};
pub use linalg::{LinearMap, QMatrix, QuotientSpace, Rational, Subspace};
