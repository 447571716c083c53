//! Blades, forms and the operators built from wedge and Hodge star.

pub mod blade;
pub mod form;
pub mod ops;

pub use blade::{binomial, Blade};
pub use form::Form;
pub use ops::{
    eigenspace, mult_map, rank_at_least_four, rank_two_form, skew_derivation, skew_matrix, stabilizer_algebra, t_operator,
    trace,
    two_form_from_matrix,
};
