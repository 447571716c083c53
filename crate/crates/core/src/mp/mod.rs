//! Prime subspaces of `Λ²(ℝⁿ)`: the extension lemmas, the `su(m)` family and
//! a lower-bound search with replayable certificates.

pub mod extension;
pub mod search;
pub mod su;

pub use extension::{
    attach, extend_multi, extend_one, l_lambda, l_lambda_is_direct, membership_certificate, multi_condition_violation,
    obstruction_space, ExtensionStep, MembershipCertificate,
};
pub use search::{mp_floor, mp_lower_bound_search, replay, Baseline, MpCertificate, Strategy};
pub use su::{sampled_rank_failures, su_basis_forms, su_embedding_space};
