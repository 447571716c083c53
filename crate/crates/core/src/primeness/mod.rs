//! Prime forms and subspaces, complete prime spaces and pairs, and the
//! rank conditions built on symbol complexes.

pub mod complex;
pub mod numeric;
pub mod sampler;
pub mod suites;
pub mod verdict;

pub use complex::{
    build_dual_symbol_complex, build_type1_symbol_complex, build_type2_symbol_complex,
    product_chain, ComplexKind, RankSource, Stage, StageSpace, SymbolComplex, StageReport, SymbolComplexReport,
};
pub use numeric::{numeric_prime_certificate, NumericCertificate};
pub use sampler::lambda_sampler;
pub use verdict::{
    alternating_binomial_sum, euler_rank_condition, is_prime_form, nonprime_witness_search,
    prime_check_invariant, witness_search_verdict, CheckMode, PrimeStatus, PrimeVerdict, Witness,
};
pub use suites::{koszul_case, koszul_suite, r5_half_space, r5_suite, KoszulCase};
