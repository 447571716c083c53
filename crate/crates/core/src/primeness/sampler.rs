use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::Form;
use crate::linalg::Rational;

/// Inclusive numerator range of sampled covector entries.
pub const NUMERATOR_RANGE: (i64, i64) = (-6, 6);
/// Inclusive denominator range of sampled covector entries.
pub const DENOMINATOR_RANGE: (i64, i64) = (1, 3);

/// Deterministic pseudo-random nonzero covectors on `ℝⁿ`.
///
/// Each coordinate is `p/q` with `p` drawn uniformly from `-6..=6` and `q`
/// from `1..=3` by a ChaCha8 stream seeded with `seed`; all-zero draws are
/// discarded.
pub fn lambda_sampler(n: usize, count: usize, seed: u64) -> Vec<Form> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let coords: Vec<Rational> = (0..n)
            .map(|_| {
                let p = rng.gen_range(NUMERATOR_RANGE.0..=NUMERATOR_RANGE.1);
                let q = rng.gen_range(DENOMINATOR_RANGE.0..=DENOMINATOR_RANGE.1);
                Rational::new(BigInt::from(p), BigInt::from(q))
            })
            .collect();
        let f = Form::from_covector_coords(&coords);
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_nonzero() {
        let a = lambda_sampler(7, 100, 42);
        let b = lambda_sampler(7, 100, 42);
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
        assert!(a.iter().all(|f| !f.is_zero() && f.degree() == 1));
        assert_ne!(a, lambda_sampler(7, 100, 43));
    }
}
