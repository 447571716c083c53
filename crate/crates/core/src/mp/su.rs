//! `su(m) ⊂ so(2m) ≅ Λ²(ℝ²ᵐ)` via `a + b·i ↦ [[a, −b], [b, a]]`.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{rank_at_least_four, two_form_from_matrix, Form};
use crate::linalg::rational::{int, Rational};
use crate::linalg::{QMatrix, Subspace};

fn block(m: usize, a: &[(usize, usize, Rational)], b: &[(usize, usize, Rational)]) -> Result<Form> {
    let mut mat = QMatrix::zeros(2 * m, 2 * m);
    for (i, j, x) in a {
        mat.set(*i, *j, x.clone());
        mat.set(m + i, m + j, x.clone());
    }
    for (i, j, x) in b {
        mat.set(m + i, *j, x.clone());
        mat.set(*i, m + j, -x.clone());
    }
    two_form_from_matrix(&mat)
}

/// Image of the standard basis of `su(m)`: `E_pq − E_qp` in the real part,
/// `E_pq + E_qp` and `E_pp − E_{p+1,p+1}` in the imaginary part.
pub fn su_basis_forms(m: usize) -> Result<Vec<Form>> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("su(m) needs m ≥ 2, got {m}")));
    }
    let one = Rational::one;
    let mut out = Vec::with_capacity(m * m - 1);
    for q in 0..m {
        for p in 0..q {
            out.push(block(m, &[(p, q, one()), (q, p, -one())], &[])?);
        }
    }
    for q in 0..m {
        for p in 0..q {
            out.push(block(m, &[], &[(p, q, one()), (q, p, one())])?);
        }
    }
    for p in 0..m - 1 {
        out.push(block(m, &[], &[(p, p, one()), (p + 1, p + 1, -one())])?);
    }
    Ok(out)
}

/// The `(m² − 1)`-dimensional subspace of `Λ²(ℝ²ᵐ)`.
pub fn su_embedding_space(m: usize) -> Result<Subspace> {
    let forms = su_basis_forms(m)?;
    let space = Subspace::span(2 * m, 2, &forms)?;
    if space.dim() != m * m - 1 {
        return Err(Error::Consistency(format!(
            "su({m}) spans {} dimensions, expected {}",
            space.dim(),
            m * m - 1
        )));
    }
    Ok(space)
}

/// Draws `samples` seeded nonzero integer combinations of the basis of `E`
/// and counts those with `η∧η = 0`, i.e. real rank below 4.
pub fn sampled_rank_failures(space: &Subspace, samples: usize, seed: u64) -> Result<usize> {
    let basis = space.basis_forms();
    let n = space.ambient();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut drawn = 0;
    while drawn < samples {
        let mut eta = Form::zero(n, 2);
        for f in &basis {
            let c: i64 = rng.gen_range(-5..=5);
            if c != 0 {
                eta = eta.try_add(&f.scale(&int(c)))?;
            }
        }
        if eta.is_zero() {
            continue;
        }
        drawn += 1;
        if !rank_at_least_four(&eta)? {
            failures += 1;
        }
    }
    Ok(failures)
}
