use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::mult_map;
#[cfg(test)]
use crate::exterior::Form;
use crate::linalg::rational::to_f64;
use crate::linalg::Subspace;

/// Result of the multi-start descent. Always evidence, never a certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NumericCertificate {
    pub minimum: f64,
    pub per_restart: Vec<f64>,
    pub tolerance: f64,
    pub below_tolerance: bool,
    pub evidence_only: bool,
}

const ITERATIONS: usize = 150;

fn smallest_singular(m: &DMatrix<f64>) -> (f64, DVector<f64>, DVector<f64>) {
    let svd = m.clone().svd(true, true);
    let (i, s) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (i, &s)| if s < acc.1 { (i, s) } else { acc });
    let u = svd.u.as_ref().expect("requested").column(i).into_owned();
    let v = svd.v_t.as_ref().expect("requested").row(i).transpose();
    (s, u, v)
}

/// Minimises `σ_min(α∧·: Λ¹ → Λᵏ⁺¹)` over unit `α ∈ E` by projected gradient
/// descent from `restarts` seeded starting points. A positive floor is
/// evidence of primeness; a value under `tolerance` suggests a non-prime
/// element.
pub fn numeric_prime_certificate(
    space: &Subspace,
    restarts: usize,
    tolerance: f64,
    seed: u64,
) -> Result<NumericCertificate> {
    if restarts == 0 || tolerance <= 0.0 {
        return Err(Error::InvalidArgument(
            "restarts must be positive and tolerance > 0".into(),
        ));
    }
    let (n, k) = (space.ambient(), space.degree());
    if space.is_zero() || k >= n {
        let minimum = if space.is_zero() { f64::INFINITY } else { 0.0 };
        return Ok(NumericCertificate {
            minimum,
            per_restart: vec![minimum; restarts],
            tolerance,
            below_tolerance: minimum < tolerance,
            evidence_only: true,
        });
    }
    // orthonormal basis of E in blade coordinates
    let d = space.dim();
    let len = space.ambient_dim();
    let mut b = DMatrix::<f64>::zeros(len, d);
    for (j, row) in space.basis().iter().enumerate() {
        for (i, x) in row {
            b[(*i, j)] = to_f64(x);
        }
    }
    // B = QR, so the orthonormal columns are Q = B R⁻¹
    let r_inv = b
        .qr()
        .r()
        .try_inverse()
        .ok_or_else(|| Error::Consistency("basis of E is numerically degenerate".into()))?;
    let raw: Vec<DMatrix<f64>> = space
        .basis_forms()
        .iter()
        .map(|alpha| {
            let m = mult_map(alpha, 1)?;
            let mm = m.matrix();
            Ok(DMatrix::from_fn(mm.nrows(), mm.ncols(), |r, c| to_f64(mm.get(r, c))))
        })
        .collect::<Result<_>>()?;
    let mats: Vec<DMatrix<f64>> = (0..d)
        .map(|j| {
            let mut acc = DMatrix::<f64>::zeros(raw[0].nrows(), raw[0].ncols());
            for (i, mi) in raw.iter().enumerate() {
                acc += mi * r_inv[(i, j)];
            }
            acc
        })
        .collect();
    let combine = |c: &DVector<f64>| -> DMatrix<f64> {
        let mut acc = DMatrix::<f64>::zeros(mats[0].nrows(), mats[0].ncols());
        for (ci, mi) in c.iter().zip(&mats) {
            acc += mi * *ci;
        }
        acc
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut per_restart = Vec::with_capacity(restarts);
    for _ in 0..restarts {
        let mut c = DVector::<f64>::from_fn(d, |_, _| rng.gen_range(-1.0..1.0));
        c /= c.norm();
        let mut step = 0.5;
        let (mut best, _, _) = smallest_singular(&combine(&c));
        for _ in 0..ITERATIONS {
            let (s, u, v) = smallest_singular(&combine(&c));
            let grad = DVector::<f64>::from_fn(d, |i, _| (u.transpose() * &mats[i] * &v)[(0, 0)]);
            // project onto the tangent space of the sphere
            let tangent = &grad - &c * c.dot(&grad);
            if tangent.norm() < 1e-14 {
                break;
            }
            let mut trial = &c - &tangent * step;
            trial /= trial.norm();
            let (st, _, _) = smallest_singular(&combine(&trial));
            if st < s {
                c = trial;
                best = best.min(st);
                step *= 1.2;
            } else {
                step *= 0.5;
                if step < 1e-12 {
                    break;
                }
            }
        }
        per_restart.push(best);
    }
    let minimum = per_restart.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(NumericCertificate {
        minimum,
        per_restart,
        tolerance,
        below_tolerance: minimum < tolerance,
        evidence_only: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decomposable_line_hits_zero() {
        let e = Subspace::span(4, 2, &[Form::from_words(4, &[(1, "12")]).unwrap()]).unwrap();
        let c = numeric_prime_certificate(&e, 3, 1e-8, 1).unwrap();
        assert!(c.below_tolerance, "{c:?}");
    }

    #[test]
    fn anti_self_dual_floor_is_positive() {
        let forms = [
            Form::from_words(4, &[(1, "12"), (-1, "34")]).unwrap(),
            Form::from_words(4, &[(1, "13"), (1, "24")]).unwrap(),
            Form::from_words(4, &[(1, "14"), (-1, "23")]).unwrap(),
        ];
        let e = Subspace::span(4, 2, &forms).unwrap();
        let a = numeric_prime_certificate(&e, 4, 1e-6, 1).unwrap();
        let b = numeric_prime_certificate(&e, 4, 1e-6, 2).unwrap();
        assert!(a.minimum > 0.5 && !a.below_tolerance);
        assert!((a.minimum - b.minimum).abs() < 1e-6);
    }
}
