use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{mult_map, Blade, Form};
use crate::linalg::modp::ModpEchelon;
use crate::linalg::rational::{primitive_integers, sub_scaled, Rational, SparseVec};
use crate::linalg::subspace::{check_covector, wedge_covector_vec};
use crate::linalg::{LinearMap, QMatrix, SpaceDescriptor, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeStatus {
    CertifiedPrime,
    NotPrime,
    EvidenceOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    SingleFormKernel,
    InvariantLambda,
    WitnessSearch,
    NumericSphere,
}

/// A nonzero `α ∈ E` and nonzero covector `λ` with `α ∧ λ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub alpha: Form,
    pub lambda: Form,
}

impl Witness {
    /// Re-evaluates the wedge. Does not check membership of `α` in any space.
    pub fn verify(&self) -> bool {
        !self.lambda.is_zero()
            && self.lambda.degree() == 1
            && self
                .alpha
                .wedge(&self.lambda)
                .map(|f| f.is_zero())
                .unwrap_or(false)
    }

    pub fn verify_in(&self, space: &Subspace) -> bool {
        !self.alpha.is_zero() && self.verify() && space.contains(&self.alpha).unwrap_or(false)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeVerdict {
    pub status: PrimeStatus,
    pub mode: CheckMode,
    pub witness: Option<Witness>,
    /// Set for the invariant-λ mode: whether transitivity of the symmetry
    /// group on the sphere was asserted by the caller.
    pub transitive: Option<bool>,
    pub evidence: Option<f64>,
}

impl PrimeVerdict {
    pub fn is_certified_prime(&self) -> bool {
        self.status == PrimeStatus::CertifiedPrime
    }

    pub fn is_not_prime(&self) -> bool {
        self.status == PrimeStatus::NotPrime
    }

    fn not_prime(mode: CheckMode, witness: Witness) -> Self {
        PrimeVerdict {
            status: PrimeStatus::NotPrime,
            mode,
            witness: Some(witness),
            transitive: None,
            evidence: None,
        }
    }
}

/// Rescales a vector to coprime integers with positive leading entry.
pub fn normalize_vec(v: &SparseVec) -> SparseVec {
    let vals: Vec<Rational> = v.iter().map(|(_, x)| x.clone()).collect();
    let ints = primitive_integers(&vals);
    v.iter()
        .zip(ints)
        .map(|((i, _), z)| (*i, Rational::from_integer(z)))
        .collect()
}

pub fn normalize_form(f: &Form) -> Form {
    Form::from_sparse(f.ambient(), f.degree(), &normalize_vec(&f.to_sparse()))
}

/// Whether `λ ↦ α ∧ λ` is injective on `Λ¹`.
pub fn is_prime_form(alpha: &Form) -> PrimeVerdict {
    let n = alpha.ambient();
    let omega1 = Form::covector(n, 1).expect("n ≥ 1");
    if alpha.is_zero() || alpha.degree() >= n {
        return PrimeVerdict::not_prime(
            CheckMode::SingleFormKernel,
            Witness {
                alpha: alpha.clone(),
                lambda: omega1,
            },
        );
    }
    let m = mult_map(alpha, 1).expect("degree checked");
    let kernel = m.matrix().kernel();
    match kernel.first() {
        None => PrimeVerdict {
            status: PrimeStatus::CertifiedPrime,
            mode: CheckMode::SingleFormKernel,
            witness: None,
            transitive: None,
            evidence: None,
        },
        Some(v) => PrimeVerdict::not_prime(
            CheckMode::SingleFormKernel,
            Witness {
                alpha: alpha.clone(),
                lambda: Form::from_sparse(n, 1, &normalize_vec(v)),
            },
        ),
    }
}

/// Kernel of `α ↦ λ ∧ α` restricted to `E`, as ambient vectors.
pub(crate) fn lambda_kernel_in(space: &Subspace, lambda: &Form) -> Vec<SparseVec> {
    let (n, k) = (space.ambient(), space.degree());
    if space.is_zero() {
        return Vec::new();
    }
    if k == n {
        return space.basis().to_vec();
    }
    let blades = Blade::all(n, k);
    let images: Vec<SparseVec> = space
        .basis()
        .iter()
        .map(|e| wedge_covector_vec(lambda, &blades, e))
        .collect();
    // independent images modulo p are independent over ℚ
    let mut modp = ModpEchelon::new(crate::exterior::binomial(n, k + 1));
    let injective = images
        .iter()
        .all(|v| modp.insert_sparse(v) == Some(true));
    if injective {
        return Vec::new();
    }
    let matrix = QMatrix::from_sparse_columns(crate::exterior::binomial(n, k + 1), &images);
    let map = LinearMap::new(
        SpaceDescriptor::Sub(space.clone()),
        SpaceDescriptor::full(n, k + 1),
        matrix,
    )
    .expect("dimensions agree");
    map.kernel_vectors()
}

/// Checks `E ∩ λ∧Λ^{k−1} = 0`, equivalently that no nonzero element of `E` is
/// annihilated by `λ`. With `transitive` the caller asserts that a group
/// preserving `E` acts transitively on the unit sphere, so a single `λ`
/// decides primeness.
pub fn prime_check_invariant(space: &Subspace, lambda: &Form, transitive: bool) -> Result<PrimeVerdict> {
    check_covector(space.ambient(), lambda)?;
    let kernel = lambda_kernel_in(space, lambda);
    if let Some(v) = kernel.first() {
        let alpha = Form::from_sparse(space.ambient(), space.degree(), &normalize_vec(v));
        let mut verdict = PrimeVerdict::not_prime(
            CheckMode::InvariantLambda,
            Witness {
                alpha,
                lambda: lambda.clone(),
            },
        );
        verdict.transitive = Some(transitive);
        return Ok(verdict);
    }
    Ok(PrimeVerdict {
        status: if transitive {
            PrimeStatus::CertifiedPrime
        } else {
            PrimeStatus::EvidenceOnly
        },
        mode: CheckMode::InvariantLambda,
        witness: None,
        transitive: Some(transitive),
        evidence: None,
    })
}

/// Looks for a non-prime element of `E`: first the basis vectors, then every
/// `e_i ± e_j`, then `trials` seeded random integer combinations. Finding
/// nothing proves nothing.
pub fn nonprime_witness_search(space: &Subspace, trials: usize, seed: u64) -> Option<Witness> {
    let (n, k) = (space.ambient(), space.degree());
    let basis = space.basis();
    let test = |v: &SparseVec| -> Option<Witness> {
        if v.is_empty() {
            return None;
        }
        let alpha = Form::from_sparse(n, k, &normalize_vec(v));
        is_prime_form(&alpha).witness
    };
    for b in basis {
        if let Some(w) = test(b) {
            return Some(w);
        }
    }
    let one = Rational::from_integer(BigInt::from(1));
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            for c in [one.clone(), -one.clone()] {
                if let Some(w) = test(&sub_scaled(&basis[i], &-c, &basis[j])) {
                    return Some(w);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<Rational> = (0..basis.len())
            .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
            .collect();
        let mut v: SparseVec = Vec::new();
        for (b, c) in basis.iter().zip(&coeffs) {
            v = sub_scaled(&v, &-c.clone(), b);
        }
        if let Some(w) = test(&v) {
            return Some(w);
        }
    }
    None
}

/// Verdict for a subspace from a witness search.
pub fn witness_search_verdict(space: &Subspace, trials: usize, seed: u64) -> PrimeVerdict {
    match nonprime_witness_search(space, trials, seed) {
        Some(w) => PrimeVerdict::not_prime(CheckMode::WitnessSearch, w),
        None => PrimeVerdict {
            status: PrimeStatus::EvidenceOnly,
            mode: CheckMode::WitnessSearch,
            witness: None,
            transitive: None,
            evidence: None,
        },
    }
}

/// `Σ_{i=0}^{k} (−1)^{k+i} C(n, i)`.
pub fn alternating_binomial_sum(n: usize, k: usize) -> i64 {
    (0..=k)
        .map(|i| {
            let c = crate::exterior::binomial(n, i) as i64;
            if (k + i).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .sum()
}

/// Rank condition for the truncated complex: `dim E` equals the alternating
/// binomial sum and `E` passes the prime check at `λ = ω¹`.
pub fn euler_rank_condition(space: &Subspace) -> bool {
    let (n, k) = (space.ambient(), space.degree());
    if space.dim() as i64 != alternating_binomial_sum(n, k) {
        return false;
    }
    let omega1 = Form::covector(n, 1).expect("n ≥ 1");
    match prime_check_invariant(space, &omega1, false) {
        Ok(v) => v.status != PrimeStatus::NotPrime,
        Err(_) => false,
    }
}

/// Builds a covector from integer coordinates.
pub fn covector_from_ints(coords: &[i64]) -> Result<Form> {
    let qs: Vec<Rational> = coords
        .iter()
        .map(|&c| Rational::from_integer(BigInt::from(c)))
        .collect();
    let f = Form::from_covector_coords(&qs);
    if f.is_zero() {
        return Err(Error::ZeroCovector);
    }
    Ok(f)
}
