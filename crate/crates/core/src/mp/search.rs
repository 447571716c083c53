//! Lower bounds for the largest dimension of a prime subspace of `Λ²(ℝⁿ)`,
//! built from a prime baseline by chained extensions.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::extension::{extend_multi, obstruction_space, ExtensionStep};
use super::su::su_embedding_space;
use crate::error::{Error, Result};
use crate::exterior::{binomial, Blade, Form};
use crate::linalg::rational::{int, SparseVec};
use crate::linalg::Subspace;
use crate::primeness::{numeric_prime_certificate, prime_check_invariant, NumericCertificate, PrimeVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Greedy,
    Randomized,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(Strategy::Greedy),
            "randomized" => Ok(Strategy::Randomized),
            other => Err(Error::Parse(format!("unknown strategy `{other}` (greedy|randomized)"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Greedy => "greedy",
            Strategy::Randomized => "randomized",
        })
    }
}

/// Starting point of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Baseline {
    /// `Λ⁻(ℝ⁴)`.
    AntiSelfDualR4,
    /// `su(m) ⊂ Λ²(ℝ²ᵐ)`.
    SuEmbedding { m: usize },
}

impl Baseline {
    pub fn ambient(&self) -> usize {
        match self {
            Baseline::AntiSelfDualR4 => 4,
            Baseline::SuEmbedding { m } => 2 * m,
        }
    }

    pub fn space(&self) -> Result<Subspace> {
        match self {
            Baseline::AntiSelfDualR4 => {
                let w = |s: &str| Form::from_words(4, &[(1, s)]);
                let f = |a: &str, sign: i64, b: &str| -> Result<Form> {
                    w(a)?.try_add(&w(b)?.scale(&int(sign)))
                };
                Subspace::span(4, 2, &[f("12", -1, "34")?, f("13", 1, "24")?, f("14", -1, "23")?])
            }
            Baseline::SuEmbedding { m } => su_embedding_space(*m),
        }
    }

    /// Exact primeness: both baselines are invariant under a group (SO(4)
    /// acting on one factor, resp. SU(m)) that is transitive on the sphere,
    /// so one covector decides.
    pub fn verdict(&self) -> Result<PrimeVerdict> {
        let n = self.ambient();
        prime_check_invariant(&self.space()?, &Form::covector(n, 1)?, true)
    }

    pub fn name(&self) -> String {
        match self {
            Baseline::AntiSelfDualR4 => "Λ⁻(ℝ⁴)".into(),
            Baseline::SuEmbedding { m } => format!("su({m})"),
        }
    }
}

/// Replayable record of a construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MpCertificate {
    pub n: usize,
    pub dimension: usize,
    /// `⌊n/2⌋² − 1`.
    pub floor: usize,
    pub strategy: Strategy,
    pub seed: u64,
    pub budget: usize,
    pub attempts: usize,
    pub budget_exhausted: bool,
    pub baseline: Baseline,
    pub baseline_verdict: PrimeVerdict,
    pub steps: Vec<ExtensionStep>,
    /// Whether the best construction one dimension down satisfied the count
    /// `dim E + (n − 2) < C(n − 1, 2)` that admits a one-step extension.
    pub count_condition_from_previous: Option<bool>,
    pub space: Subspace,
    pub numeric: NumericCertificate,
}

pub fn mp_floor(n: usize) -> usize {
    (n / 2) * (n / 2) - 1
}

fn baselines(n: usize) -> Vec<Baseline> {
    let mut out = vec![Baseline::AntiSelfDualR4];
    out.extend((2..=n / 2).map(|m| Baseline::SuEmbedding { m }));
    out
}

/// The first `count` unit blades, in colex order, independent of `w` and of
/// each other.
fn complement_blades(w: &Subspace, count: usize) -> Vec<Form> {
    let n = w.ambient();
    let mut vs: Vec<SparseVec> = w.basis().to_vec();
    let mut out = Vec::new();
    let mut base = w.dim();
    for idx in 0..binomial(n, 2) {
        if out.len() == count {
            break;
        }
        let unit: SparseVec = vec![(idx, int(1))];
        vs.push(unit.clone());
        let d = Subspace::from_vectors(n, 2, &vs).dim();
        if d > base {
            base = d;
            out.push(Form::from_sparse(n, 2, &unit));
        } else {
            vs.pop();
        }
    }
    out
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Form {
    let coords: Vec<_> = (0..binomial(n, k)).map(|_| int(rng.gen_range(-3..=3))).collect();
    Form::from_dense(n, k, &coords)
}

struct Searcher {
    strategy: Strategy,
    rng: ChaCha8Rng,
    budget: usize,
    attempts: usize,
}

impl Searcher {
    fn spend(&mut self) -> bool {
        if self.attempts >= self.budget {
            return false;
        }
        self.attempts += 1;
        true
    }

    /// The largest extension the strategy finds, or a pure embedding.
    fn step(&mut self, e: &Subspace) -> Result<Option<ExtensionStep>> {
        let n = e.ambient();
        let room = binomial(n, 2) - e.dim();
        for s in (1..=room.min(n)).rev() {
            match self.strategy {
                Strategy::Greedy => {
                    if !self.spend() {
                        return Ok(None);
                    }
                    let lambdas: Vec<Form> = (1..=s).map(|i| Form::covector(n, i)).collect::<Result<_>>()?;
                    let w = obstruction_space(e, &lambdas)?;
                    if binomial(n, 2) - w.dim() < s {
                        continue;
                    }
                    let alphas = complement_blades(&w, s);
                    if let Some(step) = extend_multi(e, &lambdas, &alphas)? {
                        return Ok(Some(step));
                    }
                }
                Strategy::Randomized => {
                    for _ in 0..3 {
                        if !self.spend() {
                            return Ok(None);
                        }
                        let lambdas: Vec<Form> = (0..s).map(|_| random_form(&mut self.rng, n, 1)).collect();
                        let alphas: Vec<Form> = (0..s).map(|_| random_form(&mut self.rng, n, 2)).collect();
                        if lambdas.iter().any(|l| l.is_zero()) {
                            continue;
                        }
                        match extend_multi(e, &lambdas, &alphas) {
                            Ok(Some(step)) => return Ok(Some(step)),
                            Ok(None) | Err(Error::DependentCovectors) => {}
                            Err(other) => return Err(other),
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn pure_embedding(e: &Subspace) -> ExtensionStep {
        ExtensionStep {
            n: e.ambient(),
            base_dim: e.dim(),
            lambdas: Vec::new(),
            alphas: Vec::new(),
            obstruction_dim: e.dim(),
            result_dim: e.dim(),
            count_condition: e.dim() < binomial(e.ambient(), 2),
        }
    }
}

/// Chain from `baseline` up to `n`; returns the steps, the final space and,
/// for the step into `n`, whether the count condition held.
fn chain(searcher: &mut Searcher, baseline: Baseline, n: usize) -> Result<(Vec<ExtensionStep>, Subspace, Option<bool>)> {
    let mut e = baseline.space()?;
    let mut steps = Vec::new();
    let mut last_count = None;
    while e.ambient() < n {
        let single = e.dim() + e.ambient() - 1 < binomial(e.ambient(), 2);
        last_count = Some(single);
        let step = match searcher.step(&e)? {
            Some(step) => step,
            None => Searcher::pure_embedding(&e),
        };
        e = step.apply(&e)?;
        steps.push(step);
    }
    Ok((steps, e, last_count))
}

/// Tries every baseline that fits in `ℝⁿ` and keeps the largest result. An
/// exhausted budget is reported in the certificate, which then holds the best
/// chain found so far.
pub fn mp_lower_bound_search(n: usize, strategy: Strategy, budget: usize, seed: u64) -> Result<MpCertificate> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("the search needs n ≥ 4, got {n}")));
    }
    crate::config::check_ambient(n)?;
    let mut searcher = Searcher {
        strategy,
        rng: ChaCha8Rng::seed_from_u64(seed),
        budget,
        attempts: 0,
    };
    let mut best: Option<(Baseline, Vec<ExtensionStep>, Subspace, Option<bool>)> = None;
    for baseline in baselines(n) {
        let (steps, space, count) = chain(&mut searcher, baseline, n)?;
        if best.as_ref().map(|b| space.dim() > b.2.dim()).unwrap_or(true) {
            best = Some((baseline, steps, space, count));
        }
    }
    let (baseline, steps, space, count) = best.expect("at least one baseline");
    let numeric = numeric_prime_certificate(&space, 4, 1e-6, seed)?;
    Ok(MpCertificate {
        n,
        dimension: space.dim(),
        floor: mp_floor(n),
        strategy,
        seed,
        budget,
        attempts: searcher.attempts,
        budget_exhausted: searcher.attempts >= budget,
        baseline,
        baseline_verdict: baseline.verdict()?,
        steps,
        count_condition_from_previous: count,
        space,
        numeric,
    })
}

/// Rebuilds the construction from the recorded steps, re-checking every side
/// condition exactly, and compares with the recorded space and dimension.
pub fn replay(cert: &MpCertificate) -> Result<Subspace> {
    let verdict = cert.baseline.verdict()?;
    if !verdict.is_certified_prime() || verdict != cert.baseline_verdict {
        return Err(Error::Consistency("baseline verdict does not re-verify".into()));
    }
    let mut e = cert.baseline.space()?;
    for (i, step) in cert.steps.iter().enumerate() {
        e = step
            .apply(&e)
            .map_err(|err| Error::Consistency(format!("step {}: {err}", i + 1)))?;
    }
    if e.ambient() != cert.n {
        return Err(Error::Consistency(format!(
            "construction ends in ℝ^{}, certificate claims ℝ^{}",
            e.ambient(),
            cert.n
        )));
    }
    if e != cert.space || e.dim() != cert.dimension {
        return Err(Error::Consistency("replayed space differs from the recorded one".into()));
    }
    Ok(e)
}

/// Unit blade `ω^{ij}` on ℝⁿ; used by tests and the CLI examples.
pub fn unit_two_form(n: usize, i: usize, j: usize) -> Result<Form> {
    Ok(Form::from_blade(Blade::new(n, &[i, j])?))
}
