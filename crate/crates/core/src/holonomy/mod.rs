//! The G₂ decomposition of `Λ*(ℝ⁷)` and the Spin(7) decomposition of
//! `Λ*(ℝ⁸)`, with relation tables, prime classifications and the
//! verification suites for their elliptic complexes.

pub mod g2;
pub mod scan;
pub mod spin7;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::binomial;
use crate::linalg::rational::dot;
use crate::linalg::Subspace;

pub use g2::{g2_build_tables, G2Tables};
pub use spin7::{spin7_build_tables, Spin7Tables};

/// An irreducible piece `Λᵏ_l`.
#[derive(Clone, Debug)]
pub struct Component {
    pub degree: usize,
    pub label: usize,
    pub space: Subspace,
}

impl Component {
    pub fn name(&self) -> String {
        component_name(self.degree, self.label)
    }
}

pub fn component_name(degree: usize, label: usize) -> String {
    format!("Λ^{degree}_{label}")
}

/// A nonzero direct sum of same-degree components, indexed by a bit mask
/// over the degree's components in increasing label order.
#[derive(Clone, Debug)]
pub struct ComponentSum {
    pub degree: usize,
    pub labels: Vec<usize>,
    pub space: Subspace,
}

impl ComponentSum {
    pub fn name(&self) -> String {
        self.labels
            .iter()
            .map(|&l| component_name(self.degree, l))
            .collect::<Vec<_>>()
            .join("⊕")
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeSummary {
    pub degree: usize,
    pub components: Vec<(String, usize)>,
}

/// Orthogonal splitting of every `Λᵏ(ℝⁿ)` into labelled components.
#[derive(Clone, Debug)]
pub struct Decomposition {
    n: usize,
    components: Vec<Component>,
}

impl Decomposition {
    /// Components of each degree must be listed with increasing labels.
    pub fn new(n: usize, mut components: Vec<Component>) -> Self {
        components.sort_by_key(|c| (c.degree, c.label));
        Decomposition { n, components }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn degree(&self, k: usize) -> Vec<&Component> {
        self.components.iter().filter(|c| c.degree == k).collect()
    }

    pub fn get(&self, k: usize, l: usize) -> Result<&Subspace> {
        self.components
            .iter()
            .find(|c| c.degree == k && c.label == l)
            .map(|c| &c.space)
            .ok_or_else(|| Error::InvalidArgument(format!("no component {}", component_name(k, l))))
    }

    pub fn dims(&self, k: usize) -> Vec<usize> {
        self.degree(k).iter().map(|c| c.space.dim()).collect()
    }

    pub fn summary(&self, k: usize) -> DegreeSummary {
        DegreeSummary {
            degree: k,
            components: self
                .degree(k)
                .iter()
                .map(|c| (c.name(), c.space.dim()))
                .collect(),
        }
    }

    /// Direct sum of the named components of degree `k`.
    pub fn sum_of(&self, k: usize, labels: &[usize]) -> Result<Subspace> {
        let parts = labels
            .iter()
            .map(|&l| self.get(k, l))
            .collect::<Result<Vec<_>>>()?;
        Subspace::sum_all(self.n, k, &parts)
    }

    /// All nonzero sums of degree-`k` components, in mask order.
    pub fn sums(&self, k: usize) -> Vec<ComponentSum> {
        let comps = self.degree(k);
        let mut out = Vec::new();
        for mask in 1u32..(1 << comps.len()) {
            let chosen: Vec<&Component> = comps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| *c)
                .collect();
            let parts: Vec<&Subspace> = chosen.iter().map(|c| &c.space).collect();
            out.push(ComponentSum {
                degree: k,
                labels: chosen.iter().map(|c| c.label).collect(),
                space: Subspace::sum_all(self.n, k, &parts).expect("same degree"),
            });
        }
        out
    }

    /// Per-degree orthogonality and completeness, and `*` carrying `(k, l)`
    /// onto `(n − k, l)`.
    pub fn check_invariants(&self) -> Result<()> {
        for k in 0..=self.n {
            let comps = self.degree(k);
            let total: usize = comps.iter().map(|c| c.space.dim()).sum();
            if total != binomial(self.n, k) {
                return Err(Error::Consistency(format!(
                    "degree {k} components have total dimension {total}, expected {}",
                    binomial(self.n, k)
                )));
            }
            for (i, a) in comps.iter().enumerate() {
                for b in &comps[i + 1..] {
                    let orthogonal = a
                        .space
                        .basis()
                        .iter()
                        .all(|u| b.space.basis().iter().all(|v| dot(u, v).is_zero()));
                    if !orthogonal {
                        return Err(Error::Consistency(format!(
                            "{} and {} are not orthogonal",
                            a.name(),
                            b.name()
                        )));
                    }
                }
            }
            for c in &comps {
                let image = c.space.hodge_star();
                let target = self.get(self.n - k, c.label).map_err(|_| {
                    Error::Consistency(format!("no partner for {} under the star", c.name()))
                })?;
                if &image != target {
                    return Err(Error::Consistency(format!(
                        "*{} is not {}",
                        c.name(),
                        component_name(self.n - k, c.label)
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn expect_dim(name: &str, space: &Subspace, dim: usize) -> Result<()> {
    if space.dim() != dim {
        return Err(Error::Consistency(format!(
            "{name} has dimension {}, expected {dim}",
            space.dim()
        )));
    }
    Ok(())
}
