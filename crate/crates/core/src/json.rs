//! JSON encodings of forms and subspaces.
//!
//! A form is `{"n", "k", "terms": [{"idx": [..], "num": "..", "den": ".."}]}`
//! with 1-based ascending indices; a subspace is `{"n", "k", "basis": [[..]]}`
//! with one rational string per blade in colex order. Deserialised subspaces
//! are re-reduced, so any spanning set is accepted.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::check_ambient;
use crate::error::{Error, Result};
use crate::exterior::{binomial, Blade, Form};
use crate::linalg::rational::{parse, parse_str, sparse_from_dense, Rational, SparseVec};
use crate::linalg::Subspace;

#[derive(Serialize, Deserialize)]
struct TermJson {
    idx: Vec<usize>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    n: usize,
    k: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    n: usize,
    k: usize,
    basis: Vec<Vec<String>>,
}

fn form_to_json(f: &Form) -> FormJson {
    FormJson {
        n: f.ambient(),
        k: f.degree(),
        terms: f
            .terms()
            .map(|(b, x)| TermJson {
                idx: b.indices(),
                num: x.numer().to_string(),
                den: x.denom().to_string(),
            })
            .collect(),
    }
}

fn form_from_json(j: FormJson) -> Result<Form> {
    check_ambient(j.n)?;
    let terms = j
        .terms
        .into_iter()
        .map(|t| Ok((Blade::new(j.n, &t.idx)?, parse(&t.num, &t.den)?)))
        .collect::<Result<Vec<(Blade, Rational)>>>()?;
    Form::from_terms(j.n, j.k, terms)
}

fn subspace_to_json(s: &Subspace) -> SubspaceJson {
    let len = s.ambient_dim();
    SubspaceJson {
        n: s.ambient(),
        k: s.degree(),
        basis: s
            .basis()
            .iter()
            .map(|r| {
                crate::linalg::rational::dense_from_sparse(r, len)
                    .iter()
                    .map(|x| x.to_string())
                    .collect()
            })
            .collect(),
    }
}

fn subspace_from_json(j: SubspaceJson) -> Result<Subspace> {
    check_ambient(j.n)?;
    if j.k > j.n {
        return Err(Error::DegreeOverflow { degree: j.k, n: j.n });
    }
    let len = binomial(j.n, j.k);
    let mut rows: Vec<SparseVec> = Vec::with_capacity(j.basis.len());
    for row in &j.basis {
        if row.len() != len {
            return Err(Error::Parse(format!(
                "basis row has {} entries, expected C({}, {}) = {len}",
                row.len(),
                j.n,
                j.k
            )));
        }
        let vals = row
            .iter()
            .map(|s| parse_str(s))
            .collect::<Result<Vec<_>>>()?;
        rows.push(sparse_from_dense(&vals));
    }
    Ok(Subspace::from_vectors(j.n, j.k, &rows))
}

impl Serialize for Form {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        form_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        form_from_json(FormJson::deserialize(d)?).map_err(D::Error::custom)
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        subspace_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        subspace_from_json(SubspaceJson::deserialize(d)?).map_err(D::Error::custom)
    }
}

pub fn form_from_str(s: &str) -> Result<Form> {
    serde_json::from_str::<FormJson>(s)
        .map_err(Error::from)
        .and_then(form_from_json)
}

pub fn subspace_from_str(s: &str) -> Result<Subspace> {
    serde_json::from_str::<SubspaceJson>(s)
        .map_err(Error::from)
        .and_then(subspace_from_json)
}

/// Exact rational as a string, `"p"` or `"p/q"`.
pub fn rational_string(q: &Rational) -> String {
    q.to_string()
}
