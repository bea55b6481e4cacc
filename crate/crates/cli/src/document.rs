//! On-disk formats. Both are JSON with rationals written as strings
//! (`"3"`, `"-1/2"`); unknown fields are rejected.

use std::collections::BTreeMap;
use std::fmt;

use lcplie_core::scalar::{format_scalar, parse_scalar};
use lcplie_core::Scalar;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

/// A rational number carried as a canonical string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rat(pub Scalar);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational written as a string, e.g. \"3\" or \"-1/2\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                parse_scalar(v).map(Rat).map_err(|e| E::custom(format!("{e} in {v:?}")))
            }
        }

        d.deserialize_str(RatVisitor)
    }
}

pub fn rats(v: &[Scalar]) -> Vec<Rat> {
    v.iter().cloned().map(Rat).collect()
}

pub fn scalars(v: &[Rat]) -> Vec<Scalar> {
    v.iter().map(|r| r.0.clone()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// `k ↦` coefficient of `e_k` in `[e_i, e_j]`.
    pub c: BTreeMap<usize, Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricSpec {
    Identity,
    Gram(Vec<Vec<Rat>>),
}

impl Serialize for MetricSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MetricSpec::Identity => s.serialize_str("identity"),
            MetricSpec::Gram(rows) => rows.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for MetricSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Name(String),
            Gram(Vec<Vec<Rat>>),
        }
        match Raw::deserialize(d)
            .map_err(|_| de::Error::custom("metric must be \"identity\" or a square matrix of rational strings"))?
        {
            Raw::Name(n) if n == "identity" => Ok(MetricSpec::Identity),
            Raw::Name(n) => Err(de::Error::custom(format!(
                "unknown metric {n:?}; expected \"identity\""
            ))),
            Raw::Gram(rows) => Ok(MetricSpec::Gram(rows)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleBlock {
    pub q: usize,
    /// One `q × q` matrix per basis vector of the document's algebra.
    pub beta: Vec<Vec<Vec<Rat>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u_labels: Option<Vec<String>>,
}

/// A Lie algebra with optional metric, Lee form, flat factor and triple
/// data. With a `triple` block the top-level algebra and metric play the
/// role of `(𝔥, h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<MetricSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flat_factor: Option<Vec<Vec<Rat>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<TripleBlock>,
}

/// An integer matrix, with an optional splitting `ℝ^k = E₁ ⊕ E₂` given by
/// spanning vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub matrix: Vec<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e1: Option<Vec<Vec<Rat>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e2: Option<Vec<Vec<Rat>>>,
}

/// Canonical text: two-space indented JSON plus a trailing newline.
pub fn emit<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, serde_json::Error> {
    serde_json::from_str(text)
}
