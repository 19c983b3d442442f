//! Spec files: `{"dim": n, "phi": [["re","im"], ...], "name": ..., "norm_check": ...}`.
//!
//! Scalars are carried as pairs of rational strings so that no binary
//! floating-point value ever enters the pipeline.

use std::fmt;

use num_traits::Zero;
use phialg_core::{Algebra, DualVector, Subspace, GR};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// A Gaussian rational serialised as `["re", "im"]` in canonical text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub GR);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let [re, im] = self.0.to_text_pair();
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&re)?;
        t.serialize_element(&im)?;
        t.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PairVisitor;

        impl<'de> Visitor<'de> for PairVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a pair of rational strings [\"re\", \"im\"]")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Scalar, A::Error> {
                let re: String = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let im: String = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                GR::parse_pair(&re, &im).map(Scalar).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(PairVisitor)
    }
}

/// Validated input: `phi` has length `dim ≥ 1` and is not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub phi: Vec<Scalar>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm_check: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    dim: i64,
    phi: Vec<Scalar>,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    norm_check: Option<bool>,
}

impl AlgebraSpec {
    pub fn new(phi: Vec<GR>, name: Option<String>) -> Result<Self, CliError> {
        let spec = AlgebraSpec { dim: phi.len(), phi: phi.into_iter().map(Scalar).collect(), name, norm_check: None };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.dim < 1 {
            return Err(CliError::Domain("dim must be at least 1".into()));
        }
        if self.phi.len() != self.dim {
            return Err(CliError::Domain(format!(
                "phi has {} entries but dim is {}",
                self.phi.len(),
                self.dim
            )));
        }
        if self.phi.iter().all(|s| s.0.is_zero()) {
            return Err(CliError::Domain("functional must be nonzero".into()));
        }
        Ok(())
    }

    pub fn display_name(&self) -> &str {
        self.name.as_deref().unwrap_or("phi-algebra")
    }

    pub fn phi_coords(&self) -> Vec<GR> {
        self.phi.iter().map(|s| s.0.clone()).collect()
    }

    pub fn algebra(&self) -> Result<Algebra, CliError> {
        Ok(Algebra::phi_algebra(DualVector::new(self.phi_coords()))?.with_label(self.display_name()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialisation cannot fail")
    }
}

fn parse_error(err: serde_json::Error) -> CliError {
    CliError::Parse { line: err.line(), column: err.column(), message: err.to_string() }
}

pub fn parse_spec(text: &str) -> Result<AlgebraSpec, CliError> {
    let raw: RawSpec = serde_json::from_str(text).map_err(parse_error)?;
    if raw.dim < 1 {
        return Err(CliError::Domain("dim must be at least 1".into()));
    }
    let spec = AlgebraSpec {
        dim: usize::try_from(raw.dim).map_err(|_| CliError::Domain("dim out of range".into()))?,
        phi: raw.phi,
        name: raw.name,
        norm_check: raw.norm_check,
    };
    spec.validate()?;
    Ok(spec)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    basis: Vec<Vec<Scalar>>,
}

/// A subspace file `{"basis": [[["re","im"], ...], ...]}` spanning a
/// subspace of `ℚ(i)^dim`. An empty basis is the zero subspace.
pub fn parse_subspace(text: &str, dim: usize) -> Result<Subspace, CliError> {
    let raw: RawSubspace = serde_json::from_str(text).map_err(parse_error)?;
    let vectors: Vec<Vec<GR>> = raw
        .basis
        .into_iter()
        .map(|v| v.into_iter().map(|s| s.0).collect())
        .collect();
    if let Some(bad) = vectors.iter().find(|v| v.len() != dim) {
        return Err(CliError::Domain(format!(
            "subspace vector has {} entries but dim is {dim}",
            bad.len()
        )));
    }
    Ok(Subspace::span(dim, &vectors)?)
}
