//! Model file parsing: JSON in, validated model out.
//!
//! A model file is a JSON object with fields
//!
//! * `name` — string;
//! * `dimension` — the polytope dimension `n`;
//! * `facets` — either the facet count `m` or a list of `m` facet labels;
//! * `vertices` — one list of 0-based facet indices per vertex;
//! * `lambda` — `m` integer columns of length `n`, one per facet;
//! * `realization` (optional) — one rational coordinate vector per vertex;
//! * `functional` (optional, needs `realization`) — a rational `n`-vector;
//! * `orientation` (optional) — `+1` or `-1`, default `+1`.
//!
//! Rational entries are JSON integers or strings `"p/q"` with `q > 0` and
//! `gcd(|p|, q) = 1`; plain integers may also be given as decimal strings
//! when they exceed the native integer range.  Floating point numbers are
//! rejected everywhere.  Unknown fields are errors.
//!
//! Failures are classified: [`CliError::Syntax`] for malformed JSON,
//! [`CliError::Schema`] for well-formed JSON of the wrong shape, and
//! [`CliError::Validation`] for structurally correct files describing an
//! invalid polytope, characteristic matrix, or realization.  Genericity of
//! the functional is *not* checked here; commands that need a generic
//! functional check it when they run.

use std::fmt;
use std::path::Path;

use num_integer::Integer as _;
use num_traits::{One, Signed};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;

use crate::model::{build_model, CombinatorialModel};
use crate::polytope::{build_polytope, Realization};
use crate::zlattice::{Int, IntegerMatrix, Rat};

use super::CliError;

/// A parsed and fully validated model file.
#[derive(Debug)]
pub struct LoadedModel {
    pub name: String,
    /// Facet display labels; defaults to `F1…Fm` when the file gives a
    /// plain count.
    pub facet_labels: Vec<String>,
    pub model: CombinatorialModel,
    pub realization: Option<Realization>,
    pub orientation: i8,
}

/// An exact integer accepted as a JSON integer or a decimal string.
struct IntField(Int);

impl<'de> Deserialize<'de> for IntField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IntField;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<IntField, E> {
                Ok(IntField(Int::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<IntField, E> {
                Ok(IntField(Int::from(v)))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<IntField, E> {
                Err(E::custom(format!(
                    "floating point numbers are not allowed (got {v})"
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<IntField, E> {
                v.parse::<Int>()
                    .map(IntField)
                    .map_err(|_| E::custom(format!("invalid integer string {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

/// An exact rational accepted as a JSON integer, a decimal string, or a
/// reduced fraction string `"p/q"` with `q > 0`.
struct RatField(Rat);

impl<'de> Deserialize<'de> for RatField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RatField;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a string \"p/q\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RatField, E> {
                Ok(RatField(Rat::from_integer(Int::from(v))))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RatField, E> {
                Ok(RatField(Rat::from_integer(Int::from(v))))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<RatField, E> {
                Err(E::custom(format!(
                    "floating point numbers are not allowed (got {v})"
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<RatField, E> {
                parse_rational(v).map(RatField).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

fn parse_rational(s: &str) -> Result<Rat, String> {
    match s.split_once('/') {
        None => s
            .parse::<Int>()
            .map(Rat::from_integer)
            .map_err(|_| format!("invalid rational string {s:?}")),
        Some((p, q)) => {
            let p: Int = p
                .parse()
                .map_err(|_| format!("invalid numerator in {s:?}"))?;
            let q: Int = q
                .parse()
                .map_err(|_| format!("invalid denominator in {s:?}"))?;
            if !q.is_positive() {
                return Err(format!("denominator must be positive in {s:?}"));
            }
            if p.gcd(&q) != Int::one() {
                return Err(format!("fraction {s:?} is not in lowest terms"));
            }
            Ok(Rat::new(p, q))
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FacetsField {
    Count(usize),
    Labels(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    name: String,
    dimension: usize,
    facets: FacetsField,
    vertices: Vec<Vec<usize>>,
    lambda: Vec<Vec<IntField>>,
    #[serde(default)]
    realization: Option<Vec<Vec<RatField>>>,
    #[serde(default)]
    functional: Option<Vec<RatField>>,
    #[serde(default)]
    orientation: Option<IntField>,
}

/// Reads and validates a model file from disk.
pub fn load_model(path: &Path) -> Result<LoadedModel, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_model(&text)
}

/// Parses and validates a model file from JSON text.
pub fn parse_model(text: &str) -> Result<LoadedModel, CliError> {
    // Stage 1: JSON syntax.
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::Syntax(format!("malformed JSON: {e}")))?;
    // Stage 2: schema.
    let file: ModelFile = serde_json::from_value(value)
        .map_err(|e| CliError::Schema(format!("bad model file: {e}")))?;

    let n = file.dimension;
    let (m, facet_labels) = match file.facets {
        FacetsField::Count(m) => (m, (1..=m).map(|i| format!("F{i}")).collect()),
        FacetsField::Labels(labels) => (labels.len(), labels),
    };

    if file.lambda.len() != m {
        return Err(CliError::Schema(format!(
            "lambda has {} columns, expected one per facet ({m})",
            file.lambda.len()
        )));
    }
    for (i, col) in file.lambda.iter().enumerate() {
        if col.len() != n {
            return Err(CliError::Schema(format!(
                "lambda column {} has length {}, expected the dimension ({n})",
                i,
                col.len()
            )));
        }
    }
    if let Some(orient) = &file.orientation {
        if !orient.0.abs().is_one() {
            return Err(CliError::Schema(format!(
                "orientation must be +1 or -1, got {}",
                orient.0
            )));
        }
    }
    if file.functional.is_some() && file.realization.is_none() {
        return Err(CliError::Schema(
            "functional requires a realization".to_string(),
        ));
    }

    // Stage 3: validation of the combinatorial data.
    let polytope = build_polytope(n, m, file.vertices)
        .map_err(|e| CliError::Validation(format!("invalid polytope: {e}")))?;
    let columns: Vec<Vec<Int>> = file
        .lambda
        .into_iter()
        .map(|col| col.into_iter().map(|x| x.0).collect())
        .collect();
    let lambda = IntegerMatrix::from_columns(&columns);
    let realization = match file.realization {
        None => None,
        Some(coords) => {
            let coords: Vec<Vec<Rat>> = coords
                .into_iter()
                .map(|row| row.into_iter().map(|x| x.0).collect())
                .collect();
            let functional: Option<Vec<Rat>> = file
                .functional
                .map(|phi| phi.into_iter().map(|x| x.0).collect());
            Some(
                Realization::new(&polytope, coords, functional)
                    .map_err(|e| CliError::Validation(format!("invalid realization: {e}")))?,
            )
        }
    };
    let model = build_model(polytope, lambda)
        .map_err(|e| CliError::Validation(format!("invalid characteristic matrix: {e}")))?;
    let orientation = match file.orientation {
        Some(x) if x.0.is_negative() => -1,
        _ => 1,
    };

    Ok(LoadedModel {
        name: file.name,
        facet_labels,
        model,
        realization,
        orientation,
    })
}
