//! JSON models for the on-disk formats: field specs, algebras, extension
//! specs, and witness matrices with their root requests. Field elements are
//! emitted as strings and accepted as either strings or integers.

use crate::algebra::EvolutionAlgebra;
use crate::catalog;
use crate::cocycle::Cocycle;
use crate::extension::ExtensionSpec;
use crate::field::{Elem, Field};
use crate::linalg::Mat;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    #[error("unknown field kind {0:?} (expected \"fp\" or \"q\")")]
    UnknownFieldKind(String),
    #[error("field kind \"fp\" needs a modulus p")]
    MissingModulus,
    #[error("{0}")]
    Field(#[from] crate::field::FieldError),
    #[error("{0}")]
    Catalog(#[from] catalog::CatalogError),
    #[error("squares matrix must be {0}x{0}")]
    BadShape(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl FieldJson {
    pub fn of(field: Field) -> FieldJson {
        match field {
            Field::Fp { p } => FieldJson { kind: "fp".into(), p: Some(p) },
            Field::Rational => FieldJson { kind: "q".into(), p: None },
        }
    }

    pub fn to_field(&self) -> Result<Field, JsonError> {
        match self.kind.as_str() {
            "fp" => {
                let p = self.p.ok_or(JsonError::MissingModulus)?;
                Ok(Field::fp(p)?)
            }
            "q" => Ok(Field::rational()),
            other => Err(JsonError::UnknownFieldKind(other.to_string())),
        }
    }
}

/// A scalar in transit: JSON number or canonical string.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Int(i64),
    Str(String),
}

impl ElemJson {
    pub fn to_elem(&self, field: &Field) -> Result<Elem, JsonError> {
        match self {
            ElemJson::Int(n) => Ok(field.from_i64(*n)),
            ElemJson::Str(s) => Ok(field.parse(s)?),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub field: FieldJson,
    pub squares: Vec<Vec<ElemJson>>,
}

pub fn algebra_to_json(a: &EvolutionAlgebra, name: Option<String>) -> AlgebraJson {
    let f = a.field();
    AlgebraJson {
        name,
        dim: a.dim(),
        field: FieldJson::of(f),
        squares: (0..a.dim())
            .map(|i| {
                a.square_row(i)
                    .iter()
                    .map(|e| ElemJson::Str(f.format(e)))
                    .collect()
            })
            .collect(),
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<EvolutionAlgebra, JsonError> {
    let field = j.field.to_field()?;
    if j.squares.len() != j.dim || j.squares.iter().any(|r| r.len() != j.dim) {
        return Err(JsonError::BadShape(j.dim));
    }
    let mut m = Mat::zeros(field, j.dim, j.dim);
    for (i, row) in j.squares.iter().enumerate() {
        for (jj, e) in row.iter().enumerate() {
            m.set(i, jj, e.to_elem(&field)?);
        }
    }
    EvolutionAlgebra::new(field, j.dim, m).map_err(|e| JsonError::Malformed(e.to_string()))
}

pub fn algebra_from_str(s: &str) -> Result<EvolutionAlgebra, JsonError> {
    let j: AlgebraJson =
        serde_json::from_str(s).map_err(|e| JsonError::Malformed(e.to_string()))?;
    algebra_from_json(&j)
}

pub fn algebra_to_string(a: &EvolutionAlgebra, name: Option<String>) -> String {
    serde_json::to_string_pretty(&algebra_to_json(a, name)).expect("serializable")
}

/// Extension spec in transit: the base is a catalog name, thetas are
/// diagonal vectors over the base's field.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecJson {
    pub base: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<ElemJson>,
    pub thetas: Vec<Vec<ElemJson>>,
}

pub fn spec_from_json(j: &SpecJson) -> Result<ExtensionSpec, JsonError> {
    let field = match &j.field {
        Some(fj) => fj.to_field()?,
        None => Field::rational(),
    };
    let alpha = match &j.alpha {
        Some(a) => Some(a.to_elem(&field)?),
        None => None,
    };
    let base = catalog::get(&j.base, field, alpha.as_ref())?;
    let m = base.dim();
    let mut thetas = Vec::new();
    for row in &j.thetas {
        if row.len() != m {
            return Err(JsonError::BadShape(m));
        }
        let diag = row
            .iter()
            .map(|e| e.to_elem(&field))
            .collect::<Result<Vec<_>, _>>()?;
        thetas.push(Cocycle::new(field, diag));
    }
    Ok(ExtensionSpec::new(base, thetas))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSpecJson {
    pub of: String,
    pub k: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootRequestJson {
    pub root: RootSpecJson,
}

/// A witness matrix with the root requests its entries were built from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub matrix: Vec<Vec<String>>,
    pub roots: Vec<RootRequestJson>,
}

pub fn witness_to_json(field: &Field, m: &Mat, roots: &[(&str, u32)]) -> WitnessJson {
    WitnessJson {
        matrix: (0..m.rows)
            .map(|i| m.row(i).iter().map(|e| field.format(e)).collect())
            .collect(),
        roots: roots
            .iter()
            .map(|(of, k)| RootRequestJson {
                root: RootSpecJson { of: of.to_string(), k: *k },
            })
            .collect(),
    }
}
