//! JSON shapes emitted by the command line. Every struct rejects unknown
//! fields, so deserializing an output and serializing it again is a schema
//! check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::BasisElement;
use crate::families::ReconcileItem;
use crate::homology::{EulerReport, HappelTerm};
use crate::linalg::Rational;
use crate::report::Check;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisOut {
    pub algebra: String,
    pub dim: usize,
    pub vertices: Vec<String>,
    pub graded_dims: Vec<usize>,
    pub basis: Vec<BasisElement>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanOut {
    pub algebra: String,
    pub vertices: Vec<String>,
    /// `cartan[w][v] = dim e_w A e_v`.
    pub cartan: Vec<Vec<usize>>,
    /// `arrows[w][v]` = number of arrows `v → w`.
    pub arrows: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolutionOut {
    pub simple: String,
    pub terms: Vec<Vec<String>>,
    /// `null` if the resolution was cut off at the degree limit.
    pub length: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolveOut {
    pub algebra: String,
    pub max_degree: usize,
    pub resolutions: Vec<ResolutionOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtOut {
    pub algebra: String,
    pub vertices: Vec<String>,
    pub max_degree: usize,
    /// `entries[p][v][w] = dim Ext^p(S_v, S_w)`.
    pub entries: Vec<Vec<Vec<usize>>>,
    pub global_dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HappelOut {
    pub algebra: String,
    pub vertices: Vec<String>,
    pub terms: Vec<Vec<HappelTerm>>,
    pub terminated: bool,
    pub euler: Option<EulerReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomologyOut {
    pub algebra: String,
    pub theory: String,
    pub mode: String,
    pub dims: Vec<usize>,
    pub chain_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChernClassOut {
    pub vertex: String,
    pub coords: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChernOut {
    pub algebra: String,
    pub p: usize,
    /// `(y_p, z_p, …, y_1, z_1, y_0)`.
    pub coefficients: Vec<Rational>,
    pub hc_dim: usize,
    pub rank: usize,
    pub classes: Vec<ChernClassOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductOut {
    pub left: String,
    pub right: String,
    pub case: u8,
    /// `"i,u"` to multiplicity.
    pub product: BTreeMap<String, i64>,
    pub expected_dim: i64,
    pub output_dim: i64,
    pub audit_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct K0Out {
    pub n: usize,
    pub products: Vec<ProductOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorOut {
    pub n: usize,
    pub left: String,
    pub right: String,
    pub decomposition: BTreeMap<String, i64>,
    pub formula: BTreeMap<String, i64>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReconcileOut {
    pub n: usize,
    pub items: Vec<ReconcileItem>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PaperReportOut {
    pub n: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn round_trip<T: Serialize + for<'de> Deserialize<'de>>(text: &str) -> Result<(), String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let typed: T = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
    let again = serde_json::to_value(&typed).map_err(|e| e.to_string())?;
    if again != value {
        return Err("output does not survive a round trip".into());
    }
    Ok(())
}

/// Checks `text` against the shape emitted by `command`.
pub fn validate(command: &str, text: &str) -> Result<(), String> {
    match command {
        "basis" => round_trip::<BasisOut>(text),
        "cartan" => round_trip::<CartanOut>(text),
        "resolve" => round_trip::<ResolveOut>(text),
        "ext" => round_trip::<ExtOut>(text),
        "happel" => round_trip::<HappelOut>(text),
        "hh" | "hc" => round_trip::<HomologyOut>(text),
        "chern" => round_trip::<ChernOut>(text),
        "k0-product" => round_trip::<K0Out>(text),
        "tensor" => round_trip::<TensorOut>(text),
        "reconcile" => round_trip::<ReconcileOut>(text),
        "paper-report" => round_trip::<PaperReportOut>(text),
        other => Err(format!("unknown command `{other}`")),
    }
}
