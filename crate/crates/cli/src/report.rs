//! JSON report schema. Every report deserializes back into the same type.

use serde::{Deserialize, Serialize};

pub type Grid = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupReport {
    pub order: usize,
    pub points: usize,
    pub abelian: bool,
    /// Elements with `g^2 = e`, the identity included.
    pub involutions: usize,
    pub generators: Vec<String>,
    pub plesken_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisReport {
    pub group_order: usize,
    pub dim: usize,
    pub basis: Vec<String>,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub dim: usize,
    pub labels: Vec<String>,
    pub entries: Vec<ConstantEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LieReport {
    pub dim: usize,
    pub abelian: bool,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub antisymmetric: bool,
    pub jacobi: bool,
    pub closed_form: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HatImage {
    pub basis: String,
    pub matrix: Grid,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InduceReport {
    pub degree: usize,
    pub dim: usize,
    pub hat_images: Vec<HatImage>,
    pub zero_map: bool,
    pub bracket_preserved: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrreducibilityJson {
    pub acting: String,
    pub degree: usize,
    pub commutant_dim: usize,
    pub commutant_basis: Vec<Grid>,
    pub envelope_dim: usize,
    pub classification: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Basis rows of an invariant, proper, nonzero subspace.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Grid>,
    pub real_status: String,
    pub schur: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CounterexampleJson {
    Identity {
        column: usize,
        image: Vec<String>,
    },
    Multiplicativity {
        g: String,
        h: String,
        column: usize,
        nested: Vec<String>,
        product: Vec<String>,
    },
    Bracket {
        i: String,
        j: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EscapeJson {
    pub action: String,
    pub vector: Vec<String>,
    pub image: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubmoduleJson {
    pub fg_submodule: bool,
    pub lg_submodule: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fg_counterexample: Option<EscapeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lg_counterexample: Option<EscapeJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuleCheckReport {
    pub dim: usize,
    pub fg_module: bool,
    pub lg_module: bool,
    pub counterexamples: Vec<CounterexampleJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub submodule: Option<SubmoduleJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapEntry {
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomInduceReport {
    pub map: Vec<MapEntry>,
    pub plesken_matrix: Grid,
    pub restriction_agrees: bool,
    pub preserves_bracket: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomVerifyReport {
    /// `group`, `algebra` or `plesken`.
    pub map_kind: String,
    pub homomorphism: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub induced_from_group_hom: Option<bool>,
}
