//! Text and JSON input formats.
//!
//! Rationals are always strings (`"p/q"` or `"n"`), group elements are
//! 1-based cycle words such as `"(1 2 3)"`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraMap, GroupAlgebraElement};
use crate::error::{Error, Result};
use crate::group::{group_from_generators_capped, induce_group_hom_from_pairs, FiniteGroup, GroupHom, Permutation};
use crate::linalg::{Matrix, Subspace};
use crate::plesken::{plesken_basis, PleskenMap};
use crate::rep::{rep_from_images, GroupRepresentation, ModuleActionTable};
use crate::scalar::Field;

/// One permutation per line; blank lines and `#` comments are skipped.
/// Generators are padded to a common number of points.
pub fn parse_group(text: &str, cap: usize) -> Result<Arc<FiniteGroup>> {
    let mut gens = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let p = Permutation::parse_cycles(line, 0)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        gens.push(p);
    }
    let n = gens.iter().map(Permutation::points).max().unwrap_or(0);
    let gens: Vec<Permutation> = gens.iter().map(|g| g.padded(n)).collect();
    group_from_generators_capped(&gens, cap)
}

pub fn parse_matrix<T: Field>(rows: &[Vec<String>]) -> Result<Matrix<T>> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| T::parse(s)).collect::<Result<Vec<T>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}

pub fn parse_vector<T: Field>(v: &[String]) -> Result<Vec<T>> {
    v.iter().map(|s| T::parse(s)).collect()
}

pub fn format_matrix<T: Field>(m: &Matrix<T>) -> Vec<Vec<String>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

pub fn format_vector<T: Field>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn from_json<'a, D: Deserialize<'a>>(text: &'a str, what: &str) -> Result<D> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermMatrix {
    pub perm: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepFile {
    pub degree: usize,
    pub generators: Vec<PermMatrix>,
}

fn checked_matrix<T: Field>(entry: &PermMatrix, dim: usize) -> Result<Matrix<T>> {
    let m: Matrix<T> = parse_matrix(&entry.matrix)?;
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::InvalidRepresentation(format!(
            "matrix for {} is {}x{}, expected {dim}x{dim}",
            entry.perm,
            m.rows(),
            m.cols()
        )));
    }
    Ok(m)
}

/// Representation file: `{"degree": d, "generators": [{"perm", "matrix"}]}`.
/// The listed elements must generate the group.
pub fn parse_rep<T: Field>(group: &Arc<FiniteGroup>, text: &str) -> Result<GroupRepresentation<T>> {
    let file: RepFile = from_json(text, "representation file")?;
    if file.degree == 0 {
        return Err(Error::InvalidRepresentation("degree must be positive".into()));
    }
    let mut pairs = Vec::new();
    for entry in &file.generators {
        let g = group.parse_element(&entry.perm)?;
        pairs.push((g, checked_matrix(entry, file.degree)?));
    }
    if pairs.is_empty() {
        if group.order() == 1 {
            return Ok(GroupRepresentation::trivial(group, file.degree));
        }
        return Err(Error::InvalidRepresentation("no generator images".into()));
    }
    rep_from_images(group, &pairs)
}

/// Element literal: `[["1", "(1 2 3)"], ["-1", "(1 3 2)"]]`.
pub fn parse_element<T: Field>(group: &Arc<FiniteGroup>, terms: &[(String, String)]) -> Result<GroupAlgebraElement<T>> {
    let parsed = terms
        .iter()
        .map(|(c, w)| Ok((T::parse(c)?, group.parse_element(w)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupAlgebraElement::from_terms(group, &parsed))
}

pub fn parse_element_literal<T: Field>(group: &Arc<FiniteGroup>, text: &str) -> Result<GroupAlgebraElement<T>> {
    let terms: Vec<(String, String)> = from_json(text, "element literal")?;
    parse_element(group, &terms)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub dim: usize,
    pub actions: Vec<PermMatrix>,
}

/// Module action table: every non-identity element must be listed; the
/// identity defaults to the identity matrix.
pub fn parse_table<T: Field>(group: &Arc<FiniteGroup>, text: &str) -> Result<ModuleActionTable<T>> {
    let file: TableFile = from_json(text, "action table")?;
    let mut action: Vec<Option<Matrix<T>>> = vec![None; group.order()];
    action[0] = Some(Matrix::identity(file.dim));
    for entry in &file.actions {
        let g = group.parse_element(&entry.perm)?;
        action[g] = Some(checked_matrix(entry, file.dim)?);
    }
    let action = action
        .into_iter()
        .enumerate()
        .map(|(g, m)| m.ok_or_else(|| Error::Parse(format!("action table has no entry for {}", group.label(g)))))
        .collect::<Result<Vec<_>>>()?;
    ModuleActionTable::new(group, file.dim, action)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubspaceFile {
    pub basis: Vec<Vec<String>>,
}

/// Subspace file: `{"basis": [[...], ...]}`; the basis may be redundant.
pub fn parse_subspace<T: Field>(ambient: usize, text: &str) -> Result<Subspace<T>> {
    let file: SubspaceFile = from_json(text, "subspace file")?;
    let vectors = file
        .basis
        .iter()
        .map(|v| parse_vector::<T>(v))
        .collect::<Result<Vec<_>>>()?;
    Subspace::from_vectors(ambient, vectors)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorImage {
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ElementImage {
    pub from: String,
    pub to: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PleskenMatrix {
    pub matrix: Vec<Vec<String>>,
}

/// Homomorphism file. `generators` gives a group homomorphism; `elements`
/// gives a linear map `FG -> FH` on every group element; `plesken` gives a
/// linear map `L(G) -> L(H)` in hat coordinates.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct HomFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorImage>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<ElementImage>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plesken: Option<PleskenMatrix>,
}

pub enum HomSpec<T> {
    Group(GroupHom),
    Algebra(AlgebraMap<T>),
    Plesken(PleskenMap<T>),
}

pub fn parse_hom<T: Field>(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>, text: &str) -> Result<HomSpec<T>> {
    let file: HomFile = from_json(text, "map file")?;
    let given = [file.generators.is_some(), file.elements.is_some(), file.plesken.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(Error::Parse(
            "map file needs exactly one of `generators`, `elements`, `plesken`".into(),
        ));
    }
    if let Some(gens) = file.generators {
        let pairs = gens
            .iter()
            .map(|e| Ok((source.parse_element(&e.from)?, target.parse_element(&e.to)?)))
            .collect::<Result<Vec<_>>>()?;
        return Ok(HomSpec::Group(induce_group_hom_from_pairs(source, target, &pairs)?));
    }
    if let Some(elements) = file.elements {
        let mut images: Vec<Option<GroupAlgebraElement<T>>> = vec![None; source.order()];
        for e in &elements {
            let g = source.parse_element(&e.from)?;
            images[g] = Some(parse_element(target, &e.to)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, x)| x.ok_or_else(|| Error::Parse(format!("map file has no image for {}", source.label(g)))))
            .collect::<Result<Vec<_>>>()?;
        return Ok(HomSpec::Algebra(AlgebraMap::from_images(source, target, images)?));
    }
    let m = file.plesken.expect("exactly one section present");
    let matrix = if m.matrix.iter().all(Vec::is_empty) {
        Matrix::zeros(plesken_basis(target).dim(), plesken_basis(source).dim())
    } else {
        parse_matrix(&m.matrix)?
    };
    Ok(HomSpec::Plesken(PleskenMap::from_matrix(
        &plesken_basis(source),
        &plesken_basis(target),
        matrix,
    )?))
}
