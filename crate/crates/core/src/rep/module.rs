use std::sync::Arc;

use crate::algebra::same_group;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{Matrix, Subspace};
use crate::plesken::{PleskenBasis, PleskenElement};
use crate::scalar::Field;

use super::representation::{induce_plesken_rep, GroupRepresentation};

/// An arbitrary assignment of a matrix to every group element. Unlike a
/// representation nothing is assumed about products.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleActionTable<T> {
    group: Arc<FiniteGroup>,
    dim: usize,
    action: Vec<Matrix<T>>,
}

impl<T: Field> ModuleActionTable<T> {
    pub fn new(group: &Arc<FiniteGroup>, dim: usize, action: Vec<Matrix<T>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                found: action.len(),
            });
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if m.rows() != dim { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(Self {
            group: group.clone(),
            dim,
            action,
        })
    }

    pub fn from_representation(rho: &GroupRepresentation<T>) -> Self {
        Self {
            group: rho.group().clone(),
            dim: rho.degree(),
            action: rho.images().to_vec(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, g: usize) -> &Matrix<T> {
        &self.action[g]
    }

    /// `g^ v = (action[g] - action[g^-1]) v`, one matrix per hat basis element.
    pub fn hat_action(&self, basis: &PleskenBasis) -> Vec<Matrix<T>> {
        basis
            .reps()
            .iter()
            .map(|&r| &self.action[r] - &self.action[self.group.inv(r)])
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModuleCounterexample<T> {
    /// The identity does not act as the identity; `column` is the first
    /// basis vector moved.
    Identity { column: usize, image: Vec<T> },
    /// `g (h v_column) != (gh) v_column`.
    Multiplicativity {
        g: usize,
        h: usize,
        column: usize,
        nested: Vec<T>,
        product: Vec<T>,
    },
    /// `[b_i, b_j] v != b_i (b_j v) - b_j (b_i v)` for hat basis elements.
    Bracket { i: usize, j: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuleReport<T> {
    pub fg_module: bool,
    pub lg_module: bool,
    pub counterexamples: Vec<ModuleCounterexample<T>>,
}

fn unit<T: Field>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

/// Checks the `FG`-module axioms (unital and multiplicative) and the
/// `L(G)`-module axioms of the induced hat action.
///
/// Linearity in both arguments holds by construction for a matrix table and
/// a linearly extended hat action, so only the bracket axiom can fail on the
/// Lie side. One counterexample is recorded per failing pair.
pub fn module_axioms_check<T: Field>(
    table: &ModuleActionTable<T>,
    basis: &Arc<PleskenBasis>,
) -> Result<ModuleReport<T>> {
    if !same_group(&table.group, basis.group()) {
        return Err(Error::GroupMismatch);
    }
    let g = &table.group;
    let n = table.dim;
    let mut counterexamples = Vec::new();

    let id = Matrix::identity(n);
    let mut unital = true;
    if table.action[0] != id {
        unital = false;
        let column = (0..n)
            .find(|&c| table.action[0].column(c) != id.column(c))
            .expect("matrices differ in some column");
        counterexamples.push(ModuleCounterexample::Identity {
            column,
            image: table.action[0].column(column),
        });
    }

    let mut multiplicative = true;
    for x in 0..g.order() {
        for y in 0..g.order() {
            let nested = &table.action[x] * &table.action[y];
            let product = &table.action[g.mul(x, y)];
            if nested != *product {
                multiplicative = false;
                let column = (0..n)
                    .find(|&c| nested.column(c) != product.column(c))
                    .expect("matrices differ in some column");
                let v = unit::<T>(n, column);
                counterexamples.push(ModuleCounterexample::Multiplicativity {
                    g: x,
                    h: y,
                    column,
                    nested: table.action[x].mul_vec(&table.action[y].mul_vec(&v)),
                    product: product.mul_vec(&v),
                });
            }
        }
    }

    let hats = table.hat_action(basis);
    let mut lg_module = true;
    for i in 0..basis.dim() {
        for j in 0..basis.dim() {
            let br = PleskenElement::<T>::unit(basis, i).bracket(&PleskenElement::unit(basis, j))?;
            let mut lhs = Matrix::zeros(n, n);
            for (c, h) in br.coords().iter().zip(&hats) {
                if !c.is_zero() {
                    lhs = &lhs + &h.scale(c);
                }
            }
            if lhs != hats[i].commutator(&hats[j]) {
                lg_module = false;
                counterexamples.push(ModuleCounterexample::Bracket { i, j });
            }
        }
    }

    Ok(ModuleReport {
        fg_module: unital && multiplicative,
        lg_module,
        counterexamples,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubmoduleReport<T> {
    pub fg_submodule: bool,
    pub lg_submodule: bool,
    /// First `(g, u, g u)` with `u` in `U` and `g u` outside it.
    pub fg_counterexample: Option<Escape<T>>,
    /// First `(i, u, b_i u)` for a hat basis element `b_i`.
    pub lg_counterexample: Option<Escape<T>>,
}

/// `(index of the acting matrix, vector, its image)`.
pub type Escape<T> = (usize, Vec<T>, Vec<T>);

fn first_escape<T: Field>(
    u: &Subspace<T>,
    mats: &[Matrix<T>],
) -> Result<Option<Escape<T>>> {
    for (k, m) in mats.iter().enumerate() {
        for v in u.basis() {
            let image = m.mul_vec(v);
            if !u.contains(&image)? {
                return Ok(Some((k, v.clone(), image)));
            }
        }
    }
    Ok(None)
}

pub fn submodule_check<T: Field>(
    table: &ModuleActionTable<T>,
    basis: &Arc<PleskenBasis>,
    u: &Subspace<T>,
) -> Result<SubmoduleReport<T>> {
    if !same_group(&table.group, basis.group()) {
        return Err(Error::GroupMismatch);
    }
    if u.ambient_dim() != table.dim {
        return Err(Error::DimensionMismatch {
            expected: table.dim,
            found: u.ambient_dim(),
        });
    }
    let fg_counterexample = first_escape(u, &table.action)?;
    let lg_counterexample = first_escape(u, &table.hat_action(basis))?;
    Ok(SubmoduleReport {
        fg_submodule: fg_counterexample.is_none(),
        lg_submodule: lg_counterexample.is_none(),
        fg_counterexample,
        lg_counterexample,
    })
}

/// Whether a `rho`-invariant `W` is also invariant under the induced Plesken
/// representation. Fails with a precondition error if `W` is not
/// `rho`-invariant.
pub fn check_reducibility_inheritance<T: Field>(
    rho: &GroupRepresentation<T>,
    w: &Subspace<T>,
) -> Result<bool> {
    if w.ambient_dim() != rho.degree() {
        return Err(Error::DimensionMismatch {
            expected: rho.degree(),
            found: w.ambient_dim(),
        });
    }
    if !rho.is_invariant(w)? {
        return Err(Error::Precondition(
            "subspace is not invariant under the group representation".into(),
        ));
    }
    w.is_invariant_under(induce_plesken_rep(rho).hat_images())
}
