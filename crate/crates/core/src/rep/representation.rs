use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::linalg::{Matrix, Subspace};
use crate::plesken::{plesken_basis, PleskenBasis, PleskenElement};
use crate::scalar::Field;

/// A homomorphism `G -> GL_d(F)`, stored as one matrix per group element.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRepresentation<T> {
    group: Arc<FiniteGroup>,
    degree: usize,
    images: Vec<Matrix<T>>,
}

impl<T: Field> GroupRepresentation<T> {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Matrix<T>] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &Matrix<T> {
        &self.images[g]
    }

    /// Images of the group's generators, in generator order.
    pub fn generator_images(&self) -> Vec<Matrix<T>> {
        self.group
            .generators()
            .iter()
            .map(|&g| self.images[g].clone())
            .collect()
    }

    /// The trivial representation of degree `d`.
    pub fn trivial(group: &Arc<FiniteGroup>, d: usize) -> Self {
        Self {
            group: group.clone(),
            degree: d,
            images: vec![Matrix::identity(d); group.order()],
        }
    }

    /// Left regular representation: `g e_h = e_{gh}`.
    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let images = (0..n)
            .map(|g| {
                let mut m = Matrix::zeros(n, n);
                for h in 0..n {
                    m.set(group.mul(g, h), h, T::one());
                }
                m
            })
            .collect();
        Self {
            group: group.clone(),
            degree: n,
            images,
        }
    }

    /// Permutation representation on the points of the realization:
    /// `g e_p = e_{g^-1(p)}`, which is multiplicative for left-to-right products.
    pub fn permutation(group: &Arc<FiniteGroup>) -> Self {
        let n = group.points();
        let images = (0..group.order())
            .map(|g| {
                let inv = group.element(group.inv(g));
                let mut m = Matrix::zeros(n, n);
                for p in 0..n {
                    m.set(inv.apply(p), p, T::one());
                }
                m
            })
            .collect();
        Self {
            group: group.clone(),
            degree: n,
            images,
        }
    }

    /// `rho o f` for a homomorphism `f : G -> H` and a representation of `H`.
    pub fn pullback(f: &GroupHom, rho: &Self) -> Result<Self> {
        if !crate::algebra::same_group(f.target(), &rho.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(Self {
            group: f.source().clone(),
            degree: rho.degree,
            images: f.map().iter().map(|&h| rho.images[h].clone()).collect(),
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !crate::algebra::same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(Self {
            group: self.group.clone(),
            degree: self.degree + other.degree,
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        })
    }

    /// `P rho P^-1`.
    pub fn conjugate(&self, p: &Matrix<T>) -> Result<Self> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::Precondition("conjugating matrix is singular".into()))?;
        if p.rows() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                found: p.rows(),
            });
        }
        Ok(Self {
            group: self.group.clone(),
            degree: self.degree,
            images: self.images.iter().map(|m| &(p * m) * &pinv).collect(),
        })
    }

    pub fn is_invariant(&self, w: &Subspace<T>) -> Result<bool> {
        w.is_invariant_under(&self.images)
    }
}

fn check_shape<T: Field>(group: &FiniteGroup, g: usize, m: &Matrix<T>, d: usize) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() != d {
        return Err(Error::InvalidRepresentation(format!(
            "image of {} has degree {}, expected {d}",
            group.label(g),
            m.rows()
        )));
    }
    Ok(())
}

/// Builds a representation from one matrix per generator of `group`.
pub fn rep_from_generators<T: Field>(
    group: &Arc<FiniteGroup>,
    gen_images: &[Matrix<T>],
) -> Result<GroupRepresentation<T>> {
    if gen_images.len() != group.generators().len() {
        return Err(Error::DimensionMismatch {
            expected: group.generators().len(),
            found: gen_images.len(),
        });
    }
    let pairs: Vec<(usize, Matrix<T>)> = group
        .generators()
        .iter()
        .copied()
        .zip(gen_images.iter().cloned())
        .collect();
    rep_from_images(group, &pairs)
}

/// Builds a representation from images of any generating set of elements,
/// extending along the Cayley table and verifying multiplicativity on every
/// pair.
pub fn rep_from_images<T: Field>(
    group: &Arc<FiniteGroup>,
    pairs: &[(usize, Matrix<T>)],
) -> Result<GroupRepresentation<T>> {
    let d = match pairs.first() {
        Some((_, m)) => m.rows(),
        None if group.order() == 1 => 1,
        None => return Err(Error::InvalidRepresentation("no generator images".into())),
    };
    if d == 0 {
        return Err(Error::InvalidRepresentation("degree must be positive".into()));
    }
    for (g, m) in pairs {
        if *g >= group.order() {
            return Err(Error::UnknownElement(format!("index {g}")));
        }
        check_shape(group, *g, m, d)?;
        if m.inverse().is_none() {
            return Err(Error::InvalidRepresentation(format!(
                "image of {} is not invertible",
                group.label(*g)
            )));
        }
    }

    let n = group.order();
    let mut images: Vec<Option<Matrix<T>>> = vec![None; n];
    images[0] = Some(Matrix::identity(d));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let mx = images[x].clone().expect("queued elements are assigned");
        for (s, ms) in pairs {
            let y = group.mul(x, *s);
            let value = &mx * ms;
            match &images[y] {
                None => {
                    images[y] = Some(value);
                    queue.push_back(y);
                }
                Some(existing) if *existing != value => {
                    return Err(Error::InvalidRepresentation(format!(
                        "inconsistent extension: rho({}) rho({}) differs from the image already assigned to {}",
                        group.label(x),
                        group.label(*s),
                        group.label(y)
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let images: Vec<Matrix<T>> = images
        .into_iter()
        .enumerate()
        .map(|(g, m)| {
            m.ok_or_else(|| {
                Error::InvalidRepresentation(format!(
                    "listed elements do not generate the group ({} unreached)",
                    group.label(g)
                ))
            })
        })
        .collect::<Result<_>>()?;

    for i in 0..n {
        for j in 0..n {
            if images[group.mul(i, j)] != &images[i] * &images[j] {
                return Err(Error::InvalidRepresentation(format!(
                    "rho({0} * {1}) != rho({0}) rho({1})",
                    group.label(i),
                    group.label(j)
                )));
            }
        }
    }

    Ok(GroupRepresentation {
        group: group.clone(),
        degree: d,
        images,
    })
}

/// A linear map `L(G) -> gl_d(F)` given on the hat basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LieRepresentation<T> {
    basis: Arc<PleskenBasis>,
    degree: usize,
    hat_images: Vec<Matrix<T>>,
}

impl<T: Field> LieRepresentation<T> {
    pub fn new(basis: &Arc<PleskenBasis>, degree: usize, hat_images: Vec<Matrix<T>>) -> Result<Self> {
        if hat_images.len() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                found: hat_images.len(),
            });
        }
        for m in &hat_images {
            if m.rows() != degree || m.cols() != degree {
                return Err(Error::DimensionMismatch {
                    expected: degree,
                    found: m.rows().max(m.cols()),
                });
            }
        }
        Ok(Self {
            basis: basis.clone(),
            degree,
            hat_images,
        })
    }

    pub fn basis(&self) -> &Arc<PleskenBasis> {
        &self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn hat_images(&self) -> &[Matrix<T>] {
        &self.hat_images
    }

    pub fn apply(&self, x: &PleskenElement<T>) -> Matrix<T> {
        assert_eq!(x.coords().len(), self.hat_images.len(), "element from another basis");
        let mut out = Matrix::zeros(self.degree, self.degree);
        for (c, m) in x.coords().iter().zip(&self.hat_images) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// First basis pair `(i, j)` with `psi([b_i, b_j]) != [psi(b_i), psi(b_j)]`.
    pub fn bracket_violation(&self) -> Result<Option<(usize, usize)>> {
        let d = self.basis.dim();
        for i in 0..d {
            for j in 0..d {
                let bi = PleskenElement::unit(&self.basis, i);
                let bj = PleskenElement::unit(&self.basis, j);
                let lhs = self.apply(&bi.bracket(&bj)?);
                let rhs = self.hat_images[i].commutator(&self.hat_images[j]);
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_zero(&self) -> bool {
        self.hat_images.iter().all(Matrix::is_zero)
    }
}

/// `psi(g^) = rho(g) - rho(g^-1)` on the hat basis.
pub fn induce_plesken_rep<T: Field>(rho: &GroupRepresentation<T>) -> LieRepresentation<T> {
    let basis = plesken_basis(rho.group());
    let g = rho.group();
    let hat_images = basis
        .reps()
        .iter()
        .map(|&r| rho.image(r) - rho.image(g.inv(r)))
        .collect();
    LieRepresentation {
        basis,
        degree: rho.degree(),
        hat_images,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::induce_group_hom;
    use crate::{QMatrix, Rational};

    fn rho5() -> GroupRepresentation<Rational> {
        let d4 = catalog::dihedral4();
        rep_from_generators(
            &d4,
            &[
                QMatrix::from_ints(&[[0, -1], [1, 0]]),
                QMatrix::from_ints(&[[0, 1], [1, 0]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn d4_two_dimensional() {
        let r = rho5();
        assert_eq!(r.degree(), 2);
        let psi = induce_plesken_rep(&r);
        assert_eq!(psi.hat_images(), &[QMatrix::from_ints(&[[0, -2], [2, 0]])]);
        assert_eq!(psi.bracket_violation().unwrap(), None);
    }

    #[test]
    fn d4_linear_characters_induce_zero() {
        let d4 = catalog::dihedral4();
        for (a, b) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
            let r = rep_from_generators(&d4, &[QMatrix::from_ints(&[[a]]), QMatrix::from_ints(&[[b]])]).unwrap();
            assert!(induce_plesken_rep(&r).is_zero());
        }
    }

    #[test]
    fn s3_rational_standard_form() {
        let s3 = catalog::symmetric(3);
        let r = rep_from_generators(
            &s3,
            &[
                QMatrix::from_ints(&[[0, -1], [1, -1]]),
                QMatrix::from_ints(&[[0, 1], [1, 0]]),
            ],
        )
        .unwrap();
        let psi = induce_plesken_rep(&r);
        assert_eq!(psi.hat_images(), &[QMatrix::from_ints(&[[1, -2], [2, -1]])]);
    }

    #[test]
    fn rejects_bad_generator_images() {
        let d4 = catalog::dihedral4();
        // a of order 3 cannot satisfy a^4 = e
        let bad = rep_from_generators(
            &d4,
            &[
                QMatrix::from_ints(&[[0, -1], [1, -1]]),
                QMatrix::from_ints(&[[0, 1], [1, 0]]),
            ],
        );
        assert!(matches!(bad, Err(Error::InvalidRepresentation(_))));

        let singular = rep_from_generators(
            &d4,
            &[QMatrix::from_ints(&[[0]]), QMatrix::from_ints(&[[1]])],
        );
        assert!(singular.unwrap_err().to_string().contains("not invertible"));

        let ragged = rep_from_generators(
            &d4,
            &[QMatrix::from_ints(&[[1]]), QMatrix::identity(2)],
        );
        assert!(ragged.is_err());
    }

    #[test]
    fn regular_and_permutation_are_valid() {
        let g = catalog::alternating4();
        for r in [
            GroupRepresentation::<Rational>::regular(&g),
            GroupRepresentation::permutation(&g),
        ] {
            let rebuilt = rep_from_generators(&g, &r.generator_images()).unwrap();
            assert_eq!(rebuilt, r);
        }
    }

    #[test]
    fn pullback_of_sign() {
        let s3 = catalog::symmetric(3);
        let c2 = catalog::cyclic(2);
        let imgs: Vec<usize> = s3
            .generators()
            .iter()
            .map(|&g| usize::from(s3.element_order(g) == 2))
            .collect();
        let f = induce_group_hom(&s3, &c2, &imgs).unwrap();
        let sgn_c2 = rep_from_generators(&c2, &[QMatrix::from_ints(&[[-1]])]).unwrap();
        let sgn = GroupRepresentation::pullback(&f, &sgn_c2).unwrap();
        let odd = sgn.images().iter().filter(|m| *m.get(0, 0) == Rational::from_int(-1)).count();
        assert_eq!(odd, 3);
    }
}
