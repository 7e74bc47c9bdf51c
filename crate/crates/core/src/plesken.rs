//! The Plesken Lie algebra `L(G)`: the span of `g^ = g - g^-1` inside `FG`
//! under the commutator bracket.
//!
//! Coordinates are taken in the hat basis over canonical representatives:
//! for each pair `{g, g^-1}` with `g != g^-1`, the smaller element index.
//! Involutions and the identity have `g^ = 0` and contribute nothing.

use std::sync::Arc;

use crate::algebra::{same_group, AlgebraMap, GroupAlgebraElement};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::linalg::{kernel_basis, Matrix, Subspace};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PleskenBasis {
    group: Arc<FiniteGroup>,
    reps: Vec<usize>,
    /// For each element: its basis slot and whether it is the representative
    /// (`+1`) or its inverse (`-1`); `None` for self-inverse elements.
    position: Vec<Option<(usize, i8)>>,
}

impl PleskenBasis {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Element indices of the representatives, in basis order.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn position(&self, g: usize) -> Option<(usize, i8)> {
        self.position[g]
    }

    /// Cycle-notation labels of the representatives.
    pub fn labels(&self) -> Vec<String> {
        self.reps.iter().map(|&g| self.group.label(g)).collect()
    }
}

pub fn plesken_basis(group: &Arc<FiniteGroup>) -> Arc<PleskenBasis> {
    let n = group.order();
    let mut reps = Vec::new();
    let mut position = vec![None; n];
    for g in 0..n {
        let gi = group.inv(g);
        if g < gi {
            position[g] = Some((reps.len(), 1));
            position[gi] = Some((reps.len(), -1));
            reps.push(g);
        }
    }
    Arc::new(PleskenBasis {
        group: group.clone(),
        reps,
        position,
    })
}

fn same_basis(a: &Arc<PleskenBasis>, b: &Arc<PleskenBasis>) -> bool {
    Arc::ptr_eq(a, b) || (a.reps == b.reps && same_group(&a.group, &b.group))
}

/// `sum_i coords[i] * rep_i^`.
#[derive(Debug, Clone)]
pub struct PleskenElement<T> {
    basis: Arc<PleskenBasis>,
    coords: Vec<T>,
}

impl<T: Field> PartialEq for PleskenElement<T> {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.basis, &other.basis) && self.coords == other.coords
    }
}

impl<T: Field> PleskenElement<T> {
    pub fn zero(basis: &Arc<PleskenBasis>) -> Self {
        Self {
            basis: basis.clone(),
            coords: vec![T::zero(); basis.dim()],
        }
    }

    /// The `i`-th hat basis element.
    pub fn unit(basis: &Arc<PleskenBasis>, i: usize) -> Self {
        let mut x = Self::zero(basis);
        x.coords[i] = T::one();
        x
    }

    pub fn from_coords(basis: &Arc<PleskenBasis>, coords: Vec<T>) -> Result<Self> {
        if coords.len() != basis.dim() {
            return Err(Error::DimensionMismatch {
                expected: basis.dim(),
                found: coords.len(),
            });
        }
        Ok(Self {
            basis: basis.clone(),
            coords,
        })
    }

    /// Coordinates of `g^` for an arbitrary element `g`.
    pub fn hat_of(basis: &Arc<PleskenBasis>, g: usize) -> Self {
        let mut x = Self::zero(basis);
        if let Some((i, sign)) = basis.position(g) {
            x.coords[i] = T::from_int(sign as i64);
        }
        x
    }

    pub fn basis(&self) -> &Arc<PleskenBasis> {
        &self.basis
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(T::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_basis(&self.basis, &other.basis) {
            return Err(Error::GroupMismatch);
        }
        Ok(Self {
            basis: self.basis.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            basis: self.basis.clone(),
            coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// The element of `FG` this stands for.
    pub fn embed(&self) -> GroupAlgebraElement<T> {
        let g = self.basis.group();
        let mut coeffs = vec![T::zero(); g.order()];
        for (&r, c) in self.basis.reps.iter().zip(&self.coords) {
            coeffs[r] = coeffs[r].clone() + c.clone();
            let ri = g.inv(r);
            coeffs[ri] = coeffs[ri].clone() - c.clone();
        }
        GroupAlgebraElement::from_coeffs(g, coeffs).expect("length matches group order")
    }

    /// Hat coordinates of `x`, which must satisfy `coeff(g) = -coeff(g^-1)`
    /// and vanish on self-inverse elements.
    pub fn project(basis: &Arc<PleskenBasis>, x: &GroupAlgebraElement<T>) -> Result<Self> {
        let g = basis.group();
        if !same_group(x.group(), g) {
            return Err(Error::GroupMismatch);
        }
        let mut coords = vec![T::zero(); basis.dim()];
        for e in 0..g.order() {
            let c = x.coeff(e);
            match basis.position(e) {
                None if !c.is_zero() => return Err(Error::NotInSpan(g.label(e))),
                None => {}
                Some((i, 1)) => {
                    if *x.coeff(g.inv(e)) != -c.clone() {
                        return Err(Error::NotInSpan(g.label(e)));
                    }
                    coords[i] = c.clone();
                }
                Some(_) => {}
            }
        }
        Ok(Self {
            basis: basis.clone(),
            coords,
        })
    }

    /// `[x, y]` computed in `FG` and projected back.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        if !same_basis(&self.basis, &other.basis) {
            return Err(Error::GroupMismatch);
        }
        let z = self.embed().bracket(&other.embed())?;
        Self::project(&self.basis, &z)
    }
}

pub fn embed<T: Field>(x: &PleskenElement<T>) -> GroupAlgebraElement<T> {
    x.embed()
}

pub fn project<T: Field>(
    basis: &Arc<PleskenBasis>,
    x: &GroupAlgebraElement<T>,
) -> Result<PleskenElement<T>> {
    PleskenElement::project(basis, x)
}

pub fn plesken_bracket<T: Field>(
    x: &PleskenElement<T>,
    y: &PleskenElement<T>,
) -> Result<PleskenElement<T>> {
    x.bracket(y)
}

/// `[b_i, b_j] = sum_k c[i][j][k] b_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Field> StructureConstants<T> {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_coords(&self, i: usize, j: usize) -> &[T] {
        let start = (i * self.dim + j) * self.dim;
        &self.data[start..start + self.dim]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    /// `(i, j, k, c)` for every nonzero entry, in index order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, T)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// First `(i, j, k)` with `c[i][j][k] != -c[j][i][k]`.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in i..d {
                for k in 0..d {
                    if *self.get(i, j, k) != -self.get(j, i, k).clone() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First `(i, j, k, l)` where the Jacobi sum
    /// `sum_m c[i][j][m] c[m][k][l] + c[j][k][m] c[m][i][l] + c[k][i][m] c[m][j][l]`
    /// is nonzero.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut s = T::zero();
                        for m in 0..d {
                            s = s
                                + self.get(i, j, m).clone() * self.get(m, k, l).clone()
                                + self.get(j, k, m).clone() * self.get(m, i, l).clone()
                                + self.get(k, i, m).clone() * self.get(m, j, l).clone();
                        }
                        if !s.is_zero() {
                            return Some((i, j, k, l));
                        }
                    }
                }
            }
        }
        None
    }
}

pub fn structure_constants<T: Field>(basis: &Arc<PleskenBasis>) -> Result<StructureConstants<T>> {
    let d = basis.dim();
    let units: Vec<PleskenElement<T>> = (0..d).map(|i| PleskenElement::unit(basis, i)).collect();
    let mut data = Vec::with_capacity(d * d * d);
    for x in &units {
        for y in &units {
            data.extend(x.bracket(y)?.coords);
        }
    }
    Ok(StructureConstants { dim: d, data })
}

/// Checks, for every ordered pair of representatives `g, h`, that the
/// convolution bracket `g^ h^ - h^ g^` in `FG` equals
/// `(gh)^ + (g^-1 h^-1)^ - (g h^-1)^ - (g^-1 h)^`.
pub fn closed_form_bracket_check<T: Field>(basis: &Arc<PleskenBasis>) -> bool {
    let grp = basis.group();
    let hat = |x: usize| GroupAlgebraElement::<T>::hat(grp, x);
    for &g in basis.reps() {
        for &h in basis.reps() {
            let (gi, hi) = (grp.inv(g), grp.inv(h));
            let lhs = hat(g).bracket(&hat(h)).expect("same group");
            let rhs = hat(grp.mul(g, h))
                .add(&hat(grp.mul(gi, hi)))
                .and_then(|x| x.sub(&hat(grp.mul(g, hi))))
                .and_then(|x| x.sub(&hat(grp.mul(gi, h))))
                .expect("same group");
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A linear map `L(G) -> L(H)` in hat coordinates (`dim H x dim G` matrix).
#[derive(Debug, Clone)]
pub struct PleskenMap<T> {
    source: Arc<PleskenBasis>,
    target: Arc<PleskenBasis>,
    matrix: Matrix<T>,
}

impl<T: Field> PleskenMap<T> {
    pub fn from_matrix(
        source: &Arc<PleskenBasis>,
        target: &Arc<PleskenBasis>,
        matrix: Matrix<T>,
    ) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn source(&self) -> &Arc<PleskenBasis> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PleskenBasis> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn apply(&self, x: &PleskenElement<T>) -> Result<PleskenElement<T>> {
        if !same_basis(x.basis(), &self.source) {
            return Err(Error::GroupMismatch);
        }
        if self.source.dim() == 0 {
            return Ok(PleskenElement::zero(&self.target));
        }
        PleskenElement::from_coords(&self.target, self.matrix.mul_vec(x.coords()))
    }

    /// First basis pair `(i, j)` with `f[b_i, b_j] != [f b_i, f b_j]`.
    pub fn bracket_violation(&self) -> Result<Option<(usize, usize)>> {
        let d = self.source.dim();
        for i in 0..d {
            for j in 0..d {
                let bi = PleskenElement::unit(&self.source, i);
                let bj = PleskenElement::unit(&self.source, j);
                let lhs = self.apply(&bi.bracket(&bj)?)?;
                let rhs = self.apply(&bi)?.bracket(&self.apply(&bj)?)?;
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn preserves_bracket(&self) -> Result<bool> {
        Ok(self.bracket_violation()?.is_none())
    }

    /// Whether `embed(f(b)) = phi(embed(b))` for every hat basis element `b`.
    pub fn agrees_with(&self, phi: &AlgebraMap<T>) -> Result<bool> {
        for i in 0..self.source.dim() {
            let b = PleskenElement::unit(&self.source, i);
            if self.apply(&b)?.embed() != phi.apply(&b.embed())? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `sum a_i g_i^ -> sum a_i f(g_i)^` for a group homomorphism `f`.
pub fn induce_plesken_hom<T: Field>(f: &GroupHom) -> PleskenMap<T> {
    let source = plesken_basis(f.source());
    let target = plesken_basis(f.target());
    let mut matrix = Matrix::zeros(target.dim(), source.dim());
    for (col, &g) in source.reps().iter().enumerate() {
        if let Some((row, sign)) = target.position(f.apply(g)) {
            matrix.set(row, col, T::from_int(sign as i64));
        }
    }
    PleskenMap {
        source,
        target,
        matrix,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LieAnalysis {
    pub dim: usize,
    pub abelian: bool,
    pub center_dim: usize,
    pub derived_dim: usize,
}

pub fn lie_analysis<T: Field>(s: &StructureConstants<T>) -> LieAnalysis {
    let d = s.dim();
    if d == 0 {
        return LieAnalysis {
            dim: 0,
            abelian: true,
            center_dim: 0,
            derived_dim: 0,
        };
    }
    // row (j, k), column i: coefficient of b_k in [b_i, b_j]
    let mut ad = Matrix::zeros(d * d, d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                ad.set(j * d + k, i, s.get(i, j, k).clone());
            }
        }
    }
    let center_dim = kernel_basis(&ad).dim();
    let mut derived = Subspace::zero(d);
    for i in 0..d {
        for j in i + 1..d {
            derived.insert(s.bracket_coords(i, j).to_vec());
        }
    }
    LieAnalysis {
        dim: d,
        abelian: s.is_zero(),
        center_dim,
        derived_dim: derived.dim(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::{QGroupAlgebraElement as E, QPleskenElement as P, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn s3_basis() {
        let g = catalog::symmetric(3);
        let b = plesken_basis(&g);
        assert_eq!(b.dim(), 1);
        assert_eq!(b.labels(), vec!["(1 2 3)"]);
        let hat = P::unit(&b, 0).embed();
        assert_eq!(hat.to_string(), "(1 2 3) - (1 3 2)");
    }

    #[test]
    fn d4_basis_is_a_minus_a_cubed() {
        let g = catalog::dihedral4();
        let b = plesken_basis(&g);
        assert_eq!(b.labels(), vec!["(1 2 3 4)"]);
        let a = g.parse_element("(1 2 3 4)").unwrap();
        let a3 = g.parse_element("(1 4 3 2)").unwrap();
        let expect = E::from_terms(&g, &[(q(1), a), (q(-1), a3)]);
        assert_eq!(P::unit(&b, 0).embed(), expect);
    }

    #[test]
    fn c2_is_zero_dimensional() {
        assert_eq!(plesken_basis(&catalog::cyclic(2)).dim(), 0);
    }

    #[test]
    fn project_round_trip_and_errors() {
        let g = catalog::symmetric(3);
        let b = plesken_basis(&g);
        let r = g.parse_element("(1 2 3)").unwrap();
        let x = E::hat(&g, r);
        assert_eq!(P::project(&b, &x).unwrap().coords(), &[q(1)]);
        assert_eq!(P::project(&b, &E::one(&g)).unwrap_err(), Error::NotInSpan("()".into()));
        let lopsided = E::basis(&g, r);
        assert!(matches!(P::project(&b, &lopsided), Err(Error::NotInSpan(_))));
        assert!(P::zero(&b).embed().is_zero());
    }

    #[test]
    fn s3_bracket_is_zero() {
        let b = plesken_basis(&catalog::symmetric(3));
        let x = P::unit(&b, 0).scale(&q(3));
        let y = P::unit(&b, 0).scale(&q(-7));
        assert!(x.bracket(&y).unwrap().is_zero());
        let c = structure_constants::<Rational>(&b).unwrap();
        assert!(c.is_zero());
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn quaternion_bracket_matches_expansion() {
        let g = catalog::quaternion();
        let b = plesken_basis(&g);
        // point 4s + u stands for (-1)^s u; the regular action sends point 0 to the element
        let elem = |pt: usize| (0..8).find(|&e| g.element(e).apply(0) == pt).unwrap();
        let (i, mi, j, mj, k, mk) = (elem(1), elem(5), elem(2), elem(6), elem(3), elem(7));
        let ihat = P::project(&b, &E::from_terms(&g, &[(q(1), i), (q(-1), mi)])).unwrap();
        let jhat = P::project(&b, &E::from_terms(&g, &[(q(1), j), (q(-1), mj)])).unwrap();
        // (i - mi)(j - mj) - (j - mj)(i - mi) = 4k - 4mk
        let expect = E::from_terms(&g, &[(q(4), k), (q(-4), mk)]);
        assert_eq!(ihat.bracket(&jhat).unwrap().embed(), expect);
    }

    #[test]
    fn closed_form_on_small_groups() {
        for g in [catalog::symmetric(3), catalog::dihedral4(), catalog::symmetric(4)] {
            assert!(closed_form_bracket_check::<Rational>(&plesken_basis(&g)));
        }
    }

    #[test]
    fn analysis_of_c7() {
        let b = plesken_basis(&catalog::cyclic(7));
        let a = lie_analysis(&structure_constants::<Rational>(&b).unwrap());
        assert_eq!(
            a,
            LieAnalysis {
                dim: 3,
                abelian: true,
                center_dim: 3,
                derived_dim: 0
            }
        );
    }

    #[test]
    fn identity_hom_induces_identity() {
        let g = catalog::symmetric(4);
        let f = induce_plesken_hom::<Rational>(&GroupHom::identity(&g));
        assert_eq!(f.matrix(), &Matrix::identity(7));
        assert!(f.preserves_bracket().unwrap());
    }
}
