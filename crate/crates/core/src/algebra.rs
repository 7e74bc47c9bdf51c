//! The group algebra `FG`, its commutator Lie structure, and maps between
//! group algebras.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom};
use crate::linalg::Matrix;
use crate::rep::GroupRepresentation;
use crate::scalar::Field;

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `sum a_i g_i`, stored densely by element index.
#[derive(Debug, Clone)]
pub struct GroupAlgebraElement<T> {
    group: Arc<FiniteGroup>,
    coeffs: Vec<T>,
}

impl<T: Field> PartialEq for GroupAlgebraElement<T> {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl<T: Field> GroupAlgebraElement<T> {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        Self {
            group: group.clone(),
            coeffs: vec![T::zero(); group.order()],
        }
    }

    /// The basis element `g` for element index `g`.
    pub fn basis(group: &Arc<FiniteGroup>, g: usize) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[g] = T::one();
        x
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::basis(group, 0)
    }

    /// `g - g^-1`.
    pub fn hat(group: &Arc<FiniteGroup>, g: usize) -> Self {
        let mut x = Self::zero(group);
        let gi = group.inv(g);
        x.coeffs[g] = x.coeffs[g].clone() + T::one();
        x.coeffs[gi] = x.coeffs[gi].clone() - T::one();
        x
    }

    pub fn from_coeffs(group: &Arc<FiniteGroup>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                found: coeffs.len(),
            });
        }
        Ok(Self {
            group: group.clone(),
            coeffs,
        })
    }

    /// Sums `c * g` over `(c, g)` terms; repeated elements accumulate.
    pub fn from_terms(group: &Arc<FiniteGroup>, terms: &[(T, usize)]) -> Self {
        let mut x = Self::zero(group);
        for (c, g) in terms {
            x.coeffs[*g] = x.coeffs[*g].clone() + c.clone();
        }
        x
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &T {
        &self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |a, c| a + c.clone())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Convolution product: `c_k = sum over g_i g_j = g_k of a_i b_j`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let g = &self.group;
        let mut out = vec![T::zero(); g.order()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = g.mul(i, j);
                out[k] = out[k].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self {
            group: g.clone(),
            coeffs: out,
        })
    }

    /// `[x, y] = xy - yx`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    /// Terms with nonzero coefficients as `(coefficient, element index)`.
    pub fn terms(&self) -> Vec<(T, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| (c.clone(), g))
            .collect()
    }
}

impl<T: Field> fmt::Display for GroupAlgebraElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (c, g)) in terms.iter().enumerate() {
            let neg = c.signum_i8() < 0;
            let mag = if neg { -c.clone() } else { c.clone() };
            match (n == 0, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", self.group.label(*g))?;
        }
        Ok(())
    }
}

/// A linear map `FG -> FH` given by the images of the group elements.
#[derive(Debug, Clone)]
pub struct AlgebraMap<T> {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<GroupAlgebraElement<T>>,
}

/// Outcome of a multiplicativity check; the counterexample is the first
/// failing pair of element indices in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomCheck {
    pub holds: bool,
    pub counterexample: Option<(usize, usize)>,
}

impl<T: Field> AlgebraMap<T> {
    pub fn from_images(
        source: &Arc<FiniteGroup>,
        target: &Arc<FiniteGroup>,
        images: Vec<GroupAlgebraElement<T>>,
    ) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::DimensionMismatch {
                expected: source.order(),
                found: images.len(),
            });
        }
        if images.iter().any(|x| !same_group(x.group(), target)) {
            return Err(Error::GroupMismatch);
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[GroupAlgebraElement<T>] {
        &self.images
    }

    pub fn apply(&self, x: &GroupAlgebraElement<T>) -> Result<GroupAlgebraElement<T>> {
        if !same_group(x.group(), &self.source) {
            return Err(Error::GroupMismatch);
        }
        let mut out = GroupAlgebraElement::zero(&self.target);
        for (c, g) in x.terms() {
            out = out.add(&self.images[g].scale(&c))?;
        }
        Ok(out)
    }

    /// Whether `phi(g_i g_j) = phi(g_i) phi(g_j)` for all basis pairs.
    pub fn verify_multiplicative(&self) -> HomCheck {
        let n = self.source.order();
        for i in 0..n {
            for j in 0..n {
                let lhs = &self.images[self.source.mul(i, j)];
                let rhs = self.images[i]
                    .multiply(&self.images[j])
                    .expect("images share the target group");
                if *lhs != rhs {
                    return HomCheck {
                        holds: false,
                        counterexample: Some((i, j)),
                    };
                }
            }
        }
        HomCheck {
            holds: true,
            counterexample: None,
        }
    }

    /// Whether every group element maps to a single group element with
    /// coefficient 1, i.e. the map comes from a map of groups.
    pub fn is_induced_from_group_hom(&self) -> bool {
        self.images.iter().all(|x| {
            let terms = x.terms();
            terms.len() == 1 && terms[0].0.is_one()
        })
    }
}

/// Linear extension of a group homomorphism to `FG -> FH`.
pub fn induce_algebra_hom<T: Field>(f: &GroupHom) -> AlgebraMap<T> {
    AlgebraMap {
        source: f.source().clone(),
        target: f.target().clone(),
        images: f
            .map()
            .iter()
            .map(|&h| GroupAlgebraElement::basis(f.target(), h))
            .collect(),
    }
}

pub fn verify_algebra_hom<T: Field>(phi: &AlgebraMap<T>) -> HomCheck {
    phi.verify_multiplicative()
}

pub fn is_induced_from_group_hom<T: Field>(phi: &AlgebraMap<T>) -> bool {
    phi.is_induced_from_group_hom()
}

/// The representation of `FG` obtained by extending a group representation
/// linearly: `sum a_i g_i -> sum a_i rho(g_i)`.
#[derive(Debug, Clone)]
pub struct GroupAlgebraRepresentation<T> {
    rep: GroupRepresentation<T>,
}

impl<T: Field> GroupAlgebraRepresentation<T> {
    pub fn new(rep: GroupRepresentation<T>) -> Self {
        Self { rep }
    }

    pub fn representation(&self) -> &GroupRepresentation<T> {
        &self.rep
    }

    pub fn apply(&self, x: &GroupAlgebraElement<T>) -> Result<Matrix<T>> {
        if !same_group(x.group(), self.rep.group()) {
            return Err(Error::GroupMismatch);
        }
        let d = self.rep.degree();
        let mut out = Matrix::zeros(d, d);
        for (c, g) in x.terms() {
            out = &out + &self.rep.image(g).scale(&c);
        }
        Ok(out)
    }
}

pub fn group_algebra_rep<T: Field>(rho: &GroupRepresentation<T>) -> GroupAlgebraRepresentation<T> {
    GroupAlgebraRepresentation::new(rho.clone())
}
