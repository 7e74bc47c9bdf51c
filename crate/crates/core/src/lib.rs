//! Plesken Lie algebras of finite groups over exact rationals.
//!
//! The crate builds a finite group from permutation generators, computes in
//! its group algebra `FG` and in the Plesken Lie algebra `L(G)` spanned by
//! the elements `g - g^-1`, induces representations of both from group
//! representations, and decides irreducibility with explicit witnesses.
//!
//! The algebra is generic over an exact [`Field`]; [`Rational`] (arbitrary
//! precision) is the default, and the irreducibility engine, which needs
//! factorization over `Q`, is specific to it.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod plesken;
pub mod rep;
pub mod scalar;

pub use error::{Error, Result};
pub use group::{group_from_generators, FiniteGroup, GroupHom, Permutation};
pub use scalar::Field;

/// Arbitrary-precision rationals, the default scalar.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; adequate for small fixtures, may overflow.
pub type Rational64 = num_rational::Rational64;

pub type QMatrix = linalg::Matrix<Rational>;
pub type QSubspace = linalg::Subspace<Rational>;
pub type QPoly = linalg::Poly<Rational>;
pub type QGroupAlgebraElement = algebra::GroupAlgebraElement<Rational>;
pub type QPleskenElement = plesken::PleskenElement<Rational>;
pub type QGroupRepresentation = rep::GroupRepresentation<Rational>;
pub type QLieRepresentation = rep::LieRepresentation<Rational>;
