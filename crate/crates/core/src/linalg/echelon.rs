//! Reduced row echelon forms and canonical subspaces.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;

/// Gauss-Jordan reduction. Pivots are taken in the leftmost column that has
/// a nonzero entry at or below the current row, using the first such row.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, usize) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = T::one() / a[rank][c].clone();
        for x in a[rank][c..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    let reduced = Matrix::from_vec(rows, cols, a.into_iter().flatten().collect())
        .expect("row lengths preserved");
    (reduced, rank)
}

/// Right null space `{v : M v = 0}`.
pub fn kernel_basis<T: Field>(m: &Matrix<T>) -> Subspace<T> {
    let cols = m.cols();
    let (r, rank) = rref(m);
    let mut pivots = Vec::with_capacity(rank);
    for row in 0..rank {
        let c = (0..cols)
            .find(|&c| !r.get(row, c).is_zero())
            .expect("rank rows are nonzero");
        pivots.push(c);
    }
    let mut out = Subspace::zero(cols);
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, free).clone();
        }
        out.insert(v);
    }
    out
}

/// A subspace of `F^n` held as a fully reduced echelon basis, so equal
/// subspaces have identical bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace<T> {
    ambient: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            let mut v = vec![T::zero(); ambient];
            v[i] = T::one();
            s.insert(v);
        }
        s
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<T>>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.check_len(v.len())?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Nonzero and not the whole space.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_full()
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: len,
            });
        }
        Ok(())
    }

    /// Residual of `v` after elimination against the basis.
    fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        v
    }

    /// Adjoins `v`; returns whether the dimension grew. Panics on length mismatch.
    pub fn insert(&mut self, v: Vec<T>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length must match ambient dimension");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / v[p].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *x = x.clone() - f.clone() * b.clone();
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        self.check_len(v.len())?;
        Ok(self.reduce(v.to_vec()).iter().all(T::is_zero))
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check_len(other.ambient)?;
        Ok(other
            .basis
            .iter()
            .all(|b| self.reduce(b.clone()).iter().all(T::is_zero)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_len(other.ambient)?;
        Ok(self.basis == other.basis)
    }

    /// Whether `A w` lies in the subspace for every basis vector `w` and every `A`.
    pub fn is_invariant_under(&self, mats: &[Matrix<T>]) -> Result<bool> {
        for a in mats {
            if a.rows() != self.ambient || a.cols() != self.ambient {
                return Err(Error::DimensionMismatch {
                    expected: self.ambient,
                    found: a.rows().max(a.cols()),
                });
            }
            for w in &self.basis {
                if !self.contains(&a.mul_vec(w))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `{x : <b, x> = 0 for every basis vector b}`.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone()).expect("basis rows share a length");
        kernel_basis(&m)
    }

    /// Basis as the rows of a matrix.
    pub fn to_matrix(&self) -> Matrix<T> {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).expect("basis rows share a length")
    }
}

/// Smallest subspace containing `seeds` and closed under `step`, which maps
/// a newly adjoined basis vector to the vectors that must also be present.
pub fn close_under<T, F>(ambient: usize, seeds: Vec<Vec<T>>, mut step: F) -> Subspace<T>
where
    T: Field,
    F: FnMut(&[T]) -> Vec<Vec<T>>,
{
    let mut space = Subspace::zero(ambient);
    let mut queue: VecDeque<Vec<T>> = VecDeque::new();
    for s in seeds {
        if space.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        if space.is_full() {
            break;
        }
        for w in step(&v) {
            if space.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    space
}

fn check_square_family<T: Field>(n: usize, gens: &[Matrix<T>]) -> Result<()> {
    for g in gens {
        if !g.is_square() {
            return Err(Error::NotSquare {
                rows: g.rows(),
                cols: g.cols(),
            });
        }
        if g.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.rows(),
            });
        }
    }
    Ok(())
}

/// The least subspace containing `v` and invariant under every generator.
pub fn spin<T: Field>(v: &[T], gens: &[Matrix<T>]) -> Result<Subspace<T>> {
    let n = v.len();
    check_square_family(n, gens)?;
    if v.iter().all(T::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(close_under(n, vec![v.to_vec()], |w| {
        gens.iter().map(|g| g.mul_vec(w)).collect()
    }))
}

/// Spin of an entire subspace.
pub fn spin_subspace<T: Field>(seed: &Subspace<T>, gens: &[Matrix<T>]) -> Result<Subspace<T>> {
    check_square_family(seed.ambient_dim(), gens)?;
    Ok(close_under(seed.ambient_dim(), seed.basis().to_vec(), |w| {
        gens.iter().map(|g| g.mul_vec(w)).collect()
    }))
}
