use crate::error::{Error, Result};
use crate::linalg::{close_under, kernel_basis, Matrix, Subspace};
use crate::scalar::Field;

pub(crate) fn check_family<T: Field>(mats: &[Matrix<T>], degree: usize) -> Result<()> {
    if degree == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    for m in mats {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() != degree {
            return Err(Error::DimensionMismatch {
                expected: degree,
                found: m.rows(),
            });
        }
    }
    Ok(())
}

pub(crate) fn flatten<T: Field>(m: &Matrix<T>) -> Vec<T> {
    m.as_slice().to_vec()
}

pub(crate) fn unflatten<T: Field>(v: &[T], degree: usize) -> Matrix<T> {
    Matrix::from_vec(degree, degree, v.to_vec()).expect("vector has degree^2 entries")
}

/// Echelon basis of `{X : XA = AX for every A in mats}`.
///
/// The solution space is cut down one matrix at a time: with a current basis
/// `B_1..B_k`, the next constraint is the kernel of `c -> sum c_j [B_j, A]`,
/// a `d^2 x k` system, so later matrices are cheap once `k` is small.
pub fn commutant<T: Field>(mats: &[Matrix<T>], degree: usize) -> Result<Vec<Matrix<T>>> {
    check_family(mats, degree)?;
    let d = degree;
    let n = d * d;
    let mut current: Vec<Vec<T>> = Subspace::<T>::full(n).basis().to_vec();
    for a in mats {
        if current.is_empty() {
            break;
        }
        let images: Vec<Vec<T>> = current
            .iter()
            .map(|v| flatten(&unflatten(v, d).commutator(a)))
            .collect();
        if images.iter().all(|v| v.iter().all(T::is_zero)) {
            continue;
        }
        let mut system: Matrix<T> = Matrix::zeros(n, current.len());
        for (j, v) in images.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    system.set(i, j, x.clone());
                }
            }
        }
        let kernel = kernel_basis(&system);
        current = kernel
            .basis()
            .iter()
            .map(|c| {
                let mut x = vec![T::zero(); n];
                for (cj, v) in c.iter().zip(&current) {
                    if cj.is_zero() {
                        continue;
                    }
                    for (xi, vi) in x.iter_mut().zip(v) {
                        if !vi.is_zero() {
                            *xi = xi.clone() + cj.clone() * vi.clone();
                        }
                    }
                }
                x
            })
            .collect();
    }
    let canonical = Subspace::from_vectors(n, current)?;
    Ok(canonical.basis().iter().map(|v| unflatten(v, d)).collect())
}

/// The unital associative algebra generated by `mats`, as a subspace of the
/// `degree^2`-dimensional matrix space (row-major coordinates).
pub fn envelope<T: Field>(mats: &[Matrix<T>], degree: usize) -> Result<Subspace<T>> {
    check_family(mats, degree)?;
    let id = flatten(&Matrix::<T>::identity(degree));
    Ok(close_under(degree * degree, vec![id], |v| {
        let x = unflatten(v, degree);
        mats.iter().map(|a| flatten(&(a * &x))).collect()
    }))
}

/// Envelope basis as matrices.
pub fn envelope_basis<T: Field>(mats: &[Matrix<T>], degree: usize) -> Result<Vec<Matrix<T>>> {
    Ok(envelope(mats, degree)?
        .basis()
        .iter()
        .map(|v| unflatten(v, degree))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QMatrix;

    #[test]
    fn identity_only() {
        let id = QMatrix::identity(3);
        assert_eq!(commutant(std::slice::from_ref(&id), 3).unwrap().len(), 9);
        assert_eq!(envelope(&[id], 3).unwrap().dim(), 1);
    }

    #[test]
    fn rotation_by_quarter_turn() {
        let j = QMatrix::from_ints(&[[0, -2], [2, 0]]);
        let c = commutant(std::slice::from_ref(&j), 2).unwrap();
        assert_eq!(c.len(), 2);
        for x in &c {
            assert_eq!(&(x * &j), &(&j * x));
        }
        let expected = Subspace::from_vectors(
            4,
            [QMatrix::identity(2), QMatrix::from_ints(&[[0, -1], [1, 0]])]
                .iter()
                .map(flatten),
        )
        .unwrap();
        let got = Subspace::from_vectors(4, c.iter().map(flatten)).unwrap();
        assert!(got.equals(&expected).unwrap());
        assert_eq!(envelope(&[j], 2).unwrap().dim(), 2);
    }

    #[test]
    fn s3_standard_images_generate_everything() {
        let a = QMatrix::from_ints(&[[0, -1], [1, -1]]);
        let b = QMatrix::from_ints(&[[0, 1], [1, 0]]);
        assert_eq!(envelope(&[a.clone(), b.clone()], 2).unwrap().dim(), 4);
        let c = commutant(&[a, b], 2).unwrap();
        assert_eq!(c, vec![QMatrix::identity(2)]);
    }

    #[test]
    fn empty_family() {
        assert_eq!(envelope::<crate::Rational>(&[], 2).unwrap().dim(), 1);
        assert_eq!(commutant::<crate::Rational>(&[], 2).unwrap().len(), 4);
    }

    #[test]
    fn rejects_shape_errors() {
        assert!(commutant(&[QMatrix::identity(2)], 3).is_err());
        assert!(envelope(&[QMatrix::zeros(2, 3)], 2).is_err());
    }
}
