//! Dense operators on the n-qubit Hilbert space.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::state::StateVector;
use crate::{Error, Result};

/// Largest qubit count for which dense `2^n x 2^n` matrices are built.
/// At the guard the matrices take a few hundred megabytes; beyond it the
/// dense code paths refuse to run.
pub const MAX_DENSE_QUBITS: usize = 12;

/// Returns an error when `n` is outside the dense-matrix guard.
pub fn check_dense_guard(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DENSE_QUBITS {
        return Err(Error::Capacity(format!(
            "dense operators support 1..={MAX_DENSE_QUBITS} qubits, got {n}"
        )));
    }
    Ok(())
}

/// A dense linear operator on `n` qubits, stored as a `2^n x 2^n` complex
/// matrix with the same basis ordering as [`StateVector`].
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    n: usize,
    mat: DMatrix<Complex64>,
}

impl Operator {
    pub fn from_matrix(n: usize, mat: DMatrix<Complex64>) -> Result<Self> {
        check_dense_guard(n)?;
        let dim = 1usize << n;
        if mat.nrows() != dim || mat.ncols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{n} qubit operator needs a {dim}x{dim} matrix, got {}x{}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        Ok(Self { n, mat })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        check_dense_guard(n)?;
        let dim = 1usize << n;
        Ok(Self {
            n,
            mat: DMatrix::zeros(dim, dim),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_dense_guard(n)?;
        let dim = 1usize << n;
        Ok(Self {
            n,
            mat: DMatrix::identity(dim, dim),
        })
    }

    /// The outer product `|a><b|`.
    pub fn outer(a: &StateVector, b: &StateVector) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::DimensionMismatch(format!(
                "outer product between {} and {} qubit states",
                a.n(),
                b.n()
            )));
        }
        check_dense_guard(a.n())?;
        let va = DVector::from_column_slice(a.amplitudes());
        let vb = DVector::from_column_slice(b.amplitudes());
        Ok(Self {
            n: a.n(),
            mat: &va * vb.adjoint(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.mat[(row, col)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn adjoint(&self) -> Self {
        Self {
            n: self.n,
            mat: self.mat.adjoint(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            n: self.n,
            mat: &self.mat * factor,
        }
    }

    /// Largest absolute value of any matrix entry.
    pub fn max_abs(&self) -> f64 {
        self.mat.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise difference `|self - other|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "operators act on different qubit counts");
        self.mat
            .iter()
            .zip(other.mat.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }
}

impl std::ops::Mul for &Operator {
    type Output = Operator;

    fn mul(self, rhs: &Operator) -> Operator {
        assert_eq!(self.n, rhs.n, "operators act on different qubit counts");
        Operator {
            n: self.n,
            mat: &self.mat * &rhs.mat,
        }
    }
}

impl std::ops::Add for &Operator {
    type Output = Operator;

    fn add(self, rhs: &Operator) -> Operator {
        assert_eq!(self.n, rhs.n, "operators act on different qubit counts");
        Operator {
            n: self.n,
            mat: &self.mat + &rhs.mat,
        }
    }
}

impl std::ops::Sub for &Operator {
    type Output = Operator;

    fn sub(self, rhs: &Operator) -> Operator {
        assert_eq!(self.n, rhs.n, "operators act on different qubit counts");
        Operator {
            n: self.n,
            mat: &self.mat - &rhs.mat,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_trace() {
        let id = Operator::identity(2).unwrap();
        assert_eq!(id.trace(), Complex64::new(4.0, 0.0));
    }

    #[test]
    fn outer_product_of_basis_states() {
        let a = StateVector::basis(1, 0).unwrap();
        let b = StateVector::basis(1, 1).unwrap();
        let op = Operator::outer(&a, &b).unwrap();
        assert_eq!(op.entry(0, 1), Complex64::ONE);
        assert_eq!(op.entry(1, 0), Complex64::ZERO);
    }

    #[test]
    fn dense_guard_rejects_large_n() {
        assert!(matches!(
            Operator::zeros(MAX_DENSE_QUBITS + 1).unwrap_err(),
            Error::Capacity(_)
        ));
    }

    #[test]
    fn adjoint_conjugates_and_transposes() {
        let a = StateVector::qubit(Complex64::new(0.0, 1.0), Complex64::ZERO).unwrap();
        let b = StateVector::basis(1, 1).unwrap();
        let op = Operator::outer(&a, &b).unwrap();
        // |i 0><1| has entry (0,1) = i; adjoint has entry (1,0) = -i.
        assert_eq!(op.adjoint().entry(1, 0), Complex64::new(0.0, -1.0));
    }

    #[test]
    fn mul_composes_matrices() {
        let x = Operator::from_matrix(
            1,
            DMatrix::from_row_slice(2, 2, &[
                Complex64::ZERO,
                Complex64::ONE,
                Complex64::ONE,
                Complex64::ZERO,
            ]),
        )
        .unwrap();
        let id = &x * &x;
        assert!(id.max_abs_diff(&Operator::identity(1).unwrap()) < 1e-15);
    }
}
