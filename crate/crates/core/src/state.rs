//! Dense state vectors.

use num_complex::Complex64;

use crate::{Error, Result, CHECK_TOL};

/// Largest qubit count accepted for dense state vectors.
pub const MAX_STATE_QUBITS: usize = 24;

/// A normalised pure state of `n` qubits.
///
/// Amplitude `i` belongs to the computational basis state whose label is `i`
/// written in binary with qubit 1 as the most significant bit, so for two
/// qubits index 2 is the state `|10>`.  Constructors enforce unit norm within
/// [`CHECK_TOL`] and finiteness of every amplitude.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Wraps amplitudes that are already normalised.
    pub fn new(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        let v = Self::raw(n, amps)?;
        let norm = v.norm();
        if (norm - 1.0).abs() > CHECK_TOL {
            return Err(Error::Validation(format!(
                "state vector has norm {norm}, expected 1 within {CHECK_TOL}"
            )));
        }
        Ok(v)
    }

    /// Normalises arbitrary amplitudes; rejects the zero vector.
    pub fn normalized(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        let mut v = Self::raw(n, amps)?;
        let norm = v.norm();
        if norm < 1e-12 {
            return Err(Error::DegenerateInput(
                "cannot normalise an (almost) zero vector".into(),
            ));
        }
        for a in &mut v.amps {
            *a /= norm;
        }
        Ok(v)
    }

    fn raw(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n == 0 || n > MAX_STATE_QUBITS {
            return Err(Error::InvalidArgument(format!(
                "qubit count must be in 1..={MAX_STATE_QUBITS}, got {n}"
            )));
        }
        let dim = 1usize << n;
        if amps.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{n} qubits need {dim} amplitudes, got {}",
                amps.len()
            )));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Validation("non-finite amplitude".into()));
        }
        Ok(Self { n, amps })
    }

    /// The computational basis state `|index>`.
    pub fn basis(n: usize, index: usize) -> Result<Self> {
        if n == 0 || n > MAX_STATE_QUBITS {
            return Err(Error::InvalidArgument(format!(
                "qubit count must be in 1..={MAX_STATE_QUBITS}, got {n}"
            )));
        }
        let dim = 1usize << n;
        if index >= dim {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        let mut amps = vec![Complex64::ZERO; dim];
        amps[index] = Complex64::ONE;
        Ok(Self { n, amps })
    }

    /// A single-qubit state `a|0> + b|1>`, normalised.
    pub fn qubit(a: Complex64, b: Complex64) -> Result<Self> {
        Self::normalized(1, vec![a, b])
    }

    /// Internal constructor for amplitudes known to be normalised, e.g. the
    /// output of a unitary gate.
    pub(crate) fn from_unitary_output(n: usize, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), 1usize << n);
        Self { n, amps }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Inner product `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "inner product between {} and {} qubit states",
                self.n, other.n
            )));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|<self|other>|`, which quotients out the global phase.
    pub fn overlap(&self, other: &Self) -> Result<f64> {
        Ok(self.inner(other)?.norm())
    }

    /// Tensor product `self (x) other`, with `self` on the more significant
    /// qubits.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_STATE_QUBITS {
            return Err(Error::Capacity(format!(
                "tensor product with {n} qubits exceeds the {MAX_STATE_QUBITS} qubit guard"
            )));
        }
        let mut amps = Vec::with_capacity(1usize << n);
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ok(Self { n, amps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn basis_states_are_unit_vectors() {
        let s = StateVector::basis(2, 2).unwrap();
        assert_eq!(s.amp(2), Complex64::ONE);
        assert_eq!(s.amp(0), Complex64::ZERO);
        assert!((s.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn new_rejects_unnormalised_input() {
        let err = StateVector::new(1, vec![c(1.0, 0.0), c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, crate::Error::Validation(_)));
    }

    #[test]
    fn normalized_rejects_zero_vector() {
        let err = StateVector::normalized(1, vec![Complex64::ZERO; 2]).unwrap_err();
        assert!(matches!(err, crate::Error::DegenerateInput(_)));
    }

    #[test]
    fn normalized_rescales() {
        let s = StateVector::normalized(1, vec![c(3.0, 0.0), c(4.0, 0.0)]).unwrap();
        assert!((s.amp(0).re - 0.6).abs() < 1e-15);
        assert!((s.amp(1).re - 0.8).abs() < 1e-15);
    }

    #[test]
    fn inner_is_conjugate_linear_in_first_argument() {
        let a = StateVector::qubit(c(0.0, 1.0), Complex64::ZERO).unwrap();
        let b = StateVector::basis(1, 0).unwrap();
        // <i*0|0> = conj(i) = -i
        assert_eq!(a.inner(&b).unwrap(), c(0.0, -1.0));
    }

    #[test]
    fn inner_rejects_dimension_mismatch() {
        let a = StateVector::basis(1, 0).unwrap();
        let b = StateVector::basis(2, 0).unwrap();
        assert!(matches!(
            a.inner(&b).unwrap_err(),
            crate::Error::DimensionMismatch(_)
        ));
    }

    #[test]
    fn wrong_amplitude_count_is_rejected() {
        let err = StateVector::new(2, vec![Complex64::ONE; 3]).unwrap_err();
        assert!(matches!(err, crate::Error::DimensionMismatch(_)));
    }

    #[test]
    fn non_finite_amplitudes_are_rejected() {
        let err = StateVector::new(1, vec![c(f64::NAN, 0.0), Complex64::ZERO]).unwrap_err();
        assert!(matches!(err, crate::Error::Validation(_)));
    }

    #[test]
    fn kron_orders_first_factor_most_significant() {
        let zero = StateVector::basis(1, 0).unwrap();
        let one = StateVector::basis(1, 1).unwrap();
        let s = one.kron(&zero).unwrap();
        // |1> (x) |0> = |10> = index 2
        assert_eq!(s.amp(2), Complex64::ONE);
    }
}
