//! Hamming-style counting bounds, evaluated in exact integer arithmetic.
//!
//! A code that corrects all errors of weight up to `t` needs the error
//! spheres around its codewords to fit inside the physical space without
//! overlapping.  For a hybrid code with `2^k` quantum dimensions per block
//! and `M` blocks on `n` qubits this packing argument reads
//!
//! ```text
//! M * 2^k * sum_{j=0}^{t} C(n, j) 3^j  <=  2^n
//! ```
//!
//! The quantum case is `M = 1`.  Everything here is computed with big
//! integers, so the reported sides and slack are exact for any size that
//! fits the capacity guard.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;

use crate::{Error, Result};

/// Largest `n` accepted by the bound evaluators.
pub const MAX_BOUND_QUBITS: u32 = 4096;

/// An exact evaluation of one packing inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    /// Left-hand side: total dimension claimed by the error spheres.
    pub lhs: BigUint,
    /// Right-hand side: `2^n`, the dimension of the physical space.
    pub rhs: BigUint,
    /// Whether `lhs <= rhs`.
    pub holds: bool,
    /// `rhs - lhs` as a signed integer; negative exactly when the bound
    /// is violated.
    pub slack: BigInt,
}

/// The number of phase `+1` Pauli errors of weight at most `t` on `n`
/// qubits: `sum_{j=0}^{t} C(n, j) 3^j`.
pub fn sphere_volume(n: u32, t: u32) -> Result<BigUint> {
    validate(n, 0, t)?;
    let three = BigUint::from(3u32);
    let mut total = BigUint::from(0u32);
    for j in 0..=t {
        total += binomial(BigUint::from(n), BigUint::from(j)) * three.pow(j);
    }
    Ok(total)
}

fn validate(n: u32, k: u32, t: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("qubit count must be positive".into()));
    }
    if n > MAX_BOUND_QUBITS {
        return Err(Error::Capacity(format!(
            "bound evaluation supports up to {MAX_BOUND_QUBITS} qubits, got {n}"
        )));
    }
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "logical qubit count {k} exceeds physical qubit count {n}"
        )));
    }
    if t > n {
        return Err(Error::InvalidArgument(format!(
            "correction radius {t} exceeds qubit count {n}"
        )));
    }
    Ok(())
}

fn report(lhs: BigUint, rhs: BigUint) -> BoundReport {
    let holds = lhs <= rhs;
    let slack = BigInt::from(rhs.clone()) - BigInt::from(lhs.clone());
    BoundReport {
        lhs,
        rhs,
        holds,
        slack,
    }
}

/// The hybrid packing bound for `M` blocks of `2^k` dimensions correcting
/// radius `t` on `n` qubits.  `m` must be at least 1.
pub fn hybrid_hamming(n: u32, k: u32, m: &BigUint, t: u32) -> Result<BoundReport> {
    validate(n, k, t)?;
    if *m == BigUint::from(0u32) {
        return Err(Error::InvalidArgument(
            "block count must be at least 1".into(),
        ));
    }
    let volume = sphere_volume(n, t)?;
    let lhs = m * (BigUint::from(1u32) << k) * volume;
    let rhs = BigUint::from(1u32) << n;
    Ok(report(lhs, rhs))
}

/// The quantum packing bound: the hybrid bound with a single block.
pub fn quantum_hamming(n: u32, k: u32, t: u32) -> Result<BoundReport> {
    hybrid_hamming(n, k, &BigUint::from(1u32), t)
}

/// The largest block count `M` for which the hybrid bound still holds at
/// the given `n`, `k`, `t`; zero when even `M = 1` violates it.
pub fn max_classical(n: u32, k: u32, t: u32) -> Result<BigUint> {
    validate(n, k, t)?;
    let volume = sphere_volume(n, t)?;
    let per_block = (BigUint::from(1u32) << k) * volume;
    Ok((BigUint::from(1u32) << n) / per_block)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn sphere_volume_small_values() {
        assert_eq!(sphere_volume(4, 0).unwrap(), big(1));
        assert_eq!(sphere_volume(4, 1).unwrap(), big(13));
        assert_eq!(sphere_volume(4, 2).unwrap(), big(67));
        assert_eq!(sphere_volume(5, 1).unwrap(), big(16));
    }

    #[test]
    fn sphere_volume_full_radius_is_four_to_the_n() {
        // sum_j C(n,j) 3^j over all j is (1 + 3)^n by the binomial theorem,
        // an independent closed form for the full sphere.
        for n in 1..=20u32 {
            assert_eq!(sphere_volume(n, n).unwrap(), big(4).pow(n));
        }
    }

    #[test]
    fn sphere_volume_matches_enumeration_counts() {
        // The counting formula must agree with the generator that actually
        // lists the errors.
        for n in 1..=6usize {
            for t in 0..=n {
                let counted = crate::pauli::enumeration_count(n, t);
                assert_eq!(
                    sphere_volume(n as u32, t as u32).unwrap(),
                    BigUint::from(counted)
                );
            }
        }
    }

    #[test]
    fn perfect_five_qubit_case() {
        let r = quantum_hamming(5, 1, 1).unwrap();
        assert_eq!(r.lhs, big(32));
        assert_eq!(r.rhs, big(32));
        assert!(r.holds);
        assert_eq!(r.slack, BigInt::from(0));
    }

    #[test]
    fn four_qubit_single_error_correction_is_impossible() {
        let r = quantum_hamming(4, 1, 1).unwrap();
        assert_eq!(r.lhs, big(26));
        assert_eq!(r.rhs, big(16));
        assert!(!r.holds);
        assert_eq!(r.slack, BigInt::from(-10));
    }

    #[test]
    fn hybrid_four_qubit_case() {
        let r = hybrid_hamming(4, 1, &big(2), 1).unwrap();
        assert_eq!(r.lhs, big(52));
        assert_eq!(r.rhs, big(16));
        assert!(!r.holds);
        assert_eq!(r.slack, BigInt::from(-36));
    }

    #[test]
    fn max_classical_small_values() {
        assert_eq!(max_classical(4, 1, 1).unwrap(), big(0));
        assert_eq!(max_classical(6, 1, 1).unwrap(), big(1));
        // Radius zero packs pure dimensions: 2^n / 2^k blocks fit.
        assert_eq!(max_classical(4, 1, 0).unwrap(), big(8));
    }

    #[test]
    fn max_classical_large_case_exceeds_machine_integers() {
        let m = max_classical(256, 1, 1).unwrap();
        assert!(m > BigUint::from(u64::MAX));
        // Exact value: floor(2^256 / (2 * (1 + 3 * 256))).
        let expected = (BigUint::from(1u32) << 256u32) / big(2 * 769);
        assert_eq!(m, expected);
    }

    #[test]
    fn max_classical_is_the_turning_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..=30u32);
            let k = rng.gen_range(0..=n.min(6));
            let t = rng.gen_range(0..=n.min(4));
            let m = max_classical(n, k, t).unwrap();
            if m >= big(1) {
                assert!(hybrid_hamming(n, k, &m, t).unwrap().holds);
            }
            let next = &m + big(1);
            assert!(!hybrid_hamming(n, k, &next, t).unwrap().holds);
        }
    }

    #[test]
    fn doubling_blocks_matches_adding_a_logical_qubit() {
        // M = 2^c blocks of 2^k dimensions occupy exactly the space of one
        // block of 2^(k+c) dimensions, so the two sides must agree.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..200 {
            let n = rng.gen_range(2..=24u32);
            let c = rng.gen_range(0..=n / 2);
            let k = rng.gen_range(0..=(n - c).min(5));
            let t = rng.gen_range(0..=n.min(3));
            let as_blocks = hybrid_hamming(n, k, &(big(1) << c), t).unwrap();
            let as_qubits = hybrid_hamming(n, k + c, &big(1), t).unwrap();
            assert_eq!(as_blocks, as_qubits);
        }
    }

    #[test]
    fn lhs_is_monotone_in_every_parameter() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..=20u32);
            let k = rng.gen_range(0..=n - 1);
            let t = rng.gen_range(0..=n - 1);
            let m = big(rng.gen_range(1..=50u64));
            let base = hybrid_hamming(n, k, &m, t).unwrap();
            assert!(hybrid_hamming(n, k + 1, &m, t).unwrap().lhs > base.lhs);
            assert!(hybrid_hamming(n, k, &(&m + big(1)), t).unwrap().lhs > base.lhs);
            assert!(hybrid_hamming(n, k, &m, t + 1).unwrap().lhs > base.lhs);
        }
    }

    #[test]
    fn invalid_queries_are_rejected() {
        assert!(matches!(
            quantum_hamming(0, 0, 0).unwrap_err(),
            Error::InvalidArgument(_)
        ));
        assert!(matches!(
            quantum_hamming(4, 5, 1).unwrap_err(),
            Error::InvalidArgument(_)
        ));
        assert!(matches!(
            quantum_hamming(4, 1, 5).unwrap_err(),
            Error::InvalidArgument(_)
        ));
        assert!(matches!(
            hybrid_hamming(4, 1, &big(0), 1).unwrap_err(),
            Error::InvalidArgument(_)
        ));
        assert!(matches!(
            quantum_hamming(5000, 1, 1).unwrap_err(),
            Error::Capacity(_)
        ));
    }
}
