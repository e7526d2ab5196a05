//! Toolkit for hybrid quantum-classical error-correcting codes.
//!
//! A hybrid code stores `k` logical qubits together with one of `M` classical
//! symbols inside `n` physical qubits.  Concretely it is a family of `M`
//! mutually orthogonal subspaces ("blocks"), each spanned by `K = 2^k`
//! orthonormal codewords; the block index carries the classical symbol and the
//! position inside a block carries the quantum state.
//!
//! The crate provides:
//!
//! * [`pauli`] - Pauli string algebra with exact phase tracking, plus fast
//!   state application and dense matrix realisation.
//! * [`state`] / [`operator`] - small dense state-vector and operator types
//!   used by the checkers and the simulator.
//! * [`code`] - the [`code::HybridCode`] model, a text format for code files,
//!   projectors and two built-in example codes.
//! * [`verify`] - the error-correction conditions in two equivalent
//!   formulations (codeword brackets and projected operators), degeneracy
//!   analysis and minimum-distance computation.
//! * [`bounds`] - quantum and hybrid Hamming bounds in exact integer
//!   arithmetic.
//! * [`circuit`] - a gate-level simulator together with encoding and decoding
//!   circuits for the built-in `((4, 2:2, 2))` code, including round-trip
//!   tests under injected Pauli errors.
//! * [`search`] - brute-force discovery of small hybrid codes with exact
//!   integer pruning and canonical deduplication.
//!
//! Numerical checks on user data use [`CHECK_TOL`]; internal algebraic
//! self-tests use the tighter [`ALGEBRA_TOL`].

pub mod bounds;
pub mod circuit;
pub mod code;
pub mod error;
pub mod operator;
pub mod pauli;
pub mod search;
pub mod state;
pub mod verify;

pub use error::{Error, Result};

/// Tolerance for checks on user-supplied data (orthonormality, verification
/// residuals, fidelities).
pub const CHECK_TOL: f64 = 1e-9;

/// Tolerance for internal algebraic identities that should hold to machine
/// precision.
pub const ALGEBRA_TOL: f64 = 1e-12;
