//! Error-correction conditions for hybrid codes.
//!
//! A code handles an error set in one of two modes.  In detect mode each
//! error must map the code space to something the code can tell apart from
//! itself; in correct mode every ordered pair of errors must be
//! distinguishable, which is what full recovery requires.  Both reduce to
//! bracket conditions over codewords: for every relevant pair `(E_a, E_b)`
//! and codewords `|c_i^v>`, `|c_j^u>`,
//!
//! ```text
//! <c_i^v| E_a' E_b |c_j^u> = alpha_ab^v delta_ij delta_vu
//! ```
//!
//! where `E_a'` is the adjoint and `alpha_ab^v` may depend on the block.  The
//! same statement can be phrased with projectors: writing `P` for the code
//! space projector and `P_v` for the block projectors,
//!
//! ```text
//! P E_a' E_b P = sum_v alpha_ab^v P_v
//! ```
//!
//! [`check_vector_form`] tests the bracket statement, [`check_operator_form`]
//! the projector statement; they agree on every input and the test suite
//! exercises that equivalence heavily.  [`degeneracy`] reports whether the
//! `alpha` matrix of some block is singular, and [`hybrid_distance`] finds
//! the smallest error weight the code fails to detect.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::code::HybridCode;
use crate::operator::Operator;
use crate::pauli::{self, PauliString, Phase};
use crate::state::StateVector;
use crate::{Error, Result, CHECK_TOL};

/// Largest qubit count for which [`hybrid_distance`] will enumerate error
/// patterns.
pub const MAX_DISTANCE_QUBITS: usize = 10;

/// What a code is asked to do with an error set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Check pairs `(I, E)` only: errors must be detectable.
    Detect,
    /// Check all ordered pairs: errors must be correctable.
    Correct,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Detect => write!(f, "detect"),
            Mode::Correct => write!(f, "correct"),
        }
    }
}

/// A mode plus a list of phase `+1` Pauli errors on a fixed qubit count.
/// The identity is always treated as part of the set.
#[derive(Clone, Debug)]
pub struct ErrorSetSpec {
    mode: Mode,
    n: usize,
    paulis: Vec<PauliString>,
}

impl ErrorSetSpec {
    pub fn new(mode: Mode, n: usize, paulis: Vec<PauliString>) -> Result<Self> {
        for p in &paulis {
            if p.n() != n {
                return Err(Error::DimensionMismatch(format!(
                    "error '{p}' acts on {} qubits, spec declares {n}",
                    p.n()
                )));
            }
            if p.phase() != Phase::ONE {
                return Err(Error::InvalidArgument(format!(
                    "error set entries must have phase +1, got '{p}'"
                )));
            }
        }
        Ok(Self { mode, n, paulis })
    }

    /// Parses a spec such as `"detect:single,Z1Z2"` or `"correct:X1,Z1"`.
    ///
    /// The optional `detect:` or `correct:` prefix picks the mode (default
    /// detect).  The rest is a comma-separated list of Pauli labels in dense
    /// or sparse form, plus the macros `single` (all weight-1 errors) and
    /// `weight<=t` (all errors of weight at most `t`).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let trimmed = text.trim();
        let (mode, rest) = match trimmed.split_once(':') {
            Some(("detect", r)) => (Mode::Detect, r),
            Some(("correct", r)) => (Mode::Correct, r),
            Some((other, _)) => {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("unknown mode prefix '{other}', expected detect or correct"),
                })
            }
            None => (Mode::Detect, trimmed),
        };
        let mut paulis = Vec::new();
        for token in rest.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            if token == "single" {
                paulis.extend(weight_exactly(n, 1));
            } else if let Some(t) = token.strip_prefix("weight<=") {
                let t: usize = t.parse().map_err(|_| Error::Parse {
                    line: 0,
                    msg: format!("bad weight bound in '{token}'"),
                })?;
                if t > n {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("weight bound {t} exceeds qubit count {n}"),
                    });
                }
                for w in 1..=t {
                    paulis.extend(weight_exactly(n, w));
                }
            } else {
                paulis.push(PauliString::parse(token, n)?);
            }
        }
        Self::new(mode, n, paulis)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn paulis(&self) -> &[PauliString] {
        &self.paulis
    }

    /// The deduplicated error list with the identity first.
    pub fn errors_with_identity(&self) -> Vec<PauliString> {
        let identity = PauliString::identity(self.n).expect("n is positive");
        let mut out = vec![identity];
        for p in &self.paulis {
            if !out.contains(p) {
                out.push(p.clone());
            }
        }
        out
    }

    /// The ordered error pairs the mode requires: `(I, E)` for detect, the
    /// full Cartesian square for correct.  `(I, I)` is always present.
    pub fn expand_pairs(&self) -> Vec<(PauliString, PauliString)> {
        let errors = self.errors_with_identity();
        match self.mode {
            Mode::Detect => {
                let identity = errors[0].clone();
                errors
                    .iter()
                    .map(|e| (identity.clone(), e.clone()))
                    .collect()
            }
            Mode::Correct => errors
                .iter()
                .flat_map(|a| errors.iter().map(move |b| (a.clone(), b.clone())))
                .collect(),
        }
    }
}

fn weight_exactly(n: usize, w: usize) -> Vec<PauliString> {
    let mut out = Vec::new();
    pauli::paulis_of_weight_into(n, w, &mut out);
    out
}

/// Where a violation was observed.
#[derive(Clone, Debug)]
pub enum ViolationSite {
    /// A codeword bracket `<c_i^a| E |c_j^b>` from the vector form.
    Bracket {
        block_left: usize,
        i: usize,
        block_right: usize,
        j: usize,
    },
    /// A matrix entry of the projected operator from the operator form.
    Entry { row: usize, col: usize },
}

impl std::fmt::Display for ViolationSite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ViolationSite::Bracket {
                block_left,
                i,
                block_right,
                j,
            } => write!(f, "bracket (block {block_left}, {i} | block {block_right}, {j})"),
            ViolationSite::Entry { row, col } => write!(f, "matrix entry ({row}, {col})"),
        }
    }
}

/// One failed comparison, with the error pair that produced it.
#[derive(Clone, Debug)]
pub struct Violation {
    pub pair: (PauliString, PauliString),
    pub site: ViolationSite,
    pub measured: Complex64,
    pub expected: Complex64,
    pub deviation: f64,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "pair ({}, {}), {}: measured {}, expected {}, deviation {:.3e}",
            self.pair.0, self.pair.1, self.site, self.measured, self.expected, self.deviation
        )
    }
}

/// Key for one `alpha_ab^v` value: the error pair and the block index.
pub type AlphaKey = (PauliString, PauliString, usize);

/// Outcome of a verification run.  `ok` holds exactly when `violations` is
/// empty.  `alphas` maps each checked pair and block to the block's scalar,
/// estimated as the mean diagonal bracket; when `ok` is false the entries
/// are still the best-fit scalars.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub ok: bool,
    pub alphas: BTreeMap<AlphaKey, Complex64>,
    pub violations: Vec<Violation>,
    /// Largest deviation observed anywhere, including passing comparisons.
    pub max_deviation: f64,
}

fn check_spec_matches(code: &HybridCode, spec: &ErrorSetSpec) -> Result<()> {
    if spec.n() != code.n() {
        return Err(Error::DimensionMismatch(format!(
            "error set on {} qubits checked against a {} qubit code",
            spec.n(),
            code.n()
        )));
    }
    Ok(())
}

/// Checks the bracket formulation of the condition for every pair the mode
/// requires.  See the module docs for the statement.
pub fn check_vector_form(code: &HybridCode, spec: &ErrorSetSpec) -> Result<Verdict> {
    check_spec_matches(code, spec)?;
    let m = code.m_blocks();
    let k = code.k_dim();
    let mut alphas = BTreeMap::new();
    let mut violations = Vec::new();
    let mut max_deviation: f64 = 0.0;

    for (a, b) in spec.expand_pairs() {
        let e = a.adjoint().mul(&b)?;
        // E|c_j^u> for every codeword, reused across brackets.
        let mut applied: Vec<Vec<StateVector>> = Vec::with_capacity(m);
        for block in code.blocks() {
            applied.push(
                block
                    .iter()
                    .map(|w| e.apply(w))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        // Same-block scalars first: the mean diagonal bracket per block.
        for v in 0..m {
            let mut alpha = Complex64::ZERO;
            for i in 0..k {
                alpha += code.word(v, i).inner(&applied[v][i])?;
            }
            alpha /= k as f64;
            alphas.insert((a.clone(), b.clone(), v), alpha);
        }
        for bl in 0..m {
            for br in 0..m {
                for i in 0..k {
                    for j in 0..k {
                        let measured = code.word(bl, i).inner(&applied[br][j])?;
                        let expected = if bl == br && i == j {
                            alphas[&(a.clone(), b.clone(), bl)]
                        } else {
                            Complex64::ZERO
                        };
                        let deviation = (measured - expected).norm();
                        max_deviation = max_deviation.max(deviation);
                        if deviation > CHECK_TOL {
                            violations.push(Violation {
                                pair: (a.clone(), b.clone()),
                                site: ViolationSite::Bracket {
                                    block_left: bl,
                                    i,
                                    block_right: br,
                                    j,
                                },
                                measured,
                                expected,
                                deviation,
                            });
                        }
                    }
                }
            }
        }
    }

    Ok(Verdict {
        ok: violations.is_empty(),
        alphas,
        violations,
        max_deviation,
    })
}

/// Checks the projector formulation: for every pair, the projected product
/// `P E_a' E_b P` must equal `sum_v alpha_ab^v P_v` entrywise, with each
/// `alpha` extracted as `trace(P_v D) / K`.  Dense matrices are built, so
/// the guard of [`crate::operator::MAX_DENSE_QUBITS`] applies.
pub fn check_operator_form(code: &HybridCode, spec: &ErrorSetSpec) -> Result<Verdict> {
    check_spec_matches(code, spec)?;
    let m = code.m_blocks();
    let k = code.k_dim();
    let p = code.projector()?;
    let block_ps: Vec<Operator> = (0..m)
        .map(|v| code.block_projector(v))
        .collect::<Result<Vec<_>>>()?;

    let mut alphas = BTreeMap::new();
    let mut violations = Vec::new();
    let mut max_deviation: f64 = 0.0;

    for (a, b) in spec.expand_pairs() {
        let e = a.adjoint().mul(&b)?.matrix()?;
        let d = &(&p * &e) * &p;
        let mut model = Operator::zeros(code.n())?;
        for (v, pv) in block_ps.iter().enumerate() {
            let alpha = (pv * &d).trace() / k as f64;
            alphas.insert((a.clone(), b.clone(), v), alpha);
            model = &model + &pv.scale(alpha);
        }
        let dim = d.dim();
        for row in 0..dim {
            for col in 0..dim {
                let measured = d.entry(row, col);
                let expected = model.entry(row, col);
                let deviation = (measured - expected).norm();
                max_deviation = max_deviation.max(deviation);
                if deviation > CHECK_TOL {
                    violations.push(Violation {
                        pair: (a.clone(), b.clone()),
                        site: ViolationSite::Entry { row, col },
                        measured,
                        expected,
                        deviation,
                    });
                }
            }
        }
    }

    Ok(Verdict {
        ok: violations.is_empty(),
        alphas,
        violations,
        max_deviation,
    })
}

/// Degeneracy analysis of a correctable pair `(code, spec)`.
#[derive(Clone, Debug)]
pub struct DegeneracyReport {
    /// True when some block's alpha matrix is singular.
    pub degenerate: bool,
    /// Numerical rank of each block's alpha matrix.
    pub per_block_rank: Vec<usize>,
    /// Number of ordered error pairs entering each matrix.
    pub pair_count: usize,
}

/// Builds, per block, the matrix `A^v[a][b] = alpha_ab^v` over the full
/// error list (identity included) and reports whether any block's matrix is
/// singular.  A singular matrix means some combination of errors acts
/// identically on that block, i.e. the code corrects the set degenerately.
///
/// The given `(code, spec)` must pass [`check_vector_form`] first; a failing
/// pair is rejected with a precondition error.  Rank uses a relative
/// singular value cutoff of `1e-9`.
pub fn degeneracy(code: &HybridCode, spec: &ErrorSetSpec) -> Result<DegeneracyReport> {
    let verdict = check_vector_form(code, spec)?;
    if !verdict.ok {
        return Err(Error::Precondition(format!(
            "the error set fails the {} condition on this code ({} violations), \
             so block scalars are not well defined",
            spec.mode(),
            verdict.violations.len()
        )));
    }
    let errors = spec.errors_with_identity();
    let size = errors.len();
    let k = code.k_dim();
    let mut per_block_rank = Vec::with_capacity(code.m_blocks());
    let mut degenerate = false;
    for block in code.blocks() {
        let mut a_mat: DMatrix<Complex64> = DMatrix::zeros(size, size);
        for (r, ea) in errors.iter().enumerate() {
            for (c, eb) in errors.iter().enumerate() {
                let e = ea.adjoint().mul(eb)?;
                let mut alpha = Complex64::ZERO;
                for w in block {
                    alpha += w.inner(&e.apply(w)?)?;
                }
                a_mat[(r, c)] = alpha / k as f64;
            }
        }
        let singular = a_mat.singular_values();
        let sigma_max = singular.iter().cloned().fold(0.0, f64::max);
        let rank = if sigma_max == 0.0 {
            0
        } else {
            singular.iter().filter(|s| **s > 1e-9 * sigma_max).count()
        };
        per_block_rank.push(rank);
        if rank < size {
            degenerate = true;
        }
    }
    Ok(DegeneracyReport {
        degenerate,
        per_block_rank,
        pair_count: size * size,
    })
}

/// True when the single error `p` breaks the detect condition on `code`.
fn detect_violated(code: &HybridCode, p: &PauliString) -> Result<bool> {
    let m = code.m_blocks();
    let k = code.k_dim();
    let mut applied: Vec<Vec<StateVector>> = Vec::with_capacity(m);
    for block in code.blocks() {
        applied.push(
            block
                .iter()
                .map(|w| p.apply(w))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    // Cross-block brackets must vanish.
    for bl in 0..m {
        for br in 0..m {
            if bl == br {
                continue;
            }
            for i in 0..k {
                for j in 0..k {
                    if code.word(bl, i).inner(&applied[br][j])?.norm() > CHECK_TOL {
                        return Ok(true);
                    }
                }
            }
        }
    }
    // Same-block Gram must be the mean diagonal times the identity.
    for v in 0..m {
        let mut alpha = Complex64::ZERO;
        for i in 0..k {
            alpha += code.word(v, i).inner(&applied[v][i])?;
        }
        alpha /= k as f64;
        for i in 0..k {
            for j in 0..k {
                let expected = if i == j { alpha } else { Complex64::ZERO };
                let g = code.word(v, i).inner(&applied[v][j])?;
                if (g - expected).norm() > CHECK_TOL {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// The smallest weight `w >= 1` such that some phase `+1` Pauli of weight
/// `w` fails the detect condition, or `n + 1` when every error is
/// detectable.  Guarded to `n <= 10` because the enumeration is exhaustive.
pub fn hybrid_distance(code: &HybridCode) -> Result<usize> {
    let n = code.n();
    if n > MAX_DISTANCE_QUBITS {
        return Err(Error::Capacity(format!(
            "distance enumeration supports up to {MAX_DISTANCE_QUBITS} qubits, got {n}"
        )));
    }
    for w in 1..=n {
        let mut batch = Vec::new();
        pauli::paulis_of_weight_into(n, w, &mut batch);
        for p in &batch {
            if detect_violated(code, p)? {
                return Ok(w);
            }
        }
    }
    Ok(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{demo_code, simple_code};
    use crate::state::StateVector;

    /// The error set the demo code is built for: every weight-1 error plus
    /// the two neighbour ZZ pairs.
    pub(crate) fn demo_error_set(mode: Mode) -> ErrorSetSpec {
        let text = match mode {
            Mode::Detect => "detect:single,Z1Z2,Z3Z4",
            Mode::Correct => "correct:single,Z1Z2,Z3Z4",
        };
        ErrorSetSpec::parse(text, 4).unwrap()
    }

    #[test]
    fn parse_spec_modes_and_macros() {
        let spec = ErrorSetSpec::parse("detect:single,Z1Z2,Z3Z4", 4).unwrap();
        assert_eq!(spec.mode(), Mode::Detect);
        assert_eq!(spec.paulis().len(), 14);
        assert_eq!(spec.errors_with_identity().len(), 15);

        let spec = ErrorSetSpec::parse("correct:X1,Z1", 2).unwrap();
        assert_eq!(spec.mode(), Mode::Correct);
        assert_eq!(spec.paulis().len(), 2);

        // Default mode is detect; weight macro expands and deduplicates.
        let spec = ErrorSetSpec::parse("weight<=1,X1", 2).unwrap();
        assert_eq!(spec.mode(), Mode::Detect);
        assert_eq!(spec.errors_with_identity().len(), 7);

        assert!(ErrorSetSpec::parse("protect:X1", 2).is_err());
        assert!(ErrorSetSpec::parse("weight<=3", 2).is_err());
        assert!(ErrorSetSpec::parse("X9", 2).is_err());
    }

    #[test]
    fn expand_pairs_counts() {
        let detect = demo_error_set(Mode::Detect);
        assert_eq!(detect.expand_pairs().len(), 15);
        let correct = demo_error_set(Mode::Correct);
        assert_eq!(correct.expand_pairs().len(), 225);
        // Detect always includes the (I, I) pair.
        let first = &detect.expand_pairs()[0];
        assert!(first.0.is_identity_letters() && first.1.is_identity_letters());
    }

    #[test]
    fn demo_code_detects_its_error_set() {
        let verdict = check_vector_form(&demo_code(), &demo_error_set(Mode::Detect)).unwrap();
        assert!(verdict.ok, "violations: {:?}", verdict.violations);
        assert!(verdict.max_deviation <= CHECK_TOL);
    }

    #[test]
    fn demo_code_alpha_signs_for_zz_pairs() {
        let code = demo_code();
        let spec = demo_error_set(Mode::Detect);
        let verdict = check_vector_form(&code, &spec).unwrap();
        let identity = PauliString::identity(4).unwrap();
        let z1z2 = PauliString::parse("Z1Z2", 4).unwrap();
        // Z1Z2 acts as +1 on block 0 and -1 on block 1: the codeword pairs
        // of block 0 flip both of the first two bits together.
        let a0 = verdict.alphas[&(identity.clone(), z1z2.clone(), 0)];
        let a1 = verdict.alphas[&(identity, z1z2, 1)];
        assert!((a0 - Complex64::ONE).norm() < 1e-12);
        assert!((a1 + Complex64::ONE).norm() < 1e-12);
    }

    #[test]
    fn demo_code_fails_correct_mode_on_full_set() {
        let verdict = check_vector_form(&demo_code(), &demo_error_set(Mode::Correct)).unwrap();
        assert!(!verdict.ok);
    }

    #[test]
    fn simple_code_alpha_signs_under_z1() {
        let code = simple_code();
        let spec = ErrorSetSpec::parse("correct:Z1", 2).unwrap();
        let verdict = check_vector_form(&code, &spec).unwrap();
        assert!(verdict.ok, "violations: {:?}", verdict.violations);
        let identity = PauliString::identity(2).unwrap();
        let z1 = PauliString::parse("Z1", 2).unwrap();
        let a0 = verdict.alphas[&(identity.clone(), z1.clone(), 0)];
        let a1 = verdict.alphas[&(identity.clone(), z1.clone(), 1)];
        assert!((a0 - Complex64::ONE).norm() < 1e-12);
        assert!((a1 + Complex64::ONE).norm() < 1e-12);
        // Scalars are Hermitian in the pair indices when the verdict is ok.
        let a0_rev = verdict.alphas[&(z1, identity, 0)];
        assert!((a0_rev.conj() - a0).norm() < 1e-12);
    }

    #[test]
    fn simple_code_cannot_correct_x1() {
        let code = simple_code();
        let spec = ErrorSetSpec::parse("correct:X1", 2).unwrap();
        let verdict = check_vector_form(&code, &spec).unwrap();
        assert!(!verdict.ok);
        // X1 maps |00> onto |10>, a codeword of the other block, so some
        // cross-block bracket has magnitude 1.
        let cross = verdict.violations.iter().any(|v| {
            matches!(
                v.site,
                ViolationSite::Bracket {
                    block_left, block_right, ..
                } if block_left != block_right
            ) && (v.measured.norm() - 1.0).abs() < 1e-12
        });
        assert!(cross, "violations: {:?}", verdict.violations);
    }

    #[test]
    fn operator_form_agrees_with_vector_form_on_builtins() {
        let cases: Vec<(HybridCode, ErrorSetSpec)> = vec![
            (demo_code(), demo_error_set(Mode::Detect)),
            (demo_code(), demo_error_set(Mode::Correct)),
            (simple_code(), ErrorSetSpec::parse("correct:Z1", 2).unwrap()),
            (simple_code(), ErrorSetSpec::parse("correct:X1", 2).unwrap()),
            (simple_code(), ErrorSetSpec::parse("detect:single", 2).unwrap()),
        ];
        for (code, spec) in cases {
            let vf = check_vector_form(&code, &spec).unwrap();
            let of = check_operator_form(&code, &spec).unwrap();
            assert_eq!(vf.ok, of.ok, "{} on {} qubits", spec.mode(), code.n());
            for (key, alpha) in &vf.alphas {
                assert!(
                    (alpha - of.alphas[key]).norm() < CHECK_TOL,
                    "alpha mismatch at {key:?}"
                );
            }
        }
    }

    #[test]
    fn correct_mode_implies_detect_mode() {
        // Any spec passing in correct mode also passes in detect mode
        // because the detect pairs are a subset.
        let code = simple_code();
        for text in ["Z1", "Z1,Z1Z2", "Z2"] {
            let correct = ErrorSetSpec::parse(&format!("correct:{text}"), 2).unwrap();
            let detect = ErrorSetSpec::parse(&format!("detect:{text}"), 2).unwrap();
            let c_ok = check_vector_form(&code, &correct).unwrap().ok;
            let d_ok = check_vector_form(&code, &detect).unwrap().ok;
            if c_ok {
                assert!(d_ok, "correct passed but detect failed for {text}");
            }
        }
    }

    #[test]
    fn mismatched_spec_and_code_dimensions_error() {
        let spec = ErrorSetSpec::parse("X1", 3).unwrap();
        let err = check_vector_form(&simple_code(), &spec).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn degeneracy_of_simple_code_under_z1() {
        // Z1 acts as +1 on block 0 and -1 on block 1, so within each block
        // it is indistinguishable from the identity: both alpha matrices
        // [[1, s], [s, 1]] with s = +/-1 are singular.
        let spec = ErrorSetSpec::parse("correct:Z1", 2).unwrap();
        let report = degeneracy(&simple_code(), &spec).unwrap();
        assert_eq!(report.per_block_rank, vec![1, 1]);
        assert!(report.degenerate);
        assert_eq!(report.pair_count, 4);
    }

    #[test]
    fn degeneracy_trivial_code_under_z1() {
        let word = StateVector::basis(1, 0).unwrap();
        let code = HybridCode::new(1, vec![vec![word]]).unwrap();
        let spec = ErrorSetSpec::parse("correct:Z1", 1).unwrap();
        let report = degeneracy(&code, &spec).unwrap();
        assert_eq!(report.per_block_rank, vec![1]);
        assert!(report.degenerate);
    }

    #[test]
    fn degeneracy_negative_case() {
        // {|0>} under X1: the alpha matrix is the 2x2 identity.
        let word = StateVector::basis(1, 0).unwrap();
        let code = HybridCode::new(1, vec![vec![word]]).unwrap();
        let spec = ErrorSetSpec::parse("correct:X1", 1).unwrap();
        let report = degeneracy(&code, &spec).unwrap();
        assert_eq!(report.per_block_rank, vec![2]);
        assert!(!report.degenerate);
    }

    #[test]
    fn degeneracy_requires_a_passing_spec() {
        let err = degeneracy(&demo_code(), &demo_error_set(Mode::Correct)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn demo_code_distance_is_two() {
        assert_eq!(hybrid_distance(&demo_code()).unwrap(), 2);
        // An explicit weight-2 witness: Z1Z3 takes different signs on the
        // two codewords of block 0, breaking the scalar condition.
        let spec = ErrorSetSpec::parse("detect:Z1Z3", 4).unwrap();
        assert!(!check_vector_form(&demo_code(), &spec).unwrap().ok);
    }

    #[test]
    fn simple_code_distance_is_one() {
        assert_eq!(hybrid_distance(&simple_code()).unwrap(), 1);
    }

    #[test]
    fn full_space_code_distance_is_one() {
        let code = HybridCode::new(
            1,
            vec![vec![
                StateVector::basis(1, 0).unwrap(),
                StateVector::basis(1, 1).unwrap(),
            ]],
        )
        .unwrap();
        assert_eq!(hybrid_distance(&code).unwrap(), 1);
    }

    #[test]
    fn distance_guard_rejects_large_codes() {
        let code = HybridCode::new(11, vec![vec![StateVector::basis(11, 0).unwrap()]]).unwrap();
        assert!(matches!(
            hybrid_distance(&code).unwrap_err(),
            Error::Capacity(_)
        ));
    }

    #[test]
    fn detect_violated_agrees_with_full_check() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let code = HybridCode::random(3, 2, 2, &mut rng).unwrap();
            for p in pauli::enumerate_paulis(3, 2).unwrap() {
                if p.is_identity_letters() {
                    continue;
                }
                let spec =
                    ErrorSetSpec::new(Mode::Detect, 3, vec![p.clone()]).unwrap();
                let full = check_vector_form(&code, &spec).unwrap().ok;
                let fast = !detect_violated(&code, &p).unwrap();
                assert_eq!(full, fast, "disagreement on {p}");
            }
        }
    }
}
