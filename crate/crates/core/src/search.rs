//! Brute-force discovery of small hybrid codes.
//!
//! The search enumerates codes whose codewords are short superpositions of
//! basis states with unit coefficients, and keeps those satisfying the
//! error-correction conditions for a target error set.  All pruning during
//! enumeration happens in exact Gaussian-integer arithmetic — a basis-state
//! bracket `<c| E |c'>` of such codewords is a sum of fourth roots of unity
//! — so no candidate is kept or dropped because of rounding.  Survivors are
//! re-verified with the floating point checker as a belt-and-braces step,
//! then collapsed into equivalence classes under block reordering, codeword
//! reordering within a block, and per-codeword global phase.
//!
//! Candidate shape: every codeword is `sum_t a_t |b_t>` with distinct basis
//! states `b_t`, between 1 and `max_terms` of them, the lowest-index
//! coefficient fixed to `+1` and the rest drawn from `{+1, -1}` (or
//! `{+1, -1, +i, -i}` with [`SearchSpec::allow_imaginary`]).  By default,
//! when the slots fit, codewords are additionally required to occupy
//! pairwise disjoint basis supports, which shrinks the space dramatically;
//! set [`SearchSpec::disjoint`] to `Some(false)` to lift that restriction.

use std::collections::HashSet;

use num_complex::Complex64;

use crate::code::HybridCode;
use crate::pauli::PauliString;
use crate::state::StateVector;
use crate::verify::{check_vector_form, ErrorSetSpec};
use crate::{Error, Result};

/// Largest qubit count the search accepts.
pub const MAX_SEARCH_QUBITS: usize = 8;

/// Default ceiling on the pre-run candidate estimate.
pub const DEFAULT_ESTIMATE_CAP: u128 = 1_000_000_000_000;

/// Exact complex integer used for pruning arithmetic.
type GInt = num_complex::Complex<i64>;

/// What to search for.
#[derive(Clone, Debug)]
pub struct SearchSpec {
    /// Physical qubits.
    pub n: usize,
    /// Codewords per block (the block dimension `K`).
    pub k_dim: usize,
    /// Number of blocks `M`.
    pub m_blocks: usize,
    /// Error set and mode every reported code must satisfy.
    pub errors: ErrorSetSpec,
    /// Largest number of basis states per codeword.
    pub max_terms: usize,
    /// Extend the coefficient alphabet from `{+1, -1}` to
    /// `{+1, -1, +i, -i}`.
    pub allow_imaginary: bool,
    /// Force (`Some(true)`) or forbid (`Some(false)`) the disjoint-support
    /// restriction; `None` picks it automatically when
    /// `max_terms * k_dim * m_blocks <= 2^n`.
    pub disjoint: Option<bool>,
    /// Stop after this many equivalence classes have been found.
    pub limit: Option<usize>,
    /// Refuse to run when [`estimate_candidates`] exceeds this.
    pub estimate_cap: u128,
}

impl SearchSpec {
    /// A spec with default knobs: automatic disjointness, real
    /// coefficients, no limit, the default estimate cap.
    pub fn new(
        n: usize,
        k_dim: usize,
        m_blocks: usize,
        errors: ErrorSetSpec,
        max_terms: usize,
    ) -> Self {
        Self {
            n,
            k_dim,
            m_blocks,
            errors,
            max_terms,
            allow_imaginary: false,
            disjoint: None,
            limit: None,
            estimate_cap: DEFAULT_ESTIMATE_CAP,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("qubit count must be positive".into()));
        }
        if self.n > MAX_SEARCH_QUBITS {
            return Err(Error::Capacity(format!(
                "search supports up to {MAX_SEARCH_QUBITS} qubits, got {}",
                self.n
            )));
        }
        let dim = 1usize << self.n;
        if self.k_dim == 0 || self.m_blocks == 0 {
            return Err(Error::InvalidArgument(
                "block dimension and block count must be positive".into(),
            ));
        }
        if self.k_dim * self.m_blocks > dim {
            return Err(Error::InvalidArgument(format!(
                "{} blocks of dimension {} exceed the space dimension {dim}",
                self.m_blocks, self.k_dim
            )));
        }
        if self.max_terms == 0 || self.max_terms > dim {
            return Err(Error::InvalidArgument(format!(
                "terms per codeword must be in 1..={dim}, got {}",
                self.max_terms
            )));
        }
        if self.errors.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "error set on {} qubits in a {} qubit search",
                self.errors.n(),
                self.n
            )));
        }
        if self.limit == Some(0) {
            return Err(Error::InvalidArgument(
                "result limit must be positive when given".into(),
            ));
        }
        Ok(())
    }

    /// Whether the disjoint-support restriction is in effect.
    pub fn effective_disjoint(&self) -> bool {
        self.disjoint.unwrap_or_else(|| {
            self.max_terms
                .saturating_mul(self.k_dim)
                .saturating_mul(self.m_blocks)
                <= (1usize << self.n)
        })
    }

    fn alphabet(&self) -> Vec<GInt> {
        let mut a = vec![GInt::new(1, 0), GInt::new(-1, 0)];
        if self.allow_imaginary {
            a.push(GInt::new(0, 1));
            a.push(GInt::new(0, -1));
        }
        a
    }
}

/// Upper bound on the number of codeword assignments the enumeration could
/// visit: `f^(M*K)` with `f` the per-slot candidate count over the full
/// basis pool, saturating at `u128::MAX`.  The actual walk is usually far
/// smaller because pruning cuts branches early.
pub fn estimate_candidates(spec: &SearchSpec) -> u128 {
    let dim = 1u128 << spec.n;
    let alphabet = if spec.allow_imaginary { 4u128 } else { 2u128 };
    let mut per_slot = 0u128;
    let mut choose = 1u128; // C(dim, t), built incrementally
    let mut coeffs = 1u128; // alphabet^(t - 1)
    for t in 1..=spec.max_terms as u128 {
        choose = match choose
            .checked_mul(dim + 1 - t)
            .map(|v| v / t)
        {
            Some(v) => v,
            None => return u128::MAX,
        };
        let slot_term = match choose.checked_mul(coeffs) {
            Some(v) => v,
            None => return u128::MAX,
        };
        per_slot = match per_slot.checked_add(slot_term) {
            Some(v) => v,
            None => return u128::MAX,
        };
        coeffs = match coeffs.checked_mul(alphabet) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    let slots = spec.k_dim * spec.m_blocks;
    let mut total = 1u128;
    for _ in 0..slots {
        total = match total.checked_mul(per_slot) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    total
}

/// A code in canonical form: the representative, its serialized canonical
/// text, and a stable 64-bit key of that text.
#[derive(Clone, Debug)]
pub struct CanonicalCode {
    pub code: HybridCode,
    pub text: String,
    pub key: u64,
}

/// Result of a [`search`] run.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// The pre-run estimate that was checked against the cap.
    pub estimate: u128,
    /// Codeword placements examined during the walk.
    pub nodes_visited: u128,
    /// Complete assignments that passed every exact check and the floating
    /// point re-verification.
    pub survivors: u128,
    /// Survivors that failed the floating point re-verification (expected
    /// to stay zero; counted separately rather than silently dropped).
    pub verification_failures: u128,
    /// Distinct equivalence classes, in discovery order.
    pub canonical: Vec<CanonicalCode>,
    /// True when the walk stopped early because `limit` was reached.
    pub truncated: bool,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(text: &str) -> u64 {
    let mut hash = FNV_OFFSET;
    for byte in text.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// Scale used to snap amplitudes to a fixed-point grid when canonicalising.
const CANON_SCALE: f64 = 1e9;

/// Brings a code to canonical form: each codeword's global phase is fixed
/// so its lowest-index non-zero amplitude is positive real, amplitudes are
/// snapped to a `1e-9` grid, codewords are sorted within each block, and
/// blocks are sorted.  Codes equal up to those symmetries share `text` and
/// `key`.
pub fn canonicalize(code: &HybridCode) -> Result<CanonicalCode> {
    let n = code.n();
    // Fixed-point image of every codeword with the phase convention
    // applied: sorted (index, re, im) triples of non-zero entries.
    let mut blocks: Vec<Vec<Vec<(usize, i64, i64)>>> = Vec::with_capacity(code.m_blocks());
    for block in code.blocks() {
        let mut words: Vec<Vec<(usize, i64, i64)>> = Vec::with_capacity(block.len());
        for word in block {
            let amps = word.amplitudes();
            let lead = amps
                .iter()
                .find(|a| a.norm() > 0.5 / CANON_SCALE)
                .ok_or_else(|| {
                    Error::DegenerateInput("codeword with no amplitude above the grid".into())
                })?;
            let phase_fix = lead.conj() / lead.norm();
            let mut entries = Vec::new();
            for (idx, amp) in amps.iter().enumerate() {
                let fixed = amp * phase_fix;
                let re = (fixed.re * CANON_SCALE).round() as i64;
                let im = (fixed.im * CANON_SCALE).round() as i64;
                if re != 0 || im != 0 {
                    entries.push((idx, re, im));
                }
            }
            words.push(entries);
        }
        words.sort();
        blocks.push(words);
    }
    blocks.sort();

    let mut text = format!("n {n}\n");
    let mut rebuilt: Vec<Vec<StateVector>> = Vec::with_capacity(blocks.len());
    for (b, words) in blocks.iter().enumerate() {
        text.push_str(&format!("block {b}\n"));
        let mut block_states = Vec::with_capacity(words.len());
        for entries in words {
            let rendered: Vec<String> = entries
                .iter()
                .map(|(idx, re, im)| format!("{idx}:{re}:{im}"))
                .collect();
            text.push_str(&format!("cw {}\n", rendered.join(" ")));
            let mut amps = vec![Complex64::ZERO; 1 << n];
            for (idx, re, im) in entries {
                amps[*idx] = Complex64::new(*re as f64 / CANON_SCALE, *im as f64 / CANON_SCALE);
            }
            block_states.push(StateVector::normalized(n, amps)?);
        }
        rebuilt.push(block_states);
    }
    let key = fnv1a(&text);
    Ok(CanonicalCode {
        code: HybridCode::new(n, rebuilt)?,
        text,
        key,
    })
}

/// One candidate codeword during the walk: sorted `(basis index,
/// coefficient)` pairs.
type Candidate = Vec<(usize, GInt)>;

/// Precomputed action of one bracket operator on every basis state.
struct ErrorTable {
    to: Vec<usize>,
    phase: Vec<u8>,
}

impl ErrorTable {
    fn build(e: &PauliString, dim: usize) -> Result<Self> {
        let mut to = Vec::with_capacity(dim);
        let mut phase = Vec::with_capacity(dim);
        for idx in 0..dim {
            let (t, p) = e.apply_basis(idx)?;
            to.push(t);
            phase.push(p.exponent());
        }
        Ok(Self { to, phase })
    }

    /// Exact bracket `<left| E |right>`.
    fn bracket(&self, left: &Candidate, right: &Candidate) -> GInt {
        let mut acc = GInt::new(0, 0);
        for &(idx, coef) in right {
            let target = self.to[idx];
            if let Ok(pos) = left.binary_search_by_key(&target, |entry| entry.0) {
                let term = left[pos].1.conj() * coef;
                acc += match self.phase[idx] {
                    0 => term,
                    1 => GInt::new(-term.im, term.re),
                    2 => -term,
                    _ => GInt::new(term.im, -term.re),
                };
            }
        }
        acc
    }
}

struct Walk<'a> {
    spec: &'a SearchSpec,
    tables: Vec<ErrorTable>,
    dim: usize,
    slots: usize,
    disjoint: bool,
    alphabet: Vec<GInt>,
    placed: Vec<Candidate>,
    /// Squared norm of each placed codeword.
    norms: Vec<i64>,
    /// Diagonal bracket of each placed codeword per error table.
    diagonals: Vec<Vec<GInt>>,
    used: Vec<bool>,
    nodes: u128,
    survivors: u128,
    verification_failures: u128,
    canonical: Vec<CanonicalCode>,
    seen: HashSet<u64>,
    truncated: bool,
}

impl<'a> Walk<'a> {
    fn block_of(&self, slot: usize) -> usize {
        slot / self.spec.k_dim
    }

    /// Exact admissibility of `cand` at `slot` against everything placed.
    fn admissible(&self, slot: usize, cand: &Candidate, diag: &[GInt], norm: i64) -> bool {
        let zero = GInt::new(0, 0);
        let block = self.block_of(slot);
        for (t, table) in self.tables.iter().enumerate() {
            for p in 0..slot {
                // Off-diagonal brackets vanish in both directions, whether
                // the earlier codeword shares the block or not.
                if table.bracket(&self.placed[p], cand) != zero
                    || table.bracket(cand, &self.placed[p]) != zero
                {
                    return false;
                }
                // Same-block diagonals must agree after normalisation:
                // g_p / s_p == g_cand / s_cand, cross-multiplied to stay
                // in integers.
                if self.block_of(p) == block {
                    let lhs = self.diagonals[p][t] * GInt::new(norm, 0);
                    let rhs = diag[t] * GInt::new(self.norms[p], 0);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn record_leaf(&mut self) -> Result<()> {
        let n = self.spec.n;
        let mut blocks = Vec::with_capacity(self.spec.m_blocks);
        for b in 0..self.spec.m_blocks {
            let mut words = Vec::with_capacity(self.spec.k_dim);
            for w in 0..self.spec.k_dim {
                let cand = &self.placed[b * self.spec.k_dim + w];
                let mut amps = vec![Complex64::ZERO; self.dim];
                for (idx, coef) in cand {
                    amps[*idx] = Complex64::new(coef.re as f64, coef.im as f64);
                }
                words.push(StateVector::normalized(n, amps)?);
            }
            blocks.push(words);
        }
        let code = HybridCode::new(n, blocks)?;
        // The exact filter should make this re-check redundant; it stays as
        // an independent safety net.
        if !check_vector_form(&code, &self.spec.errors)?.ok {
            self.verification_failures += 1;
            return Ok(());
        }
        self.survivors += 1;
        let canon = canonicalize(&code)?;
        if self.seen.insert(canon.key) {
            self.canonical.push(canon);
            if let Some(limit) = self.spec.limit {
                if self.canonical.len() >= limit {
                    self.truncated = true;
                }
            }
        }
        Ok(())
    }

    fn place(&mut self, slot: usize) -> Result<()> {
        if self.truncated {
            return Ok(());
        }
        if slot == self.slots {
            return self.record_leaf();
        }
        let pool: Vec<usize> = (0..self.dim)
            .filter(|i| !self.disjoint || !self.used[*i])
            .collect();
        let mut support = Vec::with_capacity(self.spec.max_terms);
        self.place_support(slot, &pool, 0, &mut support)
    }

    /// Extends `support` with indices from `pool[from..]` and recurses on
    /// coefficient patterns for every size in `1..=max_terms`.
    fn place_support(
        &mut self,
        slot: usize,
        pool: &[usize],
        from: usize,
        support: &mut Vec<usize>,
    ) -> Result<()> {
        if self.truncated {
            return Ok(());
        }
        if !support.is_empty() {
            let mut coeffs = vec![GInt::new(1, 0); support.len()];
            self.place_coeffs(slot, support, &mut coeffs, 1)?;
        }
        if support.len() == self.spec.max_terms {
            return Ok(());
        }
        for pos in from..pool.len() {
            support.push(pool[pos]);
            self.place_support(slot, pool, pos + 1, support)?;
            support.pop();
        }
        Ok(())
    }

    /// Runs through coefficient assignments for `support` (lead coefficient
    /// pinned to `+1`) and tries each resulting candidate.
    fn place_coeffs(
        &mut self,
        slot: usize,
        support: &[usize],
        coeffs: &mut Vec<GInt>,
        depth: usize,
    ) -> Result<()> {
        if self.truncated {
            return Ok(());
        }
        if depth == support.len() {
            let cand: Candidate = support
                .iter()
                .copied()
                .zip(coeffs.iter().copied())
                .collect();
            return self.try_candidate(slot, cand);
        }
        for value in self.alphabet.clone() {
            coeffs[depth] = value;
            self.place_coeffs(slot, support, coeffs, depth + 1)?;
        }
        Ok(())
    }

    fn try_candidate(&mut self, slot: usize, cand: Candidate) -> Result<()> {
        self.nodes += 1;
        let norm = cand.len() as i64;
        let diag: Vec<GInt> = self
            .tables
            .iter()
            .map(|t| t.bracket(&cand, &cand))
            .collect();
        if !self.admissible(slot, &cand, &diag, norm) {
            return Ok(());
        }
        if self.disjoint {
            for (idx, _) in &cand {
                self.used[*idx] = true;
            }
        }
        self.placed.push(cand);
        self.norms.push(norm);
        self.diagonals.push(diag);
        self.place(slot + 1)?;
        let cand = self.placed.pop().expect("pushed above");
        self.norms.pop();
        self.diagonals.pop();
        if self.disjoint {
            for (idx, _) in &cand {
                self.used[*idx] = false;
            }
        }
        Ok(())
    }
}

/// Runs the exhaustive walk described in the module docs.  Fails up front
/// with a capacity error when [`estimate_candidates`] exceeds the spec's
/// cap.
pub fn search(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let estimate = estimate_candidates(spec);
    if estimate > spec.estimate_cap {
        return Err(Error::Capacity(format!(
            "candidate estimate {estimate} exceeds the cap {}; tighten the spec or raise the cap",
            spec.estimate_cap
        )));
    }
    let dim = 1usize << spec.n;
    // One table per distinct bracket operator.  The letter pattern alone
    // determines admissibility: a global fourth root of unity scales every
    // bracket of a pair uniformly, so it changes no zero test and no
    // cross-multiplied diagonal equality.
    let mut seen_letters = std::collections::HashSet::new();
    let mut tables = Vec::new();
    for (a, b) in spec.errors.expand_pairs() {
        let e = a.adjoint().mul(&b)?;
        if seen_letters.insert(e.letters_label()) {
            tables.push(ErrorTable::build(&e, dim)?);
        }
    }
    let mut walk = Walk {
        tables,
        dim,
        slots: spec.k_dim * spec.m_blocks,
        disjoint: spec.effective_disjoint(),
        alphabet: spec.alphabet(),
        placed: Vec::new(),
        norms: Vec::new(),
        diagonals: Vec::new(),
        used: vec![false; dim],
        nodes: 0,
        survivors: 0,
        verification_failures: 0,
        canonical: Vec::new(),
        seen: HashSet::new(),
        truncated: false,
        spec,
    };
    walk.place(0)?;
    Ok(SearchOutcome {
        estimate,
        nodes_visited: walk.nodes,
        survivors: walk.survivors,
        verification_failures: walk.verification_failures,
        canonical: walk.canonical,
        truncated: walk.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::demo_code;

    fn spec_for(n: usize, k: usize, m: usize, errors: &str, max_terms: usize) -> SearchSpec {
        SearchSpec::new(
            n,
            k,
            m,
            ErrorSetSpec::parse(errors, n).unwrap(),
            max_terms,
        )
    }

    #[test]
    fn validation_rejects_bad_specs() {
        assert!(spec_for(0, 1, 1, "detect:", 1).validate().is_err());
        assert!(spec_for(9, 1, 1, "detect:", 1).validate().is_err());
        assert!(spec_for(2, 3, 2, "detect:", 1).validate().is_err());
        assert!(spec_for(2, 2, 2, "detect:", 0).validate().is_err());
        let mut s = spec_for(2, 2, 2, "detect:", 1);
        s.limit = Some(0);
        assert!(s.validate().is_err());
        // Error set on the wrong qubit count.
        let mut s = spec_for(2, 2, 2, "detect:", 1);
        s.errors = ErrorSetSpec::parse("X1", 3).unwrap();
        assert!(s.validate().is_err());
    }

    #[test]
    fn estimate_counts_single_term_slots() {
        // One-term codewords: 4 choices per slot, 4 slots.
        let spec = spec_for(2, 2, 2, "detect:", 1);
        assert_eq!(estimate_candidates(&spec), 256);
        // Two-term slots add C(4,2) * 2 sign patterns.
        let spec = spec_for(2, 1, 1, "detect:", 2);
        assert_eq!(estimate_candidates(&spec), 4 + 6 * 2);
        // The imaginary alphabet widens the coefficient choices.
        let mut spec = spec_for(2, 1, 1, "detect:", 2);
        spec.allow_imaginary = true;
        assert_eq!(estimate_candidates(&spec), 4 + 6 * 4);
    }

    #[test]
    fn cap_refuses_oversized_searches() {
        let mut spec = spec_for(2, 2, 2, "detect:", 1);
        spec.estimate_cap = 100;
        assert!(matches!(search(&spec).unwrap_err(), Error::Capacity(_)));
    }

    #[test]
    fn unconstrained_two_qubit_split_has_three_classes() {
        // With single-term codewords the only requirement left is that the
        // four slots use four distinct basis states: 4! = 24 ordered
        // assignments, collapsing to 3 unordered set partitions.
        let outcome = search(&spec_for(2, 2, 2, "detect:", 1)).unwrap();
        assert_eq!(outcome.survivors, 24);
        assert_eq!(outcome.canonical.len(), 3);
        assert_eq!(outcome.verification_failures, 0);
        assert!(!outcome.truncated);
    }

    #[test]
    fn disjoint_restriction_does_not_change_single_term_results() {
        let auto = search(&spec_for(2, 2, 2, "detect:", 1)).unwrap();
        let mut spec = spec_for(2, 2, 2, "detect:", 1);
        spec.disjoint = Some(false);
        let full = search(&spec).unwrap();
        assert_eq!(full.survivors, auto.survivors);
        let keys_auto: Vec<u64> = auto.canonical.iter().map(|c| c.key).collect();
        let keys_full: Vec<u64> = full.canonical.iter().map(|c| c.key).collect();
        assert_eq!(keys_auto, keys_full);
        // The unrestricted walk looks at more placements.
        assert!(full.nodes_visited >= auto.nodes_visited);
    }

    #[test]
    fn z1_correction_selects_the_basis_split() {
        let outcome = search(&spec_for(2, 2, 2, "correct:Z1", 1)).unwrap();
        assert_eq!(outcome.canonical.len(), 1);
        let found = &outcome.canonical[0];
        // The survivor splits on the first qubit: blocks {|00>, |01>} and
        // {|10>, |11>}.
        let code = &found.code;
        for (block, base) in [(0usize, 0usize), (1, 2)] {
            for word in 0..2 {
                let amps = code.word(block, word).amplitudes();
                let hot: Vec<usize> = (0..4).filter(|i| amps[*i].norm() > 0.5).collect();
                assert_eq!(hot.len(), 1);
                assert_eq!(hot[0] & 2, base, "block {block} word {word}");
            }
        }
        // And it is verified against the very spec it was searched for.
        let spec = ErrorSetSpec::parse("correct:Z1", 2).unwrap();
        assert!(check_vector_form(code, &spec).unwrap().ok);
    }

    #[test]
    fn uncorrectable_spec_yields_nothing() {
        let outcome = search(&spec_for(2, 2, 2, "correct:X1,Z1", 1)).unwrap();
        assert_eq!(outcome.survivors, 0);
        assert!(outcome.canonical.is_empty());
    }

    #[test]
    fn limit_truncates_the_walk() {
        let mut spec = spec_for(2, 2, 2, "detect:", 1);
        spec.limit = Some(1);
        let outcome = search(&spec).unwrap();
        assert!(outcome.truncated);
        assert_eq!(outcome.canonical.len(), 1);
        assert!(outcome.survivors < 24);
    }

    #[test]
    fn canonical_form_is_invariant_under_symmetries() {
        let base = demo_code();
        let reference = canonicalize(&base).unwrap();
        let blocks = |swap_blocks: bool, swap_words: bool, scale: Complex64| {
            let mut bs: Vec<Vec<StateVector>> = base
                .blocks()
                .iter()
                .map(|b| b.to_vec())
                .collect();
            if swap_words {
                bs[0].swap(0, 1);
            }
            if swap_blocks {
                bs.swap(0, 1);
            }
            // Rescale one codeword by a global phase.
            let w = &bs[1][0];
            let amps = w.amplitudes().iter().map(|a| a * scale).collect();
            bs[1][0] = StateVector::new(w.n(), amps).unwrap();
            HybridCode::new(base.n(), bs).unwrap()
        };
        for (sb, sw, ph) in [
            (true, false, Complex64::ONE),
            (false, true, Complex64::ONE),
            (true, true, -Complex64::ONE),
            (false, false, Complex64::I),
        ] {
            let variant = blocks(sb, sw, ph);
            let canon = canonicalize(&variant).unwrap();
            assert_eq!(canon.key, reference.key, "sb={sb} sw={sw} ph={ph}");
            assert_eq!(canon.text, reference.text);
        }
        // A genuinely different code hashes differently.
        let other = canonicalize(&crate::code::simple_code()).unwrap();
        assert_ne!(other.key, reference.key);
    }

    #[test]
    fn search_rediscovers_the_demo_code() {
        // The demo code's own error set, two-term codewords: the walk must
        // find its equivalence class.
        let spec = spec_for(4, 2, 2, "detect:single,Z1Z2,Z3Z4", 2);
        let outcome = search(&spec).unwrap();
        assert_eq!(outcome.verification_failures, 0);
        let demo_key = canonicalize(&demo_code()).unwrap().key;
        assert!(
            outcome.canonical.iter().any(|c| c.key == demo_key),
            "demo class missing among {} classes",
            outcome.canonical.len()
        );
    }
}
