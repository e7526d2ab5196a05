//! Pauli strings with exact phase tracking.
//!
//! A [`PauliString`] is a tensor product of single-qubit letters `I, X, Y, Z`
//! together with a global phase from `{+1, +i, -1, -i}`.  The convention is
//! `Y = i X Z`, i.e. `Y = [[0, -i], [i, 0]]`, which gives products such as
//! `X * Z = -i Y`.  Strings act on [`StateVector`]s by bit permutation and
//! sign flips, never through a dense matrix; [`PauliString::matrix`] builds
//! the dense form on request for cross-checks.

use num_complex::Complex64;

use crate::operator::{check_dense_guard, Operator};
use crate::state::StateVector;
use crate::{Error, Result};

/// Largest number of strings [`enumerate_paulis`] will materialise.
pub const MAX_ENUMERATION: u128 = 1 << 24;

/// One tensor factor of a Pauli string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn symbol(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// A fourth root of unity, stored as the exponent of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(e: u32) -> Self {
        Phase((e % 4) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn value(self) -> Complex64 {
        match self.0 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    pub fn times(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    fn prefix(self) -> &'static str {
        match self.0 {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        }
    }
}

/// A phased Pauli string on `n` qubits.  Letter `0` acts on qubit 1, which is
/// the most significant bit of a basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    letters: Vec<Letter>,
    phase: Phase,
}

// Single-qubit products: LEFT * RIGHT = i^exp * letter, indexed [left][right]
// in the order I, X, Y, Z.
const PRODUCT: [[(Letter, u8); 4]; 4] = {
    use Letter::*;
    [
        [(I, 0), (X, 0), (Y, 0), (Z, 0)],
        [(X, 0), (I, 0), (Z, 1), (Y, 3)],
        [(Y, 0), (Z, 3), (I, 0), (X, 1)],
        [(Z, 0), (Y, 1), (X, 3), (I, 0)],
    ]
};

impl PauliString {
    pub fn new(letters: Vec<Letter>, phase: Phase) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument(
                "a Pauli string needs at least one qubit".into(),
            ));
        }
        Ok(Self { letters, phase })
    }

    /// The identity string on `n` qubits with phase `+1`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(vec![Letter::I; n], Phase::ONE)
    }

    /// A single letter placed on qubit `q` (1-based) of an `n`-qubit string.
    pub fn single(n: usize, q: usize, letter: Letter) -> Result<Self> {
        if q == 0 || q > n {
            return Err(Error::InvalidArgument(format!(
                "qubit index {q} out of range 1..={n}"
            )));
        }
        let mut letters = vec![Letter::I; n];
        letters[q - 1] = letter;
        Self::new(letters, Phase::ONE)
    }

    /// Parses a label in dense form (`"XIII"`, one letter per qubit) or
    /// sparse form (`"X1"`, `"Z1Z2"`, concatenated letter+index tokens with
    /// 1-based indices).  The resulting phase is always `+1`.
    pub fn parse(label: &str, n: usize) -> Result<Self> {
        let s = label.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "empty Pauli label".into(),
            });
        }
        if n == 0 {
            return Err(Error::InvalidArgument("qubit count must be positive".into()));
        }
        if s.chars().any(|c| c.is_ascii_digit()) {
            Self::parse_sparse(s, n)
        } else {
            Self::parse_dense(s, n)
        }
    }

    fn parse_dense(s: &str, n: usize) -> Result<Self> {
        if s.chars().count() != n {
            return Err(Error::Parse {
                line: 0,
                msg: format!("dense Pauli label '{s}' must have exactly {n} letters"),
            });
        }
        let mut letters = Vec::with_capacity(n);
        for c in s.chars() {
            match Letter::from_symbol(c) {
                Some(l) => letters.push(l),
                None => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid Pauli letter '{c}' in label '{s}'"),
                    })
                }
            }
        }
        Self::new(letters, Phase::ONE)
    }

    fn parse_sparse(s: &str, n: usize) -> Result<Self> {
        let mut letters = vec![Letter::I; n];
        let mut seen = vec![false; n];
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let letter = Letter::from_symbol(c).ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("invalid Pauli letter '{c}' in label '{s}'"),
            })?;
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            if digits.is_empty() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("letter '{c}' in sparse label '{s}' has no qubit index"),
                });
            }
            let q: usize = digits.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad qubit index '{digits}' in label '{s}'"),
            })?;
            if q == 0 || q > n {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("qubit index {q} in label '{s}' out of range 1..={n}"),
                });
            }
            if seen[q - 1] {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("duplicate qubit index {q} in label '{s}'"),
                });
            }
            seen[q - 1] = true;
            letters[q - 1] = letter;
        }
        Self::new(letters, Phase::ONE)
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, q: usize) -> Letter {
        self.letters[q - 1]
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|l| **l != Letter::I).count()
    }

    pub fn is_identity_letters(&self) -> bool {
        self.weight() == 0
    }

    /// The qubits (1-based) carrying a non-identity letter.
    pub fn support(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| **l != Letter::I)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Positionwise product `self * other` with exact phase tracking.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "product of Pauli strings on {} and {} qubits",
                self.n(),
                other.n()
            )));
        }
        let mut exp = u32::from(self.phase.exponent()) + u32::from(other.phase.exponent());
        let letters = self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(a, b)| {
                let (l, e) = PRODUCT[*a as usize][*b as usize];
                exp += u32::from(e);
                l
            })
            .collect();
        Ok(Self {
            letters,
            phase: Phase::from_exponent(exp),
        })
    }

    /// Hermitian adjoint: the letters are self-adjoint, so only the phase is
    /// conjugated.
    pub fn adjoint(&self) -> Self {
        Self {
            letters: self.letters.clone(),
            phase: self.phase.conj(),
        }
    }

    /// Bit masks describing the string action: `(x_mask, zy_mask, y_count)`
    /// where `x_mask` marks qubits whose basis bit flips (letters X and Y)
    /// and `zy_mask` marks qubits contributing `(-1)^bit` (letters Z and Y).
    fn masks(&self) -> (usize, usize, u32) {
        let n = self.n();
        let mut x_mask = 0usize;
        let mut zy_mask = 0usize;
        let mut y_count = 0u32;
        for (idx, l) in self.letters.iter().enumerate() {
            let bit = 1usize << (n - 1 - idx);
            match l {
                Letter::I => {}
                Letter::X => x_mask |= bit,
                Letter::Y => {
                    x_mask |= bit;
                    zy_mask |= bit;
                    y_count += 1;
                }
                Letter::Z => zy_mask |= bit,
            }
        }
        (x_mask, zy_mask, y_count)
    }

    /// Applies the string to a state by index permutation and phase flips.
    /// The result stays normalised because Pauli strings are unitary.
    pub fn apply(&self, s: &StateVector) -> Result<StateVector> {
        if self.n() != s.n() {
            return Err(Error::DimensionMismatch(format!(
                "Pauli string on {} qubits applied to {} qubit state",
                self.n(),
                s.n()
            )));
        }
        let (x_mask, zy_mask, y_count) = self.masks();
        let base = self.phase.times(Phase::from_exponent(y_count)).value();
        let dim = s.dim();
        let mut out = vec![Complex64::ZERO; dim];
        for (i, amp) in s.amplitudes().iter().enumerate() {
            let sign = if (i & zy_mask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            out[i ^ x_mask] = base * sign * amp;
        }
        Ok(StateVector::from_unitary_output(s.n(), out))
    }

    /// The exact action on one basis state: `E |index> = phase |to>` with
    /// `to` and `phase` returned as a pair.  Pauli strings permute basis
    /// states up to a fourth root of unity, so no floating point is needed.
    pub fn apply_basis(&self, index: usize) -> Result<(usize, Phase)> {
        let dim = 1usize << self.n();
        if index >= dim {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} outside 0..{dim}"
            )));
        }
        let (x_mask, zy_mask, y_count) = self.masks();
        let exponent =
            u32::from(self.phase.exponent()) + y_count + 2 * (index & zy_mask).count_ones();
        Ok((index ^ x_mask, Phase::from_exponent(exponent)))
    }

    /// Dense matrix form, equal to the Kronecker product of the single-qubit
    /// matrices times the phase.  Guarded by [`MAX_DENSE_QUBITS`].
    ///
    /// [`MAX_DENSE_QUBITS`]: crate::operator::MAX_DENSE_QUBITS
    pub fn matrix(&self) -> Result<Operator> {
        check_dense_guard(self.n())?;
        let (x_mask, zy_mask, y_count) = self.masks();
        let base = self.phase.times(Phase::from_exponent(y_count)).value();
        let dim = 1usize << self.n();
        let mut mat = nalgebra::DMatrix::zeros(dim, dim);
        for col in 0..dim {
            let sign = if (col & zy_mask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            mat[(col ^ x_mask, col)] = base * sign;
        }
        Operator::from_matrix(self.n(), mat)
    }

    /// The same string with phase forced to `+1`.
    pub fn unphased(&self) -> Self {
        Self {
            letters: self.letters.clone(),
            phase: Phase::ONE,
        }
    }

    /// Dense label without the phase prefix.
    pub fn letters_label(&self) -> String {
        self.letters.iter().map(|l| l.symbol()).collect()
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.phase.prefix(), self.letters_label())
    }
}

/// Exact binomial coefficient in u128; callers keep arguments small.
fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of strings [`enumerate_paulis`] produces.
pub fn enumeration_count(n: usize, max_weight: usize) -> u128 {
    (0..=max_weight)
        .map(|j| binomial_u128(n, j) * 3u128.pow(j as u32))
        .sum()
}

/// Enumerates every phase `+1` Pauli string on `n` qubits of weight at most
/// `max_weight`, in a fixed order: by weight, then by position set in
/// lexicographic order, then by letters with `X < Y < Z` and the leftmost
/// position varying slowest.
pub fn enumerate_paulis(n: usize, max_weight: usize) -> Result<Vec<PauliString>> {
    if n == 0 {
        return Err(Error::InvalidArgument("qubit count must be positive".into()));
    }
    if max_weight > n {
        return Err(Error::InvalidArgument(format!(
            "max weight {max_weight} exceeds qubit count {n}"
        )));
    }
    let count = enumeration_count(n, max_weight);
    if count > MAX_ENUMERATION {
        return Err(Error::Capacity(format!(
            "enumeration would produce {count} strings, more than the {MAX_ENUMERATION} guard"
        )));
    }
    let mut out = Vec::with_capacity(count as usize);
    for w in 0..=max_weight {
        paulis_of_weight_into(n, w, &mut out);
    }
    Ok(out)
}

/// Appends all weight-`w` strings on `n` qubits, in the enumeration order.
pub(crate) fn paulis_of_weight_into(n: usize, w: usize, out: &mut Vec<PauliString>) {
    if w == 0 {
        out.push(PauliString::identity(n).expect("n checked positive"));
        return;
    }
    // Position subsets of size w in lexicographic order.
    let mut positions: Vec<usize> = (0..w).collect();
    loop {
        emit_letter_choices(n, &positions, out);
        // Advance to the next combination.
        let mut i = w;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if positions[i] != i + n - w {
                break;
            }
            if i == 0 {
                return;
            }
        }
        positions[i] += 1;
        for j in i + 1..w {
            positions[j] = positions[j - 1] + 1;
        }
    }
}

fn emit_letter_choices(n: usize, positions: &[usize], out: &mut Vec<PauliString>) {
    const CHOICES: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];
    let w = positions.len();
    let mut odometer = vec![0usize; w];
    loop {
        let mut letters = vec![Letter::I; n];
        for (slot, pos) in positions.iter().enumerate() {
            letters[*pos] = CHOICES[odometer[slot]];
        }
        out.push(PauliString {
            letters,
            phase: Phase::ONE,
        });
        // Increment with the leftmost slot as the most significant digit.
        let mut slot = w;
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            odometer[slot] += 1;
            if odometer[slot] < 3 {
                break;
            }
            odometer[slot] = 0;
            if slot == 0 {
                return;
            }
        }
    }
}
