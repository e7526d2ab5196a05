//! Hybrid code model and the code file format.
//!
//! A [`HybridCode`] holds `M` blocks of `K` orthonormal codewords on `n`
//! qubits.  Blocks are mutually orthogonal subspaces; the block index carries
//! a classical symbol, the intra-block position a logical quantum state.
//!
//! # Code file format
//!
//! ```text
//! # comment
//! n 4
//! block 0
//! cw +1 0000 ; +1 1111
//! cw +1 0011 ; -1 1100
//! block 1
//! cw +1 0101 ; +1 1010
//! cw +1 1001 ; -1 0110
//! ```
//!
//! The first significant line declares the qubit count.  `block` headers are
//! 0-based and consecutive.  Each `cw` line lists `coefficient bitstring`
//! terms separated by `;`; coefficients are real (`-1`, `0.5`, `1e-3`) or
//! complex (`a+bi`, `2i`, `-i`) literals and bitstrings have exactly `n`
//! characters.  Codewords are normalised after the terms are summed, so the
//! coefficients only fix the direction.

use num_complex::Complex64;
use rand::Rng;

use crate::operator::Operator;
use crate::state::StateVector;
use crate::{Error, Result, CHECK_TOL};

/// Largest qubit count accepted by the code file parser.
pub const MAX_PARSE_QUBITS: usize = 16;

/// The `((n, K:M, d))` parameter tuple of a code.  `d` is `None` until a
/// distance has been computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub k_dim: usize,
    pub m_blocks: usize,
    pub d: Option<usize>,
}

impl CodeParameters {
    /// Number of logical qubits when the block dimension is a power of two.
    pub fn logical_qubits(&self) -> Option<u32> {
        self.k_dim.is_power_of_two().then(|| self.k_dim.trailing_zeros())
    }
}

impl std::fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.d {
            Some(d) => write!(f, "(({}, {}:{}, {}))", self.n, self.k_dim, self.m_blocks, d),
            None => write!(f, "(({}, {}:{}, ?))", self.n, self.k_dim, self.m_blocks),
        }
    }
}

/// A hybrid quantum-classical code: `M` blocks of `K` orthonormal codewords
/// over `n` qubits, all codewords mutually orthogonal across blocks.
#[derive(Clone, Debug)]
pub struct HybridCode {
    n: usize,
    blocks: Vec<Vec<StateVector>>,
}

impl HybridCode {
    /// Validates block shape and pairwise orthonormality within
    /// [`CHECK_TOL`].
    pub fn new(n: usize, blocks: Vec<Vec<StateVector>>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Validation("a code needs at least one block".into()));
        }
        let k_dim = blocks[0].len();
        if k_dim == 0 {
            return Err(Error::Validation(
                "each block needs at least one codeword".into(),
            ));
        }
        for (b, block) in blocks.iter().enumerate() {
            if block.len() != k_dim {
                return Err(Error::Validation(format!(
                    "block {b} has {} codewords, block 0 has {k_dim}",
                    block.len()
                )));
            }
            for (i, w) in block.iter().enumerate() {
                if w.n() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "codeword (block {b}, index {i}) has {} qubits, code declares {n}",
                        w.n()
                    )));
                }
            }
        }
        let total = blocks.len() * k_dim;
        if total > 1usize << n {
            return Err(Error::Validation(format!(
                "{} codewords do not fit in a {n} qubit space of dimension {}",
                total,
                1usize << n
            )));
        }
        let code = Self { n, blocks };
        code.check_orthonormal()?;
        Ok(code)
    }

    fn check_orthonormal(&self) -> Result<()> {
        let words: Vec<(usize, usize, &StateVector)> = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(b, ws)| ws.iter().enumerate().map(move |(i, w)| (b, i, w)))
            .collect();
        for (a, (ba, ia, wa)) in words.iter().enumerate() {
            for (bb, ib, wb) in words.iter().skip(a) {
                let g = wa.inner(wb)?;
                let expected = if ba == bb && ia == ib { 1.0 } else { 0.0 };
                if (g - expected).norm() > CHECK_TOL {
                    return Err(Error::Validation(format!(
                        "codewords (block {ba}, index {ia}) and (block {bb}, index {ib}) \
                         have inner product {g}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Codewords per block (`K`).
    pub fn k_dim(&self) -> usize {
        self.blocks[0].len()
    }

    /// Number of blocks (`M`).
    pub fn m_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn parameters(&self) -> CodeParameters {
        CodeParameters {
            n: self.n,
            k_dim: self.k_dim(),
            m_blocks: self.m_blocks(),
            d: None,
        }
    }

    /// Codeword `i` of `block`, both 0-based.
    pub fn word(&self, block: usize, i: usize) -> &StateVector {
        &self.blocks[block][i]
    }

    pub fn blocks(&self) -> &[Vec<StateVector>] {
        &self.blocks
    }

    /// All codewords with their `(block, index)` coordinates, block-major.
    pub fn words(&self) -> impl Iterator<Item = (usize, usize, &StateVector)> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(b, ws)| ws.iter().enumerate().map(move |(i, w)| (b, i, w)))
    }

    /// Projector onto the span of one block, `P_b = sum_i |c_i^b><c_i^b|`.
    pub fn block_projector(&self, block: usize) -> Result<Operator> {
        if block >= self.m_blocks() {
            return Err(Error::InvalidArgument(format!(
                "block index {block} out of range 0..{}",
                self.m_blocks()
            )));
        }
        let mut p = Operator::zeros(self.n)?;
        for w in &self.blocks[block] {
            p = &p + &Operator::outer(w, w)?;
        }
        Ok(p)
    }

    /// Projector onto the full code space, the sum of all block projectors.
    pub fn projector(&self) -> Result<Operator> {
        let mut p = Operator::zeros(self.n)?;
        for b in 0..self.m_blocks() {
            p = &p + &self.block_projector(b)?;
        }
        Ok(p)
    }

    /// Parses the code file format described in the module docs.
    pub fn parse_str(text: &str) -> Result<Self> {
        parse_code(text)
    }

    /// Writes the code in the file format; [`parse_str`] of the output
    /// reproduces the codewords exactly.
    ///
    /// [`parse_str`]: HybridCode::parse_str
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n {}\n", self.n));
        for (b, block) in self.blocks.iter().enumerate() {
            out.push_str(&format!("block {b}\n"));
            for w in block {
                let terms: Vec<String> = w
                    .amplitudes()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.norm() > 0.0)
                    .map(|(idx, a)| {
                        format!("{} {:0width$b}", format_coefficient(*a), idx, width = self.n)
                    })
                    .collect();
                out.push_str(&format!("cw {}\n", terms.join(" ; ")));
            }
        }
        out
    }

    /// A random code drawn by orthonormalising uniform random vectors.
    /// Useful for cross-checking the verifier formulations against each
    /// other on generic inputs.
    pub fn random<R: Rng>(n: usize, k_dim: usize, m_blocks: usize, rng: &mut R) -> Result<Self> {
        let total = k_dim
            .checked_mul(m_blocks)
            .filter(|t| *t >= 1 && *t <= 1usize << n)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "cannot fit {m_blocks} blocks of {k_dim} codewords into {n} qubits"
                ))
            })?;
        let dim = 1usize << n;
        let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(total);
        while basis.len() < total {
            let mut v: Vec<Complex64> = (0..dim)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            // Two rounds of Gram-Schmidt keep the basis orthogonal to
            // machine precision.
            for _ in 0..2 {
                for u in &basis {
                    let overlap: Complex64 =
                        u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (ve, ue) in v.iter_mut().zip(u) {
                        *ve -= overlap * ue;
                    }
                }
            }
            let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue; // unlucky draw, nearly inside the span
            }
            for a in &mut v {
                *a /= norm;
            }
            basis.push(v);
        }
        let blocks: Result<Vec<Vec<StateVector>>> = basis
            .chunks(k_dim)
            .map(|chunk| {
                chunk
                    .iter()
                    .map(|v| StateVector::new(n, v.clone()))
                    .collect()
            })
            .collect();
        Self::new(n, blocks?)
    }
}

/// Code file of the built-in `((4, 2:2, 2))` demonstration code.
pub const DEMO_CODE_FILE: &str = "\
n 4
block 0
cw +1 0000 ; +1 1111
cw +1 0011 ; -1 1100
block 1
cw +1 0101 ; +1 1010
cw +1 1001 ; -1 0110
";

/// Code file of the built-in two-qubit basis-split code.
pub const SIMPLE_CODE_FILE: &str = "\
n 2
block 0
cw 1 00
cw 1 01
block 1
cw 1 10
cw 1 11
";

/// The built-in `((4, 2:2, 2))` demonstration code: one logical qubit plus
/// one classical bit in four physical qubits.
pub fn demo_code() -> HybridCode {
    HybridCode::parse_str(DEMO_CODE_FILE).expect("built-in demo code file is valid")
}

/// The built-in basis-split code on two qubits: qubit 1 carries the classical
/// bit, qubit 2 the logical qubit, with no protection at all.
pub fn simple_code() -> HybridCode {
    HybridCode::parse_str(SIMPLE_CODE_FILE).expect("built-in simple code file is valid")
}

fn format_coefficient(a: Complex64) -> String {
    if a.im == 0.0 {
        format!("{:?}", a.re)
    } else if a.re == 0.0 {
        format!("{:?}i", a.im)
    } else if a.im < 0.0 {
        format!("{:?}-{:?}i", a.re, -a.im)
    } else {
        format!("{:?}+{:?}i", a.re, a.im)
    }
}

/// Parses a real (`-1`, `0.5`, `1e-3`) or complex (`a+bi`, `2i`, `-i`)
/// coefficient literal.
fn parse_coefficient(token: &str) -> Option<Complex64> {
    if let Ok(re) = token.parse::<f64>() {
        return Some(Complex64::new(re, 0.0));
    }
    let body = token.strip_suffix('i')?;
    // Split at the last +/- that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let mut split = None;
    for pos in (1..bytes.len()).rev() {
        let c = bytes[pos];
        if (c == b'+' || c == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
            split = Some(pos);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(pos) => (&body[..pos], &body[pos..]),
        None => ("", body),
    };
    let re = if re_str.is_empty() {
        0.0
    } else {
        re_str.parse::<f64>().ok()?
    };
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().ok()?,
    };
    Some(Complex64::new(re, im))
}

fn parse_code(text: &str) -> Result<HybridCode> {
    let mut n: Option<usize> = None;
    let mut blocks: Vec<Vec<StateVector>> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        match keyword {
            "n" => {
                if n.is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: "duplicate 'n' declaration".into(),
                    });
                }
                let value: usize = rest.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad qubit count '{rest}'"),
                })?;
                if value == 0 || value > MAX_PARSE_QUBITS {
                    return Err(Error::Capacity(format!(
                        "line {line}: qubit count must be in 1..={MAX_PARSE_QUBITS}, got {value}"
                    )));
                }
                n = Some(value);
            }
            "block" => {
                if n.is_none() {
                    return Err(Error::Parse {
                        line,
                        msg: "'block' before the 'n' declaration".into(),
                    });
                }
                let index: usize = rest.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad block index '{rest}'"),
                })?;
                if index != blocks.len() {
                    return Err(Error::Parse {
                        line,
                        msg: format!(
                            "block indices must be consecutive from 0; expected {}, got {index}",
                            blocks.len()
                        ),
                    });
                }
                blocks.push(Vec::new());
            }
            "cw" => {
                let n = n.ok_or_else(|| Error::Parse {
                    line,
                    msg: "'cw' before the 'n' declaration".into(),
                })?;
                let block = blocks.last_mut().ok_or_else(|| Error::Parse {
                    line,
                    msg: "'cw' before the first 'block' header".into(),
                })?;
                block.push(parse_codeword(rest, n, line)?);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown keyword '{other}'"),
                });
            }
        }
    }

    let n = n.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing 'n' declaration".into(),
    })?;
    HybridCode::new(n, blocks)
}

fn parse_codeword(terms: &str, n: usize, line: usize) -> Result<StateVector> {
    if terms.is_empty() {
        return Err(Error::Parse {
            line,
            msg: "'cw' line has no terms".into(),
        });
    }
    let dim = 1usize << n;
    let mut amps = vec![Complex64::ZERO; dim];
    let mut seen = std::collections::HashSet::new();
    for term in terms.split(';') {
        let mut parts = term.split_whitespace();
        let (coef_str, bits) = match (parts.next(), parts.next(), parts.next()) {
            (Some(c), Some(b), None) => (c, b),
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("term '{}' must be '<coefficient> <bitstring>'", term.trim()),
                })
            }
        };
        let coef = parse_coefficient(coef_str).ok_or_else(|| Error::Parse {
            line,
            msg: format!("bad coefficient '{coef_str}'"),
        })?;
        if !coef.re.is_finite() || !coef.im.is_finite() {
            return Err(Error::Parse {
                line,
                msg: format!("non-finite coefficient '{coef_str}'"),
            });
        }
        if bits.len() != n || bits.bytes().any(|b| b != b'0' && b != b'1') {
            return Err(Error::DimensionMismatch(format!(
                "line {line}: bitstring '{bits}' must have exactly {n} binary digits"
            )));
        }
        let index = usize::from_str_radix(bits, 2).expect("validated binary digits");
        if !seen.insert(index) {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate bitstring '{bits}' in one codeword"),
            });
        }
        amps[index] = coef;
    }
    StateVector::normalized(n, amps).map_err(|e| match e {
        Error::DegenerateInput(_) => {
            Error::DegenerateInput(format!("line {line}: codeword sums to the zero vector"))
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn demo_code_has_expected_codewords() {
        let code = demo_code();
        assert_eq!(code.n(), 4);
        assert_eq!(code.k_dim(), 2);
        assert_eq!(code.m_blocks(), 2);
        // (|0000> + |1111>)/sqrt(2)
        let w = code.word(0, 0);
        assert!((w.amp(0b0000).re - SQRT_HALF).abs() < 1e-15);
        assert!((w.amp(0b1111).re - SQRT_HALF).abs() < 1e-15);
        // (|0011> - |1100>)/sqrt(2)
        let w = code.word(0, 1);
        assert!((w.amp(0b0011).re - SQRT_HALF).abs() < 1e-15);
        assert!((w.amp(0b1100).re + SQRT_HALF).abs() < 1e-15);
        // (|0101> + |1010>)/sqrt(2)
        let w = code.word(1, 0);
        assert!((w.amp(0b0101).re - SQRT_HALF).abs() < 1e-15);
        assert!((w.amp(0b1010).re - SQRT_HALF).abs() < 1e-15);
        // (|1001> - |0110>)/sqrt(2)
        let w = code.word(1, 1);
        assert!((w.amp(0b1001).re - SQRT_HALF).abs() < 1e-15);
        assert!((w.amp(0b0110).re + SQRT_HALF).abs() < 1e-15);
    }

    #[test]
    fn simple_code_splits_the_basis() {
        let code = simple_code();
        assert_eq!(code.word(0, 0), &StateVector::basis(2, 0).unwrap());
        assert_eq!(code.word(0, 1), &StateVector::basis(2, 1).unwrap());
        assert_eq!(code.word(1, 0), &StateVector::basis(2, 2).unwrap());
        assert_eq!(code.word(1, 1), &StateVector::basis(2, 3).unwrap());
    }

    #[test]
    fn serialize_then_parse_is_exact() {
        for code in [demo_code(), simple_code()] {
            let reparsed = HybridCode::parse_str(&code.serialize()).unwrap();
            assert_eq!(reparsed.n(), code.n());
            for ((_, _, a), (_, _, b)) in reparsed.words().zip(code.words()) {
                for k in 0..a.dim() {
                    assert!((a.amp(k) - b.amp(k)).norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn serialize_round_trips_complex_coefficients() {
        let a = Complex64::new(SQRT_HALF, 0.0);
        let b = Complex64::new(0.0, SQRT_HALF);
        let word0 = StateVector::new(1, vec![a, b]).unwrap();
        let word1 = StateVector::new(1, vec![a, -b]).unwrap();
        let code = HybridCode::new(1, vec![vec![word0], vec![word1]]).unwrap();
        let reparsed = HybridCode::parse_str(&code.serialize()).unwrap();
        for ((_, _, x), (_, _, y)) in reparsed.words().zip(code.words()) {
            for k in 0..2 {
                assert!((x.amp(k) - y.amp(k)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn coefficient_literals_parse() {
        let cases = [
            ("1", Complex64::new(1.0, 0.0)),
            ("+1", Complex64::new(1.0, 0.0)),
            ("-0.5", Complex64::new(-0.5, 0.0)),
            ("1e-3", Complex64::new(1e-3, 0.0)),
            ("i", Complex64::new(0.0, 1.0)),
            ("-i", Complex64::new(0.0, -1.0)),
            ("2i", Complex64::new(0.0, 2.0)),
            ("0.5+0.5i", Complex64::new(0.5, 0.5)),
            ("1-2i", Complex64::new(1.0, -2.0)),
            ("-1.5e2+0.25i", Complex64::new(-150.0, 0.25)),
            ("1e-2-1e-3i", Complex64::new(0.01, -0.001)),
        ];
        for (text, want) in cases {
            let got = parse_coefficient(text).unwrap_or_else(|| panic!("failed on '{text}'"));
            assert!((got - want).norm() < 1e-15, "'{text}' gave {got}");
        }
        assert!(parse_coefficient("abc").is_none());
        assert!(parse_coefficient("1+2j").is_none());
        assert!(parse_coefficient("").is_none());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(){
        let text = "# header\n\nn 1\n# middle\nblock 0  # trailing\ncw 1 0\n";
        let code = HybridCode::parse_str(text).unwrap();
        assert_eq!(code.n(), 1);
        assert_eq!(code.k_dim(), 1);
    }

    #[test]
    fn malformed_files_report_the_right_error_class() {
        // Missing n declaration.
        let err = HybridCode::parse_str("block 0\ncw 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err}");
        // Bad coefficient.
        let err = HybridCode::parse_str("n 1\nblock 0\ncw one 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        // Wrong-length bitstring.
        let err = HybridCode::parse_str("n 2\nblock 0\ncw 1 010\n").unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)), "{err}");
        // Duplicate bitstring inside one codeword.
        let err = HybridCode::parse_str("n 1\nblock 0\ncw 1 0 ; 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        // cw before any block header.
        let err = HybridCode::parse_str("n 1\ncw 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        // Non-consecutive block indices.
        let err = HybridCode::parse_str("n 1\nblock 1\ncw 1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        // Unknown keyword.
        let err = HybridCode::parse_str("n 1\nqubits 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        // Zero codeword.
        let err = HybridCode::parse_str("n 1\nblock 0\ncw 1 0 ; -1 0\n");
        assert!(matches!(err, Err(Error::Parse { .. })), "duplicate wins: {err:?}");
        let err = HybridCode::parse_str("n 2\nblock 0\ncw 1 00 ; -1 01\ncw 1 00 ; -1 01\n")
            .unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn zero_codeword_is_degenerate_input() {
        let err = HybridCode::parse_str("n 2\nblock 0\ncw 0 00\n").unwrap_err();
        assert!(matches!(err, Error::DegenerateInput(_)), "{err}");
    }

    #[test]
    fn non_orthogonal_code_names_the_offending_pair() {
        let text = "n 2\nblock 0\ncw 1 00 ; 1 01\nblock 1\ncw 1 00 ; -1 10\n";
        let err = HybridCode::parse_str(text).unwrap_err();
        match err {
            Error::Validation(msg) => {
                assert!(msg.contains("block 0, index 0"), "{msg}");
                assert!(msg.contains("block 1, index 0"), "{msg}");
            }
            other => panic!("expected validation error, got {other}"),
        }
    }

    #[test]
    fn mismatched_block_sizes_are_rejected() {
        let text = "n 2\nblock 0\ncw 1 00\ncw 1 01\nblock 1\ncw 1 10\n";
        let err = HybridCode::parse_str(text).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn overfull_code_is_rejected() {
        let text = "n 1\nblock 0\ncw 1 0\ncw 1 1\nblock 1\ncw 1 0\ncw 1 1\n";
        let err = HybridCode::parse_str(text).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err}");
    }

    #[test]
    fn projectors_are_hermitian_idempotent_and_partition() {
        let code = demo_code();
        let p = code.projector().unwrap();
        assert!(p.is_hermitian(1e-12));
        assert!((&p * &p).max_abs_diff(&p) < 1e-12);
        assert!((p.trace().re - 4.0).abs() < 1e-12);
        let p0 = code.block_projector(0).unwrap();
        let p1 = code.block_projector(1).unwrap();
        assert!((&p0 + &p1).max_abs_diff(&p) < 1e-12);
        // Orthogonal blocks multiply to zero.
        assert!((&p0 * &p1).max_abs() < 1e-12);
        assert!((p0.trace().re - 2.0).abs() < 1e-12);
    }

    #[test]
    fn block_projector_rejects_out_of_range_index() {
        let err = demo_code().block_projector(2).unwrap_err();
        assert!(matches!(err, Error::InvalidArgument(_)));
    }

    #[test]
    fn random_codes_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (n, k, m) in [(2, 1, 2), (3, 2, 2), (4, 2, 3), (5, 4, 2)] {
            let code = HybridCode::random(n, k, m, &mut rng).unwrap();
            assert_eq!(code.n(), n);
            assert_eq!(code.k_dim(), k);
            assert_eq!(code.m_blocks(), m);
        }
    }

    #[test]
    fn random_code_rejects_overfull_request() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        assert!(HybridCode::random(2, 3, 2, &mut rng).is_err());
    }

    #[test]
    fn parameters_display_uses_code_notation() {
        let mut params = demo_code().parameters();
        assert_eq!(params.to_string(), "((4, 2:2, ?))");
        params.d = Some(2);
        assert_eq!(params.to_string(), "((4, 2:2, 2))");
        assert_eq!(params.logical_qubits(), Some(1));
    }
}
