//! The machine-readable `RESULT` line every command prints last.
//!
//! Format: `RESULT ok=<true|false> key=value ...` on a single line.  Keys
//! are snake_case identifiers, values contain no whitespace, and floats are
//! rendered with [`format_float`] at twelve significant digits so the line
//! round-trips through [`ResultLine::parse`] without losing precision.

use std::fmt::Display;

use hyqec::{Error, Result};

/// Renders a float for a `RESULT` field: scientific notation with eleven
/// fractional digits, i.e. twelve significant digits.
pub fn format_float(value: f64) -> String {
    format!("{value:.11e}")
}

/// Builder and parser for one `RESULT` line.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultLine {
    ok: bool,
    fields: Vec<(String, String)>,
}

impl ResultLine {
    pub fn new(ok: bool) -> Self {
        Self {
            ok,
            fields: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.ok
    }

    /// Appends a field.  Keys and values must be whitespace-free; the
    /// builder is only fed literals and numbers, so this is a debug check.
    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        let value = value.to_string();
        debug_assert!(!key.contains(|c: char| c.is_whitespace() || c == '='));
        debug_assert!(!value.contains(char::is_whitespace));
        self.fields.push((key.to_string(), value));
        self
    }

    /// Appends a float field in the canonical format.
    pub fn with_float(self, key: &str, value: f64) -> Self {
        self.with(key, format_float(value))
    }

    /// The value of a field, if present.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// A float field parsed back from its canonical format.
    pub fn get_float(&self, key: &str) -> Option<f64> {
        self.get(key)?.parse().ok()
    }

    pub fn render(&self) -> String {
        let mut line = format!("RESULT ok={}", self.ok);
        for (k, v) in &self.fields {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }

    /// Parses a rendered line back.  Accepts exactly the output of
    /// [`ResultLine::render`].
    pub fn parse(line: &str) -> Result<Self> {
        let mut tokens = line.trim().split_whitespace();
        if tokens.next() != Some("RESULT") {
            return Err(Error::Parse {
                line: 0,
                msg: "expected a line starting with RESULT".into(),
            });
        }
        let mut ok = None;
        let mut fields = Vec::new();
        for token in tokens {
            let (key, value) = token.split_once('=').ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("malformed RESULT field '{token}'"),
            })?;
            if key == "ok" {
                ok = Some(value.parse().map_err(|_| Error::Parse {
                    line: 0,
                    msg: format!("bad ok value '{value}'"),
                })?);
            } else {
                fields.push((key.to_string(), value.to_string()));
            }
        }
        Ok(Self {
            ok: ok.ok_or_else(|| Error::Parse {
                line: 0,
                msg: "RESULT line lacks the ok field".into(),
            })?,
            fields,
        })
    }

    /// Extracts and parses the last line of a command's output, which by
    /// contract is the `RESULT` line.
    pub fn from_output(output: &str) -> Result<Self> {
        let last = output.lines().rev().find(|l| !l.trim().is_empty());
        Self::parse(last.unwrap_or_default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_and_parse_round_trip() {
        let line = ResultLine::new(true)
            .with("n", 4)
            .with("label", "demo")
            .with_float("fidelity", 0.999_999_999_987)
            .with_float("tiny", 1.25e-13);
        let rendered = line.render();
        assert!(rendered.starts_with("RESULT ok=true n=4 label=demo"));
        let parsed = ResultLine::parse(&rendered).unwrap();
        assert_eq!(parsed, line);
        assert_eq!(parsed.get("n"), Some("4"));
        // Twelve significant digits survive the trip exactly.
        assert_eq!(parsed.get_float("fidelity"), Some(0.999_999_999_987));
        assert_eq!(parsed.get_float("tiny"), Some(1.25e-13));
    }

    #[test]
    fn float_format_has_twelve_significant_digits() {
        assert_eq!(format_float(1.0), "1.00000000000e0");
        assert_eq!(format_float(-0.5), "-5.00000000000e-1");
    }

    #[test]
    fn parse_rejects_malformed_lines() {
        assert!(ResultLine::parse("nope ok=true").is_err());
        assert!(ResultLine::parse("RESULT").is_err());
        assert!(ResultLine::parse("RESULT ok=stuff").is_err());
        assert!(ResultLine::parse("RESULT ok=true broken").is_err());
    }

    #[test]
    fn from_output_takes_the_last_nonempty_line() {
        let output = "INFO something\nRESULT ok=false lhs=52 rhs=16\n\n";
        let line = ResultLine::from_output(output).unwrap();
        assert!(!line.ok());
        assert_eq!(line.get("lhs"), Some("52"));
    }
}
