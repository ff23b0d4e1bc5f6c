//! Plain-text input formats for q-expansions, Kohnen coefficients and
//! tables of Siegel Fourier coefficients.
//!
//! Blank lines and lines starting with `#` are ignored, except that a
//! q-expansion (or Siegel table) may start with a `# weight W level N`
//! header.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;

use super::jacobi::{KohnenForm, SiegelCoefficients};
use super::ModFormError;
use crate::exact_algebra::BigRat;
use crate::quadfields::{reduce, QuadForm};

fn malformed(line: usize, msg: impl Into<String>) -> ModFormError {
    ModFormError::Malformed { line, msg: msg.into() }
}

fn parse_rat(s: &str, line: usize) -> Result<BigRat, ModFormError> {
    s.parse::<BigRat>().map_err(|e| malformed(line, format!("{s:?}: {e}")))
}

fn parse_int<T: std::str::FromStr>(s: &str, line: usize) -> Result<T, ModFormError>
where
    T::Err: std::fmt::Display,
{
    s.parse::<T>().map_err(|e| malformed(line, format!("{s:?}: {e}")))
}

/// `(weight, level)` from a `# weight W level N` line.
fn header(text: &str, line: usize) -> Result<Option<(i64, u64)>, ModFormError> {
    let words: Vec<&str> = text.trim_start_matches('#').split_whitespace().collect();
    match words.as_slice() {
        ["weight", w, "level", n] => Ok(Some((parse_int(w, line)?, parse_int(n, line)?))),
        ["weight", ..] => Err(malformed(line, "expected \"# weight W level N\"")),
        _ => Ok(None),
    }
}

/// Data lines as `(line number, fields)`, plus the header if present.
fn data_lines(text: &str) -> (Option<(usize, &str)>, Vec<(usize, Vec<&str>)>) {
    let mut head = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if rows.is_empty() && head.is_none() {
                head = Some((i + 1, line));
            }
            continue;
        }
        rows.push((i + 1, line.split_whitespace().collect()));
    }
    (head, rows)
}

/// Parse `n a_n` lines with increasing `n`; gaps are zero.
pub fn parse_qexp(text: &str) -> Result<QExpansionFile, ModFormError> {
    let (head, rows) = data_lines(text);
    let (weight, level) = match head {
        Some((line, h)) => header(h, line)?.unwrap_or((0, 1)),
        None => (0, 1),
    };
    let mut coeffs: Vec<BigRat> = Vec::new();
    for (line, fields) in rows {
        let [n, a] = fields.as_slice() else {
            return Err(malformed(line, "expected \"n a_n\""));
        };
        let n: usize = parse_int(n, line)?;
        if n < coeffs.len() {
            return Err(malformed(line, format!("index {n} is not increasing")));
        }
        coeffs.resize(n, BigRat::zero());
        coeffs.push(parse_rat(a, line)?);
    }
    Ok(QExpansionFile { has_header: head.is_some(), expansion: super::QExpansion::new(weight, level, coeffs) })
}

/// A parsed q-expansion and whether the file declared its weight.
#[derive(Clone, Debug, PartialEq)]
pub struct QExpansionFile {
    pub has_header: bool,
    pub expansion: super::QExpansion,
}

pub fn ingest_qexp(path: &Path) -> Result<super::QExpansion, ModFormError> {
    Ok(parse_qexp(&std::fs::read_to_string(path)?)?.expansion)
}

/// Parse `D c_D` lines into a plus-space form of Jacobi weight `weight`.
pub fn parse_kohnen(text: &str, weight: i64) -> Result<KohnenForm, ModFormError> {
    let (_, rows) = data_lines(text);
    let mut coeffs = BTreeMap::new();
    let mut d_max = 0;
    for (line, fields) in rows {
        let [d, c] = fields.as_slice() else {
            return Err(malformed(line, "expected \"D c_D\""));
        };
        let d: u64 = parse_int(d, line)?;
        if !matches!(d % 4, 0 | 3) {
            return Err(malformed(line, format!("D = {d} is not 0 or 3 mod 4")));
        }
        let c = parse_rat(c, line)?;
        if coeffs.insert(d, c).is_some() {
            return Err(malformed(line, format!("duplicate D = {d}")));
        }
        d_max = d_max.max(d);
    }
    KohnenForm::new(weight, d_max, coeffs)
}

pub fn ingest_kohnen(path: &Path, weight: i64) -> Result<KohnenForm, ModFormError> {
    parse_kohnen(&std::fs::read_to_string(path)?, weight)
}

/// Siegel Fourier coefficients keyed by `GL₂(Z)`-reduced forms.
///
/// Fourier coefficients satisfy `a(Uᵗ T U) = det(U)^k a(T)` for
/// `U ∈ GL₂(Z)`, so a form and its improper transform `(a, −b, c)` share an
/// entry up to the sign `(−1)^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelCoeffTable {
    pub weight: i64,
    pub level: u64,
    entries: BTreeMap<QuadForm, BigRat>,
}

impl SiegelCoeffTable {
    pub fn new(weight: i64, level: u64) -> Self {
        Self { weight, level, entries: BTreeMap::new() }
    }

    /// The reduced representative with `b ≥ 0`, and the sign relating
    /// `a(T)` to the stored value.
    fn key(&self, t: QuadForm) -> Result<(QuadForm, bool), ModFormError> {
        let r = reduce(t).map_err(|_| ModFormError::NotPositiveDefinite(t))?;
        let flip = r.b < 0 && self.weight % 2 != 0;
        Ok((QuadForm::new(r.a, r.b.abs(), r.c), flip))
    }

    /// Insert `a(T)` under the reduced representative of `T`; an existing
    /// different value for an equivalent `T` is an error.
    pub fn insert(&mut self, t: QuadForm, value: BigRat) -> Result<(), ModFormError> {
        let (key, flip) = self.key(t)?;
        let value = if flip { -value } else { value };
        match self.entries.get(&key) {
            Some(old) if *old != value => Err(ModFormError::Conflict { form: key, first: old.to_string(), second: value.to_string() }),
            _ => {
                self.entries.insert(key, value);
                Ok(())
            }
        }
    }

    /// `a(T)`, looked up through reduction.
    pub fn lookup(&self, t: QuadForm) -> Result<BigRat, ModFormError> {
        let (key, flip) = self.key(t)?;
        let v = self.entries.get(&key).cloned().ok_or(ModFormError::MissingCoefficient(key))?;
        Ok(if flip { -v } else { v })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QuadForm, &BigRat)> {
        self.entries.iter()
    }
}

impl SiegelCoefficients for SiegelCoeffTable {
    fn weight(&self) -> i64 {
        self.weight
    }

    fn coefficient(&self, t: QuadForm) -> Result<BigRat, ModFormError> {
        self.lookup(t)
    }
}

/// Parse `a b c value` lines (the matrix `[[a, b/2], [b/2, c]]`).
pub fn parse_siegel_table(text: &str) -> Result<SiegelCoeffTable, ModFormError> {
    let (head, rows) = data_lines(text);
    let (weight, level) = match head {
        Some((line, h)) => header(h, line)?.unwrap_or((0, 1)),
        None => (0, 1),
    };
    let mut table = SiegelCoeffTable::new(weight, level);
    for (line, fields) in rows {
        let [a, b, c, v] = fields.as_slice() else {
            return Err(malformed(line, "expected \"a b c value\""));
        };
        let t = QuadForm::new(parse_int(a, line)?, parse_int(b, line)?, parse_int(c, line)?);
        if !t.is_positive_definite() {
            return Err(malformed(line, format!("{t} is not positive definite")));
        }
        let value = parse_rat(v, line)?;
        table.insert(t, value).map_err(|e| malformed(line, e.to_string()))?;
    }
    Ok(table)
}

pub fn ingest_siegel_table(path: &Path) -> Result<SiegelCoeffTable, ModFormError> {
    parse_siegel_table(&std::fs::read_to_string(path)?)
}
