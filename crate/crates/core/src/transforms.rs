//! The append transform `f`, the prepend transform `g`, the run-shrinking
//! left inverse of `f(., "0", "1")`, and the closed-form length predictors.

use std::fmt;
use std::str::FromStr;

use crate::bitcore::{bit_count, run_count, runs, to_bitstring, to_nat, Bitstring, Canonical, RunEncoding};
use crate::error::{Error, Result};
use crate::natural::Natural;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Pad goes after each run (`f`).
    Append,
    /// Pad goes before each run (`g`).
    Prepend,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "append" => Ok(Mode::Append),
            "prepend" => Ok(Mode::Prepend),
            other => Err(format!("unknown mode {other:?} (expected append or prepend)")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Append => "append",
            Mode::Prepend => "prepend",
        })
    }
}

/// Pad `d0` for 0-runs, pad `d1` for 1-runs, and where they go.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransformSpec {
    pub d0: Bitstring,
    pub d1: Bitstring,
    pub mode: Mode,
}

impl TransformSpec {
    pub fn new(d0: Bitstring, d1: Bitstring, mode: Mode) -> Self {
        Self { d0, d1, mode }
    }

    /// Parses both pads from ASCII digits.
    pub fn parse(d0: &str, d1: &str, mode: Mode) -> Result<Self> {
        Ok(Self::new(d0.parse()?, d1.parse()?, mode))
    }

    pub fn append(d0: &str, d1: &str) -> Result<Self> {
        Self::parse(d0, d1, Mode::Append)
    }

    pub fn prepend(d0: &str, d1: &str) -> Result<Self> {
        Self::parse(d0, d1, Mode::Prepend)
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        Self { mode, ..self.clone() }
    }

    fn pad(&self, bit: bool) -> &Bitstring {
        if bit {
            &self.d1
        } else {
            &self.d0
        }
    }

    /// The common pad length `k`.
    pub fn pad_len(&self) -> Result<usize> {
        if self.d0.len() != self.d1.len() {
            return Err(Error::UnequalPads {
                d0: self.d0.len(),
                d1: self.d1.len(),
            });
        }
        Ok(self.d0.len())
    }

    /// True when the pads satisfy the record theorem's hypothesis:
    /// nonempty and of equal length.
    pub fn meets_theorem_hypothesis(&self) -> bool {
        self.check_theorem_hypothesis().is_ok()
    }

    pub fn check_theorem_hypothesis(&self) -> Result<usize> {
        if self.d0.is_empty() || self.d1.is_empty() {
            return Err(Error::EmptyPad);
        }
        self.pad_len()
    }

    /// Bit length of the transformed value of a number with `runs` runs and
    /// `bits` digits, when the pads have equal length.
    pub(crate) fn predicted_len(&self, runs: u64, bits: u64) -> Option<u64> {
        let k = self.pad_len().ok()? as u64;
        let base = runs * k + bits;
        Some(match self.mode {
            Mode::Append => base,
            Mode::Prepend => base - self.d1.leading_zeros() as u64,
        })
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} d0={:?} d1={:?}", self.mode, self.d0, self.d1)
    }
}

/// Expands each run with its pad. The output is raw: in prepend mode it may
/// start with zeros.
pub fn expand_runs(re: &RunEncoding, spec: &TransformSpec) -> Bitstring {
    let extra = re.len() * spec.d0.len().max(spec.d1.len());
    let mut out = Vec::with_capacity(re.bit_len() + extra);
    for run in re.iter() {
        let pad = spec.pad(run.bit).bits();
        if spec.mode == Mode::Prepend {
            out.extend_from_slice(pad);
        }
        out.extend(std::iter::repeat_n(run.bit, run.len));
        if spec.mode == Mode::Append {
            out.extend_from_slice(pad);
        }
    }
    Bitstring::from_bits(out)
}

pub fn expand_str(bs: &Bitstring, spec: &TransformSpec) -> Result<Bitstring> {
    if !bs.is_canonical() {
        return Err(Error::NonCanonical);
    }
    Ok(expand_runs(&runs(bs)?, spec))
}

/// Transform `n` in whichever mode `spec` names.
pub fn apply<T: Natural>(n: &T, spec: &TransformSpec) -> Result<T> {
    let b = to_bitstring(n)?;
    to_nat(&expand_str(&b, spec)?)
}

/// `f(n, d0, d1)`.
pub fn f<T: Natural>(n: &T, spec: &TransformSpec) -> Result<T> {
    if spec.mode != Mode::Append {
        return Err(Error::WrongMode { expected: "append" });
    }
    apply(n, spec)
}

/// `g(n, d0, d1)`. Leading zeros from `d1` vanish in the integer value.
pub fn g<T: Natural>(n: &T, spec: &TransformSpec) -> Result<T> {
    if spec.mode != Mode::Prepend {
        return Err(Error::WrongMode { expected: "prepend" });
    }
    apply(n, spec)
}

/// Result of deleting one digit from every run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shrunk<T> {
    /// Every run had length one, so nothing is left.
    Empty,
    /// Value of the remaining digits, which may be zero (e.g. `100 -> 0`).
    Value(T),
}

impl<T: fmt::Display> fmt::Display for Shrunk<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shrunk::Empty => f.write_str("EMPTY"),
            Shrunk::Value(v) => v.fmt(f),
        }
    }
}

/// The digits left after deleting one digit from each run of `B(n)`.
pub fn shrink_str(n: &Canonical) -> Bitstring {
    let mut out = Bitstring::new();
    // `n` is nonempty, so `runs` cannot fail
    for run in runs(n).expect("canonical bitstring is nonempty").iter() {
        for _ in 1..run.len {
            out.push(run.bit);
        }
    }
    out
}

/// Left inverse of `f(., "0", "1")`.
pub fn shrink_runs<T: Natural>(n: &T) -> Result<Shrunk<T>> {
    let shrunk = shrink_str(&to_bitstring(n)?);
    if shrunk.is_empty() {
        return Ok(Shrunk::Empty);
    }
    Ok(Shrunk::Value(to_nat(&shrunk)?))
}

/// `b(n) k + c(n)`.
pub fn predict_len_append<T: Natural>(n: &T, spec: &TransformSpec) -> Result<u64> {
    let k = spec.pad_len()? as u64;
    Ok(run_count(n)? * k + bit_count(n)?)
}

/// `b(n) k + c(n) - l`, with `l` the number of leading zeros of `d1`.
pub fn predict_len_prepend<T: Natural>(n: &T, spec: &TransformSpec) -> Result<u64> {
    let l = spec.d1.leading_zeros() as u64;
    Ok(predict_len_append(n, spec)? - l)
}

/// Checks `B(g(n, d1, d0)) = d0 B(floor(f(n, d0, d1) / 2^k))` as strings, and
/// when `d0` has no 1's, also `g(n, d1, d0) = floor(f(n, d0, d1) / 2^k)` as
/// integers.
///
/// The left side is the raw prepend expansion with `d0` before 1-runs and `d1`
/// before 0-runs.
pub fn eq3_identity_check<T: Natural>(n: &T, d0: &Bitstring, d1: &Bitstring) -> Result<bool> {
    let k = TransformSpec::new(d0.clone(), d1.clone(), Mode::Append).check_theorem_hypothesis()?;
    let b = to_bitstring(n)?;

    let swapped = TransformSpec::new(d1.clone(), d0.clone(), Mode::Prepend);
    let lhs = expand_str(&b, &swapped)?;

    let appended = TransformSpec::new(d0.clone(), d1.clone(), Mode::Append);
    let f_val: T = to_nat(&expand_str(&b, &appended)?)?;
    let shifted = f_val.shr_bits(k as u64);
    let mut rhs = d0.clone();
    rhs.extend_from(&to_bitstring(&shifted)?.into_inner());

    let mut holds = lhs == rhs;
    if !d0.contains_one() {
        let g_val: T = to_nat(&lhs)?;
        holds &= g_val == shifted;
    }
    Ok(holds)
}
