//! Bitstrings, run encodings and the conversions between them and naturals.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::natural::Natural;

/// An MSB-first string of binary digits. May be empty and may carry leading
/// zeros; see [`Canonical`] for the `B(n)` form.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitstring {
    bits: Vec<bool>,
}

impl Bitstring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn extend_from(&mut self, other: &Bitstring) {
        self.bits.extend_from_slice(&other.bits);
    }

    /// Number of leading zero digits (the whole length for an all-zero string).
    pub fn leading_zeros(&self) -> usize {
        self.bits.iter().take_while(|&&b| !b).count()
    }

    pub fn contains_one(&self) -> bool {
        self.bits.contains(&true)
    }

    pub fn is_canonical(&self) -> bool {
        self.bits.first() == Some(&true)
    }

    /// Strips leading zeros. Fails if nothing but zeros remain.
    pub fn canonicalize(&self) -> Result<Canonical> {
        let lz = self.leading_zeros();
        if lz == self.len() {
            return Err(Error::NonCanonical);
        }
        Ok(Canonical(Bitstring::from_bits(self.bits[lz..].to_vec())))
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(Error::InvalidDigit { found, pos }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Bitstring::from_bits)
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A bitstring known to be nonempty with a leading 1: the binary
/// representation of some n >= 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Canonical(Bitstring);

impl Canonical {
    pub fn new(bs: Bitstring) -> Result<Self> {
        if bs.is_canonical() {
            Ok(Canonical(bs))
        } else {
            Err(Error::NonCanonical)
        }
    }

    pub fn into_inner(self) -> Bitstring {
        self.0
    }
}

impl Deref for Canonical {
    type Target = Bitstring;

    fn deref(&self) -> &Bitstring {
        &self.0
    }
}

impl FromStr for Canonical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Canonical::new(s.parse()?)
    }
}

impl fmt::Display for Canonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Canonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A maximal block of equal digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Run {
    pub bit: bool,
    pub len: usize,
}

impl Run {
    pub fn new(bit: bool, len: usize) -> Self {
        Self { bit, len }
    }
}

/// Alternating runs, each of length at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunEncoding {
    runs: Vec<Run>,
}

impl RunEncoding {
    pub fn new(runs: Vec<Run>) -> Result<Self> {
        if let Some(i) = runs.iter().position(|r| r.len == 0) {
            return Err(Error::MalformedRuns(format!("run {i} has length 0")));
        }
        if let Some(i) = runs.windows(2).position(|w| w[0].bit == w[1].bit) {
            return Err(Error::MalformedRuns(format!(
                "runs {i} and {} repeat the same bit",
                i + 1
            )));
        }
        Ok(Self { runs })
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Total number of digits covered.
    pub fn bit_len(&self) -> usize {
        self.runs.iter().map(|r| r.len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Run> {
        self.runs.iter()
    }
}

/// `B(n)`.
pub fn to_bitstring<T: Natural>(n: &T) -> Result<Canonical> {
    if n.is_zero() {
        return Err(Error::Zero { op: "to_bitstring" });
    }
    let bits = (0..n.bit_len()).rev().map(|i| n.bit(i)).collect();
    Ok(Canonical(Bitstring::from_bits(bits)))
}

/// Base-2 value of `bs`; leading zeros are ignored.
pub fn to_nat<T: Natural>(bs: &Bitstring) -> Result<T> {
    if bs.is_empty() {
        return Err(Error::EmptyBitstring);
    }
    T::from_bits_msb(bs.bits())
}

pub fn runs(bs: &Bitstring) -> Result<RunEncoding> {
    if bs.is_empty() {
        return Err(Error::EmptyBitstring);
    }
    let mut out: Vec<Run> = Vec::new();
    for &b in bs.bits() {
        match out.last_mut() {
            Some(run) if run.bit == b => run.len += 1,
            _ => out.push(Run::new(b, 1)),
        }
    }
    Ok(RunEncoding { runs: out })
}

pub fn from_runs(re: &RunEncoding) -> Bitstring {
    let mut bits = Vec::with_capacity(re.bit_len());
    for run in re.iter() {
        bits.extend(std::iter::repeat_n(run.bit, run.len));
    }
    Bitstring::from_bits(bits)
}

/// 1's complement.
pub fn complement(bs: &Bitstring) -> Bitstring {
    Bitstring::from_bits(bs.bits().iter().map(|&b| !b).collect())
}

/// `b(n)`: number of runs in `B(n)`.
pub fn run_count<T: Natural>(n: &T) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::Zero { op: "run_count" });
    }
    let len = n.bit_len();
    let transitions = (1..len).filter(|&i| n.bit(i) != n.bit(i - 1)).count() as u64;
    Ok(transitions + 1)
}

/// `c(n)`: number of digits in `B(n)`.
pub fn bit_count<T: Natural>(n: &T) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::Zero { op: "bit_count" });
    }
    Ok(n.bit_len())
}

/// `b(n)` and `c(n)` for a machine word, for hot loops.
#[inline]
pub(crate) fn run_and_bit_count_u64(n: u64) -> (u64, u64) {
    debug_assert!(n != 0);
    (
        u64::from((n ^ (n >> 1)).count_ones()),
        u64::from(64 - n.leading_zeros()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Nat;
    use proptest::prelude::*;

    fn bs(s: &str) -> Bitstring {
        s.parse().unwrap()
    }

    fn re(pairs: &[(u8, usize)]) -> RunEncoding {
        RunEncoding::new(pairs.iter().map(|&(b, l)| Run::new(b == 1, l)).collect()).unwrap()
    }

    #[test]
    fn to_bitstring_examples() {
        assert_eq!(to_bitstring(&89u64).unwrap().to_string(), "1011001");
        assert_eq!(to_bitstring(&1u64).unwrap().to_string(), "1");
        assert_eq!(
            to_bitstring(&Nat::from(3299u32)).unwrap().to_string(),
            "110011100011"
        );
        assert_eq!(to_bitstring(&0u64), Err(Error::Zero { op: "to_bitstring" }));
    }

    #[test]
    fn to_nat_examples() {
        assert_eq!(to_nat::<u64>(&bs("110011100011")).unwrap(), 3299);
        assert_eq!(to_nat::<u64>(&bs("0001")).unwrap(), 1);
        assert_eq!(to_nat::<u64>(&bs("0110")).unwrap(), 6);
        assert_eq!(to_nat::<Nat>(&bs("0110")).unwrap(), Nat::from(6u8));
        assert_eq!(to_nat::<u64>(&bs("")), Err(Error::EmptyBitstring));
    }

    #[test]
    fn runs_examples() {
        assert_eq!(
            runs(&bs("1011001")).unwrap(),
            re(&[(1, 1), (0, 1), (1, 2), (0, 2), (1, 1)])
        );
        assert_eq!(runs(&bs("1")).unwrap(), re(&[(1, 1)]));
        assert_eq!(runs(&bs("11000")).unwrap(), re(&[(1, 2), (0, 3)]));
        assert_eq!(runs(&bs("")), Err(Error::EmptyBitstring));
    }

    #[test]
    fn from_runs_examples() {
        assert_eq!(from_runs(&re(&[(1, 1), (0, 1)])).to_string(), "10");
        assert_eq!(from_runs(&re(&[(1, 2), (0, 2), (1, 3)])).to_string(), "1100111");
        assert_eq!(from_runs(&re(&[(1, 1), (0, 2), (1, 1)])).to_string(), "1001");
    }

    #[test]
    fn malformed_runs_rejected() {
        assert!(matches!(
            RunEncoding::new(vec![Run::new(true, 1), Run::new(true, 2)]),
            Err(Error::MalformedRuns(_))
        ));
        assert!(matches!(
            RunEncoding::new(vec![Run::new(true, 0)]),
            Err(Error::MalformedRuns(_))
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&bs("1011001")).to_string(), "0100110");
        assert_eq!(complement(&bs("")).to_string(), "");
        assert_eq!(complement(&bs("000")).to_string(), "111");
    }

    #[test]
    fn counting_examples() {
        assert_eq!(run_count(&89u64).unwrap(), 5);
        assert_eq!(run_count(&1u64).unwrap(), 1);
        assert_eq!(run_count(&10u64).unwrap(), 4);
        assert_eq!(bit_count(&89u64).unwrap(), 7);
        assert_eq!(bit_count(&1u64).unwrap(), 1);
        assert_eq!(bit_count(&Nat::from(3299u32)).unwrap(), 12);
        assert!(run_count(&0u32).is_err());
        assert!(bit_count(&Nat::default()).is_err());
    }

    #[test]
    fn parse_rejects_other_characters() {
        assert_eq!(
            "10a1".parse::<Bitstring>(),
            Err(Error::InvalidDigit { found: 'a', pos: 2 })
        );
        assert_eq!("011".parse::<Canonical>(), Err(Error::NonCanonical));
    }

    #[test]
    fn round_trips_up_to_1e5() {
        for n in 1u64..=100_000 {
            let b = to_bitstring(&n).unwrap();
            assert_eq!(to_nat::<u64>(&b).unwrap(), n);
            let r = runs(&b).unwrap();
            assert_eq!(from_runs(&r), *b);
            assert_eq!(run_count(&n).unwrap(), r.len() as u64);
            assert_eq!(bit_count(&n).unwrap(), r.bit_len() as u64);
            assert_eq!(run_and_bit_count_u64(n), (r.len() as u64, b.len() as u64));
        }
    }

    proptest! {
        #[test]
        fn complement_is_an_involution(bits in prop::collection::vec(any::<bool>(), 0..=64)) {
            let s = Bitstring::from_bits(bits);
            let c = complement(&s);
            prop_assert_eq!(c.len(), s.len());
            prop_assert!(s.bits().iter().zip(c.bits()).all(|(a, b)| a != b));
            prop_assert_eq!(complement(&c), s);
        }

        #[test]
        fn biguint_and_u64_views_agree(n in 1u64..) {
            let big = Nat::from(n);
            prop_assert_eq!(to_bitstring(&big).unwrap(), to_bitstring(&n).unwrap());
            prop_assert_eq!(run_count(&big).unwrap(), run_count(&n).unwrap());
        }
    }
}
