//! The characterized set T and the structural predicates on `B(n)`.
//!
//! T holds the strings `1010...` (alternating, starting with 1) and those
//! strings with exactly one 0 doubled to `00`.

use crate::bitcore::{runs, to_bitstring, Bitstring, Canonical, Run};
use crate::error::{Error, Result};
use crate::natural::Natural;

/// Members of T in increasing numeric order, built length by length.
///
/// For length `L` the members are the alternating string of length `L - 1`
/// with one of its zeros doubled, then the alternating string of length `L`.
#[derive(Clone, Debug, Default)]
pub struct TMembers {
    len: usize,
    pending: std::vec::IntoIter<Canonical>,
}

impl TMembers {
    pub fn new() -> Self {
        Self::default()
    }

    fn alternating(len: usize) -> Vec<bool> {
        (0..len).map(|i| i % 2 == 0).collect()
    }

    fn members_of_len(len: usize) -> Vec<Canonical> {
        let base = Self::alternating(len - 1);
        let mut out: Vec<Bitstring> = base
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(zero, _)| {
                let mut bits = base.clone();
                bits.insert(zero, false);
                Bitstring::from_bits(bits)
            })
            .collect();
        out.push(Bitstring::from_bits(Self::alternating(len)));
        // equal lengths: lexicographic order is numeric order
        out.sort();
        out.into_iter()
            .map(|b| Canonical::new(b).expect("T members start with 1"))
            .collect()
    }
}

impl Iterator for TMembers {
    type Item = Canonical;

    fn next(&mut self) -> Option<Canonical> {
        loop {
            if let Some(next) = self.pending.next() {
                return Some(next);
            }
            self.len += 1;
            self.pending = Self::members_of_len(self.len).into_iter();
        }
    }
}

/// The first `count` members of T.
pub fn enumerate_t<T: Natural>(count: usize) -> Result<Vec<T>> {
    TMembers::new()
        .take(count)
        .map(|b| T::from_bits_msb(b.bits()))
        .collect()
}

/// Members of T not exceeding `limit`.
pub fn t_members_up_to(limit: u64) -> Vec<u64> {
    TMembers::new()
        .map(|b| u64::from_bits_msb(b.bits()))
        .take_while(|v| v.as_ref().is_ok_and(|v| *v <= limit))
        .map(|v| v.expect("checked above"))
        .collect()
}

fn run_list<T: Natural>(n: &T, op: &'static str) -> Result<Vec<Run>> {
    if n.is_zero() {
        return Err(Error::Zero { op });
    }
    let b = to_bitstring(n)?;
    Ok(runs(&b)?.runs().to_vec())
}

fn zero_runs(runs: &[Run]) -> impl Iterator<Item = usize> + '_ {
    runs.iter().filter(|r| !r.bit).map(|r| r.len)
}

/// Membership in T, decided from the run lengths of `B(n)`.
pub fn in_t<T: Natural>(n: &T) -> Result<bool> {
    let runs = run_list(n, "in_T")?;
    let ones_single = runs.iter().filter(|r| r.bit).all(|r| r.len == 1);
    let zeros_short = zero_runs(&runs).all(|l| l <= 2);
    let doubled = zero_runs(&runs).filter(|&l| l == 2).count();
    Ok(runs[0].bit && ones_single && zeros_short && doubled <= 1)
}

/// No two adjacent 1's in `B(n)`.
pub fn is_fibbinary<T: Natural>(n: &T) -> Result<bool> {
    Ok(run_list(n, "is_fibbinary")?.iter().all(|r| !r.bit || r.len == 1))
}

/// Longest 0-run of `B(n)`, or 0 if it has none.
pub fn max_zero_run<T: Natural>(n: &T) -> Result<u64> {
    Ok(zero_runs(&run_list(n, "max_zero_run")?).max().unwrap_or(0) as u64)
}

/// Number of maximal 0-runs of length exactly 2.
pub fn double_zero_blocks<T: Natural>(n: &T) -> Result<u64> {
    Ok(zero_runs(&run_list(n, "double_zero_blocks")?)
        .filter(|&l| l == 2)
        .count() as u64)
}

/// Whether `B(v)` alternates `11` and `00` blocks, starting with `11`, with
/// at most one `00` widened to `000`. This is the shape of every record value
/// of `f(., "0", "1")`.
pub fn record_value_shape<T: Natural>(v: &T) -> Result<bool> {
    let runs = run_list(v, "record_value_shape")?;
    let ones_double = runs.iter().filter(|r| r.bit).all(|r| r.len == 2);
    let zeros_ok = zero_runs(&runs).all(|l| l == 2 || l == 3);
    let tripled = zero_runs(&runs).filter(|&l| l == 3).count();
    Ok(runs[0].bit && ones_double && zeros_ok && tripled <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Nat;

    // T by regular-expression-style string tests on every integer.
    fn in_t_oracle(n: u64) -> bool {
        let s = format!("{n:b}");
        !s.contains("11") && !s.contains("000") && s.matches("00").count() <= 1
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_t::<u64>(9).unwrap(), [1, 2, 4, 5, 9, 10, 18, 20, 21]);
        assert_eq!(enumerate_t::<u64>(1).unwrap(), [1]);
        let twelve = enumerate_t::<u64>(12).unwrap();
        assert_eq!(&twelve[9..], [37, 41, 42]);
        assert!(enumerate_t::<u64>(0).unwrap().is_empty());
    }

    #[test]
    fn enumeration_matches_filter() {
        let filtered: Vec<u64> = (1..=1u64 << 16).filter(|&n| in_t_oracle(n)).collect();
        assert_eq!(t_members_up_to(1 << 16), filtered);
        assert!(filtered.iter().all(|n| in_t(n).unwrap()));
        for n in 1..=1u64 << 16 {
            assert_eq!(in_t(&n).unwrap(), in_t_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_strictly_increasing_and_wide() {
        let big = enumerate_t::<Nat>(2000).unwrap();
        assert!(big.windows(2).all(|w| w[0] < w[1]));
        assert!(big.last().unwrap().bits() > 64);
        assert!(matches!(enumerate_t::<u32>(2000), Err(Error::Overflow { .. })));
    }

    #[test]
    fn in_t_examples() {
        assert!(in_t(&21u64).unwrap());
        assert!(in_t(&20u64).unwrap());
        assert!(!in_t(&12u64).unwrap());
        assert!(!in_t(&8u64).unwrap());
        assert!(!in_t(&36u64).unwrap()); // 100100: two doubled zeros
        assert_eq!(in_t(&0u64), Err(Error::Zero { op: "in_T" }));
    }

    #[test]
    fn predicate_examples() {
        assert!(is_fibbinary(&5u64).unwrap());
        assert!(!is_fibbinary(&89u64).unwrap());
        assert!(is_fibbinary(&20u64).unwrap());

        assert_eq!(max_zero_run(&8u64).unwrap(), 3);
        assert_eq!(max_zero_run(&7u64).unwrap(), 0);
        assert_eq!(max_zero_run(&89u64).unwrap(), 2);

        assert_eq!(double_zero_blocks(&89u64).unwrap(), 1);
        assert_eq!(double_zero_blocks(&21u64).unwrap(), 0);
        assert_eq!(double_zero_blocks(&292u64).unwrap(), 3);

        assert!(record_value_shape(&3u64).unwrap());
        assert!(record_value_shape(&408u64).unwrap());
        assert!(!record_value_shape(&7u64).unwrap());
        assert!(!record_value_shape(&(0b11000110001u64)).unwrap()); // two 000 blocks
        assert!(!record_value_shape(&(0b110u64)).unwrap()); // lone trailing 0

        for op in [is_fibbinary::<u64>, in_t::<u64>, record_value_shape::<u64>] {
            assert!(op(&0).is_err());
        }
        assert!(max_zero_run(&0u64).is_err());
        assert!(double_zero_blocks(&0u64).is_err());
    }

    #[test]
    fn predicates_agree_with_string_checks() {
        for n in 1u64..=20_000 {
            let s = format!("{n:b}");
            assert_eq!(is_fibbinary(&n).unwrap(), !s.contains("11"));
            let longest = s.split('1').map(str::len).max().unwrap() as u64;
            assert_eq!(max_zero_run(&n).unwrap(), longest);
            let doubles = s.split('1').filter(|z| z.len() == 2).count() as u64;
            assert_eq!(double_zero_blocks(&n).unwrap(), doubles);
        }
    }
}
