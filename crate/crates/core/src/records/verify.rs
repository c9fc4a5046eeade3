//! Exhaustive checks of the record-index characterization, the quadratic
//! bound on `f(n, "0", "1")`, and the transform identities.

use std::fmt;

use rayon::prelude::*;

use super::scan::{scan_records, RecordEntry, ScanConfig};
use super::structure::{double_zero_blocks, in_t, is_fibbinary, max_zero_run, t_members_up_to};
use crate::bitcore::{bit_count, run_count, Bitstring};
use crate::error::{Error, Result};
use crate::natural::Natural;
use crate::transforms::{
    eq3_identity_check, f, g, predict_len_append, predict_len_prepend, shrink_runs, Shrunk, TransformSpec,
};

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug)]
pub struct TheoremReport<T> {
    pub spec: TransformSpec,
    pub limit: u64,
    pub records: Vec<RecordEntry<T>>,
    /// Members of T up to `limit`, generated structurally.
    pub t_prefix: Vec<u64>,
    /// `(index, in_T(index))` for every scanned record.
    pub in_t_agreement: Vec<(u64, bool)>,
    /// Record indices that fail a proof-step predicate: Fibbinary, longest
    /// 0-run at most 2, at most one `00` block.
    pub step_violations: Vec<u64>,
    pub holds: bool,
}

impl<T> TheoremReport<T> {
    pub fn record_indices(&self) -> Vec<u64> {
        self.records.iter().map(|e| e.index).collect()
    }
}

impl<T> fmt::Display for TheoremReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indices = self.record_indices();
        let agree = self.in_t_agreement.iter().filter(|(_, ok)| *ok).count();
        writeln!(f, "theorem: {} limit={}", self.spec, self.limit)?;
        writeln!(f, "record indices: {}", indices.len())?;
        writeln!(f, "T members <= limit: {}", self.t_prefix.len())?;
        writeln!(
            f,
            "equal: {}",
            if indices == self.t_prefix { "yes" } else { "no" }
        )?;
        if indices != self.t_prefix {
            let first = indices.iter().zip(&self.t_prefix).position(|(a, b)| a != b);
            let at = first.unwrap_or(indices.len().min(self.t_prefix.len()));
            writeln!(f, "first mismatch at position {at}")?;
        }
        writeln!(f, "in_T agreement: {agree}/{}", self.in_t_agreement.len())?;
        writeln!(
            f,
            "proof-step predicate violations: {}",
            self.step_violations.len()
        )?;
        write!(f, "RESULT: {}", verdict(self.holds))
    }
}

/// Scans for records and compares the indices with the members of T.
///
/// The pads must be nonempty and of equal length.
pub fn check_theorem<T: Natural>(cfg: &ScanConfig) -> Result<TheoremReport<T>> {
    cfg.spec.check_theorem_hypothesis()?;
    let records = scan_records::<T>(cfg)?;
    let t_prefix = t_members_up_to(cfg.limit);
    let in_t_agreement = records
        .iter()
        .map(|e| Ok((e.index, in_t(&e.index)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut step_violations = Vec::new();
    for e in &records {
        let ok =
            is_fibbinary(&e.index)? && max_zero_run(&e.index)? <= 2 && double_zero_blocks(&e.index)? <= 1;
        if !ok {
            step_violations.push(e.index);
        }
    }
    let indices: Vec<u64> = records.iter().map(|e| e.index).collect();
    let holds = indices == t_prefix && in_t_agreement.iter().all(|(_, ok)| *ok) && step_violations.is_empty();
    Ok(TheoremReport {
        spec: cfg.spec.clone(),
        limit: cfg.limit,
        records,
        t_prefix,
        in_t_agreement,
        step_violations,
        holds,
    })
}

/// `(2/3)(4^k - 1)` for `k >= 1` up to `max_n`: the binary strings `1010...10`.
pub fn bound_equality_points(max_n: u64) -> Vec<u64> {
    (1u32..)
        .map(|k| 4u128.checked_pow(k).map(|p| 2 * (p - 1) / 3))
        .take_while(|v| v.is_some_and(|v| v <= u128::from(max_n)))
        .map(|v| v.expect("checked above") as u64)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub max_n: u64,
    /// `n` with `5 f(n) > 9n^2 + 12n`.
    pub violations: Vec<u64>,
    /// `n` with `5 f(n) = 9n^2 + 12n`.
    pub equality: Vec<u64>,
    pub expected_equality: Vec<u64>,
    pub holds: bool,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bound: 5*f(n,\"0\",\"1\") <= 9n^2+12n for 1 <= n <= {}",
            self.max_n
        )?;
        writeln!(f, "violations: {}", self.violations.len())?;
        if !self.violations.is_empty() {
            let shown = &self.violations[..self.violations.len().min(20)];
            writeln!(f, "first violations: {}", join(shown))?;
        }
        writeln!(f, "equality at: {}", join(&self.equality))?;
        writeln!(f, "expected equality at: {}", join(&self.expected_equality))?;
        write!(f, "RESULT: {}", verdict(self.holds))
    }
}

enum BoundCase {
    Below,
    Equal,
    Above,
}

fn bound_case<T: Natural>(n: u64, spec: &TransformSpec) -> Result<BoundCase> {
    let overflow = || Error::Overflow {
        bits: 0,
        width: T::WIDTH.unwrap_or(u64::MAX),
    };
    let nn = T::from_u64_checked(n)?;
    let c = |v: u64| T::from_u64_checked(v);
    let value: T = f(&nn, spec)?;
    let lhs = value.checked_mul(&c(5)?).ok_or_else(overflow)?;
    let square = nn.checked_mul(&nn).ok_or_else(overflow)?;
    let linear = nn.checked_mul(&c(12)?).ok_or_else(overflow)?;
    let rhs = square
        .checked_mul(&c(9)?)
        .and_then(|s| s.checked_add(&linear))
        .ok_or_else(overflow)?;
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => BoundCase::Below,
        std::cmp::Ordering::Equal => BoundCase::Equal,
        std::cmp::Ordering::Greater => BoundCase::Above,
    })
}

/// Compares `5 f(n, "0", "1")` with `9n^2 + 12n` exactly for every `n <= max_n`.
pub fn check_bound<T: Natural>(max_n: u64) -> Result<BoundReport> {
    let spec = TransformSpec::append("0", "1")?;
    const CHUNK: u64 = 8192;
    let starts: Vec<u64> = (1..=max_n).step_by(CHUNK as usize).collect();
    let parts = starts
        .par_iter()
        .map(|&lo| {
            let mut violations = Vec::new();
            let mut equality = Vec::new();
            for n in lo..=(lo + CHUNK - 1).min(max_n) {
                match bound_case::<T>(n, &spec)? {
                    BoundCase::Below => {}
                    BoundCase::Equal => equality.push(n),
                    BoundCase::Above => violations.push(n),
                }
            }
            Ok((violations, equality))
        })
        .collect::<Result<Vec<_>>>()?;
    let (violations, equality): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
    let violations: Vec<u64> = violations.concat();
    let equality: Vec<u64> = equality.concat();
    let expected_equality = bound_equality_points(max_n);
    let holds = violations.is_empty() && equality == expected_equality;
    Ok(BoundReport {
        max_n,
        violations,
        equality,
        expected_equality,
        holds,
    })
}

/// Pass counts for one identity over the checked range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityTally {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    /// The first few failing cases.
    pub samples: Vec<String>,
}

impl IdentityTally {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            failed: 0,
            samples: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.samples.len() < 10 {
                self.samples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub max_n: u64,
    pub tallies: Vec<IdentityTally>,
    pub holds: bool,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "identities for 1 <= n <= {}", self.max_n)?;
        for t in &self.tallies {
            writeln!(
                f,
                "{}: {}/{} {}",
                t.name,
                t.checked - t.failed,
                t.checked,
                verdict(t.passed())
            )?;
            for sample in &t.samples {
                writeln!(f, "  failed: {sample}")?;
            }
        }
        write!(f, "RESULT: {}", verdict(self.holds))
    }
}

/// All pad strings of length `k`.
pub fn pads_of_len(k: usize) -> Vec<Bitstring> {
    (0..1u32 << k)
        .map(|v| Bitstring::from_bits((0..k).rev().map(|i| v >> i & 1 == 1).collect()))
        .collect()
}

/// Checks the length formulas for `f` and `g`, the prepend/append string
/// identity, the `("0","1")`/`("1","0")` relations between `f` and `g`, run
/// preservation, and the left inverse, for every `n <= max_n` and every pad
/// pair of length 1 and 2.
pub fn check_identities<T: Natural>(max_n: u64) -> Result<IdentityReport> {
    let f01 = TransformSpec::append("0", "1")?;
    let g01 = TransformSpec::prepend("0", "1")?;
    let g10 = TransformSpec::prepend("1", "0")?;
    let pad_pairs: Vec<(Bitstring, Bitstring)> = [1, 2]
        .iter()
        .flat_map(|&k| {
            let pads = pads_of_len(k);
            pads.iter()
                .flat_map(|a| pads.iter().map(move |b| (a.clone(), b.clone())))
                .collect::<Vec<_>>()
        })
        .collect();

    let mut append_len = IdentityTally::new("append length b(n)k+c(n)");
    let mut prepend_len = IdentityTally::new("prepend length b(n)k+c(n)-l");
    let mut eq3 = IdentityTally::new("prepend/append string identity");
    let mut g01_eq_f01 = IdentityTally::new("g(n,0,1) = f(n,0,1)");
    let mut g10_half = IdentityTally::new("g(n,1,0) = floor(f(n,0,1)/2)");
    let mut runs_kept = IdentityTally::new("b(f(n,0,1)) = b(n), c(f(n,0,1)) = b(n)+c(n)");
    let mut inverse = IdentityTally::new("shrink_runs(f(n,0,1)) = n");

    for n in 1..=max_n {
        let nn = T::from_u64_checked(n)?;
        let b = run_count(&nn)?;
        let c = bit_count(&nn)?;
        for (d0, d1) in &pad_pairs {
            let a = TransformSpec::new(d0.clone(), d1.clone(), crate::Mode::Append);
            let p = a.with_mode(crate::Mode::Prepend);
            let fv: T = f(&nn, &a)?;
            let predicted = predict_len_append(&nn, &a)?;
            append_len.record(bit_count(&fv)? == predicted, || format!("n={n} {a}"));
            let gv: T = g(&nn, &p)?;
            let predicted = predict_len_prepend(&nn, &p)?;
            prepend_len.record(!gv.is_zero() && bit_count(&gv)? == predicted, || {
                format!("n={n} {p}")
            });
            eq3.record(eq3_identity_check(&nn, d0, d1)?, || {
                format!("n={n} d0={d0} d1={d1}")
            });
        }
        let fv: T = f(&nn, &f01)?;
        g01_eq_f01.record(g::<T>(&nn, &g01)? == fv, || format!("n={n}"));
        g10_half.record(g::<T>(&nn, &g10)? == fv.shr_bits(1), || format!("n={n}"));
        runs_kept.record(run_count(&fv)? == b && bit_count(&fv)? == b + c, || {
            format!("n={n}")
        });
        inverse.record(shrink_runs(&fv)? == Shrunk::Value(nn.clone()), || {
            format!("n={n}")
        });
    }

    let tallies = vec![
        append_len,
        prepend_len,
        eq3,
        g01_eq_f01,
        g10_half,
        runs_kept,
        inverse,
    ];
    let holds = tallies.iter().all(IdentityTally::passed);
    Ok(IdentityReport {
        max_n,
        tallies,
        holds,
    })
}
