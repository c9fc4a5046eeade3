//! Brute-force prefix-maximum scanning.
//!
//! The range `1..=limit` is cut into chunks of `chunk` indices. Each chunk
//! finds its own prefix maxima independently (in parallel), then a sequential
//! pass keeps only those that beat the running global maximum. Every global
//! record is a record of its own chunk, so the merge is exact and the output
//! does not depend on the chunk width.

use rayon::prelude::*;

use crate::bitcore::{run_and_bit_count_u64, to_bitstring, to_nat};
use crate::error::{Error, Result};
use crate::natural::Natural;
use crate::transforms::{expand_str, TransformSpec};

pub const DEFAULT_CHUNK: usize = 4096;

/// Chunks handed to the thread pool per merge round; bounds memory when the
/// chunk width is tiny.
const CHUNKS_PER_ROUND: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub spec: TransformSpec,
    /// Inclusive upper bound on `n`.
    pub limit: u64,
    pub chunk: usize,
}

impl ScanConfig {
    pub fn new(spec: TransformSpec, limit: u64) -> Self {
        Self {
            spec,
            limit,
            chunk: DEFAULT_CHUNK,
        }
    }

    pub fn with_chunk(mut self, chunk: usize) -> Self {
        self.chunk = chunk;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.limit == 0 {
            return Err(Error::InvalidConfig("limit must be at least 1".into()));
        }
        if self.chunk == 0 {
            return Err(Error::InvalidConfig("chunk must be at least 1".into()));
        }
        Ok(())
    }
}

/// A record-setting index with its transformed value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecordEntry<T> {
    pub index: u64,
    pub value: T,
    pub value_bits: u64,
}

impl<T: Natural> RecordEntry<T> {
    fn beats(&self, best: Option<&(u64, T)>) -> bool {
        match best {
            None => true,
            Some((bits, value)) => (self.value_bits, &self.value) > (*bits, value),
        }
    }
}

/// Resumable record scan over `1, 2, 3, ...`.
#[derive(Clone, Debug)]
pub struct RecordScanner<T> {
    spec: TransformSpec,
    chunk: usize,
    next: u64,
    best: Option<(u64, T)>,
}

impl<T: Natural> RecordScanner<T> {
    pub fn new(spec: TransformSpec, chunk: usize) -> Result<Self> {
        if chunk == 0 {
            return Err(Error::InvalidConfig("chunk must be at least 1".into()));
        }
        Ok(Self {
            spec,
            chunk,
            next: 1,
            best: None,
        })
    }

    /// Highest index scanned so far.
    pub fn scanned(&self) -> u64 {
        self.next - 1
    }

    /// Scans `scanned()+1 ..= limit`, returning the new records in order.
    pub fn advance_to(&mut self, limit: u64) -> Result<Vec<RecordEntry<T>>> {
        let mut found = Vec::new();
        let chunk = self.chunk as u64;
        while self.next <= limit {
            let round_end = self
                .next
                .saturating_add(chunk.saturating_mul(CHUNKS_PER_ROUND as u64) - 1)
                .min(limit);
            let starts: Vec<u64> = (self.next..=round_end).step_by(self.chunk).collect();
            // Chunks may skip anything not beating the best from earlier
            // rounds; the merge below would drop it anyway.
            let floor = self.best.as_ref().map(|(bits, _)| *bits);
            let locals = starts
                .par_iter()
                .map(|&lo| {
                    let hi = lo.saturating_add(chunk - 1).min(round_end);
                    local_records::<T>(&self.spec, lo, hi, floor)
                })
                .collect::<Result<Vec<_>>>()?;
            for entry in locals.into_iter().flatten() {
                if entry.beats(self.best.as_ref()) {
                    self.best = Some((entry.value_bits, entry.value.clone()));
                    found.push(entry);
                }
            }
            self.next = round_end + 1;
        }
        Ok(found)
    }
}

fn local_records<T: Natural>(
    spec: &TransformSpec,
    lo: u64,
    hi: u64,
    floor_bits: Option<u64>,
) -> Result<Vec<RecordEntry<T>>> {
    let mut out = Vec::new();
    let mut best: Option<(u64, T)> = None;
    for n in lo..=hi {
        let (runs, bits) = run_and_bit_count_u64(n);
        let predicted = spec.predicted_len(runs, bits);
        if let Some(len) = predicted {
            let threshold = best.as_ref().map(|(b, _)| *b).or(floor_bits);
            if threshold.is_some_and(|t| len < t) {
                continue;
            }
        }
        let raw = expand_str(&to_bitstring(&n)?.into_inner(), spec)?;
        let value: T = to_nat(&raw)?;
        let value_bits = value.bit_len();
        debug_assert!(predicted.is_none_or(|p| p == value_bits));
        let entry = RecordEntry {
            index: n,
            value,
            value_bits,
        };
        if entry.beats(best.as_ref()) {
            best = Some((entry.value_bits, entry.value.clone()));
            out.push(entry);
        }
    }
    Ok(out)
}

/// All `n <= limit` whose transformed value exceeds that of every smaller `n`.
pub fn scan_records<T: Natural>(cfg: &ScanConfig) -> Result<Vec<RecordEntry<T>>> {
    cfg.validate()?;
    RecordScanner::new(cfg.spec.clone(), cfg.chunk)?.advance_to(cfg.limit)
}
