//! OEIS-style b-files and a registry of the sequences this crate generates.
//!
//! The b-file format is one `index value` pair per line. Lines starting with
//! `#` and blank lines are skipped on input. Output uses exactly one space and
//! one `\n` per line, with no comments.

use std::fmt::{self, Display};
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::error::Error;
use crate::natural::Natural;
use crate::records::{RecordEntry, RecordScanner, DEFAULT_CHUNK};
use crate::transforms::{apply, shrink_runs, Shrunk, TransformSpec};

#[derive(Debug, Error)]
pub enum SeqError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: expected index {expected}, found {found}")]
    Structure { line: usize, expected: u64, found: u64 },

    #[error("unknown sequence key {0:?}")]
    UnknownKey(String),

    #[error("duplicate sequence key {0:?}")]
    DuplicateKey(String),

    #[error("term count must be at least 1")]
    ZeroCount,

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Core(#[from] Error),
}

/// Terms of a sequence at consecutive indices starting from `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile<T> {
    pub offset: u64,
    pub values: Vec<T>,
}

impl<T> BFile<T> {
    pub fn new(offset: u64, values: Vec<T>) -> Self {
        Self { offset, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(index, value)` pairs.
    pub fn entries(&self) -> impl Iterator<Item = (u64, &T)> {
        (self.offset..).zip(&self.values)
    }

    pub fn get(&self, index: u64) -> Option<&T> {
        let i = usize::try_from(index.checked_sub(self.offset)?).ok()?;
        self.values.get(i)
    }
}

impl<T: Display> BFile<T> {
    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (i, v) in self.entries() {
            writeln!(out, "{i} {v}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("b-file text is ASCII")
    }
}

/// Reads a b-file, requiring consecutive indices. An input without any
/// entries yields an empty file with offset 0.
pub fn parse_bfile<T, R>(input: R) -> Result<BFile<T>, SeqError>
where
    T: Natural,
    <T as std::str::FromStr>::Err: Display,
    R: BufRead,
{
    let mut file: Option<BFile<T>> = None;
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(SeqError::Parse {
                line: line_no,
                msg: format!("expected \"index value\", got {trimmed:?}"),
            });
        };
        let index: u64 = index.parse().map_err(|e| SeqError::Parse {
            line: line_no,
            msg: format!("bad index {index:?}: {e}"),
        })?;
        let value: T = value.parse().map_err(|e| SeqError::Parse {
            line: line_no,
            msg: format!("bad value {value:?}: {e}"),
        })?;
        match &mut file {
            None => file = Some(BFile::new(index, vec![value])),
            Some(f) => {
                let expected = f.offset + f.values.len() as u64;
                if index != expected {
                    return Err(SeqError::Structure {
                        line: line_no,
                        expected,
                        found: index,
                    });
                }
                f.values.push(value);
            }
        }
    }
    Ok(file.unwrap_or(BFile {
        offset: 0,
        values: Vec::new(),
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub index: u64,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffReport {
    pub offset_a: u64,
    pub offset_b: u64,
    pub len_a: usize,
    pub len_b: usize,
    /// Number of leading terms both files have.
    pub overlap: usize,
    pub offset_mismatch: bool,
    pub divergence: Option<Divergence>,
}

impl DiffReport {
    /// No offset mismatch and no disagreeing term. Lengths may differ.
    pub fn is_match(&self) -> bool {
        !self.offset_mismatch && self.divergence.is_none()
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a: {} terms from offset {}", self.len_a, self.offset_a)?;
        writeln!(f, "b: {} terms from offset {}", self.len_b, self.offset_b)?;
        if self.offset_mismatch {
            writeln!(f, "offset mismatch: {} vs {}", self.offset_a, self.offset_b)?;
        } else if let Some(d) = &self.divergence {
            writeln!(f, "first divergence at index {}: {} vs {}", d.index, d.a, d.b)?;
        } else if self.overlap == 0 {
            writeln!(f, "no overlapping terms")?;
        } else {
            writeln!(f, "match through {}", self.offset_a + self.overlap as u64 - 1)?;
        }
        write!(f, "RESULT: {}", if self.is_match() { "MATCH" } else { "DIFFER" })
    }
}

pub fn diff_bfiles<T: PartialEq + Display>(a: &BFile<T>, b: &BFile<T>) -> DiffReport {
    let overlap = a.len().min(b.len());
    let offset_mismatch = a.offset != b.offset;
    let divergence = if offset_mismatch {
        None
    } else {
        a.entries()
            .zip(b.values.iter())
            .find(|((_, x), y)| x != y)
            .map(|((index, x), y)| Divergence {
                index,
                a: x.to_string(),
                b: y.to_string(),
            })
    };
    DiffReport {
        offset_a: a.offset,
        offset_b: b.offset,
        len_a: a.len(),
        len_b: b.len(),
        overlap,
        offset_mismatch,
        divergence,
    }
}

/// How a registered sequence computes its terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `f` or `g` at `n = 1, 2, ...`.
    TransformValues(TransformSpec),
    /// Indices of successive records, by brute-force scan.
    RecordIndices(TransformSpec),
    /// Values of successive records, by brute-force scan.
    RecordValues(TransformSpec),
    /// `shrink_runs(n)` for `n = 1, 2, ...`; an empty result is written as 0.
    ShrinkRuns,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceDescriptor {
    pub key: String,
    pub generator: Generator,
    pub offset: u64,
    /// Annotation only; never used for lookup.
    pub oeis_ids: Vec<String>,
    pub notes: String,
}

impl SequenceDescriptor {
    fn new(key: &str, generator: Generator, oeis_ids: &[&str], notes: &str) -> Self {
        Self {
            key: key.to_string(),
            generator,
            offset: 1,
            oeis_ids: oeis_ids.iter().map(|s| s.to_string()).collect(),
            notes: notes.to_string(),
        }
    }
}

fn records<T: Natural>(spec: &TransformSpec, count: usize) -> Result<Vec<RecordEntry<T>>, Error> {
    let mut scanner = RecordScanner::new(spec.clone(), DEFAULT_CHUNK)?;
    let mut out = Vec::new();
    let mut limit = 1024u64;
    while out.len() < count {
        out.extend(scanner.advance_to(limit)?);
        limit = limit
            .checked_mul(2)
            .ok_or(Error::InvalidConfig("record scan exhausted u64".into()))?;
    }
    out.truncate(count);
    Ok(out)
}

/// The first `count` terms of `desc`'s sequence.
pub fn emit_bfile<T: Natural>(desc: &SequenceDescriptor, count: usize) -> Result<BFile<T>, SeqError> {
    if count == 0 {
        return Err(SeqError::ZeroCount);
    }
    let indices = desc.offset..desc.offset + count as u64;
    let values = match &desc.generator {
        Generator::TransformValues(spec) => indices
            .map(|n| apply(&T::from_u64_checked(n)?, spec))
            .collect::<Result<Vec<T>, Error>>()?,
        Generator::RecordIndices(spec) => records::<T>(spec, count)?
            .into_iter()
            .map(|e| T::from_u64_checked(e.index))
            .collect::<Result<Vec<T>, Error>>()?,
        Generator::RecordValues(spec) => records::<T>(spec, count)?.into_iter().map(|e| e.value).collect(),
        Generator::ShrinkRuns => indices
            .map(|n| {
                Ok(match shrink_runs(&T::from_u64_checked(n)?)? {
                    Shrunk::Empty => T::zero(),
                    Shrunk::Value(v) => v,
                })
            })
            .collect::<Result<Vec<T>, Error>>()?,
    };
    Ok(BFile::new(desc.offset, values))
}

#[derive(Clone, Debug)]
pub struct Registry {
    descriptors: Vec<SequenceDescriptor>,
}

impl Registry {
    pub fn empty() -> Self {
        Self {
            descriptors: Vec::new(),
        }
    }

    /// The built-in sequences.
    pub fn standard() -> Self {
        let f01 = TransformSpec::append("0", "1").expect("valid pads");
        let g01 = TransformSpec::prepend("0", "1").expect("valid pads");
        let g10 = TransformSpec::prepend("1", "0").expect("valid pads");
        let record_ids = ["A319422", "A319424"];
        let record_note = "record values; the two IDs are cited together and not told apart here";
        let mut r = Self::empty();
        for desc in [
            SequenceDescriptor::new(
                "append-values-01",
                Generator::TransformValues(f01.clone()),
                &["A175046", "A156064"],
                "f(n,\"0\",\"1\"); both IDs are cited for this construction and their offsets are not reconciled",
            ),
            SequenceDescriptor::new(
                "prepend-values-01",
                Generator::TransformValues(g01.clone()),
                &[],
                "g(n,\"0\",\"1\"); coincides with f(n,\"0\",\"1\")",
            ),
            SequenceDescriptor::new(
                "prepend-values-10",
                Generator::TransformValues(g10),
                &[],
                "g(n,\"1\",\"0\") = floor(f(n,\"0\",\"1\")/2)",
            ),
            SequenceDescriptor::new(
                "record-indices-01",
                Generator::RecordIndices(f01.clone()),
                &["A319423"],
                "indices n where f(n,\"0\",\"1\") sets a record",
            ),
            SequenceDescriptor::new(
                "append-record-values-01",
                Generator::RecordValues(f01),
                &record_ids,
                record_note,
            ),
            SequenceDescriptor::new(
                "prepend-record-values-01",
                Generator::RecordValues(g01),
                &record_ids,
                record_note,
            ),
            SequenceDescriptor::new(
                "shrink-runs",
                Generator::ShrinkRuns,
                &["A318921"],
                "delete one digit from each run of n; an empty result is written as 0",
            ),
        ] {
            r.register(desc).expect("built-in keys are unique");
        }
        r
    }

    pub fn register(&mut self, desc: SequenceDescriptor) -> Result<(), SeqError> {
        if self.get(&desc.key).is_some() {
            return Err(SeqError::DuplicateKey(desc.key));
        }
        self.descriptors.push(desc);
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&SequenceDescriptor> {
        self.descriptors.iter().find(|d| d.key == key)
    }

    pub fn lookup(&self, key: &str) -> Result<&SequenceDescriptor, SeqError> {
        self.get(key).ok_or_else(|| SeqError::UnknownKey(key.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &SequenceDescriptor> {
        self.descriptors.iter()
    }

    pub fn emit<T: Natural>(&self, key: &str, count: usize) -> Result<BFile<T>, SeqError> {
        emit_bfile(self.lookup(key)?, count)
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::standard()
    }
}
