//! The `runpad` command line.
//!
//! Exit codes: 0 for success or PASS/MATCH, 1 for a verification FAIL or a
//! b-file DIFFER, 2 for usage and precondition errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bitcore::{to_bitstring, Bitstring};
use crate::records::{self, ScanConfig, DEFAULT_CHUNK};
use crate::seqio::{self, BFile, Registry};
use crate::transforms::{self, Mode, TransformSpec};
use crate::Nat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "runpad",
    version,
    about = "Run-padding transforms, record scans and b-files"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PadArgs {
    /// Pad for runs of 0's ("" for none)
    #[arg(long, default_value = "0", value_parser = parse_pad)]
    pub d0: Bitstring,
    /// Pad for runs of 1's ("" for none)
    #[arg(long, default_value = "1", value_parser = parse_pad)]
    pub d1: Bitstring,
    /// append (f) or prepend (g)
    #[arg(long, default_value = "append")]
    pub mode: Mode,
}

impl PadArgs {
    fn spec(&self) -> TransformSpec {
        TransformSpec::new(self.d0.clone(), self.d1.clone(), self.mode)
    }
}

fn parse_pad(s: &str) -> Result<Bitstring, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `index value` per line
    Text,
    /// one JSON object per line: {"index":N,"value":V,"value_bits":B}
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print f(n,d0,d1) or g(n,d0,d1)
    Transform {
        #[arg(long)]
        n: Nat,
        #[command(flatten)]
        pads: PadArgs,
        /// Also print the raw expanded bitstring (leading zeros kept)
        #[arg(long)]
        show_bits: bool,
    },
    /// Delete one digit from every run of n (left inverse of f with pads 0,1);
    /// prints EMPTY when nothing remains
    Inverse {
        #[arg(long)]
        n: Nat,
    },
    /// Print every record index n <= limit with its value
    Records {
        #[command(flatten)]
        pads: PadArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
        /// Also write the record values as a b-file (record ordinal, value)
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Indices per parallel work unit; does not affect the output
        #[arg(long, default_value_t = DEFAULT_CHUNK, value_parser = parse_chunk)]
        chunk: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the first members of T (alternating 10..., optionally one 0 doubled)
    #[command(name = "enumerate-t")]
    EnumerateT {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Exhaustive checks; the last output line is RESULT: PASS or RESULT: FAIL
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Write the first terms of a registered sequence as a b-file.
    /// Keys: append-values-01, prepend-values-01, prepend-values-10,
    /// record-indices-01, append-record-values-01, prepend-record-values-01,
    /// shrink-runs
    Emit {
        #[arg(long)]
        key: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare two b-files; the last line is RESULT: MATCH or RESULT: DIFFER
    Diff {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Check {
    /// Record indices up to max-n equal the members of T (pads nonempty, equal length)
    Theorem {
        #[command(flatten)]
        pads: PadArgs,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        #[arg(long, default_value_t = DEFAULT_CHUNK, value_parser = parse_chunk)]
        chunk: usize,
    },
    /// 5 f(n,0,1) <= 9n^2+12n, with equality exactly at n = 1010...10 in binary
    Bound {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
    /// Length formulas, prepend/append identities and the left inverse
    Identities {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
    },
}

fn parse_chunk(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("chunk must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Failure modes of a subcommand, mapped onto exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io_err(e: io::Error) -> Failure {
    Failure::Io(e)
}

fn verdict_code(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn write_bfile(file: &BFile<Nat>, path: &Path) -> Result<(), Failure> {
    let out = File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut out = BufWriter::new(out);
    file.write_to(&mut out).map_err(io_err)?;
    out.flush().map_err(io_err)
}

fn read_bfile(path: &Path) -> Result<BFile<Nat>, Failure> {
    let file = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    seqio::parse_bfile(BufReader::new(file)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Transform { n, pads, show_bits } => {
            let spec = pads.spec();
            let raw = transforms::expand_str(&to_bitstring(&n)?.into_inner(), &spec)?;
            let value: Nat = crate::bitcore::to_nat(&raw)?;
            writeln!(out, "{value}").map_err(io_err)?;
            if show_bits {
                writeln!(out, "bits: {raw}").map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Inverse { n } => {
            writeln!(out, "{}", transforms::shrink_runs(&n)?).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Records {
            pads,
            limit,
            bfile,
            chunk,
            format,
        } => {
            let spec = pads.spec();
            if !spec.meets_theorem_hypothesis() {
                writeln!(
                    err,
                    "note: pads are empty or of unequal length; no theorem guarantee applies"
                )
                .map_err(io_err)?;
            }
            let cfg = ScanConfig::new(spec, limit).with_chunk(chunk);
            let found = records::scan_records::<Nat>(&cfg)?;
            for e in &found {
                match format {
                    Format::Text => writeln!(out, "{} {}", e.index, e.value),
                    Format::Jsonl => {
                        let value: serde_json::Number = e
                            .value
                            .to_string()
                            .parse()
                            .expect("decimal digits form a JSON number");
                        let line = serde_json::json!({
                            "index": e.index,
                            "value": value,
                            "value_bits": e.value_bits,
                        });
                        writeln!(out, "{line}")
                    }
                }
                .map_err(io_err)?;
            }
            if let Some(path) = bfile {
                let values = found.into_iter().map(|e| e.value).collect();
                write_bfile(&BFile::new(1, values), &path)?;
            }
            Ok(EXIT_OK)
        }
        Command::EnumerateT { count } => {
            for v in records::enumerate_t::<Nat>(count as usize)? {
                writeln!(out, "{v}").map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { check } => match check {
            Check::Theorem { pads, max_n, chunk } => {
                let cfg = ScanConfig::new(pads.spec(), max_n).with_chunk(chunk);
                let report = records::check_theorem::<Nat>(&cfg)?;
                writeln!(out, "{report}").map_err(io_err)?;
                Ok(verdict_code(report.holds))
            }
            Check::Bound { max_n } => {
                let report = records::check_bound::<Nat>(max_n)?;
                writeln!(out, "{report}").map_err(io_err)?;
                Ok(verdict_code(report.holds))
            }
            Check::Identities { max_n } => {
                let report = records::check_identities::<Nat>(max_n)?;
                writeln!(out, "{report}").map_err(io_err)?;
                Ok(verdict_code(report.holds))
            }
        },
        Command::Emit {
            key,
            count,
            out: path,
        } => {
            let file = Registry::standard().emit::<Nat>(&key, count as usize)?;
            match path {
                Some(path) => write_bfile(&file, &path)?,
                None => file.write_to(&mut *out).map_err(io_err)?,
            }
            Ok(EXIT_OK)
        }
        Command::Diff { a, b } => {
            let report = seqio::diff_bfiles(&read_bfile(&a)?, &read_bfile(&b)?);
            writeln!(out, "{report}").map_err(io_err)?;
            Ok(verdict_code(report.is_match()))
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
