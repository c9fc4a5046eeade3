//! Run-padding transforms on binary representations and their record values.
//!
//! For a natural `n` and two pad strings `d0`, `d1`, the append transform
//! `f(n, d0, d1)` writes `d1` after every run of 1's and `d0` after every run
//! of 0's in the binary representation of `n`; the prepend transform `g` puts
//! the pads in front of the runs instead. With nonempty pads of equal length,
//! the indices at which either transform sets a new record are exactly the
//! strings `1010...` and those strings with a single `0` doubled.
//!
//! Everything numeric is generic over [`Natural`], implemented for `u32`,
//! `u64`, `u128` and `BigUint`. Fixed-width types report
//! [`Error::Overflow`] rather than wrapping; [`Nat`] never overflows.
//!
//! ```
//! use runpad::{transforms, Nat, TransformSpec};
//!
//! let spec = TransformSpec::append("0", "1").unwrap();
//! let a: Nat = transforms::f(&Nat::from(89u32), &spec).unwrap();
//! assert_eq!(a, Nat::from(3299u32));
//! ```

pub mod bitcore;
pub mod cli;
mod error;
pub mod natural;
pub mod records;
pub mod seqio;
pub mod transforms;

pub use bitcore::{Bitstring, Canonical, Run, RunEncoding};
pub use error::{Error, Result};
pub use natural::Natural;
pub use records::{RecordEntry, ScanConfig};
pub use transforms::{Mode, Shrunk, TransformSpec};

/// Arbitrary-precision natural; the default scalar.
pub type Nat = num_bigint::BigUint;
pub type Nat32 = u32;
pub type Nat64 = u64;
pub type Nat128 = u128;

pub type Record = RecordEntry<Nat>;
pub type Record64 = RecordEntry<u64>;
pub type BFile = seqio::BFile<Nat>;
