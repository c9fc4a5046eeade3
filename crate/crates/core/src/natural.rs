//! The non-negative integer abstraction the rest of the crate is generic over.
//!
//! Transform outputs grow by `k` bits per run, so fixed-width types overflow
//! quickly. Every conversion into a [`Natural`] is checked; a value that does
//! not fit surfaces as [`Error::Overflow`](crate::Error::Overflow) instead of
//! wrapping. [`Nat`](crate::Nat) (a `BigUint`) never overflows.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{Error, Result};

/// An unsigned integer type that can be viewed as a string of binary digits.
pub trait Natural:
    Unsigned
    + CheckedAdd
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Ord
    + Debug
    + Display
    + FromStr
    + Send
    + Sync
    + 'static
{
    /// Maximum number of bits the type can hold, `None` when unbounded.
    const WIDTH: Option<u64>;

    /// Number of significant bits; zero for zero.
    fn bit_len(&self) -> u64;

    /// Bit `i`, counted from the least significant end.
    fn bit(&self, i: u64) -> bool;

    /// Builds a value from MSB-first bits, ignoring leading zeros.
    fn from_bits_msb(bits: &[bool]) -> Result<Self>;

    /// `self >> shift`, i.e. `floor(self / 2^shift)`.
    fn shr_bits(&self, shift: u64) -> Self;

    fn from_u64_checked(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow {
            bits: 64 - u64::from(v.leading_zeros()),
            width: Self::WIDTH.unwrap_or(u64::MAX),
        })
    }
}

fn significant(bits: &[bool]) -> &[bool] {
    let start = bits.iter().position(|&b| b).unwrap_or(bits.len());
    &bits[start..]
}

macro_rules! impl_primitive_natural {
    ($($t:ty),*) => {$(
        impl Natural for $t {
            const WIDTH: Option<u64> = Some(<$t>::BITS as u64);

            fn bit_len(&self) -> u64 {
                u64::from(<$t>::BITS - self.leading_zeros())
            }

            fn bit(&self, i: u64) -> bool {
                i < u64::from(<$t>::BITS) && (self >> i) & 1 == 1
            }

            fn from_bits_msb(bits: &[bool]) -> Result<Self> {
                let bits = significant(bits);
                if bits.len() as u64 > u64::from(<$t>::BITS) {
                    return Err(Error::Overflow {
                        bits: bits.len() as u64,
                        width: u64::from(<$t>::BITS),
                    });
                }
                Ok(bits.iter().fold(0, |acc, &b| (acc << 1) | <$t>::from(b)))
            }

            fn shr_bits(&self, shift: u64) -> Self {
                if shift >= u64::from(<$t>::BITS) { 0 } else { self >> shift }
            }
        }
    )*};
}

impl_primitive_natural!(u32, u64, u128);

impl Natural for BigUint {
    const WIDTH: Option<u64> = None;

    fn bit_len(&self) -> u64 {
        self.bits()
    }

    fn bit(&self, i: u64) -> bool {
        BigUint::bit(self, i)
    }

    fn from_bits_msb(bits: &[bool]) -> Result<Self> {
        let bits = significant(bits);
        // Pack into little-endian u32 digits.
        let mut digits = vec![0u32; bits.len().div_ceil(32)];
        for (i, &b) in bits.iter().rev().enumerate() {
            if b {
                digits[i / 32] |= 1 << (i % 32);
            }
        }
        Ok(BigUint::new(digits))
    }

    fn shr_bits(&self, shift: u64) -> Self {
        self >> shift
    }
}
