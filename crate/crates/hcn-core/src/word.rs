use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest word the integer packing supports. The hierarchical network
/// indexes vertices as `x * 2^n + y`, so 2n bits must fit in a u32.
pub const MAX_WORD_LEN: u32 = 15;

/// A fixed-length binary word `x_1 x_2 ... x_n`, position 1 leftmost.
///
/// Bits are packed into an integer with `x_1` most significant, so the
/// word read left to right is the binary expansion of `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    len: u32,
    value: u32,
}

impl BinaryWord {
    pub fn new(len: u32, value: u32) -> Result<Self> {
        if len == 0 {
            return Err(Error::DimensionZero);
        }
        if len > MAX_WORD_LEN {
            return Err(Error::DimensionTooLarge {
                n: len,
                max: MAX_WORD_LEN,
            });
        }
        debug_assert!(value < (1u32 << len) || len == 32);
        if value >= (1u32 << len) {
            return Err(Error::VertexOutOfRange {
                index: value,
                count: 1usize << len,
            });
        }
        Ok(BinaryWord { len, value })
    }

    /// The all-zeros word of length `len`.
    pub fn zeros(len: u32) -> Result<Self> {
        BinaryWord::new(len, 0)
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Packed integer value, `x_1` most significant.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// Bit at 1-based position `i`, position 1 leftmost.
    pub fn bit(&self, i: u32) -> Result<bool> {
        if i == 0 || i > self.len {
            return Err(Error::CoordinateOutOfRange { i, n: self.len });
        }
        Ok((self.value >> (self.len - i)) & 1 == 1)
    }

    /// Bitwise complement: every bit flipped, length preserved.
    pub fn complement(&self) -> Self {
        BinaryWord {
            len: self.len,
            value: self.value ^ ((1u32 << self.len) - 1),
        }
    }

    /// Word with bit `i` (1-based, leftmost = 1) flipped.
    pub fn flip(&self, i: u32) -> Result<Self> {
        if i == 0 || i > self.len {
            return Err(Error::CoordinateOutOfRange { i, n: self.len });
        }
        Ok(BinaryWord {
            len: self.len,
            value: self.value ^ (1u32 << (self.len - i)),
        })
    }

    /// Number of positions at which the two words differ.
    pub fn hamming_distance(&self, other: &Self) -> Result<u32> {
        if self.len != other.len {
            return Err(Error::WordLengthMismatch {
                a: self.len,
                b: other.len,
            });
        }
        Ok((self.value ^ other.value).count_ones())
    }
}

/// Bitwise complement as a free function.
pub fn word_complement(w: BinaryWord) -> BinaryWord {
    w.complement()
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.len).rev() {
            f.write_str(if (self.value >> i) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let len = s.len() as u32;
        if len == 0 {
            return Err(Error::DimensionZero);
        }
        if len > MAX_WORD_LEN {
            return Err(Error::DimensionTooLarge {
                n: len,
                max: MAX_WORD_LEN,
            });
        }
        let mut value = 0u32;
        for c in s.chars() {
            value <<= 1;
            match c {
                '0' => {}
                '1' => value |= 1,
                _ => {
                    return Err(Error::InvalidWord { text: s.to_string() });
                }
            }
        }
        BinaryWord::new(len, value)
    }
}
