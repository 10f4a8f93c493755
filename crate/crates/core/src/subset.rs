use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A set of vertices packed into a single machine word.
///
/// Vertex `v` (0-based) is bit `v`. Subsets order by cardinality first and
/// then by bitmask value, which is the order every enumerator emits.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    bits: u64,
}

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset { bits: 0 };

    pub const fn from_bits(bits: u64) -> Self {
        VertexSubset { bits }
    }

    /// Wraps `bits`, rejecting any bit at position `>= n`.
    pub fn from_bits_in(n: usize, bits: u64) -> Result<Self> {
        let subset = VertexSubset { bits };
        if !subset.fits(n) {
            return Err(Error::InvalidSubset(format!(
                "bitmask {bits:#x} has vertices outside 0..{n}"
            )));
        }
        Ok(subset)
    }

    /// Builds a subset from 0-based vertex indices.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v >= n || v >= 64 {
                return Err(Error::InvalidSubset(format!(
                    "vertex index {v} outside 0..{n}"
                )));
            }
            bits |= 1 << v;
        }
        Ok(VertexSubset { bits })
    }

    /// Builds a subset from 1-based vertex labels, as displayed and exported.
    pub fn from_labels(n: usize, labels: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &label in labels {
            if label == 0 || label > n || label > 64 {
                return Err(Error::InvalidSubset(format!(
                    "vertex label {label} outside 1..={n}"
                )));
            }
            bits |= 1 << (label - 1);
        }
        Ok(VertexSubset { bits })
    }

    pub const fn bits(self) -> u64 {
        self.bits
    }

    pub const fn card(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// True when no bit lies at position `>= n`.
    pub fn fits(self, n: usize) -> bool {
        n >= 64 || self.bits >> n == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSubset {
            bits: self.bits | 1 << v,
        }
    }

    pub fn without(self, v: usize) -> Self {
        VertexSubset {
            bits: self.bits & !(1 << v),
        }
    }

    pub fn toggled(self, v: usize) -> Self {
        VertexSubset {
            bits: self.bits ^ 1 << v,
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSubset {
            bits: self.bits & other.bits,
        }
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSubset {
            bits: self.bits ^ other.bits,
        }
    }

    /// 0-based members in ascending order.
    pub fn iter(self) -> Members {
        Members { rest: self.bits }
    }

    /// 1-based members in ascending order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl Ord for VertexSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.card()
            .cmp(&other.card())
            .then(self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for VertexSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `{1,3}` using 1-based labels.
impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

pub struct Members {
    rest: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let v = self.rest.trailing_zeros() as usize;
        self.rest &= self.rest - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.rest.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Members {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_one_based() {
        let s = VertexSubset::from_vertices(5, &[0, 2]).unwrap();
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(VertexSubset::EMPTY.to_string(), "{}");
    }

    #[test]
    fn labels_round_trip() {
        let s = VertexSubset::from_labels(6, &[2, 6]).unwrap();
        assert_eq!(s.bits(), 0b100010);
        assert_eq!(s.labels(), vec![2, 6]);
        assert_eq!(s.card(), 2);
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(VertexSubset::from_vertices(3, &[3]).is_err());
        assert!(VertexSubset::from_labels(3, &[0]).is_err());
        assert!(VertexSubset::from_bits_in(3, 0b1000).is_err());
        assert!(VertexSubset::from_bits_in(3, 0b111).is_ok());
    }

    #[test]
    fn orders_by_cardinality_then_value() {
        let mut v: Vec<_> = [0b110u64, 0b1, 0b11, 0b100, 0b111]
            .into_iter()
            .map(VertexSubset::from_bits)
            .collect();
        v.sort();
        let bits: Vec<u64> = v.iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0b1, 0b100, 0b11, 0b110, 0b111]);
    }
}
