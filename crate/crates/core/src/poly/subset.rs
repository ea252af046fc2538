use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported variable count.
pub const MAX_VARS: usize = 16;

/// A subset of `{1, ..., n}` stored as a bitmask (bit `i - 1` marks index `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    n: usize,
    bits: u32,
}

impl SubsetMask {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_n(n)?;
        if n < 32 && bits >> n != 0 {
            return Err(Error::IndexOutOfRange {
                index: 32 - bits.leading_zeros() as usize,
                n,
            });
        }
        Ok(Self { n, bits })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, bits: full_bits(n) })
    }

    /// Builds a subset from 1-based indices, in any order.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            bits |= 1 << (i - 1);
        }
        Ok(Self { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Sorted 1-based indices.
    pub fn indices(&self) -> Vec<usize> {
        bit_indices(self.bits).map(|i| i + 1).collect()
    }

    /// Sorted 0-based positions.
    pub fn positions(&self) -> Vec<usize> {
        bit_indices(self.bits).collect()
    }

    pub fn contains(&self, index: usize) -> bool {
        index >= 1 && index <= self.n && self.bits & (1 << (index - 1)) != 0
    }

    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            bits: full_bits(self.n) & !self.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            n: self.n.max(other.n),
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            n: self.n.max(other.n),
            bits: self.bits & other.bits,
        }
    }

    /// All subsets of `[n]`, in increasing bitmask order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = SubsetMask>> {
        check_n(n)?;
        Ok((0..=full_bits(n)).map(move |bits| SubsetMask { n, bits }))
    }

    /// All `k`-subsets of `[n]` in lexicographic order of their sorted indices.
    pub fn k_subsets(n: usize, k: usize) -> Result<Vec<SubsetMask>> {
        check_n(n)?;
        Ok(k_subset_indices(n, k)
            .into_iter()
            .map(|idx| SubsetMask {
                n,
                bits: idx.iter().fold(0, |b, &i| b | (1 << i)),
            })
            .collect())
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubsetMask {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let idx = Vec::<usize>::deserialize(d)?;
        let n = idx.iter().copied().max().unwrap_or(0).max(1);
        SubsetMask::from_indices(n, &idx).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARS {
        Err(Error::VariableCount(n))
    } else {
        Ok(())
    }
}

pub(crate) fn full_bits(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// 0-based positions of the set bits, ascending.
pub(crate) fn bit_indices(bits: u32) -> impl Iterator<Item = usize> {
    let mut b = bits;
    std::iter::from_fn(move || {
        if b == 0 {
            None
        } else {
            let i = b.trailing_zeros() as usize;
            b &= b - 1;
            Some(i)
        }
    })
}

/// 0-based `k`-subsets of `0..n`, lexicographic.
pub fn k_subset_indices(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}
