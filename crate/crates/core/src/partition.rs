//! Integer partitions, compositions, words, and the dominance order.
//!
//! Partitions are stored zero-padded to an explicit length: "at most n
//! parts" is represented as "exactly n parts with trailing zeros", so the
//! i-th part is always addressable for i up to the declared length.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A weakly decreasing tuple of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// The flat partition (k, k, ..., k) with n parts.
    pub fn flat(k: u64, n: usize) -> Self {
        Partition { parts: vec![k; n] }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn nonzero_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// Zero-pads (or trims trailing zeros) to exactly `n` parts. Fails if
    /// the partition has more than `n` nonzero parts.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if self.nonzero_parts() > n {
            return Err(Error::invalid(format!(
                "{self} has more than {n} nonzero parts"
            )));
        }
        let mut parts: Vec<u64> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.resize(n, 0);
        Ok(Partition { parts })
    }

    /// Dominance (majorization) order: `self` dominates `other` iff every
    /// prefix sum of `self` is >= the corresponding prefix sum of `other`.
    /// Both partitions must have equal length and equal total.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::invalid(format!(
                "dominance needs equal lengths, got {} and {}",
                self.len(),
                other.len()
            )));
        }
        if self.total() != other.total() {
            return Err(Error::invalid(format!(
                "dominance needs equal totals, got {} and {}",
                self.total(),
                other.total()
            )));
        }
        let mut a = 0u64;
        let mut b = 0u64;
        for (&x, &y) in self.parts.iter().zip(&other.parts) {
            a += x;
            b += y;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reinterprets the parts as a composition (forgets the ordering
    /// constraint). Fails on the empty partition.
    pub fn to_composition(&self) -> Result<Composition> {
        Composition::new(self.parts.clone())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over all partitions of `total` with at most `max_parts` parts,
/// zero-padded to length `max_parts`, in lexicographically decreasing order
/// starting from (total, 0, ..., 0).
pub fn partitions_of(total: u64, max_parts: usize) -> Partitions {
    let current = if max_parts == 0 {
        (total == 0).then(Vec::new)
    } else {
        let mut first = vec![0; max_parts];
        first[0] = total;
        Some(first)
    };
    Partitions { current }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Self::Item> {
        let parts = self.current.take()?;
        self.current = next_partition(&parts);
        Some(Partition {
            parts: parts.clone(),
        })
    }
}

/// Lexicographic successor: decrement the rightmost part that still leaves
/// a repackable remainder, then refill the tail greedily under the new cap.
fn next_partition(parts: &[u64]) -> Option<Vec<u64>> {
    let m = parts.len();
    let mut suffix_sum = 0u64;
    for j in (0..m).rev() {
        suffix_sum += parts[j];
        if parts[j] < 2 {
            continue;
        }
        let cap = parts[j] - 1;
        let mut rest = suffix_sum - cap;
        let slots = (m - 1 - j) as u64;
        if rest > cap * slots {
            continue;
        }
        let mut next = parts.to_vec();
        next[j] = cap;
        for slot in next.iter_mut().skip(j + 1) {
            *slot = cap.min(rest);
            rest -= *slot;
        }
        return Some(next);
    }
    None
}

/// A tuple of non-negative integers with no ordering constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a composition needs at least one part"));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The word of the composition: letter i-1 written mu_i times, giving a
    /// weakly increasing word of length `total()` over {0, ..., n-1}.
    pub fn word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.total() as usize);
        for (letter, &count) in self.parts.iter().enumerate() {
            letters.extend(std::iter::repeat_n(letter, count as usize));
        }
        Word { letters }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A weakly increasing sequence of letters, read as the ascending row
/// lengths of a left-justified Young diagram (rows filled bottom-up).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invalid(format!(
                "word letters must be weakly increasing, got {letters:?}"
            )));
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of cells in the union minus the intersection of the two
    /// diagrams. Rows pair up by index, so row r contributes
    /// max(a_r, b_r) - min(a_r, b_r) cells.
    pub fn diagram_symmetric_difference(&self, other: &Word) -> Result<u64> {
        if self.len() != other.len() {
            return Err(Error::invalid(format!(
                "diagram symmetric difference needs equal word lengths, got {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .letters
            .iter()
            .zip(&other.letters)
            .map(|(&a, &b)| a.abs_diff(b) as u64)
            .sum())
    }
}

/// An integer tuple of fixed length; houses weights and arguments of the
/// Kostant partition function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntVector {
    entries: Vec<i64>,
}

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    /// Entrywise sum of `self` and the flat vector (k, ..., k), as a
    /// partition. Fails if the result is not weakly decreasing non-negative
    /// (for weakly decreasing `self` this means k < -last entry).
    pub fn plus_flat(&self, k: u64) -> Result<Partition> {
        let parts = self
            .entries
            .iter()
            .map(|&e| {
                let shifted = e + i64::try_from(k).map_err(|_| Error::Overflow("plus_flat"))?;
                u64::try_from(shifted).map_err(|_| {
                    Error::invalid(format!("{self} + ({k}^{}) has a negative part", self.len()))
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<&Partition> for IntVector {
    type Error = Error;

    fn try_from(p: &Partition) -> Result<IntVector> {
        let entries = p
            .parts()
            .iter()
            .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow("partition as IntVector")))
            .collect::<Result<Vec<i64>>>()?;
        Ok(IntVector { entries })
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
