//! Integer partitions: Young-diagram transpose, dominance order and
//! reverse-lexicographic enumeration.

use std::fmt;

use serde::Serialize;

use crate::error::{OrbitError, Result};

/// A weakly decreasing list of positive integers.
///
/// Zeros are accepted on construction and dropped, so `[3, 1, 0]` and `[3, 1]`
/// are the same partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(OrbitError::NotDecreasing { found: parts });
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transpose: part `j` counts the parts of `self` that are at least `j`.
    pub fn dual(&self) -> Partition {
        let longest = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=longest)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Multiplicity of `value` as a part.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    fn prefix_sums(&self, len: usize) -> impl Iterator<Item = u32> + '_ {
        self.parts
            .iter()
            .copied()
            .chain(std::iter::repeat(0))
            .take(len)
            .scan(0u32, |acc, p| {
                *acc += p;
                Some(*acc)
            })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Transpose of a Young diagram given by its rows.
pub fn dual(p: &Partition) -> Partition {
    p.dual()
}

/// `p ⊴ q` in the dominance order: every prefix sum of `p` is at most the
/// matching prefix sum of `q`. On row partitions this is closure containment
/// of the corresponding orbits.
pub fn dominance_leq(p: &Partition, q: &Partition) -> Result<bool> {
    if p.total() != q.total() {
        return Err(OrbitError::SumMismatch {
            expected: p.total(),
            found: q.total(),
        });
    }
    let len = p.len().max(q.len());
    Ok(p.prefix_sums(len)
        .zip(q.prefix_sums(len))
        .all(|(a, b)| a <= b))
}

/// All partitions of `n`, from `[n]` down to `[1, ..., 1]` in
/// lexicographically decreasing order.
pub fn partitions(n: u32) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

// Lexicographic predecessor: drop the trailing ones, decrement the last part
// above one, then refill greedily with parts no larger than it.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    let pivot = parts.len().checked_sub(ones + 1)?;
    let mut out = parts[..pivot].to_vec();
    let part = parts[pivot] - 1;
    let mut rest = ones as u32 + 1;
    out.push(part);
    while rest > 0 {
        let take = rest.min(part);
        out.push(take);
        rest -= take;
    }
    Some(out)
}
