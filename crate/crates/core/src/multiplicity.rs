//! Multiplicities of fundamental representations in the ring of regular
//! functions on an orbit, and the normality verdict derived from them.
//!
//! Equal column pairs are stripped off first; their lengths together with the
//! half-sums of the remaining column pairs form the W-sequence. The even
//! multiplicities are then the coefficients of
//!
//! ```text
//!     Π_i (1 - q^(w_i + 1)) / (1 - q)^e        e = k (Sp), k + 1 (O)
//! ```
//!
//! computed by starting from the binomial series of `(1 - q)^-e` and applying
//! one shifted subtraction per W entry. Odd multiplicities vanish.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{OrbitError, Result};
use crate::normality::{self, caveat, kp_chains, witness, NormalityReport, Verdict, WDifference};
use crate::orbit::{column_at, Family, GroupKind, OrbitLabel};

/// Input to the β-recursion, with the intermediate steps kept for display.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WData {
    /// Lengths of the removed equal column pairs (`Y`), ascending.
    pub removed: Vec<u32>,
    /// Columns left after pair removal, longest first, re-padded.
    pub remaining: Vec<u32>,
    /// `z_j = (d_{2j} + d_{2j-1}) / 2` for `j = 0..=l`.
    pub half_sums: Vec<u32>,
    /// `Y ∪ Z` sorted non-decreasing.
    pub w: Vec<u32>,
    pub k: usize,
}

/// Repeatedly removes the lowest-indexed pair of equal adjacent columns.
///
/// `columns` is longest first; returns the removed lengths (ascending) and the
/// columns left over, still longest first.
pub fn remove_pairs(columns: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut shortest_first: Vec<u32> = columns.iter().rev().copied().collect();
    let mut removed = Vec::new();
    while let Some(i) = shortest_first.windows(2).position(|w| w[0] == w[1]) {
        removed.push(shortest_first[i]);
        shortest_first.drain(i..i + 2);
    }
    removed.sort_unstable();
    shortest_first.reverse();
    (removed, shortest_first)
}

pub fn w_sequence(orbit: &OrbitLabel) -> WData {
    w_sequence_from_columns(orbit.kind().family(), orbit.columns())
}

/// Same as [`w_sequence`] on a raw longest-first column list, which may carry
/// extra zero padding.
pub fn w_sequence_from_columns(family: Family, columns: &[u32]) -> WData {
    let (removed, mut remaining) = remove_pairs(columns);
    match family {
        Family::Symplectic => {
            if remaining.len() % 2 == 0 {
                remaining.push(0);
            }
        }
        Family::Orthogonal => {
            if remaining.len() % 2 == 1 {
                remaining.push(0);
            }
        }
    }
    // 2l + 1 columns for Sp, 2l + 2 for O; the longest O column is unused.
    // An orthogonal orbit made only of equal pairs leaves nothing (l = -1).
    let l = (remaining.len() as i64 - 1).div_euclid(2);
    let half_sums: Vec<u32> = (0..=l)
        .map(|j| (column_at(&remaining, 2 * j) + column_at(&remaining, 2 * j - 1)) / 2)
        .collect();
    let mut w: Vec<u32> = removed.iter().chain(&half_sums).copied().collect();
    w.sort_unstable();
    let k = w.len() - 1;
    WData {
        removed,
        remaining,
        half_sums,
        w,
        k,
    }
}

/// `β_{k+1}` truncated to `length` terms.
pub fn beta_recursion(w: &WData, family: Family, length: usize) -> Vec<BigInt> {
    let exponent = match family {
        Family::Symplectic => w.k,
        Family::Orthogonal => w.k + 1,
    };
    // β_0[j] = C(e - 1 + j, j), built by the ratio (e - 1 + j) / j
    let mut beta = Vec::with_capacity(length);
    let mut term = BigInt::one();
    for j in 0..length {
        if j > 0 {
            term = term * BigInt::from(exponent + j - 1) / BigInt::from(j);
        }
        beta.push(term.clone());
    }
    for &wi in &w.w {
        let shift = wi as usize + 1;
        for j in (shift..length).rev() {
            let earlier = beta[j - shift].clone();
            beta[j] -= earlier;
        }
    }
    beta
}

/// Exact multiplicities `[R[O] : μ_i]` for `i = 0..=top`, where `top` is `m`
/// for `Sp(2m)` and `n` for `O(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    kind: GroupKind,
    entries: Vec<BigUint>,
    w_data: WData,
}

impl MultiplicityTable {
    /// Places `values[i]` at index `2i` and zeros at odd indices. Fails if a
    /// value is negative.
    pub(crate) fn from_even_values(
        kind: GroupKind,
        w_data: WData,
        values: &[BigInt],
    ) -> Result<Self> {
        let top = kind.top_fundamental_index() as usize;
        let mut entries = vec![BigUint::zero(); top + 1];
        for (i, v) in values.iter().enumerate().take(top / 2 + 1) {
            entries[2 * i] = v.to_biguint().ok_or_else(|| {
                OrbitError::InternalInconsistency(format!(
                    "negative multiplicity {v} at index {} for {kind} with W = {:?}",
                    2 * i,
                    w_data.w
                ))
            })?;
        }
        Ok(MultiplicityTable {
            kind,
            entries,
            w_data,
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<&BigUint> {
        self.entries.get(i)
    }

    pub fn w_data(&self) -> &WData {
        &self.w_data
    }

    /// Largest index in the table.
    pub fn top_index(&self) -> usize {
        self.entries.len() - 1
    }

    /// Indices shown in tables: all of them for `Sp`, even ones for `O`.
    pub fn display_indices(&self) -> Vec<usize> {
        let step = if self.kind.is_symplectic() { 1 } else { 2 };
        (0..self.entries.len()).step_by(step).collect()
    }

    /// Indices `i > 0` where `self` is below `other`, and where it is above.
    pub fn compare(&self, other: &MultiplicityTable) -> (Vec<u32>, Vec<u32>) {
        let mut below = Vec::new();
        let mut above = Vec::new();
        for (i, (a, b)) in self.entries.iter().zip(&other.entries).enumerate().skip(1) {
            match a.cmp(b) {
                std::cmp::Ordering::Less => below.push(i as u32),
                std::cmp::Ordering::Greater => above.push(i as u32),
                std::cmp::Ordering::Equal => {}
            }
        }
        (below, above)
    }
}

pub fn multiplicity_table(orbit: &OrbitLabel) -> Result<MultiplicityTable> {
    let kind = orbit.kind();
    let w_data = w_sequence(orbit);
    let length = kind.top_fundamental_index() as usize / 2 + 1;
    let beta = beta_recursion(&w_data, kind.family(), length);
    MultiplicityTable::from_even_values(kind, w_data, &beta)
}

fn first_w_difference(sharp: &[u32], orbit: &[u32]) -> Option<WDifference> {
    let len = sharp.len().max(orbit.len());
    (0..len).find_map(|i| {
        let (x, w) = (sharp.get(i).copied(), orbit.get(i).copied());
        (x != w).then_some(WDifference {
            index: i,
            sharp: x,
            orbit: w,
        })
    })
}

/// Compares the table of `orbit` with that of `O♯`: a drop at some `i > 0`
/// means the closure is not normal. Kraft–Procesi data is attached alongside.
pub fn normality_by_multiplicity(orbit: &OrbitLabel) -> Result<NormalityReport> {
    let chains = kp_chains(orbit);
    let witnesses = chains
        .iter()
        .map(|c| witness(orbit, c))
        .collect::<Result<Vec<_>>>()?;
    let sharp = normality::sharp(orbit);
    let orbit_table = multiplicity_table(orbit)?;
    let sharp_table = multiplicity_table(&sharp)?;
    let (drops, _) = sharp_table.compare(&orbit_table);
    let w_difference = first_w_difference(&sharp_table.w_data().w, &orbit_table.w_data().w);
    Ok(NormalityReport {
        orbit: orbit.clone(),
        kp_normal: chains.is_empty(),
        chains,
        witnesses,
        sharp,
        mult_verdict: Verdict::from_normal(drops.is_empty()),
        drops,
        w_difference,
        orbit_table,
        sharp_table,
        caveat: caveat(orbit),
    })
}
