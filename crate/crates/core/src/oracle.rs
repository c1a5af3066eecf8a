//! Brute-force check of the multiplicity engine.
//!
//! `N(s)` counts tuples `0 <= a_i <= w_i` summing to `s`. Orthogonal
//! multiplicities are `N(s)` and symplectic ones are `N(s) - N(s - 1)`. Nothing
//! here touches the β-recursion; only the W-sequence is shared.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{OrbitError, Result};
use crate::multiplicity::{w_sequence, MultiplicityTable};
use crate::orbit::{Family, OrbitLabel};

/// Direct enumeration is only attempted when the bounds sum to at most this.
pub const ENUMERATION_LIMIT: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedCompositionProblem {
    pub bounds: Vec<u32>,
    pub target: u32,
}

/// Histogram of tuple sums, by walking every tuple.
pub fn counts_by_enumeration(bounds: &[u32]) -> Vec<u64> {
    let total: u32 = bounds.iter().sum();
    let mut counts = vec![0u64; total as usize + 1];
    let mut tuple = vec![0u32; bounds.len()];
    let mut sum = 0usize;
    loop {
        counts[sum] += 1;
        // odometer increment
        let mut i = 0;
        loop {
            if i == bounds.len() {
                return counts;
            }
            if tuple[i] < bounds[i] {
                tuple[i] += 1;
                sum += 1;
                break;
            }
            sum -= tuple[i] as usize;
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Coefficients of `Π_i (1 + q + ... + q^{w_i})`.
pub fn counts_by_product(bounds: &[u32]) -> Vec<BigUint> {
    let mut poly = vec![BigUint::one()];
    for &b in bounds {
        let width = b as usize + 1;
        let mut next = vec![BigUint::zero(); poly.len() + width - 1];
        // sliding window sum over the last `width` coefficients
        let mut window = BigUint::zero();
        for (s, slot) in next.iter_mut().enumerate() {
            if s < poly.len() {
                window += &poly[s];
            }
            if s >= width {
                window -= &poly[s - width];
            }
            *slot = window.clone();
        }
        poly = next;
    }
    poly
}

/// `N(s)` for every `s`, cross-checked by enumeration when that is cheap.
pub fn composition_counts(bounds: &[u32]) -> Result<Vec<BigUint>> {
    let by_product = counts_by_product(bounds);
    if bounds.iter().sum::<u32>() <= ENUMERATION_LIMIT {
        let by_enumeration = counts_by_enumeration(bounds);
        let agree = by_enumeration.len() == by_product.len()
            && by_enumeration
                .iter()
                .zip(&by_product)
                .all(|(&a, b)| BigUint::from(a) == *b);
        if !agree {
            return Err(OrbitError::InternalInconsistency(format!(
                "composition counts for bounds {bounds:?} disagree: enumeration {by_enumeration:?}, product {by_product:?}"
            )));
        }
    }
    Ok(by_product)
}

pub fn count_bounded_compositions(problem: &BoundedCompositionProblem) -> Result<BigUint> {
    let counts = composition_counts(&problem.bounds)?;
    Ok(counts
        .get(problem.target as usize)
        .cloned()
        .unwrap_or_default())
}

pub fn is_unimodal(counts: &[BigUint]) -> bool {
    let peak = counts.windows(2).take_while(|w| w[0] <= w[1]).count();
    counts[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// The multiplicity table of `orbit`, recomputed from composition counts.
pub fn oracle_table(orbit: &OrbitLabel) -> Result<MultiplicityTable> {
    let kind = orbit.kind();
    let w_data = w_sequence(orbit);
    let counts = composition_counts(&w_data.w)?;
    let n = |s: i64| -> BigInt {
        if s < 0 {
            BigInt::zero()
        } else {
            counts.get(s as usize).cloned().unwrap_or_default().into()
        }
    };
    let length = kind.top_fundamental_index() as i64 / 2 + 1;
    let values: Vec<BigInt> = (0..length)
        .map(|s| match kind.family() {
            Family::Symplectic => n(s) - n(s - 1),
            Family::Orthogonal => n(s),
        })
        .collect();
    MultiplicityTable::from_even_values(kind, w_data, &values)
}
