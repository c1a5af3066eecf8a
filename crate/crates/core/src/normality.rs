//! Kraft–Procesi chains, their degeneration witnesses, and the `O♯` orbit.

use serde::Serialize;

use crate::error::{OrbitError, Result};
use crate::multiplicity::MultiplicityTable;
use crate::orbit::{orbit, OrbitLabel};

/// A maximal run `c_{2i-1} = ... = c_{2j-2}` of equal columns whose
/// neighbours `c_{2i}` and `c_{2j-3}` differ from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KpChain {
    pub top_pair_index: u32,
    pub bottom_pair_index: u32,
    pub value: u32,
}

impl KpChain {
    /// Index of the longest column in the run, `2i - 1`.
    pub fn top_column(&self) -> usize {
        2 * self.top_pair_index as usize - 1
    }

    /// Index of the shortest column in the run, `2j - 2`.
    pub fn bottom_column(&self) -> usize {
        2 * self.bottom_pair_index as usize - 2
    }
}

/// All Kraft–Procesi chains of `orbit`; empty exactly when the closure is normal.
///
/// For orthogonal orbits the column above the longest one reads as 0, so a
/// run may start at the longest column.
pub fn kp_chains(orbit: &OrbitLabel) -> Vec<KpChain> {
    let len = orbit.len();
    let mut chains = Vec::new();
    let mut low = 0;
    while low < len {
        let value = orbit.column(low as i64);
        let mut high = low;
        while high + 1 < len && orbit.column(high as i64 + 1) == value {
            high += 1;
        }
        // run [low, high] is maximal, so both neighbours differ from `value`
        if value != 0 && low % 2 == 0 && high % 2 == 1 {
            chains.push(KpChain {
                top_pair_index: (high as u32).div_ceil(2),
                bottom_pair_index: low as u32 / 2 + 1,
                value,
            });
        }
        low = high + 1;
    }
    chains.reverse();
    chains
}

/// The orbit along which the closure fails to be normal: chain top `+2`,
/// chain bottom `-2`.
pub fn witness(source: &OrbitLabel, chain: &KpChain) -> Result<OrbitLabel> {
    let top = chain.top_column();
    let bottom = chain.bottom_column();
    let len = source.len();
    if top >= len || bottom > top {
        return Err(OrbitError::InternalInconsistency(format!(
            "chain {chain:?} does not fit orbit {source}"
        )));
    }
    let mut columns = source.columns().to_vec();
    columns[len - 1 - top] += 2;
    columns[len - 1 - bottom] = columns[len - 1 - bottom].checked_sub(2).ok_or_else(|| {
        OrbitError::InternalInconsistency(format!("chain bottom of {source} is below 2"))
    })?;
    orbit(source.kind(), &columns).map_err(|e| {
        OrbitError::InternalInconsistency(format!(
            "witness {columns:?} for {source} failed validation: {e}"
        ))
    })
}

/// `O♯`: each column pair `(c_{2i}, c_{2i-1})` replaced by two copies of its
/// average. `c_0` is kept, and so is the longest column of an orthogonal orbit.
pub fn sharp(source: &OrbitLabel) -> OrbitLabel {
    let mut columns = source.columns().to_vec();
    let first_pair = if source.kind().is_symplectic() { 0 } else { 1 };
    // pairs sit at storage positions (p, p + 1); the last position is c_0
    let mut p = first_pair;
    while p + 1 < columns.len() - 1 {
        let avg = (columns[p] + columns[p + 1]) / 2;
        columns[p] = avg;
        columns[p + 1] = avg;
        p += 2;
    }
    orbit(source.kind(), &columns).expect("averaging even-sum pairs keeps the orbit valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Normal,
    NotNormal,
}

impl Verdict {
    pub fn from_normal(normal: bool) -> Self {
        if normal {
            Verdict::Normal
        } else {
            Verdict::NotNormal
        }
    }

    pub fn is_normal(self) -> bool {
        self == Verdict::Normal
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Normal => "normal",
            Verdict::NotNormal => "not normal",
        })
    }
}

/// Hypotheses under which the multiplicity verdict is not backed by a proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Caveat {
    None,
    /// Orthogonal orbit with `b_{2k+1} = b_{2k}`.
    OrthogonalEqualTopColumns,
}

pub fn caveat(orbit: &OrbitLabel) -> Caveat {
    if orbit.has_equal_top_columns() {
        Caveat::OrthogonalEqualTopColumns
    } else {
        Caveat::None
    }
}

/// First position where the W-sequences of `O♯` and `O` differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WDifference {
    pub index: usize,
    pub sharp: Option<u32>,
    pub orbit: Option<u32>,
}

impl WDifference {
    /// `x_m < w_m`; false when either side has run out of entries.
    pub fn sharp_is_smaller(&self) -> bool {
        matches!((self.sharp, self.orbit), (Some(x), Some(w)) if x < w)
    }
}

/// Both normality criteria for one orbit, with their supporting data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    pub orbit: OrbitLabel,
    pub kp_normal: bool,
    pub chains: Vec<KpChain>,
    pub witnesses: Vec<OrbitLabel>,
    pub sharp: OrbitLabel,
    pub orbit_table: MultiplicityTable,
    pub sharp_table: MultiplicityTable,
    /// Indices `i > 0` with `[R[O♯]:μ_i] < [R[O]:μ_i]`.
    pub drops: Vec<u32>,
    pub w_difference: Option<WDifference>,
    pub mult_verdict: Verdict,
    pub caveat: Caveat,
}

impl NormalityReport {
    pub fn kp_verdict(&self) -> Verdict {
        Verdict::from_normal(self.kp_normal)
    }

    /// Whether the multiplicity verdict is covered by the proven criterion.
    pub fn mult_verdict_proven(&self) -> bool {
        self.caveat == Caveat::None
    }

    /// Both criteria give the same verdict.
    pub fn criteria_agree(&self) -> bool {
        self.kp_verdict() == self.mult_verdict
    }

    /// Indices where the sharp table exceeds the orbit table.
    pub fn rises(&self) -> Vec<u32> {
        self.sharp_table.compare(&self.orbit_table).1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::GroupKind;

    fn sp(cols: &[u32]) -> OrbitLabel {
        let dim = cols.iter().sum();
        orbit(GroupKind::symplectic(dim).unwrap(), cols).unwrap()
    }

    fn o(cols: &[u32]) -> OrbitLabel {
        let dim = cols.iter().sum();
        orbit(GroupKind::orthogonal(dim).unwrap(), cols).unwrap()
    }

    #[test]
    fn symplectic_chain_examples() {
        let label = sp(&[8, 6, 6, 4]);
        let chains = kp_chains(&label);
        assert_eq!(
            chains,
            vec![KpChain {
                top_pair_index: 2,
                bottom_pair_index: 2,
                value: 6
            }]
        );
        assert_eq!(chains[0].top_column(), 3);
        assert_eq!(chains[0].bottom_column(), 2);
        assert!(kp_chains(&sp(&[8, 6, 6, 6])).is_empty());
        assert!(kp_chains(&sp(&[6, 6, 6, 6])).is_empty());
    }

    #[test]
    fn orthogonal_chain_examples() {
        let chains = kp_chains(&o(&[6, 6, 6, 6]));
        assert_eq!(
            chains,
            vec![KpChain {
                top_pair_index: 2,
                bottom_pair_index: 1,
                value: 6
            }]
        );
        assert!(kp_chains(&o(&[8, 6, 6, 6])).is_empty());
        assert!(kp_chains(&o(&[8, 6, 6, 4])).is_empty());
    }

    #[test]
    fn strictly_decreasing_columns_have_no_chain() {
        assert!(kp_chains(&sp(&[9, 7])).is_empty());
        assert!(kp_chains(&sp(&[8, 6, 4, 2])).is_empty());
    }

    #[test]
    fn several_chains_listed_longest_first() {
        let label = sp(&[10, 6, 6, 4, 2, 2]);
        assert_eq!(label.columns(), &[10, 6, 6, 4, 2, 2, 0]);
        // the run of 2s sits at c_2, c_1: odd bottom index, not a chain
        let chains = kp_chains(&label);
        assert_eq!(chains.iter().map(|c| c.value).collect::<Vec<_>>(), vec![6]);
        let label = sp(&[8, 6, 6, 4, 4, 2, 2]);
        let chains = kp_chains(&label);
        assert_eq!(
            chains.iter().map(|c| c.value).collect::<Vec<_>>(),
            vec![6, 4, 2]
        );
    }

    #[test]
    fn witness_examples() {
        let label = sp(&[8, 6, 6, 4]);
        let chain = kp_chains(&label)[0];
        assert_eq!(witness(&label, &chain).unwrap(), sp(&[8, 8, 4, 4]));

        let label = o(&[6, 6, 6, 6]);
        let chain = kp_chains(&label)[0];
        assert_eq!(witness(&label, &chain).unwrap(), o(&[8, 6, 6, 4]));
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(
            sharp(&sp(&[8, 6, 6, 4, 4, 2, 2])),
            sp(&[7, 7, 5, 5, 3, 3, 2])
        );
        assert_eq!(sharp(&o(&[7, 5, 3, 3, 1])), o(&[7, 4, 4, 2, 2]));
        assert_eq!(sharp(&sp(&[6, 6, 6, 6])), sp(&[6, 6, 6, 6]));
        assert_eq!(sharp(&sp(&[2])), sp(&[2]));
        assert_eq!(sharp(&o(&[1])), o(&[1]));
    }

    #[test]
    fn caveat_detection() {
        assert_eq!(caveat(&o(&[6, 6, 6, 6])), Caveat::OrthogonalEqualTopColumns);
        assert_eq!(caveat(&o(&[7, 5, 3, 3, 1])), Caveat::None);
        assert_eq!(caveat(&sp(&[6, 6, 6, 6])), Caveat::None);
    }
}
