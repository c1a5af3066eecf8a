//! Infinitesimal characters of spherical unipotent representations attached
//! to orbits whose canonical columns are pairwise distinct.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{OrbitError, Result};
use crate::orbit::OrbitLabel;

/// An integer or half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_halves(halves: i64) -> Self {
        HalfInt(halves)
    }

    pub fn halves(self) -> i64 {
        self.0
    }

    pub fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Which columns a block was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "index")]
pub enum BlockSource {
    /// `χ_i` from the pair `(c_{2i}, c_{2i-1})`, `i >= 1`.
    Pair(u32),
    /// `χ_0` from `c_0`.
    Shortest,
    /// `χ_{k+1}` from the longest column of an orthogonal orbit.
    Longest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterBlock {
    pub source: BlockSource,
    pub coordinates: Vec<HalfInt>,
}

/// Raw signed blocks, longest-column pair first. Empty blocks are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfinitesimalCharacter {
    pub blocks: Vec<CharacterBlock>,
}

impl InfinitesimalCharacter {
    pub fn coordinate_count(&self) -> usize {
        self.blocks.iter().map(|b| b.coordinates.len()).sum()
    }

    /// Blocks with every coordinate replaced by its absolute value, order kept.
    pub fn display_blocks(&self) -> Vec<Vec<HalfInt>> {
        self.blocks
            .iter()
            .map(|b| b.coordinates.iter().map(|c| c.abs()).collect())
            .collect()
    }

    /// `(4,3,2,1,0,1,2; 2,1,0)` style rendering of the display form.
    pub fn display_string(&self) -> String {
        let blocks: Vec<String> = self
            .display_blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("({})", blocks.join("; "))
    }

    /// Same layout as `display_string`, with signs.
    pub fn raw_string(&self) -> String {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.coordinates
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("({})", blocks.join("; "))
    }
}

// Halves from `from` down to `to` inclusive in steps of one (two halves).
fn descending(from: i64, to: i64) -> Vec<HalfInt> {
    if from < to {
        return Vec::new();
    }
    (0..=(from - to) / 2)
        .map(|s| HalfInt(from - 2 * s))
        .collect()
}

pub fn infinitesimal_character(orbit: &OrbitLabel) -> Result<InfinitesimalCharacter> {
    let len = orbit.len();
    if let Some(p) = orbit.columns().windows(2).position(|w| w[0] == w[1]) {
        return Err(OrbitError::NonDistinctColumns {
            index: len - 1 - p,
            value: orbit.columns()[p],
        });
    }
    let c = |i: i64| orbit.column(i) as i64;
    // symplectic: c_{2k} is the top column; orthogonal: b_{2k+1} is, and the
    // pairs run below it
    let top = orbit.top_index() as i64;
    let k = if orbit.kind().is_symplectic() {
        top / 2
    } else {
        (top - 1) / 2
    };

    let mut blocks = Vec::new();
    for i in (1..=k).rev() {
        blocks.push(CharacterBlock {
            source: BlockSource::Pair(i as u32),
            coordinates: descending(c(2 * i), -c(2 * i - 1) + 2),
        });
    }
    blocks.push(CharacterBlock {
        source: BlockSource::Shortest,
        coordinates: descending(c(0), 2),
    });
    if !orbit.kind().is_symplectic() {
        let longest = c(top);
        let end = if longest % 2 == 1 { 1 } else { 0 };
        blocks.push(CharacterBlock {
            source: BlockSource::Longest,
            coordinates: descending(longest - 2, end),
        });
    }
    blocks.retain(|b| !b.coordinates.is_empty());
    Ok(InfinitesimalCharacter { blocks })
}
