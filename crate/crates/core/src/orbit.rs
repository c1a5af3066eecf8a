//! Nilpotent orbits of `Sp(2m)` and `O(n)` labelled by column sizes.
//!
//! Columns are indexed the way the formulas quote them: index 0 is the
//! shortest column, the longest sits at index `len - 1`, and any index outside
//! that range reads as 0. Storage and display are longest-first.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{OrbitError, Result};
use crate::partition::{partitions, Partition, Partitions};

/// Enumeration refuses dimensions above this unless a bound is given.
pub const DEFAULT_ENUMERATION_BOUND: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Symplectic,
    Orthogonal,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Symplectic => "sp",
            Family::Orthogonal => "o",
        }
    }
}

impl FromStr for Family {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" | "c" | "symplectic" => Ok(Family::Symplectic),
            "o" | "so" | "orthogonal" => Ok(Family::Orthogonal),
            _ => Err(OrbitError::InvalidGroup(s.to_string())),
        }
    }
}

/// `Sp(dimension)` or `O(dimension)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupKind {
    family: Family,
    dimension: u32,
}

impl GroupKind {
    pub fn new(family: Family, dimension: u32) -> Result<Self> {
        if dimension == 0 {
            return Err(OrbitError::ZeroDimension);
        }
        if family == Family::Symplectic && dimension % 2 == 1 {
            return Err(OrbitError::OddSymplecticDimension(dimension));
        }
        Ok(GroupKind { family, dimension })
    }

    pub fn symplectic(dimension: u32) -> Result<Self> {
        Self::new(Family::Symplectic, dimension)
    }

    pub fn orthogonal(dimension: u32) -> Result<Self> {
        Self::new(Family::Orthogonal, dimension)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn dimension(self) -> u32 {
        self.dimension
    }

    pub fn is_symplectic(self) -> bool {
        self.family == Family::Symplectic
    }

    /// `m` for `Sp(2m)`, `⌊n/2⌋` for `O(n)`.
    pub fn rank(self) -> u32 {
        self.dimension / 2
    }

    /// Largest fundamental-representation index tracked in multiplicity
    /// tables: `m` for `Sp(2m)`, `n` for `O(n)`.
    pub fn top_fundamental_index(self) -> u32 {
        match self.family {
            Family::Symplectic => self.dimension / 2,
            Family::Orthogonal => self.dimension,
        }
    }

    /// Column counts of canonical labels are odd for `Sp` and even for `O`.
    fn wants_odd_column_count(self) -> bool {
        self.is_symplectic()
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.tag(), self.dimension)
    }
}

impl FromStr for GroupKind {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self> {
        let (family, dim) = s
            .split_once(':')
            .ok_or_else(|| OrbitError::InvalidGroup(s.to_string()))?;
        let family = family.parse()?;
        let dim = dim
            .trim()
            .parse()
            .map_err(|_| OrbitError::InvalidGroup(s.to_string()))?;
        GroupKind::new(family, dim)
    }
}

impl Serialize for GroupKind {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Whether user-supplied parts are Jordan block sizes or column sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputForm {
    Rows,
    Columns,
}

/// A validated orbit in canonical column form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitLabel {
    kind: GroupKind,
    columns: Vec<u32>,
}

impl OrbitLabel {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Canonical columns, longest first, including parity padding.
    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Index of the longest column.
    pub fn top_index(&self) -> usize {
        self.columns.len() - 1
    }

    /// Column `c_index`; 0 outside the stored range.
    pub fn column(&self, index: i64) -> u32 {
        column_at(&self.columns, index)
    }

    /// Column sizes as a partition (padding dropped).
    pub fn column_partition(&self) -> Partition {
        Partition::from_unsorted(self.columns.clone())
    }

    /// Jordan block sizes.
    pub fn rows(&self) -> Partition {
        self.column_partition().dual()
    }

    /// Orthogonal orbit whose two longest columns coincide.
    pub fn has_equal_top_columns(&self) -> bool {
        !self.kind.is_symplectic() && self.columns.len() >= 2 && self.columns[0] == self.columns[1]
    }

    /// True when no two adjacent canonical columns are equal.
    pub fn has_distinct_columns(&self) -> bool {
        self.columns.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `columns[len - 1 - index]`, or 0 when out of range.
pub(crate) fn column_at(columns: &[u32], index: i64) -> u32 {
    if index < 0 || index as usize >= columns.len() {
        return 0;
    }
    columns[columns.len() - 1 - index as usize]
}

/// Strips zeros, then appends the single zero needed to reach the parity of
/// column count the family requires.
fn pad_columns(kind: GroupKind, parts: &[u32]) -> Vec<u32> {
    let mut columns: Vec<u32> = parts.iter().copied().filter(|&c| c > 0).collect();
    if (columns.len() % 2 == 1) != kind.wants_odd_column_count() {
        columns.push(0);
    }
    columns
}

fn check_parity(columns: &[u32]) -> Result<()> {
    let top = columns.len() as i64 - 1;
    for i in 0..=top / 2 {
        let (upper, lower) = (column_at(columns, 2 * i), column_at(columns, 2 * i - 1));
        if (upper + lower) % 2 == 1 {
            return Err(OrbitError::ParityViolation {
                upper_index: 2 * i,
                lower_index: 2 * i - 1,
                upper,
                lower,
            });
        }
    }
    Ok(())
}

/// Validates rows or columns against the classification of orbits in `kind`
/// and returns the canonical label.
pub fn validate_orbit(kind: GroupKind, parts: &[u32], given_as: InputForm) -> Result<OrbitLabel> {
    let input = Partition::new(parts.to_vec())?;
    let columns = match given_as {
        InputForm::Columns => input,
        InputForm::Rows => input.dual(),
    };
    let columns = pad_columns(kind, columns.parts());
    check_parity(&columns)?;
    let total: u32 = columns.iter().sum();
    if total != kind.dimension() {
        return Err(OrbitError::SumMismatch {
            expected: kind.dimension(),
            found: total,
        });
    }
    Ok(OrbitLabel { kind, columns })
}

/// Shorthand for column input.
pub fn orbit(kind: GroupKind, columns: &[u32]) -> Result<OrbitLabel> {
    validate_orbit(kind, columns, InputForm::Columns)
}

/// Every orbit of `kind`, in lexicographically decreasing column order.
pub fn enumerate_orbits(kind: GroupKind) -> Result<Orbits> {
    enumerate_orbits_with_bound(kind, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_orbits_with_bound(kind: GroupKind, bound: u32) -> Result<Orbits> {
    if kind.dimension() > bound {
        return Err(OrbitError::BoundExceeded {
            dimension: kind.dimension(),
            bound,
        });
    }
    Ok(Orbits {
        kind,
        inner: partitions(kind.dimension()),
    })
}

/// Every orbit of every group of `family` with dimension at most `max_dimension`,
/// smallest group first.
pub fn orbits_up_to(family: Family, max_dimension: u32) -> impl Iterator<Item = OrbitLabel> {
    (1..=max_dimension)
        .filter_map(move |d| GroupKind::new(family, d).ok())
        .flat_map(|kind| enumerate_orbits_with_bound(kind, u32::MAX).expect("bound is unlimited"))
}

#[derive(Debug, Clone)]
pub struct Orbits {
    kind: GroupKind,
    inner: Partitions,
}

impl Iterator for Orbits {
    type Item = OrbitLabel;

    fn next(&mut self) -> Option<OrbitLabel> {
        let kind = self.kind;
        self.inner
            .by_ref()
            .find_map(|p| validate_orbit(kind, p.parts(), InputForm::Columns).ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(d: u32) -> GroupKind {
        GroupKind::symplectic(d).unwrap()
    }

    fn o(d: u32) -> GroupKind {
        GroupKind::orthogonal(d).unwrap()
    }

    #[test]
    fn orthogonal_example_is_valid_but_not_symplectic() {
        let label = orbit(o(21), &[7, 6, 4, 4]).unwrap();
        assert_eq!(label.columns(), &[7, 6, 4, 4]);
        assert!(matches!(
            orbit(sp(22), &[7, 6, 4, 4]),
            Err(OrbitError::ParityViolation {
                upper_index: 4,
                lower_index: 3,
                ..
            })
        ));
    }

    #[test]
    fn symplectic_padding() {
        let label = orbit(sp(4), &[3, 1]).unwrap();
        assert_eq!(label.columns(), &[3, 1, 0]);
        assert_eq!(label.rows().parts(), &[2, 1, 1]);
        assert_eq!(label.column(2), 3);
        assert_eq!(label.column(0), 0);
        assert_eq!(label.column(-1), 0);
        assert_eq!(label.column(7), 0);
    }

    #[test]
    fn rows_and_columns_agree() {
        let from_rows = validate_orbit(sp(4), &[2, 1, 1], InputForm::Rows).unwrap();
        assert_eq!(from_rows, orbit(sp(4), &[3, 1]).unwrap());
    }

    #[test]
    fn extra_zeros_normalise() {
        let a = orbit(sp(4), &[3, 1, 0, 0, 0]).unwrap();
        assert_eq!(a.columns(), &[3, 1, 0]);
        let b = orbit(o(24), &[6, 6, 6, 6, 0, 0]).unwrap();
        assert_eq!(b.columns(), &[6, 6, 6, 6]);
    }

    #[test]
    fn sum_mismatch() {
        assert_eq!(
            orbit(o(20), &[7, 6, 4, 4]),
            Err(OrbitError::SumMismatch {
                expected: 20,
                found: 21
            })
        );
    }

    #[test]
    fn odd_parts_need_even_multiplicity() {
        assert_eq!(orbit(sp(2), &[1, 1]).unwrap().columns(), &[1, 1, 0]);
        // rows [3,2,1]: parts 3 and 1 appear once
        assert!(matches!(
            orbit(sp(6), &[3, 2, 1]),
            Err(OrbitError::ParityViolation {
                upper_index: 0,
                lower_index: -1,
                ..
            })
        ));
        assert!(orbit(sp(6), &[3, 3]).is_ok());
    }

    #[test]
    fn group_parsing() {
        assert_eq!("sp:32".parse::<GroupKind>().unwrap(), sp(32));
        assert_eq!("o:19".parse::<GroupKind>().unwrap(), o(19));
        assert_eq!(
            "sp:21".parse::<GroupKind>(),
            Err(OrbitError::OddSymplecticDimension(21))
        );
        assert!("gl:3".parse::<GroupKind>().is_err());
        assert!("sp".parse::<GroupKind>().is_err());
        assert_eq!("o:0".parse::<GroupKind>(), Err(OrbitError::ZeroDimension));
    }

    #[test]
    fn small_enumerations() {
        let sp2: Vec<_> = enumerate_orbits(sp(2)).unwrap().collect();
        assert_eq!(sp2.len(), 2);
        assert_eq!(sp2[0].columns(), &[2]);
        assert_eq!(sp2[1].columns(), &[1, 1, 0]);

        let sp4: Vec<_> = enumerate_orbits(sp(4))
            .unwrap()
            .map(|l| l.rows().parts().to_vec())
            .collect();
        assert_eq!(
            sp4,
            vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2], vec![4]]
        );

        let o1: Vec<_> = enumerate_orbits(o(1)).unwrap().collect();
        assert_eq!(o1.len(), 1);
        assert_eq!(o1[0].rows().parts(), &[1]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            enumerate_orbits(sp(42)),
            Err(OrbitError::BoundExceeded {
                dimension: 42,
                bound: 40
            })
        ));
        assert!(enumerate_orbits_with_bound(sp(42), 42).is_ok());
    }

    #[test]
    fn very_even_partition_is_one_orbit() {
        let all: Vec<_> = enumerate_orbits(o(8))
            .unwrap()
            .filter(|l| l.rows().parts() == [4, 4])
            .collect();
        assert_eq!(all.len(), 1);
    }
}
