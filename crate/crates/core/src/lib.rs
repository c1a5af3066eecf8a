//! Nilpotent orbits of `Sp(2m, C)` and `O(n, C)`: multiplicities of
//! fundamental representations in their rings of regular functions, and two
//! independent tests for normality of their closures.
//!
//! ```
//! use nilorbit::{multiplicity_table, normality_by_multiplicity, orbit, GroupKind};
//!
//! let sp32 = GroupKind::symplectic(32).unwrap();
//! let o = orbit(sp32, &[8, 6, 6, 4, 4, 2, 2]).unwrap();
//! let table = multiplicity_table(&o).unwrap();
//! assert_eq!(table.entries()[16], 3u32.into());
//!
//! let report = normality_by_multiplicity(&o).unwrap();
//! assert!(!report.kp_normal);
//! assert!(!report.mult_verdict.is_normal());
//! ```

pub mod cli;
pub mod error;
pub mod infchar;
pub mod multiplicity;
pub mod normality;
pub mod oracle;
pub mod orbit;
pub mod partition;

pub use error::{OrbitError, Result};
pub use infchar::{infinitesimal_character, HalfInt, InfinitesimalCharacter};
pub use multiplicity::{
    beta_recursion, multiplicity_table, normality_by_multiplicity, remove_pairs, w_sequence,
    w_sequence_from_columns, MultiplicityTable, WData,
};
pub use normality::{kp_chains, sharp, witness, Caveat, KpChain, NormalityReport, Verdict};
pub use oracle::{count_bounded_compositions, oracle_table, BoundedCompositionProblem};
pub use orbit::{
    enumerate_orbits, enumerate_orbits_with_bound, orbit, orbits_up_to, validate_orbit, Family,
    GroupKind, InputForm, OrbitLabel, DEFAULT_ENUMERATION_BOUND,
};
pub use partition::{dominance_leq, dual, partitions, Partition};
