//! Run every check over all orbits up to a dimension: engine vs. oracle,
//! column test vs. multiplicity test, sharp dominance.
//!
//!     cargo run --release --example exhaustive_cross_check -- 26 25

use std::time::Instant;

use nilorbit::cli::{cross_check_orbit, CrossCheckSummary};
use nilorbit::{orbits_up_to, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let sp_max: u32 = args.next().map_or(Ok(26), |a| a.parse())?;
    let o_max: u32 = args.next().map_or(Ok(25), |a| a.parse())?;
    for (family, max) in [(Family::Symplectic, sp_max), (Family::Orthogonal, o_max)] {
        let start = Instant::now();
        let mut summary = CrossCheckSummary::default();
        for o in orbits_up_to(family, max) {
            cross_check_orbit(&o, &mut summary)?;
        }
        println!("{} up to {max} ({:?}):", family.tag(), start.elapsed());
        println!("{summary:#?}");
        println!("passed: {}\n", summary.passed());
    }
    Ok(())
}
