//! Compare an orbit's multiplicities with those of its sharp orbit; a drop at
//! some index signals a non-normal closure.
//!
//!     cargo run --example sharp_comparison -- sp:32 8 6 6 4 4 2 2

use nilorbit::{normality_by_multiplicity, orbit, GroupKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let (kind, columns): (GroupKind, Vec<u32>) = match args.next() {
        Some(group) => (
            group.parse()?,
            args.map(|a| a.parse()).collect::<Result<_, _>>()?,
        ),
        None => ("sp:32".parse()?, vec![8, 6, 6, 4, 4, 2, 2]),
    };
    let report = normality_by_multiplicity(&orbit(kind, &columns)?)?;
    println!("orbit {}  sharp {}", report.orbit, report.sharp);
    println!("{:>4} {:>8} {:>8}", "i", "sharp", "orbit");
    for i in report.orbit_table.display_indices() {
        let (s, o) = (
            &report.sharp_table.entries()[i],
            &report.orbit_table.entries()[i],
        );
        let mark = if s < o { "  drop" } else { "" };
        println!("{i:>4} {s:>8} {o:>8}{mark}");
    }
    println!("drops at {:?}", report.drops);
    println!(
        "multiplicity test: {}{}; column test: {}",
        report.mult_verdict,
        if report.mult_verdict_proven() {
            ""
        } else {
            " (unproven)"
        },
        report.kp_verdict()
    );
    Ok(())
}
