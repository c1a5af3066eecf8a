//! Classify nilpotent orbits of a group, show rows vs. columns, duality and
//! the dominance order.
//!
//!     cargo run --example orbits -- sp:8

use nilorbit::{dominance_leq, enumerate_orbits, GroupKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let kind: GroupKind = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "sp:8".into())
        .parse()?;
    let orbits: Vec<_> = enumerate_orbits(kind)?.collect();
    println!("{kind}: {} orbits (rank {})", orbits.len(), kind.rank());
    for o in &orbits {
        let rows = o.rows();
        println!(
            "  columns {o:<18} rows {rows:<24} dual of rows {}",
            rows.dual()
        );
    }

    println!("\ndominance order on rows (each partition lies below those listed after it):");
    for a in &orbits {
        let above: Vec<String> = orbits
            .iter()
            .filter(|b| *b != a && dominance_leq(&a.rows(), &b.rows()).unwrap())
            .map(|b| b.rows().to_string())
            .collect();
        println!("  {} <= {}", a.rows(), above.join(" "));
    }
    Ok(())
}
