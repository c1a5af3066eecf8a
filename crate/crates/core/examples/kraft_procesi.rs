//! Normality of an orbit closure from its column combinatorics: lists each
//! obstructing chain and the larger orbit it produces.
//!
//!     cargo run --example kraft_procesi -- o:24 6 6 6 6

use nilorbit::{kp_chains, orbit, witness, GroupKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let cases: Vec<(GroupKind, Vec<u32>)> = match args.next() {
        Some(group) => vec![(
            group.parse()?,
            args.map(|a| a.parse()).collect::<Result<_, _>>()?,
        )],
        None => vec![
            ("sp:26".parse()?, vec![8, 6, 6, 6]),
            ("sp:24".parse()?, vec![6, 6, 6, 6]),
            ("sp:24".parse()?, vec![8, 6, 6, 4]),
            ("o:26".parse()?, vec![8, 6, 6, 6]),
            ("o:24".parse()?, vec![8, 6, 6, 4]),
            ("o:24".parse()?, vec![6, 6, 6, 6]),
        ],
    };
    for (kind, columns) in cases {
        let o = orbit(kind, &columns)?;
        let chains = kp_chains(&o);
        let verdict = if chains.is_empty() {
            "normal"
        } else {
            "not normal"
        };
        println!("{kind} {o}: {verdict}");
        for chain in &chains {
            println!(
                "  chain of {}s between pairs {} and {} -> {}",
                chain.value,
                chain.bottom_pair_index,
                chain.top_pair_index,
                witness(&o, chain)?
            );
        }
        if o.has_equal_top_columns() && !o.kind().is_symplectic() {
            println!("  (equal longest columns: the multiplicity test does not decide this one)");
        }
    }
    Ok(())
}
