//! Infinitesimal character attached to an orbit with distinct columns.
//!
//!     cargo run --example infinitesimal_character -- sp:16 9 7

use nilorbit::{infinitesimal_character, orbit, GroupKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let cases: Vec<(GroupKind, Vec<u32>)> = match args.next() {
        Some(group) => vec![(
            group.parse()?,
            args.map(|a| a.parse()).collect::<Result<_, _>>()?,
        )],
        None => vec![
            ("sp:20".parse()?, vec![8, 6, 4, 2]),
            ("sp:16".parse()?, vec![9, 7]),
        ],
    };
    for (kind, columns) in cases {
        let o = orbit(kind, &columns)?;
        let chi = infinitesimal_character(&o)?;
        println!("{kind} {o}");
        println!("  chi = {}", chi.display_string());
        println!("  raw = {}", chi.raw_string());
        println!(
            "  {} coordinates, rank {}",
            chi.coordinate_count(),
            kind.rank()
        );
    }
    Ok(())
}
