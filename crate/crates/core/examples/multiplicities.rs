//! Multiplicities of fundamental representations in the ring of regular
//! functions on an orbit, with the W-sequence they come from and an
//! independent check by counting bounded compositions.
//!
//!     cargo run --example multiplicities -- sp:32 8 6 6 4 4 2 2

use nilorbit::{multiplicity_table, oracle_table, orbit, GroupKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let (kind, columns): (GroupKind, Vec<u32>) = match args.next() {
        Some(group) => (
            group.parse()?,
            args.map(|a| a.parse()).collect::<Result<_, _>>()?,
        ),
        None => ("o:19".parse()?, vec![7, 5, 3, 3, 1]),
    };
    let o = orbit(kind, &columns)?;
    let table = multiplicity_table(&o)?;
    let w = table.w_data();
    println!("{kind} orbit {o}, rows {}", o.rows());
    println!(
        "  removed pairs {:?}, remaining {:?}",
        w.removed, w.remaining
    );
    println!("  half sums {:?}, W = {:?}, k = {}", w.half_sums, w.w, w.k);
    for i in table.display_indices() {
        println!("  m_{i:<2} = {}", table.entries()[i]);
    }

    let oracle = oracle_table(&o)?;
    assert_eq!(oracle.entries(), table.entries());
    println!("composition count agrees at every index");
    Ok(())
}
