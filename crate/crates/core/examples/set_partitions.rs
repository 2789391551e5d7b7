//! The lattice of set partitions: enumeration, ranks, joins and the Möbius function to the top.
//!
//! Run with `cargo run --example set_partitions`.

use jackcum::setpart::{mobius_to_top, SetPartition};

fn main() -> jackcum::Result<()> {
    let all = SetPartition::enumerate(4)?;
    println!("{} set partitions of a 4-element set", all.len());
    for pi in all.iter().take(6) {
        println!(
            "  {pi:<16} rank {}  mobius to top {:>3}",
            pi.rank(),
            pi.mobius_to_top()
        );
    }

    let a = SetPartition::new(4, &[&[1, 2], &[3], &[4]])?;
    let b = SetPartition::new(4, &[&[1], &[2, 3], &[4]])?;
    println!("\n{a} v {b} = {}", a.join(&b)?);

    println!("\nmobius(k blocks -> top) = (-1)^(k-1) (k-1)!:");
    for k in 1..=5 {
        println!("  k = {k}: {}", mobius_to_top(k));
    }
    Ok(())
}
