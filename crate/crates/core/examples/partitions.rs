//! Integer partitions: conjugates, dominance, arm/leg statistics and the three hook products.
//!
//! Run with `cargo run --example partitions`.

use jackcum::partition::{partitions_of, Partition};

fn main() -> jackcum::Result<()> {
    let lambda = Partition::from_parts(vec![3, 2, 2, 1])?;
    println!(
        "lambda       = {lambda}  (size {}, length {})",
        lambda.size(),
        lambda.len()
    );
    println!("conjugate    = {}", lambda.conjugate());
    println!("b(lambda)    = {}", lambda.b());
    println!("z_lambda     = {}", lambda.z());
    println!("hook         = {}", lambda.hook());
    println!("hook'        = {}", lambda.hook_prime());
    println!("hook''       = {}", lambda.hook_dprime());

    let mu = Partition::new(vec![2, 1]);
    println!("\n{lambda} (+) {mu} = {}", lambda.oplus(&mu));
    println!("{lambda} u {mu} = {}", lambda.union(&mu));

    println!("\npartitions of 5, with the ones dominated by (3,1,1):");
    let pivot = Partition::new(vec![3, 1, 1]);
    for p in partitions_of(5)? {
        let mark = if p.dominance_leq(&pivot)? { "<=" } else { "  " };
        println!("  {mark} {p}");
    }
    Ok(())
}
