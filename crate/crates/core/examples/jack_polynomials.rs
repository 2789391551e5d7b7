//! Jack polynomials in the monomial, power-sum and elementary bases, their specializations,
//! and the full check battery for one partition.
//!
//! Run with `cargo run --example jack_polynomials`. Set `JACKCUM_CACHE_DIR` to reuse results.

use jackcum::algebra::q;
use jackcum::jack::{check_all, JackEngine};
use jackcum::partition::Partition;
use jackcum::symfunc::Basis;

fn main() -> jackcum::Result<()> {
    let engine = JackEngine::from_env();
    let lambda = Partition::new(vec![2, 1]);
    for basis in [Basis::Monomial, Basis::PowerSum, Basis::Elementary] {
        println!(
            "J{lambda} in {basis}: {}",
            engine.jack(&lambda, basis)?.function
        );
    }
    let j = engine.jack_m(&lambda)?.function;
    println!(
        "\nat alpha = 1 (hook-length times Schur): {}",
        j.eval_alpha(&q(1))?
    );
    println!("at alpha = 0: {}", j.eval_alpha(&q(0))?);

    println!("\nchecks for J(3,1,1):");
    for check in check_all(&engine, &Partition::new(vec![3, 1, 1]), true)? {
        println!("  {check}");
    }
    Ok(())
}
