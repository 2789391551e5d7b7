//! Joint cumulants of Jack polynomials and their alpha-valuations: the cumulant of r
//! partitions vanishes to order r - 1 at alpha = 0.
//!
//! Run with `cargo run --example strong_factorization`.

use jackcum::cumulant::{jack_cumulant, verify_strong_factorization};
use jackcum::jack::JackEngine;
use jackcum::partition::Partition;

fn main() -> jackcum::Result<()> {
    let engine = JackEngine::from_env();
    let one = Partition::new(vec![1]);
    for r in 2..=4 {
        let lambdas = vec![one.clone(); r];
        println!(
            "kappa of {r} copies of (1) = {}",
            jack_cumulant(&engine, &lambdas)?
        );
    }

    let lambdas = [
        Partition::new(vec![2]),
        Partition::new(vec![1, 1]),
        Partition::new(vec![1]),
    ];
    let report = verify_strong_factorization(&engine, &lambdas)?;
    println!("\ncumulant verdict: {}", report.cumulant);
    for verdict in &report.t_form {
        println!("T verdict:        {verdict}");
    }
    if let Some(agreement) = &report.agreement {
        println!("agreement:        {agreement}");
    }
    println!("overall pass: {}", report.pass());
    Ok(())
}
