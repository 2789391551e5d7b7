//! The triple series phi and psi, the coefficients h read off psi, and their tabulation.
//!
//! Run with `cargo run --example h_table -- 3` (degree defaults to 3).

use jackcum::gj::{check_exp_log, check_suite, extract_h, phi_table, psi_from_phi, write_csv};
use jackcum::jack::JackEngine;

fn main() -> jackcum::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let engine = JackEngine::from_env();
    let phi = phi_table(&engine, n)?;
    let psi = psi_from_phi(&phi);
    println!("exp(log) round trip: {}", check_exp_log(&phi, &psi)?);

    let entries = extract_h(&psi)?;
    for e in entries.iter().filter(|e| e.n == 2) {
        println!(
            "{:<40} beta-coefficients {}",
            e.label(),
            e.beta_coeffs_string().unwrap_or_default()
        );
    }
    let report = check_suite(&entries)?;
    println!("\n{}", report.summary());

    println!("\nCSV, degree {n}:");
    let top: Vec<_> = entries.into_iter().filter(|e| e.n == n).take(5).collect();
    write_csv(&top, std::io::stdout().lock())?;
    Ok(())
}
