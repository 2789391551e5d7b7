//! The log-cumulant identity for a column-indexed function F with F(empty) = 1, checked
//! coefficient by coefficient for the hook product.
//!
//! Run with `cargo run --example log_cumulants`.

use jackcum::algebra::AlphaRational;
use jackcum::gj::verify_log_cumulant_identity;
use jackcum::partition::Partition;

fn main() -> jackcum::Result<()> {
    let hook = |l: &Partition| Ok(AlphaRational::from_poly(l.hook()));
    for check in verify_log_cumulant_identity(hook, 3, "hook")? {
        println!("{check}");
    }
    Ok(())
}
