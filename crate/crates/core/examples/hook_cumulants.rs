//! Families indexed by subsets: hook products of sums of partitions, the affine-family lemma,
//! and the IE statistic.
//!
//! Run with `cargo run --example hook_cumulants`.

use jackcum::algebra::{AlphaPolynomial, AlphaRational};
use jackcum::cumulant::{
    hook_family, ie_stat, verify_affine_lemma, verify_hook_factorization, HookVariant,
};
use jackcum::partition::Partition;

fn main() -> jackcum::Result<()> {
    let lambdas = [
        Partition::new(vec![2, 1]),
        Partition::new(vec![1]),
        Partition::new(vec![2]),
    ];
    for variant in [HookVariant::Hook, HookVariant::HookDoublePrime] {
        let family = hook_family(&lambdas, variant)?;
        println!(
            "{} family values: {:?}",
            variant.name(),
            family
                .values()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
        println!("  {}", verify_hook_factorization(&lambdas, variant)?);
    }

    // v_I = C * prod_{i in I} (1 + alpha c_i) has small cumulative errors.
    let c = AlphaRational::from_int(3);
    let cs = [
        AlphaRational::from_int(2),
        AlphaRational::from_poly(AlphaPolynomial::from_ints(&[1, 1])),
        AlphaRational::from_int(-1),
    ];
    println!("\naffine family: {}", verify_affine_lemma(&c, &cs, 0b111)?);

    println!("\nIE((2,1) | (1) | (2)) = {}", ie_stat(&lambdas));
    Ok(())
}
