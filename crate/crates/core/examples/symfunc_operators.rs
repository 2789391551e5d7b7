//! Symmetric functions over Q(alpha): basis changes, products, the alpha-scalar product and the
//! Laplace-Beltrami operator acting on monomials.
//!
//! Run with `cargo run --example symfunc_operators`.

use jackcum::partition::Partition;
use jackcum::symfunc::{apply_dalpha, eigenvalue, Basis, SymFunc};

fn main() -> jackcum::Result<()> {
    let m21 = SymFunc::m(Partition::new(vec![2, 1]));
    println!("m[2,1] = {}", m21.to_basis(Basis::PowerSum)?);
    println!("       = {}", m21.to_basis(Basis::Elementary)?);

    let p1 = SymFunc::p(Partition::new(vec![1]));
    println!("\np[1]^3 in m: {}", p1.pow(3)?.to_basis(Basis::Monomial)?);

    let p2 = SymFunc::p(Partition::new(vec![2]));
    println!("<p[2], p[2]> = {}", p2.scalar_product(&p2)?);

    let vars = 3;
    println!(
        "\nD_alpha on m[2,1] with N = {vars}: {}",
        apply_dalpha(&m21, Some(vars))?
    );
    println!(
        "eigenvalue attached to (2,1) at N = {vars}: {}",
        eigenvalue(&Partition::new(vec![2, 1]), vars)
    );
    Ok(())
}
