//! Exact arithmetic in Q(alpha): canonical rational functions, valuations at alpha = 0, and the
//! change of variable beta = alpha - 1.
//!
//! Run with `cargo run --example exact_algebra`.

use jackcum::algebra::{q, AlphaPolynomial, AlphaRational};

fn main() -> jackcum::Result<()> {
    let num = AlphaPolynomial::from_ints(&[0, 2, 2]); // 2a + 2a^2
    let den = AlphaPolynomial::from_ints(&[1, 1]); // 1 + a
    let f = AlphaRational::new(num, den)?;
    println!("(2a + 2a^2) / (1 + a) = {f}");
    println!("valuation at alpha = 0: {:?}", f.valuation_at_zero());
    println!(
        "O(alpha)? {}   O(alpha^2)? {}",
        f.is_big_o(1),
        f.is_big_o(2)
    );

    let g = AlphaRational::from_int(1).checked_div(&AlphaRational::new(
        AlphaPolynomial::from_ints(&[0, 1]),
        AlphaPolynomial::from_ints(&[1, -1]),
    )?)?;
    println!(
        "\ng = (1 - a)/a = {g}, valuation {:?}",
        g.valuation_at_zero()
    );
    println!("g at a = 3/2: {}", g.eval(&(q(3) / q(2)))?);

    let h = AlphaRational::from_poly(AlphaPolynomial::from_ints(&[1, 3, 2]));
    println!(
        "\n{h} in beta = alpha - 1: {}",
        h.to_beta_polynomial()?.render("b")
    );
    Ok(())
}
