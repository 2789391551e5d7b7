//! Seeded random families for exercising the cumulant machinery.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::family::{submasks, IndexedFamily};
use crate::algebra::{AlphaPolynomial, AlphaRational};
use crate::error::Result;

fn nonzero(rng: &mut ChaCha8Rng) -> i64 {
    let v = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn poly(rng: &mut ChaCha8Rng, degree: usize, unit: bool) -> AlphaPolynomial {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-3..=3)).collect();
    if unit {
        c[0] = nonzero(rng);
    }
    AlphaPolynomial::from_ints(&c)
}

/// A random rational function with `f(0)` finite and non-zero, so `f` and `1/f` are `O(1)`.
pub fn random_unit(rng: &mut ChaCha8Rng) -> AlphaRational {
    let num = poly(rng, 2, true);
    let den = poly(rng, 1, true);
    AlphaRational::new(num, den).expect("denominator has non-zero constant term")
}

/// A random rational function that is `O(1)` (possibly zero or vanishing at 0).
pub fn random_bounded(rng: &mut ChaCha8Rng) -> AlphaRational {
    let num = poly(rng, 2, false);
    let den = poly(rng, 1, true);
    AlphaRational::new(num, den).expect("denominator has non-zero constant term")
}

/// A random rational function with arbitrary (possibly negative) valuation.
pub fn random_rational(rng: &mut ChaCha8Rng) -> AlphaRational {
    let shift = rng.gen_range(-1..=1);
    random_unit(rng).mul(&AlphaRational::alpha_pow(shift))
}

/// Arbitrary values on every subset, including `u_∅`.
pub fn random_family(rng: &mut ChaCha8Rng, r: usize) -> Result<IndexedFamily<AlphaRational>> {
    IndexedFamily::from_fn(r, |m| {
        Ok(if m == 0 {
            AlphaRational::one()
        } else {
            random_rational(rng)
        })
    })
}

/// A family with unit singletons, built from prescribed errors `T_H = α^{k_H}·(unit)`.
///
/// Each `k_H` is drawn from `{|H| − 2, |H| − 1, |H|}` (clamped at 0), and some `T_H` are zero,
/// so both factorizing and non-factorizing families occur.
pub fn random_error_family(rng: &mut ChaCha8Rng, r: usize) -> Result<IndexedFamily<AlphaRational>> {
    let n = 1usize << r;
    let mut errors: Vec<AlphaRational> = vec![AlphaRational::zero(); n];
    for (h, slot) in errors.iter_mut().enumerate() {
        let size = (h as u32).count_ones() as i64;
        if size >= 2 && rng.gen_bool(0.8) {
            let k = (size - 2 + rng.gen_range(0..=2)).max(0);
            *slot = random_unit(rng).mul(&AlphaRational::alpha_pow(k));
        }
    }
    let singles: Vec<AlphaRational> = (0..r).map(|_| random_unit(rng)).collect();
    IndexedFamily::from_fn(r, |g| {
        let mut v = AlphaRational::one();
        for (i, s) in singles.iter().enumerate() {
            if g & (1 << i) != 0 {
                v = v.mul(s);
            }
        }
        for h in submasks(g).filter(|h| h.count_ones() >= 2) {
            v = v.mul(&AlphaRational::one().add(&errors[h as usize]));
        }
        Ok(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generators_respect_their_valuations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert_eq!(random_unit(&mut rng).valuation_at_zero(), Some(0));
            assert!(random_bounded(&mut rng).is_big_o(0));
        }
        let fam = random_error_family(&mut rng, 3).unwrap();
        assert!(fam.unit_empty());
    }
}
