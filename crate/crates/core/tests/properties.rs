//! Property tests over the public API, with independent oracles where a closed form exists.

use jackcum::algebra::{q, AlphaRational};
use jackcum::cumulant::moments_from_cumulants;
use jackcum::cumulant::random::{random_family, random_rational};
use jackcum::jack::{check_eigen, JackEngine};
use jackcum::partition::{partitions_of, partitions_up_to, Partition};
use jackcum::setpart::{full_mask, SetPartition};
use jackcum::symfunc::{Basis, SymFunc};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn partition_strategy(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = partitions_of(n).expect("small n");
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// A function of degree `n` in the monomial basis with small integer coefficients.
fn symfunc_strategy(max_degree: u32) -> impl Strategy<Value = SymFunc> {
    (1..=max_degree).prop_flat_map(|n| {
        let basis = partitions_of(n).expect("small n");
        let k = basis.len();
        prop::collection::vec(-3i64..=3, k).prop_map(move |cs| {
            SymFunc::from_terms(
                Basis::Monomial,
                basis
                    .iter()
                    .cloned()
                    .zip(cs.into_iter().map(AlphaRational::from_int)),
            )
        })
    })
}

/// Number of semistandard tableaux of shape `shape` and content `content`, by peeling off
/// the largest letter as a horizontal strip.
fn kostka(shape: &[u32], content: &[u32]) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let mut total = 0;
    let mut inner = vec![0u32; shape.len()];
    fn strips(
        shape: &[u32],
        i: usize,
        left: u32,
        inner: &mut Vec<u32>,
        rest: &[u32],
        total: &mut u64,
    ) {
        if i == shape.len() {
            if left == 0 {
                let trimmed: Vec<u32> = inner.iter().copied().filter(|&p| p > 0).collect();
                *total += kostka(&trimmed, rest);
            }
            return;
        }
        // Row i keeps at least max(shape[i+1], shape[i] - left) boxes.
        let below = shape.get(i + 1).copied().unwrap_or(0);
        let lo = below.max(shape[i].saturating_sub(left));
        for keep in lo..=shape[i] {
            inner[i] = keep;
            strips(shape, i + 1, left - (shape[i] - keep), inner, rest, total);
        }
    }
    strips(shape, 0, last, &mut inner, rest, &mut total);
    total
}

fn hook_lengths_product(lambda: &Partition) -> i64 {
    let rows = lambda.parts();
    let cols = lambda.conjugate();
    let mut prod = 1i64;
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..row as usize {
            prod *= i64::from(row) - j as i64 + i64::from(cols.parts()[j]) - i as i64 - 1;
        }
    }
    prod
}

#[test]
fn jack_at_alpha_one_is_hook_times_schur() {
    let engine = JackEngine::new();
    for lambda in partitions_up_to(7, false).unwrap() {
        let j = engine
            .jack_m(&lambda)
            .unwrap()
            .function
            .eval_alpha(&q(1))
            .unwrap();
        let h = hook_lengths_product(&lambda);
        for mu in partitions_of(lambda.size()).unwrap() {
            let expected = q(h * kostka(lambda.parts(), mu.parts()) as i64);
            assert_eq!(
                j.coeff(&mu).eval(&q(0)).unwrap(),
                expected,
                "J{lambda} at m{mu}"
            );
        }
    }
}

#[test]
fn jack_is_an_eigenfunction_for_every_number_of_variables() {
    let engine = JackEngine::new();
    for lambda in partitions_up_to(6, false).unwrap() {
        let j = engine.jack_m(&lambda).unwrap();
        for vars in lambda.size() as usize..=lambda.size() as usize + 3 {
            let check = check_eigen(&j, vars).unwrap();
            assert!(check.pass, "{check}");
        }
    }
}

#[test]
fn set_partitions_are_counted_by_bell_numbers() {
    for (r, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)] {
        let all = SetPartition::enumerate(r).unwrap();
        assert_eq!(all.len(), bell);
        assert_eq!(all.iter().filter(|p| p.num_blocks() == 1).count(), 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(l in partition_strategy(12)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn sum_and_union_are_conjugate_dual(a in partition_strategy(8), b in partition_strategy(8)) {
        prop_assert_eq!(a.oplus(&b).conjugate(), a.conjugate().union(&b.conjugate()));
    }

    #[test]
    fn dominance_reverses_under_conjugation(n in 1u32..=8, i in 0usize..22, j in 0usize..22) {
        let all = partitions_of(n).unwrap();
        let (a, b) = (&all[i % all.len()], &all[j % all.len()]);
        prop_assert_eq!(
            a.dominance_leq(b).unwrap(),
            b.conjugate().dominance_leq(&a.conjugate()).unwrap()
        );
    }

    #[test]
    fn basis_changes_round_trip(f in symfunc_strategy(8)) {
        for via in [Basis::PowerSum, Basis::Elementary] {
            let back = f.to_basis(via).unwrap().to_basis(Basis::Monomial).unwrap();
            prop_assert_eq!(&back, &f);
        }
    }

    #[test]
    fn products_commute_with_basis_changes(f in symfunc_strategy(4), g in symfunc_strategy(4)) {
        let in_m = f.mul(&g).unwrap();
        let fp = f.to_basis(Basis::PowerSum).unwrap();
        let gp = g.to_basis(Basis::PowerSum).unwrap();
        prop_assert_eq!(fp.mul(&gp).unwrap().to_basis(Basis::Monomial).unwrap(), in_m);
    }

    #[test]
    fn cumulants_and_moments_round_trip(seed in any::<u64>(), r in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_family(&mut rng, r).unwrap();
        let cumulants = fam.cumulants().unwrap();
        for h in 1..=full_mask(r) {
            prop_assert_eq!(&moments_from_cumulants(&cumulants, h).unwrap(), fam.get(h).unwrap());
        }
    }

    #[test]
    fn direct_and_inductive_errors_agree(seed in any::<u64>(), r in 2usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fam = random_family(&mut rng, r).unwrap();
        let inductive = fam.t_errors_inductive().unwrap();
        for h in 1..=full_mask(r) {
            if h.count_ones() >= 2 {
                prop_assert_eq!(inductive[h as usize].as_ref(), Some(&fam.t_error(h).unwrap()));
            }
        }
    }

    #[test]
    fn rational_field_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).checked_div(&b).unwrap(), a.clone());
        }
        prop_assert_eq!(a.sub(&a), AlphaRational::zero());
    }
}
