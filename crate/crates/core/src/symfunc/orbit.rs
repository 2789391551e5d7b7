//! Exponent-vector orbits: the combinatorial core of monomial products and of the operator
//! matrices.

use std::collections::BTreeMap;

use crate::partition::Partition;

/// Rearranges `v` into the next permutation in lexicographic order; returns `false` (and
/// leaves `v` sorted ascending) once the last permutation has been passed.
pub(crate) fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Calls `f` on every distinct rearrangement of `λ` padded with zeros to `len` entries.
pub(crate) fn for_each_rearrangement(lambda: &Partition, len: usize, mut f: impl FnMut(&[u32])) {
    let mut v: Vec<u32> = lambda.parts().to_vec();
    v.resize(len, 0);
    v.sort_unstable();
    loop {
        f(&v);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

/// `∏ m_i!` over all values (zeros included) of a vector of length `len`.
pub(crate) fn multiplicity_factorial(lambda: &Partition, len: usize) -> u128 {
    let zeros = (len - lambda.len()) as u128;
    let mut acc: u128 = (1..=zeros).product();
    for (_, m) in lambda.multiplicities() {
        acc *= (1..=m as u128).product::<u128>();
    }
    acc
}

/// Sorts a non-negative exponent vector into a partition.
pub(crate) fn sort_to_partition(v: &[u32]) -> Partition {
    Partition::new(v.to_vec())
}

/// Bilinear orbit sum shared by monomial products and the `x_m ∂_m` pairing.
///
/// Returns, for each `κ`, the sum of `w(a, b)` over pairs `(a, b)` of exponent vectors in the
/// orbits of `μ` and `ν` with `a + b` equal to one fixed rearrangement of `κ`. The weight must be
/// invariant under simultaneous permutation of `a` and `b`.
pub(crate) fn orbit_pair_sum(
    mu: &Partition,
    nu: &Partition,
    weight: impl Fn(&[u32], &[u32]) -> i128,
) -> BTreeMap<Partition, i128> {
    let len = mu.len() + nu.len();
    let mut b: Vec<u32> = nu.parts().to_vec();
    b.resize(len, 0);
    let mut tally: BTreeMap<Partition, i128> = BTreeMap::new();
    let mut sum = vec![0u32; len];
    for_each_rearrangement(mu, len, |a| {
        let w = weight(a, &b);
        if w == 0 {
            return;
        }
        for ((s, x), y) in sum.iter_mut().zip(a).zip(&b) {
            *s = x + y;
        }
        *tally.entry(sort_to_partition(&sum)).or_insert(0) += w;
    });
    // Each of the |orb ν| choices of b contributes the same tally; a fixed target vector
    // receives the share 1/|orb κ| of its orbit.
    let nu_fact = multiplicity_factorial(nu, len) as i128;
    tally
        .into_iter()
        .filter(|(_, w)| *w != 0)
        .map(|(kappa, w)| {
            let k_fact = multiplicity_factorial(&kappa, len) as i128;
            let num = w * k_fact;
            debug_assert_eq!(num % nu_fact, 0);
            (kappa, num / nu_fact)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn rearrangements_are_distinct_and_complete() {
        let mut seen = Vec::new();
        for_each_rearrangement(&part![2, 1, 1], 4, |v| seen.push(v.to_vec()));
        assert_eq!(seen.len(), 12);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 12);
        let mut count = 0;
        for_each_rearrangement(&part![], 3, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn monomial_square() {
        let t = orbit_pair_sum(&part![1], &part![1], |_, _| 1);
        assert_eq!(t.get(&part![2]), Some(&1));
        assert_eq!(t.get(&part![1, 1]), Some(&2));
    }
}
