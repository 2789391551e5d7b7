//! Transition matrices between the m-, p- and e-bases, cached per degree.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::orbit::orbit_pair_sum;
use super::Basis;
use crate::algebra::Q;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition, DEFAULT_PARTITION_BOUND};

/// Largest degree for which basis changes are available.
pub const MAX_DEGREE: u32 = DEFAULT_PARTITION_BOUND;

type Row = Vec<(Partition, Q)>;
type ProductCache = RwLock<HashMap<(Partition, Partition), Arc<Vec<(Partition, i128)>>>>;

/// All six basis changes in one degree; row `λ` of `from → to` expands `from_λ` in `to`.
#[derive(Debug)]
pub struct Transition {
    degree: u32,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    tables: HashMap<(Basis, Basis), Vec<Row>>,
}

static TRANSITIONS: OnceLock<RwLock<HashMap<u32, Arc<Transition>>>> = OnceLock::new();
static M_PRODUCTS: OnceLock<ProductCache> = OnceLock::new();

/// `m_μ·m_ν = Σ_κ c_κ m_κ` with integer `c_κ`, memoized.
pub fn m_product(mu: &Partition, nu: &Partition) -> Arc<Vec<(Partition, i128)>> {
    let (mu, nu) = if mu <= nu { (mu, nu) } else { (nu, mu) };
    let cache = M_PRODUCTS.get_or_init(Default::default);
    let key = (mu.clone(), nu.clone());
    if let Some(hit) = cache.read().expect("m-product cache poisoned").get(&key) {
        return hit.clone();
    }
    let computed: Vec<(Partition, i128)> = orbit_pair_sum(mu, nu, |_, _| 1).into_iter().collect();
    cache
        .write()
        .expect("m-product cache poisoned")
        .entry(key)
        .or_insert_with(|| Arc::new(computed))
        .clone()
}

impl Transition {
    /// The cached transition data for degree `n`.
    pub fn get(n: u32) -> Result<Arc<Transition>> {
        if n > MAX_DEGREE {
            return Err(Error::BoundExceeded {
                what: "degree",
                value: n as usize,
                bound: MAX_DEGREE as usize,
            });
        }
        let cache = TRANSITIONS.get_or_init(Default::default);
        if let Some(t) = cache.read().expect("transition cache poisoned").get(&n) {
            return Ok(t.clone());
        }
        let t = Arc::new(Self::compute(n)?);
        Ok(cache
            .write()
            .expect("transition cache poisoned")
            .entry(n)
            .or_insert(t)
            .clone())
    }

    fn compute(n: u32) -> Result<Self> {
        let parts = partitions_of(n)?;
        let index: HashMap<Partition, usize> = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let dim = parts.len();

        // p_λ = ∏ m_(λ_i) and e_λ = ∏ m_(1^{λ_i}), multiplied out in the m-basis.
        let expand_product = |factors: Vec<Partition>| -> Vec<Q> {
            let mut acc: BTreeMap<Partition, BigInt> =
                BTreeMap::from([(Partition::empty(), BigInt::one())]);
            for f in factors {
                let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
                for (mu, c) in &acc {
                    for (kappa, k) in m_product(mu, &f).iter() {
                        *next.entry(kappa.clone()).or_insert_with(BigInt::zero) +=
                            c * BigInt::from(*k);
                    }
                }
                acc = next;
            }
            let mut row = vec![Q::zero(); dim];
            for (kappa, c) in acc {
                row[index[&kappa]] = Q::from_integer(c);
            }
            row
        };
        let p_to_m: Vec<Vec<Q>> = parts
            .iter()
            .map(|l| expand_product(l.parts().iter().map(|&k| Partition::new(vec![k])).collect()))
            .collect();
        let e_to_m: Vec<Vec<Q>> = parts
            .iter()
            .map(|l| expand_product(l.parts().iter().map(|&k| Partition::column(k)).collect()))
            .collect();
        let m_to_p = invert(&p_to_m)?;
        let m_to_e = invert(&e_to_m)?;
        let p_to_e = compose(&p_to_m, &m_to_e);
        let e_to_p = compose(&e_to_m, &m_to_p);

        let sparse = |dense: Vec<Vec<Q>>| -> Vec<Row> {
            dense
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (parts[j].clone(), c))
                        .collect()
                })
                .collect()
        };
        use Basis::*;
        let tables = HashMap::from([
            ((PowerSum, Monomial), sparse(p_to_m)),
            ((Elementary, Monomial), sparse(e_to_m)),
            ((Monomial, PowerSum), sparse(m_to_p)),
            ((Monomial, Elementary), sparse(m_to_e)),
            ((PowerSum, Elementary), sparse(p_to_e)),
            ((Elementary, PowerSum), sparse(e_to_p)),
        ]);
        Ok(Transition {
            degree: n,
            parts,
            index,
            tables,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The partitions of this degree, largest-first.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Expansion of `from_λ` in the `to` basis; `from == to` is not stored.
    pub fn row(&self, from: Basis, to: Basis, lambda: &Partition) -> &[(Partition, Q)] {
        let i = self.index[lambda];
        &self.tables[&(from, to)][i]
    }
}

fn compose(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let dim = a.len();
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    (0..dim)
                        .filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero())
                        .fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse over `ℚ`.
fn invert(m: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let dim = m.len();
    let mut a: Vec<Vec<Q>> = m.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Invariant(String::from("singular transition matrix")))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for j in 0..dim {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..dim {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..dim {
                if !a[col][j].is_zero() {
                    let d = &f * &a[col][j];
                    a[r][j] -= d;
                }
                if !inv[col][j].is_zero() {
                    let d = &f * &inv[col][j];
                    inv[r][j] -= d;
                }
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn power_sums_dominate_their_monomial_support() {
        let t = Transition::get(5).unwrap();
        for l in t.partitions() {
            for (mu, _) in t.row(Basis::PowerSum, Basis::Monomial, l) {
                assert!(l.dominance_leq(mu).unwrap());
            }
            for (mu, _) in t.row(Basis::Elementary, Basis::Monomial, l) {
                assert!(mu.dominance_leq(&l.conjugate()).unwrap());
            }
        }
    }

    #[test]
    fn degree_bound_enforced() {
        assert!(Transition::get(MAX_DEGREE + 1).is_err());
        assert_eq!(Transition::get(0).unwrap().partitions(), &[part![]]);
    }
}
