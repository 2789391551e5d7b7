//! The triple generating series `φ = Σ_λ J_λ(x)J_λ(y)J_λ(z)/⟨J_λ, J_λ⟩` and `ψ = α t ∂_t log φ`,
//! truncated in `t` and stored slice by slice.

use rayon::prelude::*;

use crate::algebra::{q, q_frac, AlphaRational, Ring};
use crate::error::{Error, Result};
use crate::jack::JackEngine;
use crate::partition::{partitions_of, Partition};
use crate::report::Check;
use crate::triple::{Triple, TripleSym};

/// Largest truncation degree for the series tables.
pub const MAX_SERIES_DEGREE: u32 = 8;
/// Truncation degree used when none is given.
pub const DEFAULT_SERIES_DEGREE: u32 = 5;

/// Coefficients of `t^n p_τ(x) p_μ(y) p_ν(z)` for all `n ≤ n_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleCoeffTable {
    slices: Vec<TripleSym>,
}

impl TripleCoeffTable {
    fn from_slices(slices: Vec<TripleSym>) -> Self {
        TripleCoeffTable { slices }
    }

    pub fn n_max(&self) -> u32 {
        (self.slices.len() - 1) as u32
    }

    /// The homogeneous component of `t`-degree `n`.
    pub fn slice(&self, n: u32) -> &TripleSym {
        &self.slices[n as usize]
    }

    pub fn slices(&self) -> &[TripleSym] {
        &self.slices
    }

    pub fn entry(&self, n: u32, index: &Triple) -> AlphaRational {
        self.slices
            .get(n as usize)
            .map_or_else(AlphaRational::zero, |s| s.coeff(index))
    }

    /// Symmetry under every permutation of the three alphabets; fails with the first asymmetric entry.
    pub fn check_symmetry(&self, name: &str) -> Check {
        let perms = [[1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let bad = self.slices.iter().enumerate().find_map(|(n, s)| {
            perms.iter().find_map(|&p| {
                (s.permute(p) != *s).then(|| format!("t^{n} slice not invariant under {p:?}"))
            })
        });
        Check::from_bool(
            format!("{name} symmetric in x, y, z"),
            bad.is_none(),
            || bad.unwrap_or_default(),
        )
    }
}

fn check_degree(n_max: u32) -> Result<()> {
    if n_max > MAX_SERIES_DEGREE {
        return Err(Error::BoundExceeded {
            what: "series degree",
            value: n_max as usize,
            bound: MAX_SERIES_DEGREE as usize,
        });
    }
    Ok(())
}

/// `φ_n = Σ_{λ⊢n} J_λ(x)J_λ(y)J_λ(z) / (hook(λ)·hook′(λ))` for `n ≤ n_max`; `φ_0 = 1`.
pub fn phi_table(engine: &JackEngine, n_max: u32) -> Result<TripleCoeffTable> {
    check_degree(n_max)?;
    let mut slices = vec![TripleSym::one()];
    for n in 1..=n_max {
        let parts = partitions_of(n)?;
        let terms = parts
            .par_iter()
            .map(|lambda| phi_term(engine, lambda))
            .collect::<Result<Vec<TripleSym>>>()?;
        slices.push(
            terms
                .iter()
                .fold(TripleSym::zero(), |acc, t| Ring::add(&acc, t)),
        );
    }
    Ok(TripleCoeffTable::from_slices(slices))
}

fn phi_term(engine: &JackEngine, lambda: &Partition) -> Result<TripleSym> {
    let j = engine.jack_p(lambda)?.function;
    let norm = AlphaRational::from_poly(lambda.hook().mul(&lambda.hook_prime()));
    Ok(TripleSym::diagonal(&j)?.scale(&norm.inv()?))
}

/// Slices `L_n` of `log φ`, from `n L_n = n φ_n − Σ_{k=1}^{n−1} k L_k φ_{n−k}`; `L_0 = 0`.
pub fn log_slices(phi: &TripleCoeffTable) -> Vec<TripleSym> {
    let n_max = phi.n_max() as usize;
    let mut log = vec![TripleSym::zero(); n_max + 1];
    for n in 1..=n_max {
        let mut acc = phi.slices[n].scale(&AlphaRational::from_int(n as i64));
        for (k, lk) in log.iter().enumerate().take(n).skip(1) {
            let prod = Ring::mul(lk, &phi.slices[n - k]);
            acc = Ring::sub(&acc, &prod.scale(&AlphaRational::from_int(k as i64)));
        }
        log[n] = acc.scale(&AlphaRational::constant(q_frac(1, n as i64)));
    }
    log
}

/// `ψ_n = α n L_n`.
pub fn psi_from_phi(phi: &TripleCoeffTable) -> TripleCoeffTable {
    let slices = log_slices(phi)
        .into_iter()
        .enumerate()
        .map(|(n, l)| l.scale(&AlphaRational::alpha().scale(&q(n as i64))))
        .collect();
    TripleCoeffTable::from_slices(slices)
}

pub fn psi_table(engine: &JackEngine, n_max: u32) -> Result<TripleCoeffTable> {
    Ok(psi_from_phi(&phi_table(engine, n_max)?))
}

/// Recovers `φ` from `ψ` through the exponential series `Σ_k L^k / k!`, graded in `t`, and
/// compares with the directly computed table.
pub fn check_exp_log(phi: &TripleCoeffTable, psi: &TripleCoeffTable) -> Result<Check> {
    let n_max = phi.n_max() as usize;
    let mut log = vec![TripleSym::zero(); n_max + 1];
    for (n, slot) in log.iter_mut().enumerate().skip(1) {
        let scale = AlphaRational::alpha().scale(&q(n as i64)).inv()?;
        *slot = psi.slices[n].scale(&scale);
    }
    // power[n] holds the t^n slice of L^k / k! for the current k.
    let mut power = log.clone();
    let mut total: Vec<TripleSym> = log.clone();
    total[0] = TripleSym::one();
    for k in 2..=n_max {
        let mut next = vec![TripleSym::zero(); n_max + 1];
        for (a, pa) in power.iter().enumerate().filter(|(_, p)| !p.is_empty()) {
            for b in 1..=(n_max - a) {
                next[a + b] = Ring::add(&next[a + b], &Ring::mul(pa, &log[b]));
            }
        }
        let inv_k = AlphaRational::constant(q_frac(1, k as i64));
        power = next.into_iter().map(|s| s.scale(&inv_k)).collect();
        for n in 0..=n_max {
            total[n] = Ring::add(&total[n], &power[n]);
        }
    }
    let bad = (0..=n_max).find(|&n| total[n] != phi.slices[n]);
    Ok(Check::from_bool(
        "exp(log phi) = phi",
        bad.is_none(),
        || format!("mismatch in the t^{} slice", bad.unwrap_or_default()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlphaPolynomial;
    use crate::part;

    fn triple(a: Partition, b: Partition, c: Partition) -> Triple {
        (a, b, c)
    }

    #[test]
    fn small_slices() {
        let e = JackEngine::new();
        let phi = phi_table(&e, 3).unwrap();
        let one = || part![1];
        assert_eq!(
            phi.entry(1, &triple(one(), one(), one())),
            AlphaRational::alpha().inv().unwrap()
        );
        assert_eq!(phi.slice(0), &TripleSym::one());
        // 1/(2α²(1+α)) + 1/(2α(1+α)) = 1/(2α²).
        let t11 = triple(part![1, 1], part![1, 1], part![1, 1]);
        let expected = AlphaRational::from_poly(AlphaPolynomial::from_ints(&[0, 0, 2]))
            .inv()
            .unwrap();
        assert_eq!(phi.entry(2, &t11), expected);
        assert!(phi.check_symmetry("phi").pass);

        let psi = psi_from_phi(&phi);
        assert_eq!(
            psi.entry(1, &triple(one(), one(), one())),
            AlphaRational::one()
        );
        let t2 = triple(part![2], part![2], part![2]);
        assert_eq!(
            psi.entry(2, &t2),
            AlphaRational::from_poly(AlphaPolynomial::linear(-1, 1))
        );
        assert!(psi.entry(2, &t11).is_zero());
        assert!(check_exp_log(&phi, &psi).unwrap().pass);
        assert!(phi_table(&e, MAX_SERIES_DEGREE + 1).is_err());
    }

    #[test]
    fn exp_check_detects_tampering() {
        let e = JackEngine::new();
        let phi = phi_table(&e, 2).unwrap();
        let mut psi = psi_from_phi(&phi);
        psi.slices[2].add_term(triple(part![2], part![2], part![2]), AlphaRational::one());
        assert!(!check_exp_log(&phi, &psi).unwrap().pass);
    }
}
