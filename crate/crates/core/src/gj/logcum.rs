//! The logarithm of a column-indexed generating series expressed through cumulants of
//! one-column partitions, checked coefficient by coefficient.

use std::collections::BTreeMap;
use std::fmt::Display;

use crate::algebra::{q_frac, AlphaAlgebra, AlphaRational, Ring};
use crate::cumulant::IndexedFamily;
use crate::error::{Error, Result};
use crate::partition::{oplus_mask, partitions_of, Partition};
use crate::report::Check;
use crate::setpart::full_mask;

/// Largest total `t`-weight compared.
pub const MAX_LOG_WEIGHT: u32 = 4;

/// Power series in `t_1, t_2, …`; the monomial `t_{ρ_1} t_{ρ_2} ⋯` is keyed by the partition `ρ`.
type Series<R> = BTreeMap<Partition, R>;

fn truncated_product<R: Ring>(a: &Series<R>, b: &Series<R>, d: u32) -> Series<R> {
    let mut out: Series<R> = BTreeMap::new();
    for (ra, ca) in a {
        for (rb, cb) in b {
            if ra.size() + rb.size() > d {
                continue;
            }
            let key = ra.union(rb);
            let v = ca.mul(cb);
            let slot = out.entry(key).or_insert_with(R::zero);
            *slot = slot.add(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `∏_i m_i(ρ)!`.
fn multiplicity_factorial(rho: &Partition) -> i64 {
    rho.multiplicities()
        .iter()
        .map(|&(_, m)| (1..=m as i64).product::<i64>())
        .product()
}

/// Compares, for every `t`-monomial `ρ` of weight at most `d`,
///
/// * the coefficient of `t^ρ` in `log Σ_λ F(λ) / (α^{λ_1} ∏_i m_i(λ^t)!) · t^{λ^t}`, and
/// * `κ^F(1^{ρ_1}, …, 1^{ρ_r}) / (∏_i m_i(ρ)! · α^r)`, the collected coefficient of
///   `Σ_r 1/(r! α^r) Σ_{j_1..j_r} κ^F(1^{j_1}, …, 1^{j_r}) t_{j_1} ⋯ t_{j_r}`.
///
/// `F(∅)` must be 1. Returns one check per monomial.
pub fn verify_log_cumulant_identity<R, F>(f: F, d: u32, label: &str) -> Result<Vec<Check>>
where
    R: AlphaAlgebra + Display,
    F: Fn(&Partition) -> Result<R>,
{
    if d > MAX_LOG_WEIGHT {
        return Err(Error::BoundExceeded {
            what: "log-series weight",
            value: d as usize,
            bound: MAX_LOG_WEIGHT as usize,
        });
    }
    if f(&Partition::empty())? != R::one() {
        return Err(Error::HypothesisNotSatisfied(String::from(
            "F of the empty partition must be 1",
        )));
    }
    let mut monomials = Vec::new();
    for n in 1..=d {
        monomials.extend(partitions_of(n)?);
    }

    // X = Σ_{ρ ≠ ∅} F(ρ^t) / (α^{ℓ(ρ)} ∏ m_i(ρ)!) t^ρ, then log(1 + X) = Σ_k (−1)^{k+1} X^k / k.
    let mut x: Series<R> = BTreeMap::new();
    for rho in &monomials {
        let scale = AlphaRational::alpha_pow(-(rho.len() as i64))
            .scale(&q_frac(1, multiplicity_factorial(rho)));
        x.insert(rho.clone(), f(&rho.conjugate())?.scale_alpha(&scale));
    }
    let mut lhs: Series<R> = BTreeMap::new();
    let mut power = x.clone();
    for k in 1..=d as i64 {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        for (rho, c) in &power {
            let slot = lhs.entry(rho.clone()).or_insert_with(R::zero);
            *slot = slot.add(&c.scale(&q_frac(sign, k)));
        }
        power = truncated_product(&power, &x, d);
    }

    let mut checks = Vec::new();
    for rho in &monomials {
        let columns: Vec<Partition> = rho.parts().iter().map(|&j| Partition::column(j)).collect();
        let fam = IndexedFamily::from_fn(columns.len(), |m| f(&oplus_mask(&columns, m)))?;
        let kappa = fam.partial_cumulant(full_mask(columns.len()))?;
        let scale = AlphaRational::alpha_pow(-(rho.len() as i64))
            .scale(&q_frac(1, multiplicity_factorial(rho)));
        let rhs = kappa.scale_alpha(&scale);
        let left = lhs.get(rho).cloned().unwrap_or_else(R::zero);
        let monomial = rho
            .parts()
            .iter()
            .map(|j| format!("t{j}"))
            .collect::<Vec<_>>()
            .join("*");
        checks.push(Check::from_bool(
            format!("log-cumulant identity at {monomial} ({label})"),
            left == rhs,
            || format!("log side {left} vs cumulant side {rhs}"),
        ));
    }
    Ok(checks)
}
