//! The inclusion–exclusion statistic on partitions and the two operator identities used in
//! the induction for Jack cumulants.

use crate::algebra::{q_frac, AlphaRational, Q};
use crate::error::{Error, Result};
use crate::jack::JackEngine;
use crate::partition::{oplus_mask, Partition};
use crate::report::Check;
use crate::setpart::{full_mask, mobius_to_top, partitions_of_mask};
use crate::symfunc::{apply_d12, apply_dalpha, mixed_pairing, Basis, SymFunc};

use super::factorization::{describe, jack_family};
use super::family::submasks;

/// `IE(λ¹, …, λ^r) = Σ_{I ⊆ [r]} (−1)^{r−|I|} b(λ^I)`.
pub fn ie_stat(lambdas: &[Partition]) -> i64 {
    let r = lambdas.len();
    submasks(full_mask(r))
        .map(|m| {
            let b = oplus_mask(lambdas, m).b() as i64;
            if (r - m.count_ones() as usize).is_multiple_of(2) {
                b
            } else {
                -b
            }
        })
        .sum()
}

/// Largest total size accepted by [`verify_a1_a2`].
pub const A1_A2_MAX_SIZE: u32 = 6;

/// Computes `A₁` and `A₂` from their set-partition definitions and from their closed forms in
/// terms of Jack cumulants, and checks that the pieces reassemble `D_α κ_{[r]}`.
///
/// `A₁ = Σ_π μ(π) (Σ_{B∈π} b(λ^B)) ∏_B J_{λ^B}`, `A₂ = Σ_π μ(π) D_{1,2}(J_{λ^B} : B ∈ π)`; the
/// closed forms are `b(λ^{[r]}) κ_{[r]} + ½ Σ_I IE(λ^I, λ^{I^c}) κ_I κ_{I^c}` and
/// `−½ Σ_I B(κ_I, κ_{I^c})` with `B(f, g) = Σ_m (x_m∂_m f)(x_m∂_m g)`, over `∅ ≠ I ≠ [r]`.
pub fn verify_a1_a2(engine: &JackEngine, lambdas: &[Partition], vars: usize) -> Result<Vec<Check>> {
    let r = lambdas.len();
    if !(2..=3).contains(&r) {
        return Err(Error::BoundExceeded {
            what: "r for the operator identities",
            value: r,
            bound: 3,
        });
    }
    let top = full_mask(r);
    let total = oplus_mask(lambdas, top);
    let size = total.size();
    if size > A1_A2_MAX_SIZE {
        return Err(Error::BoundExceeded {
            what: "total size",
            value: size as usize,
            bound: A1_A2_MAX_SIZE as usize,
        });
    }
    if vars < size as usize {
        return Err(Error::TooFewVariables { vars, degree: size });
    }
    let fam = jack_family(engine, lambdas)?;
    let u = |m: u32| fam.values()[m as usize].clone();
    let kappa = fam.cumulants()?;
    let k = |m: u32| kappa[m as usize].clone().expect("non-empty subset");
    let b_of = |m: u32| i64::try_from(oplus_mask(lambdas, m).b()).expect("small partition");

    let mut a1_def = SymFunc::zero(Basis::PowerSum);
    let mut a2_def = SymFunc::zero(Basis::Monomial);
    for blocks in partitions_of_mask(top) {
        let mu = Q::from_integer(mobius_to_top(blocks.len()).into());
        let weight: i64 = blocks.iter().map(|&b| b_of(b)).sum();
        let product = blocks
            .iter()
            .try_fold(SymFunc::one(Basis::PowerSum), |acc, &b| acc.mul(&u(b)))?;
        a1_def = a1_def.add(&product.scale_q(&(&mu * Q::from_integer(weight.into()))))?;
        let factors: Vec<SymFunc> = blocks.iter().map(|&b| u(b)).collect();
        a2_def = a2_def.add(&apply_d12(&factors, Some(vars))?.scale_q(&mu))?;
    }

    let half = q_frac(1, 2);
    let mut a1_closed = k(top).scale_q(&Q::from_integer(b_of(top).into()));
    let mut a2_closed = SymFunc::zero(Basis::Monomial);
    for i in submasks(top).filter(|&m| m != 0 && m != top) {
        let c = top & !i;
        let ie = ie_stat(&[oplus_mask(lambdas, i), oplus_mask(lambdas, c)]);
        a1_closed = a1_closed.add(
            &k(i)
                .mul(&k(c))?
                .scale_q(&(&half * Q::from_integer(ie.into()))),
        )?;
        a2_closed = a2_closed.sub(&mixed_pairing(&k(i), &k(c), Some(vars))?.scale_q(&half))?;
    }

    let label = describe(lambdas);
    let m = Basis::Monomial;
    let (a1_def, a1_closed) = (a1_def.to_basis(m)?, a1_closed.to_basis(m)?);
    let (a2_def, a2_closed) = (a2_def.to_basis(m)?, a2_closed.to_basis(m)?);

    // D_α κ = ((N−1)|λ| − b(λ^t)) κ + α (A₁ + A₂), with λ = λ^{[r]}.
    let top_kappa = k(top);
    let lhs = apply_dalpha(&top_kappa, Some(vars))?.to_basis(m)?;
    let diag = (vars as i64 - 1) * i64::from(size)
        - i64::try_from(total.conjugate().b()).expect("small partition");
    let diag = AlphaRational::from_int(diag);
    let rhs = top_kappa
        .scale(&diag)
        .add(&a1_def.add(&a2_def)?.scale(&AlphaRational::alpha()))?
        .to_basis(m)?;

    Ok(vec![
        Check::from_bool(
            format!("A1 closed form ({label})"),
            a1_def == a1_closed,
            || format!("definition {a1_def} vs closed form {a1_closed}"),
        ),
        Check::from_bool(
            format!("A2 closed form ({label}, N={vars})"),
            a2_def == a2_closed,
            || format!("definition {a2_def} vs closed form {a2_closed}"),
        ),
        Check::from_bool(
            format!("D_alpha cumulant expansion ({label}, N={vars})"),
            lhs == rhs,
            || format!("D_alpha kappa = {lhs} vs expansion {rhs}"),
        ),
    ])
}
