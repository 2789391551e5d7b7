//! The verification suites driven by the command line and the acceptance tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::AlphaRational;
use crate::cumulant::{
    describe, factorization_agreement, family_factorization, ie_stat, moments_from_cumulants,
    random, small_cumulant_family, small_cumulant_value, verify_a1_a2, verify_affine_lemma,
    verify_hook_factorization, verify_strong_factorization, HookVariant, IndexedFamily,
    MAX_FAMILY_SIZE,
};
use crate::error::{Error, Result};
use crate::gj::{
    check_exp_log, check_suite, extract_c, extract_h, phi_table, psi_from_phi,
    verify_log_cumulant_identity, MAX_LOG_WEIGHT,
};
use crate::jack::{check_all, check_order_independence, JackEngine};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::report::{Check, SuiteReport};
use crate::setpart::{full_mask, SetPartition};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2015;

/// Multisets of `r` partitions with sizes in `min_size..=max_size` and total at most `max_total`,
/// listed as non-decreasing tuples in the order of `partitions_up_to`.
pub fn partition_tuples(
    r: usize,
    min_size: u32,
    max_size: u32,
    max_total: u32,
) -> Result<Vec<Vec<Partition>>> {
    let pool: Vec<Partition> = partitions_up_to(max_size, true)?
        .into_iter()
        .filter(|p| p.size() >= min_size)
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn fill(
        pool: &[Partition],
        start: usize,
        r: usize,
        budget: u32,
        current: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for i in start..pool.len() {
            if pool[i].size() <= budget {
                current.push(pool[i].clone());
                fill(pool, i, r, budget - pool[i].size(), current, out);
                current.pop();
            }
        }
    }
    fill(&pool, 0, r, max_total, &mut current, &mut out);
    Ok(out)
}

/// Eigen-equation in `|λ|` and `|λ|+1` variables, triangularity, `ℕ[α]` coefficients, the
/// `α = 0` specialization and the norm, for every `|λ| ≤ max_weight`; norms up to `norm_weight`.
pub fn jack_suite(engine: &JackEngine, max_weight: u32, norm_weight: u32) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("jack");
    for n in 0..=max_weight {
        let parts = partitions_of(n)?;
        let checks = parts
            .par_iter()
            .map(|l| {
                let mut c = check_all(engine, l, n <= norm_weight)?;
                if n <= 6 {
                    c.push(check_order_independence(l)?);
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        report.extend(checks.into_iter().flatten());
    }
    Ok(report)
}

/// `κ^J = O(α^{r−1})` for all multisets of `r` non-empty partitions of size at most
/// `max_weight` and total at most `max_total`; for `r ≤ 3` also the product form and agreement.
pub fn factorization_suite(
    engine: &JackEngine,
    r: usize,
    max_weight: u32,
    max_total: u32,
) -> Result<SuiteReport> {
    if r == 0 || r > MAX_FAMILY_SIZE {
        return Err(Error::BoundExceeded {
            what: "r",
            value: r,
            bound: MAX_FAMILY_SIZE,
        });
    }
    let mut report = SuiteReport::new("factorization");
    let tuples = partition_tuples(r, 1, max_weight, max_total)?;
    let reports = tuples
        .par_iter()
        .map(|t| verify_strong_factorization(engine, t))
        .collect::<Result<Vec<_>>>()?;
    for rep in reports {
        report.push(verdict_check(&rep.cumulant));
        report.extend(rep.t_form.iter().map(verdict_check));
        report.extend(rep.agreement);
    }
    report.note(format!(
        "{} tuples with r = {r}, sizes <= {max_weight}, total <= {max_total}",
        tuples.len()
    ));
    Ok(report)
}

fn verdict_check(v: &crate::report::ValuationVerdict) -> Check {
    Check::from_bool(
        format!("{} = O(a^{})", v.inputs, v.required_valuation),
        v.pass,
        || v.to_string(),
    )
}

/// Set-partition lattice facts for `r ≤ r_max`, and the cumulant algebra on seeded random
/// families: moment/cumulant inversion and the two definitions of `T_H` for `r ≤ 4`, and the
/// equivalence of strong factorization with small cumulants for `r ≤ 3`.
pub fn lattice_suite(r_max: usize, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lattice");
    report.note(format!("seed {seed}"));
    for r in 1..=r_max {
        let all = SetPartition::enumerate(r)?;
        let top = SetPartition::top(r);
        let mut mobius_ok = true;
        let mut rank_ok = true;
        for p in &all {
            let mut sum = 0i64;
            for s in &all {
                if p.leq(s)? {
                    sum += s.mobius_to_top();
                }
            }
            mobius_ok &= sum == i64::from(*p == top);
            for s in &all {
                rank_ok &= p.join(s)?.rank() <= p.rank() + s.rank();
            }
        }
        report.push(Check::from_bool(
            format!("Mobius defining sums, r={r}"),
            mobius_ok,
            || String::from("a sum over an upper interval is wrong"),
        ));
        report.push(Check::from_bool(
            format!("rank of join subadditive, r={r}"),
            rank_ok,
            || String::from("rk(p v s) > rk(p) + rk(s) for some pair"),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for r in 1..=r_max.min(4) {
        let mut round_trip = true;
        let mut t_forms = true;
        for _ in 0..samples {
            let fam = random::random_family(&mut rng, r)?;
            let kappa = fam.cumulants()?;
            for h in 1..=full_mask(r) {
                round_trip &= moments_from_cumulants(&kappa, h)? == fam.values()[h as usize];
            }
            let back = IndexedFamily::from_fn(r, |h| {
                if h == 0 {
                    Ok(AlphaRational::one())
                } else {
                    moments_from_cumulants(&kappa, h)
                }
            })?;
            round_trip &= back.cumulants()? == kappa;
            let inductive = fam.t_errors_inductive()?;
            for h in (0..=full_mask(r)).filter(|h| h.count_ones() >= 2) {
                t_forms &= inductive[h as usize].as_ref() == Some(&fam.t_error(h)?);
            }
        }
        report.push(Check::from_bool(
            format!("cumulant/moment round trip, r={r}"),
            round_trip,
            || String::from("a random family does not round-trip"),
        ));
        if r >= 2 {
            report.push(Check::from_bool(
                format!("recursive and alternating-product T agree, r={r}"),
                t_forms,
                || String::from("the two definitions differ on a random family"),
            ));
        }
    }
    for r in 2..=r_max.min(3) {
        let mut agreements = Vec::new();
        let mut factorizing = 0;
        for _ in 0..samples {
            let fam = random::random_error_family(&mut rng, r)?;
            let c = factorization_agreement(&fam, &format!("random r={r}"))?;
            if family_factorization(&fam, "random")?.pass() {
                factorizing += 1;
            }
            agreements.push(c);
        }
        let bad = agreements.iter().find(|c| !c.pass).cloned();
        report.push(Check::from_bool(
            format!("factorization and small cumulants agree on random families, r={r}"),
            bad.is_none(),
            || bad.map(|c| c.to_string()).unwrap_or_default(),
        ));
        report.note(format!(
            "r={r}: {factorizing} of {samples} random families factorize"
        ));
    }
    Ok(report)
}

/// Hook families, the affine lemma, the inclusion–exclusion statistic, the operator
/// identities, the three-alphabet family and the log-cumulant identity.
pub fn lemmas_suite(engine: &JackEngine, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("lemmas");
    report.note(format!("seed {seed}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for variant in [HookVariant::Hook, HookVariant::HookDoublePrime] {
        for r in 2..=3 {
            let tuples = partition_tuples(r, 0, 4, 4 * r as u32)?;
            let bad = tuples
                .iter()
                .map(|t| verify_hook_factorization(t, variant))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .find(|v| !v.pass);
            report.push(Check::from_bool(
                format!(
                    "{} families factorize, r={r}, sizes <= 4 ({} tuples)",
                    variant.name(),
                    tuples.len()
                ),
                bad.is_none(),
                || bad.map(|v| v.to_string()).unwrap_or_default(),
            ));
        }
    }

    let mut affine_failures = Vec::new();
    let instances = 100;
    for _ in 0..instances {
        let k = rng.gen_range(2..=4);
        let c = random::random_unit(&mut rng);
        let cs: Vec<AlphaRational> = (0..k).map(|_| random::random_bounded(&mut rng)).collect();
        let h = loop {
            let h = rng.gen_range(1..=full_mask(k));
            if h.count_ones() >= 2 {
                break h;
            }
        };
        let v = verify_affine_lemma(&c, &cs, h)?;
        if !v.pass {
            affine_failures.push(v);
        }
    }
    report.push(Check::from_bool(
        format!("affine families: T_H = O(a^|H|), {instances} random instances"),
        affine_failures.is_empty(),
        || affine_failures[0].to_string(),
    ));

    let small = partitions_up_to(3, true)?;
    let mut ie_bad = None;
    for a in &small {
        for b in &small {
            for c in &small {
                let t = [a.clone(), b.clone(), c.clone()];
                if ie_stat(&t) != 0 && ie_bad.is_none() {
                    ie_bad = Some(describe(&t));
                }
            }
        }
    }
    for _ in 0..50 {
        let t: Vec<Partition> = (0..4)
            .map(|_| small.choose(&mut rng).expect("non-empty pool").clone())
            .collect();
        if ie_stat(&t) != 0 && ie_bad.is_none() {
            ie_bad = Some(describe(&t));
        }
    }
    report.push(Check::from_bool(
        "IE vanishes for r=3 (exhaustive, sizes <= 3) and r=4 (50 samples)",
        ie_bad.is_none(),
        || format!("IE({}) != 0", ie_bad.clone().unwrap_or_default()),
    ));

    for r in 2..=3 {
        for t in partition_tuples(r, 1, 4, 4)? {
            let total: u32 = t.iter().map(Partition::size).sum();
            for vars in [total as usize, total as usize + 1] {
                report.extend(verify_a1_a2(engine, &t, vars)?);
            }
        }
    }

    for t in partition_tuples(2, 1, 2, 4)? {
        let fam = small_cumulant_family(engine, &t)?;
        let rep = family_factorization(&fam, &format!("three-alphabet {}", describe(&t)))?;
        report.push(verdict_check(&rep.cumulant));
        report.extend(rep.t_form.iter().map(verdict_check));
        report.extend(rep.agreement);
    }

    let hook = |l: &Partition| Ok(AlphaRational::from_poly(l.hook()));
    report.extend(verify_log_cumulant_identity(hook, MAX_LOG_WEIGHT, "hook")?);
    report.extend(verify_log_cumulant_identity(
        |l: &Partition| small_cumulant_value(engine, l),
        MAX_LOG_WEIGHT,
        "three-alphabet Jack",
    )?);
    Ok(report)
}

/// Polynomiality and degree of every `h` with `n ≤ n_max` (theorem level), their `ℕ`-coefficients
/// (conjecture level), polynomiality of `c`, symmetry, and the exp/log consistency of `φ, ψ`.
pub fn bconj_suite(engine: &JackEngine, n_max: u32) -> Result<SuiteReport> {
    let phi = phi_table(engine, n_max)?;
    let psi = psi_from_phi(&phi);
    let mut report = check_suite(&extract_h(&psi)?)?;
    report.push(phi.check_symmetry("phi"));
    report.push(psi.check_symmetry("psi"));
    report.push(check_exp_log(&phi, &psi)?);
    let c = extract_c(&phi)?;
    let bad = c.iter().find(|e| !e.verdicts.polynomial);
    report.push(Check::from_bool(
        format!("all {} c-coefficients polynomial in beta", c.len()),
        bad.is_none(),
        || {
            let e = bad.expect("witness present");
            format!("{} = {}", e.label(), e.raw)
        },
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_enumeration() {
        // Non-empty partitions of size <= 2: (1), (2), (1,1); multisets of two: 6.
        assert_eq!(partition_tuples(2, 1, 2, 4).unwrap().len(), 6);
        assert_eq!(partition_tuples(2, 1, 2, 2).unwrap().len(), 1);
        assert_eq!(partition_tuples(3, 1, 1, 3).unwrap().len(), 1);
    }

    #[test]
    fn quick_suites_pass() {
        let e = JackEngine::new();
        for rep in [
            jack_suite(&e, 4, 4).unwrap(),
            factorization_suite(&e, 3, 2, 6).unwrap(),
            lattice_suite(4, 1, 3).unwrap(),
            bconj_suite(&e, 3).unwrap(),
        ] {
            assert!(
                rep.passed(),
                "{}: {:?}",
                rep.summary(),
                rep.theorem_failures().next()
            );
        }
    }
}
