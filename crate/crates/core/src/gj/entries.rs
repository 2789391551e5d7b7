//! Coefficients `h^τ_{μ,ν}(β)` and `c^τ_{μ,ν}(β)` extracted from the series tables, their
//! verdicts, and CSV / JSON renderings.

use std::io::Write;

use serde::Serialize;

use super::series::TripleCoeffTable;
use crate::algebra::{fmt_q, q, AlphaPolynomial, AlphaRational};
use crate::error::Result;
use crate::partition::{partitions_of, Partition};
use crate::report::{Check, SuiteReport};

/// Alphabet convention: `x` carries `τ`, `y` carries `μ`, `z` carries `ν`.
pub const ALPHABET_CONVENTION: &str = "x<->tau, y<->mu, z<->nu";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    /// From `ψ`: `h^τ_{μ,ν}`.
    H,
    /// From `φ`, rescaled by `α^{ℓ(τ)} z_τ`: `c^τ_{μ,ν}`.
    C,
}

/// Verdicts recorded for one coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EntryVerdicts {
    /// The raw value is a polynomial in α (equivalently in β).
    pub polynomial: bool,
    /// The denominator is a constant times a power of α.
    pub pole_only_at_zero: bool,
    /// Degree at most the bound (zero when the bound is negative); vacuous without a bound.
    pub degree_ok: bool,
    pub integer_coeffs: bool,
    pub nonneg_coeffs: bool,
}

/// One coefficient of `t^n p_τ(x) p_μ(y) p_ν(z)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HEntry {
    pub kind: EntryKind,
    pub n: u32,
    pub tau: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub raw: AlphaRational,
    /// The value as a polynomial in `β = α − 1`, when it is one.
    pub beta_poly: Option<AlphaPolynomial>,
    /// `2 + n − ℓ(τ) − ℓ(μ) − ℓ(ν)` for `h`; no bound is asserted for `c`.
    pub degree_bound: Option<i64>,
    pub verdicts: EntryVerdicts,
}

impl HEntry {
    fn new(
        kind: EntryKind,
        n: u32,
        tau: Partition,
        mu: Partition,
        nu: Partition,
        raw: AlphaRational,
    ) -> Self {
        let beta_poly = raw.to_beta_polynomial().ok();
        let degree_bound = (kind == EntryKind::H)
            .then(|| 2 + i64::from(n) - (tau.len() + mu.len() + nu.len()) as i64);
        let pole_only_at_zero = raw.den().term_count() == 1;
        let degree_ok = match (degree_bound, &beta_poly) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(b), Some(p)) => p.degree().is_none_or(|d| d as i64 <= b),
        };
        let verdicts = EntryVerdicts {
            polynomial: beta_poly.is_some(),
            pole_only_at_zero,
            degree_ok,
            integer_coeffs: beta_poly
                .as_ref()
                .is_some_and(AlphaPolynomial::has_integer_coeffs),
            nonneg_coeffs: beta_poly
                .as_ref()
                .is_some_and(AlphaPolynomial::has_nonnegative_coeffs),
        };
        HEntry {
            kind,
            n,
            tau,
            mu,
            nu,
            raw,
            beta_poly,
            degree_bound,
            verdicts,
        }
    }

    /// The degree in `β` (`None` for zero or non-polynomial values).
    pub fn degree(&self) -> Option<usize> {
        self.beta_poly.as_ref().and_then(AlphaPolynomial::degree)
    }

    pub fn label(&self) -> String {
        let name = match self.kind {
            EntryKind::H => "h",
            EntryKind::C => "c",
        };
        format!(
            "{name}[n={}; tau={}; mu={}; nu={}]",
            self.n, self.tau, self.mu, self.nu
        )
    }

    /// `β`-coefficients, lowest degree first, `;`-joined; `0` for the zero polynomial.
    pub fn beta_coeffs_string(&self) -> Option<String> {
        self.beta_poly.as_ref().map(|p| {
            if p.is_zero() {
                String::from("0")
            } else {
                p.coeffs().iter().map(fmt_q).collect::<Vec<_>>().join(";")
            }
        })
    }
}

/// Every triple `τ, μ, ν ⊢ n` for `1 ≤ n ≤ n_max`, in the order n, then τ, μ, ν largest-first.
fn triples(n_max: u32) -> Result<Vec<(u32, Partition, Partition, Partition)>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        let parts = partitions_of(n)?;
        for tau in &parts {
            for mu in &parts {
                for nu in &parts {
                    out.push((n, tau.clone(), mu.clone(), nu.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// `h^τ_{μ,ν}` for every `τ, μ, ν ⊢ n ≤ n_max`, read off the `ψ` table.
pub fn extract_h(psi: &TripleCoeffTable) -> Result<Vec<HEntry>> {
    Ok(triples(psi.n_max())?
        .into_iter()
        .map(|(n, tau, mu, nu)| {
            let raw = psi.entry(n, &(tau.clone(), mu.clone(), nu.clone()));
            HEntry::new(EntryKind::H, n, tau, mu, nu, raw)
        })
        .collect())
}

/// `c^τ_{μ,ν} = α^{ℓ(τ)} z_τ · [p_τ(x)p_μ(y)p_ν(z)] φ_n`.
pub fn extract_c(phi: &TripleCoeffTable) -> Result<Vec<HEntry>> {
    Ok(triples(phi.n_max())?
        .into_iter()
        .map(|(n, tau, mu, nu)| {
            let scale = AlphaRational::alpha_pow(tau.len() as i64).scale(&q(tau.z() as i64));
            let raw = phi
                .entry(n, &(tau.clone(), mu.clone(), nu.clone()))
                .mul(&scale);
            HEntry::new(EntryKind::C, n, tau, mu, nu, raw)
        })
        .collect())
}

/// Theorem-level checks (polynomiality, pole location, degree bound, consistency of the
/// β-form at α = 1 and α = 2, symmetry of the table) and conjecture-level checks
/// (integer, nonnegative β-coefficients) over a list of entries.
pub fn check_suite(entries: &[HEntry]) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("bconj");
    report.note(format!("alphabet convention: {ALPHABET_CONVENTION}"));
    let lookup: std::collections::HashMap<(u32, &Partition, &Partition, &Partition), &HEntry> =
        entries
            .iter()
            .map(|e| ((e.n, &e.tau, &e.mu, &e.nu), e))
            .collect();
    let mut attained = 0usize;
    let mut bounded = 0usize;
    let mut asymmetric = Vec::new();
    for e in entries {
        let label = e.label();
        let v = e.verdicts;
        report.push(Check::from_bool(
            format!("{label} pole only at alpha=0"),
            v.pole_only_at_zero,
            || format!("value {}", e.raw.render()),
        ));
        report.push(Check::from_bool(
            format!("{label} polynomial in beta"),
            v.polynomial,
            || format!("value {}", e.raw.render()),
        ));
        if let Some(bound) = e.degree_bound {
            report.push(Check::from_bool(
                format!("{label} degree <= {bound}"),
                v.degree_ok,
                || {
                    format!(
                        "beta-polynomial {} of degree {:?}",
                        e.beta_coeffs_string().unwrap_or_default(),
                        e.degree()
                    )
                },
            ));
            if bound >= 0 {
                bounded += 1;
                if e.degree() == Some(bound as usize) {
                    attained += 1;
                }
            }
        }
        if let Some(p) = &e.beta_poly {
            let consistent = [1, 2].iter().all(|&a| {
                let a = q(a);
                e.raw.eval(&a).ok() == Some(p.eval(&(&a - q(1))))
            });
            report.push(Check::from_bool(
                format!("{label} beta-form matches at alpha=1,2"),
                consistent,
                || {
                    format!(
                        "raw {} vs beta-polynomial {}",
                        e.raw.render(),
                        p.render("b")
                    )
                },
            ));
            report.push(
                Check::from_bool(
                    format!("{label} beta-coefficients in N"),
                    v.integer_coeffs && v.nonneg_coeffs,
                    || {
                        format!(
                            "beta-coefficients {}",
                            e.beta_coeffs_string().unwrap_or_default()
                        )
                    },
                )
                .conjecture(),
            );
        }
        let perms = [
            (&e.mu, &e.tau, &e.nu),
            (&e.tau, &e.nu, &e.mu),
            (&e.nu, &e.mu, &e.tau),
        ];
        for (a, b, c) in perms {
            if let Some(other) = lookup.get(&(e.n, a, b, c)) {
                if other.raw != e.raw {
                    asymmetric.push(format!("{label} vs {}", other.label()));
                }
            }
        }
    }
    report.push(Check::from_bool(
        "table symmetric under permuting (tau, mu, nu)",
        asymmetric.is_empty(),
        || asymmetric.first().cloned().unwrap_or_default(),
    ));
    report.note(format!("{} entries; degree bound attained by {attained} of {bounded} entries with a nonnegative bound", entries.len()));
    Ok(report)
}

#[derive(Serialize)]
struct CsvRow {
    n: u32,
    tau: String,
    mu: String,
    nu: String,
    h_beta_coeffs: Option<String>,
    degree: Option<usize>,
    degree_bound: Option<i64>,
    poly_ok: bool,
    nonneg_int_ok: bool,
}

/// Column names of the CSV table, in order.
pub const CSV_HEADER: [&str; 9] = [
    "n",
    "tau",
    "mu",
    "nu",
    "h_beta_coeffs",
    "degree",
    "degree_bound",
    "poly_ok",
    "nonneg_int_ok",
];

/// CSV: the [`CSV_HEADER`] row, then one row per entry.
pub fn write_csv(entries: &[HEntry], out: impl Write) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER)
        .map_err(|err| crate::Error::Io(err.to_string()))?;
    for e in entries {
        w.serialize(CsvRow {
            n: e.n,
            tau: e.tau.to_string(),
            mu: e.mu.to_string(),
            nu: e.nu.to_string(),
            h_beta_coeffs: e.beta_coeffs_string(),
            degree: e.degree(),
            degree_bound: e.degree_bound,
            poly_ok: e.verdicts.polynomial && e.verdicts.degree_ok,
            nonneg_int_ok: e.verdicts.integer_coeffs && e.verdicts.nonneg_coeffs,
        })
        .map_err(|err| crate::Error::Io(err.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    #[serde(flatten)]
    entry: &'a HEntry,
    beta_coeffs: Option<String>,
    degree: Option<usize>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    convention: &'static str,
    entries: Vec<JsonEntry<'a>>,
    summary: TableSummary,
}

/// Table-level counts for the structured output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableSummary {
    pub entries: usize,
    pub polynomial: usize,
    pub degree_ok: usize,
    pub nonneg_integer: usize,
}

pub fn summarize(entries: &[HEntry]) -> TableSummary {
    let count = |f: fn(&EntryVerdicts) -> bool| entries.iter().filter(|e| f(&e.verdicts)).count();
    TableSummary {
        entries: entries.len(),
        polynomial: count(|v| v.polynomial),
        degree_ok: count(|v| v.degree_ok),
        nonneg_integer: count(|v| v.integer_coeffs && v.nonneg_coeffs),
    }
}

/// Pretty JSON: one record per entry plus a summary, with a trailing newline.
pub fn write_json(entries: &[HEntry], mut out: impl Write) -> Result<()> {
    let table = JsonTable {
        convention: ALPHABET_CONVENTION,
        entries: entries
            .iter()
            .map(|e| JsonEntry {
                entry: e,
                beta_coeffs: e.beta_coeffs_string(),
                degree: e.degree(),
            })
            .collect(),
        summary: summarize(entries),
    };
    serde_json::to_writer_pretty(&mut out, &table)?;
    out.write_all(b"\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gj::series::{phi_table, psi_from_phi};
    use crate::jack::JackEngine;
    use crate::part;

    fn find(entries: &[HEntry], tau: Partition, mu: Partition, nu: Partition) -> &HEntry {
        entries
            .iter()
            .find(|e| e.tau == tau && e.mu == mu && e.nu == nu)
            .unwrap()
    }

    #[test]
    fn spot_values_and_verdicts() {
        let phi = phi_table(&JackEngine::new(), 2).unwrap();
        let h = extract_h(&psi_from_phi(&phi)).unwrap();
        assert_eq!(h.len(), 9);
        let e = find(&h, part![1], part![1], part![1]);
        assert_eq!(e.beta_coeffs_string().as_deref(), Some("1"));
        assert_eq!(e.degree_bound, Some(0));
        let e = find(&h, part![2], part![2], part![2]);
        assert_eq!(e.beta_coeffs_string().as_deref(), Some("0;1"));
        assert_eq!(e.degree_bound, Some(1));
        let e = find(&h, part![1, 1], part![2], part![2]);
        assert_eq!(e.beta_coeffs_string().as_deref(), Some("1"));
        assert!(e.verdicts.degree_ok && e.verdicts.nonneg_coeffs && e.verdicts.integer_coeffs);
        let e = find(&h, part![1, 1], part![1, 1], part![1, 1]);
        assert_eq!(e.beta_coeffs_string().as_deref(), Some("0"));
        assert_eq!(e.degree_bound, Some(-2));
        assert!(e.verdicts.degree_ok);

        let c = extract_c(&phi).unwrap();
        assert_eq!(
            find(&c, part![1], part![1], part![1])
                .beta_coeffs_string()
                .as_deref(),
            Some("1")
        );

        let report = check_suite(&h).unwrap();
        assert!(report.passed(), "{}", report.summary());
        assert_eq!(report.conjecture_findings().count(), 0);
    }

    #[test]
    fn csv_layout() {
        let phi = phi_table(&JackEngine::new(), 1).unwrap();
        let h = extract_h(&psi_from_phi(&phi)).unwrap();
        let mut buf = Vec::new();
        write_csv(&h, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,tau,mu,nu,h_beta_coeffs,degree,degree_bound,poly_ok,nonneg_int_ok\n1,1,1,1,1,0,0,true,true\n"
        );
    }

    #[test]
    fn violations_are_reported_not_raised() {
        let bad = HEntry::new(
            EntryKind::H,
            1,
            part![1],
            part![1],
            part![1],
            AlphaRational::from_poly(AlphaPolynomial::from_ints(&[1, -1]))
                .scale(&crate::algebra::q_frac(1, 2)),
        );
        let report = check_suite(&[bad]).unwrap();
        // Degree 1 exceeds the bound 0, and the coefficients are not in N.
        assert!(!report.passed());
        assert_eq!(report.conjecture_findings().count(), 1);
    }
}
