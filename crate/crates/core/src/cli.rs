//! The `jackcum` command line: compute Jack polynomials, run verification suites, and write
//! the `h` table.
//!
//! Exit codes: 0 when every theorem-level check passes, 1 when one fails or on I/O errors,
//! 2 on usage errors. Conjecture-level findings are printed but never change the exit code.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::parse_q;
use crate::error::{Error, Result};
use crate::gj::{extract_h, phi_table, psi_from_phi, write_csv, write_json, MAX_SERIES_DEGREE};
use crate::jack::{JackEngine, HARD_JACK_BOUND};
use crate::partition::Partition;
use crate::report::SuiteReport;
use crate::suites::{
    bconj_suite, factorization_suite, jack_suite, lattice_suite, lemmas_suite, DEFAULT_SEED,
};
use crate::symfunc::Basis;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for a failed theorem-level check or an I/O error.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for invalid arguments.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "jackcum",
    version,
    about = "Exact Jack polynomials, cumulants and b-conjecture tables"
)]
pub struct Cli {
    /// Directory for persisted Jack polynomials (overrides JACKCUM_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the expansion of J_λ, e.g. `jack 2,1 --basis p`; `-` is the empty partition.
    Jack {
        partition: String,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
        /// Evaluate the coefficients at this rational value of α.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest partition size (jack, factorization).
        #[arg(long)]
        max_weight: Option<u32>,
        /// Largest total size of a tuple (factorization).
        #[arg(long)]
        max_total: Option<u32>,
        /// Number of partitions (factorization) or largest ground set (lattice).
        #[arg(long)]
        r: Option<usize>,
        /// Truncation degree (bconj).
        #[arg(long)]
        n: Option<u32>,
        /// Seed for randomized checks (lattice, lemmas).
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random families per ground-set size (lattice).
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Print every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// Write the table of h-coefficients for all n up to --n.
    Htable {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include every degree 1..=n instead of degree n only.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    M,
    P,
    E,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::P => Basis::PowerSum,
            BasisArg::E => Basis::Elementary,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Jack,
    Factorization,
    Lattice,
    Lemmas,
    Bconj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

/// Hard caps on user-supplied sizes.
const MAX_R: usize = crate::cumulant::MAX_FAMILY_SIZE;

/// A failure classified by exit code.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidPartition(_)
            | Error::BoundExceeded { .. }
            | Error::InvalidSubset(_)
            | Error::DivisionByZero => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn usage_cap(what: &str, value: usize, cap: usize) -> std::result::Result<(), Failure> {
    if value > cap {
        return Err(Failure::Usage(format!(
            "{what} = {value} exceeds the cap {cap}"
        )));
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    // Output is buffered and written once the command has finished.
    let mut buf_out: Vec<u8> = Vec::new();
    let mut buf_err: Vec<u8> = Vec::new();
    let result = pool.install(|| execute(&cli, &mut buf_out, &mut buf_err));
    let code = match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(buf_err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(m)) => {
            let _ = writeln!(buf_err, "error: {m}");
            EXIT_FAILURE
        }
    };
    if out.write_all(&buf_out).and_then(|()| out.flush()).is_err() {
        return EXIT_FAILURE;
    }
    let _ = err.write_all(&buf_err);
    code
}

fn engine(cli: &Cli) -> std::result::Result<JackEngine, Failure> {
    let e = JackEngine::from_env().with_bound(HARD_JACK_BOUND)?;
    Ok(match &cli.cache_dir {
        Some(dir) => e.with_cache_dir(Some(dir.clone())),
        None => e,
    })
}

fn io(e: std::io::Error) -> Failure {
    Failure::Runtime(e.to_string())
}

fn execute(
    cli: &Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    match &cli.command {
        Command::Jack {
            partition,
            basis,
            alpha,
        } => {
            let lambda: Partition = partition.parse()?;
            let mut f = engine(cli)?.jack(&lambda, (*basis).into())?.function;
            if let Some(a) = alpha {
                f = f.eval_alpha(&parse_q(a)?)?;
            }
            writeln!(out, "{f}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_weight,
            max_total,
            r,
            n,
            seed,
            samples,
            verbose,
        } => {
            let engine = engine(cli)?;
            let report = match suite {
                SuiteArg::Jack => {
                    let w = max_weight.unwrap_or(6);
                    usage_cap("--max-weight", w as usize, HARD_JACK_BOUND as usize)?;
                    jack_suite(&engine, w, w)?
                }
                SuiteArg::Factorization => {
                    let r = r.unwrap_or(2);
                    usage_cap("--r", r, MAX_R)?;
                    let w = max_weight.unwrap_or(3);
                    let total = max_total.unwrap_or(w.saturating_mul(r as u32));
                    usage_cap("--max-total", total as usize, HARD_JACK_BOUND as usize)?;
                    factorization_suite(&engine, r, w, total)?
                }
                SuiteArg::Lattice => {
                    let r = r.unwrap_or(MAX_R);
                    usage_cap("--r", r, MAX_R)?;
                    lattice_suite(r, *seed, *samples)?
                }
                SuiteArg::Lemmas => lemmas_suite(&engine, *seed)?,
                SuiteArg::Bconj => {
                    let n = n.unwrap_or(5);
                    usage_cap("--n", n as usize, MAX_SERIES_DEGREE as usize)?;
                    bconj_suite(&engine, n)?
                }
            };
            print_report(&report, *verbose, out).map_err(io)?;
            let _ = err.flush();
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Htable {
            n,
            format,
            out: path,
            all,
        } => {
            usage_cap("--n", *n as usize, MAX_SERIES_DEGREE as usize)?;
            let mut entries = extract_h(&psi_from_phi(&phi_table(&engine(cli)?, *n)?))?;
            if !all {
                entries.retain(|e| e.n == *n);
            }
            let write = |w: &mut dyn Write| -> Result<()> {
                match format {
                    FormatArg::Csv => write_csv(&entries, w),
                    FormatArg::Json => write_json(&entries, w),
                }
            };
            match path {
                Some(p) => {
                    let mut w = BufWriter::new(File::create(p).map_err(io)?);
                    write(&mut w).map_err(|e| Failure::Runtime(e.to_string()))?;
                    w.flush().map_err(io)?;
                    writeln!(out, "wrote {} rows to {}", entries.len(), p.display()).map_err(io)?;
                }
                None => write(out).map_err(|e| Failure::Runtime(e.to_string()))?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn print_report(report: &SuiteReport, verbose: bool, out: &mut dyn Write) -> std::io::Result<()> {
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    for check in &report.checks {
        if verbose || !check.pass {
            let tag = match check.level {
                crate::report::Level::Theorem => "",
                crate::report::Level::Conjecture => " (conjecture)",
            };
            writeln!(out, "{check}{tag}")?;
        }
    }
    let findings = report.conjecture_findings().count();
    if findings > 0 {
        writeln!(
            out,
            "CONJECTURE FINDINGS: {findings} (listed above; exit status unaffected)"
        )?;
    }
    writeln!(out, "{}", report.summary())?;
    writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" })
}
