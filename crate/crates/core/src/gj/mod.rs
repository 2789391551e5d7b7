//! The triple generating series `φ`, `ψ`, the coefficients `h` and `c` read off them, and the
//! log-cumulant identity for column-indexed series.

mod entries;
mod logcum;
mod series;

pub use entries::{
    check_suite, extract_c, extract_h, summarize, write_csv, write_json, EntryKind, EntryVerdicts,
    HEntry, TableSummary, ALPHABET_CONVENTION, CSV_HEADER,
};
pub use logcum::{verify_log_cumulant_identity, MAX_LOG_WEIGHT};
pub use series::{
    check_exp_log, log_slices, phi_table, psi_from_phi, psi_table, TripleCoeffTable,
    DEFAULT_SERIES_DEGREE, MAX_SERIES_DEGREE,
};
