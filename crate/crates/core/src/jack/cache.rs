//! On-disk cache: one JSON document per `(λ, basis)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::AlphaRational;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// Bumped whenever the solver or the record layout changes; stale records are recomputed.
pub const ENGINE_VERSION: &str = "jackcum-1";

#[derive(Serialize, Deserialize)]
struct Term {
    mu: Partition,
    coeff: AlphaRational,
}

#[derive(Serialize, Deserialize)]
struct Record {
    lambda: Partition,
    basis: Basis,
    terms: Vec<Term>,
    engine_version: String,
}

/// Canonical file name, e.g. `jack_m_3-1-1.json` or `jack_p_empty.json`.
pub fn file_name(lambda: &Partition, basis: Basis) -> String {
    let key = if lambda.is_empty() {
        String::from("empty")
    } else {
        lambda
            .parts()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("-")
    };
    format!("jack_{}_{key}.json", basis.symbol())
}

pub fn record_path(dir: &Path, lambda: &Partition, basis: Basis) -> PathBuf {
    dir.join(file_name(lambda, basis))
}

/// The serialized record, byte-for-byte as written to disk.
pub fn encode(lambda: &Partition, f: &SymFunc) -> Result<String> {
    let record = Record {
        lambda: lambda.clone(),
        basis: f.basis(),
        terms: f
            .terms()
            .iter()
            .map(|(mu, c)| Term {
                mu: mu.clone(),
                coeff: c.clone(),
            })
            .collect(),
        engine_version: String::from(ENGINE_VERSION),
    };
    let mut s = serde_json::to_string_pretty(&record)?;
    s.push('\n');
    Ok(s)
}

/// Reads a record; `Ok(None)` when absent or written by another engine version.
pub fn load(dir: &Path, lambda: &Partition, basis: Basis) -> Result<Option<SymFunc>> {
    let path = record_path(dir, lambda, basis);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let record: Record = serde_json::from_str(&text)
        .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    if record.engine_version != ENGINE_VERSION {
        return Ok(None);
    }
    if record.lambda != *lambda || record.basis != basis {
        return Err(Error::Cache(format!(
            "{}: record is for another key",
            path.display()
        )));
    }
    Ok(Some(SymFunc::from_terms(
        basis,
        record.terms.into_iter().map(|t| (t.mu, t.coeff)),
    )))
}

/// Writes a record atomically (temporary file in the same directory, then rename).
pub fn store(dir: &Path, lambda: &Partition, f: &SymFunc) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = record_path(dir, lambda, f.basis());
    let body = encode(lambda, f)?;
    let tmp = dir.join(format!(
        ".{}.{}.{:?}.tmp",
        file_name(lambda, f.basis()),
        std::process::id(),
        std::thread::current().id()
    ));
    {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(body.as_bytes())?;
        file.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn file_names() {
        assert_eq!(
            file_name(&part![3, 1, 1], Basis::Monomial),
            "jack_m_3-1-1.json"
        );
        assert_eq!(file_name(&part![], Basis::PowerSum), "jack_p_empty.json");
    }

    #[test]
    fn round_trip_and_stale_versions() {
        let dir = tempfile::tempdir().unwrap();
        let f = SymFunc::from_terms(
            Basis::Monomial,
            [
                (part![2], AlphaRational::alpha()),
                (part![1, 1], AlphaRational::from_int(2)),
            ],
        );
        assert!(load(dir.path(), &part![2], Basis::Monomial)
            .unwrap()
            .is_none());
        store(dir.path(), &part![2], &f).unwrap();
        assert_eq!(
            load(dir.path(), &part![2], Basis::Monomial).unwrap(),
            Some(f.clone())
        );
        let path = record_path(dir.path(), &part![2], Basis::Monomial);
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text, encode(&part![2], &f).unwrap());
        fs::write(&path, text.replace(ENGINE_VERSION, "old")).unwrap();
        assert!(load(dir.path(), &part![2], Basis::Monomial)
            .unwrap()
            .is_none());
        fs::write(&path, "{not json").unwrap();
        assert!(matches!(
            load(dir.path(), &part![2], Basis::Monomial),
            Err(Error::Cache(_))
        ));
    }
}
