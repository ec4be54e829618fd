//! Knot tables: a JSON array of
//! `{"name": str, "seifert": [[int]] | null, "braid": "n: w ..." | null, "genus": int | null}`.

use std::path::Path;

use serde::Deserialize;

use knotsurgery_core::knot::{parse_braid, KnotRecord, SeifertMatrix};

use crate::error::{json_error, Error};

/// The table shipped with the binary.
pub const BUNDLED: &str = include_str!("../data/knots.json");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    name: String,
    #[serde(default)]
    seifert: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    braid: Option<String>,
    #[serde(default)]
    genus: Option<u64>,
}

/// Parses and validates every entry. A missing genus defaults to the
/// degree of `Δ_K`; when both presentations are given they must agree.
pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>, Error> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let entries: Vec<Entry> = serde_json::from_str(text).map_err(json_error)?;
    entries.into_iter().map(build_record).collect()
}

fn build_record(e: Entry) -> Result<KnotRecord, Error> {
    let name = e.name;
    let seifert = e.seifert.map(SeifertMatrix::new).transpose().map_err(|s| Error::knot(&name, s))?;
    let braid = e.braid.as_deref().map(parse_braid).transpose().map_err(|s| Error::knot(&name, s))?;
    let record = KnotRecord::new(name.clone(), seifert, braid, e.genus).map_err(|s| Error::knot(&name, s))?;
    record.verify_presentations().map_err(|s| Error::knot(&name, s))?;
    Ok(record.with_default_genus())
}

pub fn load_knot_table(path: &Path) -> Result<Vec<KnotRecord>, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    parse_knot_table(&text)
}

pub fn bundled_table() -> Vec<KnotRecord> {
    parse_knot_table(BUNDLED).expect("bundled knot table is valid")
}

pub fn find<'a>(table: &'a [KnotRecord], name: &str) -> Result<&'a KnotRecord, Error> {
    table.iter().find(|k| k.name == name).ok_or_else(|| {
        let names: Vec<&str> = table.iter().map(|k| k.name.as_str()).collect();
        Error::Input(format!("no knot `{name}` in table (have: {})", names.join(", ")))
    })
}

/// A Seifert matrix file: a bare JSON array of integer rows.
pub fn parse_seifert_matrix(text: &str) -> Result<SeifertMatrix, Error> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text).map_err(json_error)?;
    SeifertMatrix::new(rows).map_err(|e| Error::knot("seifert file", e))
}
