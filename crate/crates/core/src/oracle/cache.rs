//! On-disk cache of echelonized components.
//!
//! One JSON file per `(kind, ground, degree)`, named
//! `<kind>-m<ground>-d<degree>.json`:
//!
//! ```text
//! { "format": "m0nr-component", "version": 1,
//!   "checksum": "<sha256 hex of the payload's canonical JSON>",
//!   "payload": { "kind", "ground", "degree", "ambient_total" (decimal string),
//!                "basis": [[generator ids]...],
//!                "rows": [[[column, "p/q"], ...], ...] } }
//! ```
//!
//! Files with a wrong header, version or checksum are ignored (and later
//! overwritten); the cache never affects results.

use std::fs;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::algebra::{GradedComponent, Kind, Monomial};
use super::echelon::Reduced;
use crate::error::{Error, Result};

pub const FORMAT: &str = "m0nr-component";
pub const VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Payload {
    kind: Kind,
    ground: usize,
    degree: usize,
    ambient_total: String,
    basis: Vec<Monomial>,
    rows: Vec<Vec<(usize, String)>>,
}

#[derive(Serialize, Deserialize)]
struct File {
    format: String,
    version: u32,
    checksum: String,
    payload: serde_json::Value,
}

pub fn path_for(dir: &Path, kind: Kind, ground: usize, degree: usize) -> PathBuf {
    dir.join(format!("{}-m{ground}-d{degree}.json", kind.name()))
}

fn checksum(payload: &serde_json::Value) -> String {
    hex::encode(Sha256::digest(payload.to_string().as_bytes()))
}

pub fn store(dir: &Path, c: &GradedComponent) -> Result<()> {
    let payload = Payload {
        kind: c.kind,
        ground: c.ground,
        degree: c.degree,
        ambient_total: c.ambient_total.to_string(),
        basis: c.basis().to_vec(),
        rows: c
            .ideal()
            .rows()
            .iter()
            .map(|r| r.iter().map(|(col, v)| (*col, v.to_string())).collect())
            .collect(),
    };
    let value = serde_json::to_value(&payload).map_err(|e| Error::Cache(e.to_string()))?;
    let file = File { format: FORMAT.into(), version: VERSION, checksum: checksum(&value), payload: value };
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let path = path_for(dir, c.kind, c.ground, c.degree);
    let tmp = path.with_extension("json.tmp");
    let text = serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))?;
    fs::write(&tmp, text).map_err(|e| Error::Cache(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| Error::Cache(e.to_string()))
}

/// Load a cached component, or `None` if absent or invalid.
pub fn load(dir: &Path, kind: Kind, ground: usize, degree: usize) -> Option<GradedComponent> {
    try_load(dir, kind, ground, degree).ok()
}

pub fn try_load(dir: &Path, kind: Kind, ground: usize, degree: usize) -> Result<GradedComponent> {
    let bad = |m: &str| Error::Cache(m.to_string());
    let text = fs::read_to_string(path_for(dir, kind, ground, degree)).map_err(|e| bad(&e.to_string()))?;
    let file: File = serde_json::from_str(&text).map_err(|e| bad(&e.to_string()))?;
    if file.format != FORMAT || file.version != VERSION {
        return Err(bad("unknown format or version"));
    }
    if checksum(&file.payload) != file.checksum {
        return Err(bad("checksum mismatch"));
    }
    let p: Payload = serde_json::from_value(file.payload).map_err(|e| bad(&e.to_string()))?;
    if (p.kind, p.ground, p.degree) != (kind, ground, degree) {
        return Err(bad("key mismatch"));
    }
    let rows = p
        .rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, v)| v.parse::<BigRational>().map(|v| (c, v)).map_err(|e| bad(&e.to_string())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let ambient_total = p.ambient_total.parse().map_err(|_| bad("ambient total"))?;
    Ok(GradedComponent::from_parts(kind, ground, degree, ambient_total, p.basis, Reduced::from_rows(rows)))
}
