//! JSON-lines persistence for closures and certificates.
//!
//! One graph per line: graph6 when simple, an explicit edge list otherwise,
//! plus the hex canonical form and free-form metadata. Loading recomputes
//! every canonical form and rejects the file on the first mismatch.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::StoreError;
use crate::graph::{canonical_form, CanonicalForm, EdgeList, MultiGraph};
use crate::graph6;
use crate::moves::FamilyClosure;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<EdgeList>,
    pub canonical: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub meta: Value,
}

impl Record {
    pub fn new(g: &MultiGraph, meta: Value) -> Self {
        let (graph6, edges) = match graph6::encode(g) {
            Ok(s) => (Some(s), None),
            Err(_) => (None, Some(EdgeList::from(g))),
        };
        Self {
            graph6,
            edges,
            canonical: canonical_form(g).to_hex(),
            meta,
        }
    }

    pub fn graph(&self) -> Result<MultiGraph, String> {
        match (&self.graph6, &self.edges) {
            (Some(s), None) => graph6::decode(s).map_err(|e| e.to_string()),
            (None, Some(e)) => MultiGraph::try_from(e).map_err(|e| e.to_string()),
            _ => Err("exactly one of graph6 and edges is required".into()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub form: CanonicalForm,
    pub graph: MultiGraph,
    pub meta: Value,
}

/// Writes all records to `path` through a temporary file in the same
/// directory, so readers see either the old file or the complete new one.
pub fn write_records(path: &Path, records: &[Record]) -> Result<(), StoreError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut w = std::io::BufWriter::new(tmp.as_file_mut());
        for r in records {
            serde_json::to_writer(&mut w, r).map_err(std::io::Error::from)?;
            w.write_all(b"\n")?;
        }
        w.flush()?;
    }
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Reads and re-verifies every record. A missing file is an error; an empty
/// file is an empty list.
pub fn read_records(path: &Path) -> Result<Vec<Loaded>, StoreError> {
    let file = match fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(StoreError::Missing(path.to_path_buf()))
        }
        Err(e) => return Err(e.into()),
    };
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        let n = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let rec: Record = serde_json::from_str(&line).map_err(|e| StoreError::Parse {
            line: n,
            message: e.to_string(),
        })?;
        let graph = rec.graph().map_err(|message| StoreError::Parse { line: n, message })?;
        let form = canonical_form(&graph);
        let computed = form.to_hex();
        if computed != rec.canonical {
            return Err(StoreError::Mismatch {
                line: n,
                stored: rec.canonical,
                computed,
            });
        }
        out.push(Loaded {
            form,
            graph,
            meta: rec.meta,
        });
    }
    Ok(out)
}

pub fn store_closure(path: &Path, closure: &FamilyClosure) -> Result<(), StoreError> {
    let records: Vec<Record> = closure
        .members
        .iter()
        .map(|m| Record::new(&m.graph, serde_json::json!({ "depth": m.depth })))
        .collect();
    write_records(path, &records)
}

pub fn load_closure(path: &Path) -> Result<Vec<Loaded>, StoreError> {
    read_records(path)
}
