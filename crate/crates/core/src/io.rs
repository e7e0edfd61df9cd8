//! JSON file helpers. Every output file is written to a temporary sibling and
//! renamed into place, so readers never see a partial file.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    Graph::from_json(read_json::<GraphJson>(path)?)
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<()> {
    write_json(path, &g.to_json())
}

pub fn read_coloring(path: &Path) -> Result<Coloring> {
    read_json(path)
}

pub fn write_coloring(path: &Path, c: &Coloring) -> Result<()> {
    write_json(path, c)
}
