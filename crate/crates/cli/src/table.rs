//! On-disk cache of symbolic polynomials, one JSON file per `(m, n)`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use ggp_core::catalog::{pairs_up_to, Catalog};
use ggp_core::{LabeledGegenbauer, Method};
use rayon::prelude::*;

use crate::json::{export_json, parse_json};

pub fn file_name(m: u32, n: u32) -> String {
    format!("a2_m{m}_n{n}.json")
}

pub fn file_path(dir: &Path, m: u32, n: u32) -> PathBuf {
    dir.join(file_name(m, n))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableSummary {
    pub written: usize,
    pub unchanged: usize,
}

/// Writes `contents` via a temporary file in the same directory and a
/// rename. Returns `false` without touching the file if it already holds
/// exactly `contents`.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<bool> {
    if fs::read(path).is_ok_and(|old| old == contents.as_bytes()) {
        return Ok(false);
    }
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(true)
}

/// Computes every `P_{m,n}^κ` with `m + n ≤ max_degree` by the eigensolver
/// and writes the table into `dir`. Runs on the current rayon pool.
pub fn write_table(dir: &Path, max_degree: u32) -> io::Result<TableSummary> {
    fs::create_dir_all(dir)?;
    let catalog = Catalog::build(Method::Eigensolver, max_degree);
    let outcomes: Vec<io::Result<bool>> = pairs_up_to(max_degree)
        .into_par_iter()
        .map(|(m, n)| {
            let p = catalog.labeled(m, n).expect("pair in catalog");
            let mut text = export_json(&p);
            text.push('\n');
            write_atomic(&file_path(dir, m, n), &text)
        })
        .collect();
    let mut summary = TableSummary::default();
    for o in outcomes {
        if o? {
            summary.written += 1;
        } else {
            summary.unchanged += 1;
        }
    }
    Ok(summary)
}

/// Reads a cached symbolic eigensolver entry, if present and well formed.
pub fn read_cached(dir: &Path, m: u32, n: u32) -> Option<LabeledGegenbauer> {
    let text = fs::read_to_string(file_path(dir, m, n)).ok()?;
    let p = parse_json(&text).ok()?;
    (p.m == m && p.n == n && p.method == Method::Eigensolver).then_some(p)
}
