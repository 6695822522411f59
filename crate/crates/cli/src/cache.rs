//! JSON-lines cache of analysis records in `<dir>/analysis.jsonl`, keyed by
//! (tool version, n, modulus, d1, d2). Later lines win. A hit is only used
//! after a cheap recomputation agrees with it.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

use quadbent_core::boolfun::VectorialFn;
use quadbent_core::FieldElem;

use crate::record::{AnalysisRecord, TOOL_VERSION};

type Key = (String, u32, String, u64, Option<u64>);

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: HashMap<Key, AnalysisRecord>,
    pub skipped_lines: usize,
}

fn key_of(r: &AnalysisRecord) -> Key {
    (r.tool_version.clone(), r.n, r.modulus.clone(), r.d1, r.d2)
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
        let path = dir.join("analysis.jsonl");
        let mut entries = HashMap::new();
        let mut skipped_lines = 0;
        if path.exists() {
            let file = File::open(&path).with_context(|| format!("reading {}", path.display()))?;
            for line in BufReader::new(file).lines() {
                match serde_json::from_str::<AnalysisRecord>(&line?) {
                    Ok(r) => {
                        entries.insert(key_of(&r), r);
                    }
                    Err(_) => skipped_lines += 1,
                }
            }
        }
        Ok(Cache { path, entries, skipped_lines })
    }

    pub fn get(&self, n: u32, modulus: &str, d1: u64, d2: Option<u64>) -> Option<&AnalysisRecord> {
        self.entries.get(&(TOOL_VERSION.to_string(), n, modulus.to_string(), d1, d2))
    }

    pub fn append(&mut self, records: &[AnalysisRecord]) -> Result<()> {
        if records.is_empty() {
            return Ok(());
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("writing {}", self.path.display()))?;
        for r in records {
            serde_json::to_writer(&mut file, r)?;
            file.write_all(b"\n")?;
            self.entries.insert(key_of(r), r.clone());
        }
        Ok(())
    }
}

/// Parseval on a few components, plus consistency of those components with
/// the cached nonlinearity and subfield verdict.
pub fn spot_check(f: &VectorialFn<'_>, rec: &AnalysisRecord) -> bool {
    let ctx = f.ctx();
    let n = ctx.n();
    let size = ctx.size() as i64;
    let bent = 1i64 << (n / 2);
    let max_allowed = size - 2 * rec.nonlinearity as i64;
    let sample = [FieldElem::ONE, ctx.primitive(), ctx.exp(ctx.order() as u64 / 3 + 1)];
    sample.iter().all(|&a| {
        let row = f.walsh_row(a);
        let parseval = row.iter().map(|&w| (w as i64) * (w as i64)).sum::<i64>() == size * size;
        let within = row.iter().all(|&w| (w as i64).abs() <= max_allowed);
        let sf_ok = match ctx.m() {
            Some(m) if rec.sf_equals_subfield => {
                let is_bent = row.iter().all(|&w| (w as i64).abs() == bent);
                is_bent != ctx.in_subfield(a, m)
            }
            _ => true,
        };
        parseval && within && sf_ok
    })
}
