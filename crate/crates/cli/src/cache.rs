//! Append-only JSONL result cache.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::record::ReportRecord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub q: u64,
    pub method: String,
    pub engine_version: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheEntry {
    key: CacheKey,
    record: ReportRecord,
}

pub struct Cache {
    path: PathBuf,
    entries: HashMap<CacheKey, ReportRecord>,
    writer: Mutex<File>,
}

impl Cache {
    /// Loads `path`, creating it if missing. Unreadable lines are reported on
    /// stderr and ignored.
    pub fn open(path: &Path) -> io::Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<CacheEntry>(&line) {
                    Ok(e) => {
                        entries.insert(e.key, e.record);
                    }
                    Err(err) => {
                        eprintln!("warning: {}:{}: skipping corrupt cache line ({err})", path.display(), i + 1)
                    }
                }
            }
        }
        let writer = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Cache { path: path.to_path_buf(), entries, writer: Mutex::new(writer) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &CacheKey) -> Option<ReportRecord> {
        self.entries.get(key).cloned()
    }

    /// Appends one entry. Stored records never carry timing or cache flags.
    pub fn put(&self, key: CacheKey, record: &ReportRecord) -> io::Result<()> {
        let mut record = record.clone();
        record.cache_hit = None;
        record.wall_time_ms = None;
        let line = serde_json::to_string(&CacheEntry { key, record }).map_err(io::Error::other)?;
        let mut w = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        writeln!(w, "{line}")?;
        w.flush()
    }
}
