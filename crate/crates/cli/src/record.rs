use ca_forge::{ClassCheck, MinimalityVerdict, SchmidtCase, ENGINE_VERSION};
use serde::{Deserialize, Serialize};

/// Verdict for one maximal class, as written to the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub case_id: Option<u8>,
    pub order: usize,
    pub is_ca: bool,
    pub schmidt: Option<String>,
}

impl From<&ClassCheck> for ClassRow {
    fn from(c: &ClassCheck) -> Self {
        ClassRow {
            case_id: c.case_id,
            order: c.order,
            is_ca: c.is_ca,
            schmidt: c.schmidt.map(|s: SchmidtCase| s.to_string()),
        }
    }
}

/// One JSONL line. Field order here is the key order on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub status: String,
    pub predicate_answer: bool,
    pub predicate_reason: String,
    pub computed_answer: bool,
    pub method: String,
    pub reason_code: String,
    pub per_class: Vec<ClassRow>,
    pub engine_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cache_hit: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl ReportRecord {
    pub fn new(p: u64, m: u32, predicate_reason: &str, v: &MinimalityVerdict) -> Self {
        ReportRecord {
            q: v.q,
            p,
            m,
            status: if v.agrees() { "ok" } else { "FAILED" }.to_string(),
            predicate_answer: v.predicate_answer,
            predicate_reason: predicate_reason.to_string(),
            computed_answer: v.computed_answer,
            method: v.method.to_string(),
            reason_code: v.reason_code.clone(),
            per_class: v.per_class.iter().map(ClassRow::from).collect(),
            engine_version: ENGINE_VERSION.to_string(),
            cache_hit: None,
            wall_time_ms: None,
        }
    }

    pub fn agrees(&self) -> bool {
        self.predicate_answer == self.computed_answer
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    /// One-line summary for terminal output.
    pub fn to_text(&self) -> String {
        let mut line = format!(
            "q={} method={} predicate={} ({}) computed={} ({}) {}",
            self.q,
            self.method,
            self.predicate_answer,
            self.predicate_reason,
            self.computed_answer,
            self.reason_code,
            if self.agrees() { "agree" } else { "FAILED" }
        );
        if let Some(hit) = self.cache_hit {
            line.push_str(if hit { " [cached]" } else { " [stored]" });
        }
        if let Some(ms) = self.wall_time_ms {
            line.push_str(&format!(" {ms}ms"));
        }
        line
    }
}
