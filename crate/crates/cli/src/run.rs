use std::io;
use std::sync::Arc;
use std::time::Instant;

use ca_forge::arith::prime_power;
use ca_forge::ca::{is_ca, is_minimal_non_ca_psl, oracle_verdict, schmidt_case, theorem_predicate};
use ca_forge::dickson::{applicable_classes, construct_class_rep};
use ca_forge::linear::{order_psl, psl2_bounded};
use ca_forge::suzuki::verify_suzuki_lemma;
use ca_forge::{Error, FieldCtx, Limits, Method, SuzukiReport, ENGINE_VERSION};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cache::{Cache, CacheKey};
use crate::record::ReportRecord;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cache: {0}")]
    Cache(#[from] io::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(e) if e.is_resource_bound() => EXIT_RESOURCE,
            // A failed internal cross-check is a verification failure.
            CliError::Engine(Error::Internal(_) | Error::CatalogInconsistency(_)) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodChoice {
    Auto,
    MaximalClass,
    Oracle,
}

pub struct Config {
    pub limits: Limits,
    pub field_bound: u64,
    pub timings: bool,
    pub cache: Option<Cache>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limits: Limits::default(),
            field_bound: ca_forge::field::DEFAULT_FIELD_BOUND,
            timings: false,
            cache: None,
        }
    }
}

impl Config {
    fn field(&self, q: u64) -> Result<Arc<FieldCtx>, CliError> {
        let (p, m) = prime_power(q)?;
        if q <= 3 {
            return Err(Error::QTooSmall(q).into());
        }
        Ok(Arc::new(FieldCtx::with_bound(p, m, self.field_bound)?))
    }

    fn resolve(&self, q: u64, choice: MethodChoice) -> Method {
        match choice {
            MethodChoice::Auto if order_psl(q) <= self.limits.oracle_bound as u64 => Method::Oracle,
            MethodChoice::Auto | MethodChoice::MaximalClass => Method::MaximalClass,
            MethodChoice::Oracle => Method::Oracle,
        }
    }
}

/// Verdict for one `q`, served from the cache when possible.
pub fn verify(cfg: &Config, q: u64, choice: MethodChoice) -> Result<ReportRecord, CliError> {
    let start = Instant::now();
    let field = cfg.field(q)?;
    let method = cfg.resolve(q, choice);
    let key = CacheKey { q, method: method.to_string(), engine_version: ENGINE_VERSION.to_string() };

    let cached = cfg.cache.as_ref().and_then(|c| c.get(&key));
    let mut record = match cached {
        Some(mut r) => {
            r.cache_hit = Some(true);
            r
        }
        None => {
            let (_, reason) = theorem_predicate(q)?;
            let verdict = match method {
                Method::MaximalClass => is_minimal_non_ca_psl(&field, &cfg.limits)?,
                Method::Oracle => oracle_verdict(&field, &cfg.limits)?,
            };
            let mut r = ReportRecord::new(field.p() as u64, field.m(), reason, &verdict);
            if let Some(cache) = &cfg.cache {
                cache.put(key, &r)?;
                r.cache_hit = Some(false);
            }
            r
        }
    };
    if cfg.timings {
        record.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(record)
}

pub type SweepResults = Vec<(u64, Result<ReportRecord, CliError>)>;

/// Prime powers `q > 3` in `[qmin, qmax]`.
pub fn sweep_range(qmin: u64, qmax: u64) -> Result<Vec<u64>, CliError> {
    if qmin > qmax {
        return Err(CliError::Usage(format!("empty range: {qmin} > {qmax}")));
    }
    let qs: Vec<u64> = (qmin.max(4)..=qmax).filter(|&q| prime_power(q).is_ok()).collect();
    if qs.is_empty() {
        return Err(CliError::Usage(format!("no prime power q > 3 in [{qmin}, {qmax}]")));
    }
    Ok(qs)
}

/// Runs `verify` over the range on `jobs` workers; results come back in
/// ascending `q`.
pub fn sweep(
    cfg: &Config,
    qmin: u64,
    qmax: u64,
    jobs: usize,
) -> Result<SweepResults, CliError> {
    let qs = sweep_range(qmin, qmax)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(pool.install(|| {
        qs.par_iter().map(|&q| (q, verify(cfg, q, MethodChoice::Auto))).collect()
    }))
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct SweepSummary {
    pub records: usize,
    pub agree: usize,
    pub failed: usize,
    pub errors: usize,
    pub worst_exit: i32,
}

pub fn summarize(results: &[(u64, Result<ReportRecord, CliError>)]) -> SweepSummary {
    let mut s = SweepSummary::default();
    for (_, r) in results {
        match r {
            Ok(rec) => {
                s.records += 1;
                if rec.agrees() {
                    s.agree += 1;
                } else {
                    s.failed += 1;
                    s.worst_exit = s.worst_exit.max(EXIT_MISMATCH);
                }
            }
            Err(e) => {
                s.errors += 1;
                let code = e.exit_code();
                // A mismatch outranks resource and usage problems.
                if s.worst_exit != EXIT_MISMATCH && (code == EXIT_MISMATCH || code > s.worst_exit) {
                    s.worst_exit = code;
                }
            }
        }
    }
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct InspectRow {
    pub case_id: u8,
    pub description: String,
    pub order: usize,
    pub multiplicity: u8,
    pub fingerprint: String,
    pub is_ca: bool,
    pub schmidt: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Inspection {
    pub q: u64,
    pub p: u64,
    pub m: u32,
    pub psl_order: usize,
    pub psl_is_ca: bool,
    pub predicate_answer: bool,
    pub predicate_reason: String,
    pub classes: Vec<InspectRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suzuki: Option<SuzukiReport>,
}

pub fn inspect(cfg: &Config, q: u64, suzuki: Option<u32>) -> Result<Inspection, CliError> {
    let field = cfg.field(q)?;
    let (p, m) = (field.p() as u64, field.m());
    let (predicate_answer, reason) = theorem_predicate(q)?;
    let psl = psl2_bounded(&field, cfg.limits.group_bound)?;
    let specs = applicable_classes(p, m)?;
    let classes = specs
        .par_iter()
        .map(|spec| {
            let rep = construct_class_rep(&psl, spec)?;
            let schmidt = if rep.order() <= cfg.limits.oracle_bound {
                Some(schmidt_case(&rep, cfg.limits.oracle_bound)?.label.to_string())
            } else {
                None
            };
            Ok(InspectRow {
                case_id: spec.case_id,
                description: spec.description.clone(),
                order: rep.order(),
                multiplicity: spec.multiplicity,
                fingerprint: rep.fingerprint().to_string(),
                is_ca: is_ca(&rep).is_ca,
                schmidt,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let suzuki = suzuki.map(verify_suzuki_lemma).transpose()?;
    Ok(Inspection {
        q,
        p,
        m,
        psl_order: psl.order(),
        psl_is_ca: is_ca(&psl).is_ca,
        predicate_answer,
        predicate_reason: reason.to_string(),
        classes,
        suzuki,
    })
}

impl Inspection {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "PSL(2,{}) q={}^{} order={} CA={} predicate={} ({})\n",
            self.q, self.p, self.m, self.psl_order, self.psl_is_ca, self.predicate_answer, self.predicate_reason
        );
        out.push_str(&format!(
            "{:>4}  {:>8}  {:>4}  {:<6}  {:<7}  {}\n",
            "case", "order", "mult", "CA", "schmidt", "fingerprint"
        ));
        for r in &self.classes {
            out.push_str(&format!(
                "{:>4}  {:>8}  {:>4}  {:<6}  {:<7}  {}  [{}]\n",
                r.case_id,
                r.order,
                r.multiplicity,
                if r.is_ca { "yes" } else { "no" },
                r.schmidt.as_deref().unwrap_or("-"),
                r.fingerprint,
                r.description
            ));
        }
        if let Some(s) = &self.suzuki {
            out.push_str(&format!(
                "Suzuki N for Sz({}): order={} degree={} kernel={} (non-abelian: {}) complement={} (generator: {}) CA={} witness={} passed={}\n",
                s.r,
                s.order,
                s.degree,
                s.kernel_order,
                s.kernel_noncommuting_pair
                    .as_ref()
                    .map(|(a, b)| format!("{a} {b}"))
                    .unwrap_or_else(|| "none".into()),
                s.complement_order,
                s.complement_generator.as_deref().unwrap_or("none"),
                s.is_ca,
                s.ca_witness.as_deref().unwrap_or("none"),
                s.passed
            ));
        }
        out
    }
}
