use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};
use hypid_core::catalog::{IdentityCase, Mode, SignResolution, VerificationReport, LAMBDA_SIGN};
use hypid_core::PrecisionContext;
use serde::Serialize;

use crate::cli::Format;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Exact => "exact",
        Mode::Float => "float",
    }
}

/// Shortest decimal that round-trips the value.
fn num(x: f64) -> String {
    format!("{:e}", x)
}

#[derive(Serialize)]
struct Precision {
    target_digits: u32,
    guard_digits: u32,
}

#[derive(Serialize)]
struct CaseSummary<'a> {
    id: &'a str,
    paper_ref: &'a str,
    mode: &'static str,
    trials: u64,
    failures: u64,
    max_rel_err: String,
    worst_binding: Option<&'a str>,
}

#[derive(Serialize)]
struct Report<'a> {
    version: &'static str,
    precision: Precision,
    seed: u64,
    cases: Vec<CaseSummary<'a>>,
}

#[derive(Serialize)]
struct TrialRow<'a> {
    id: &'a str,
    trial: u64,
    mode: &'static str,
    binding: &'a str,
    lhs: Option<&'a str>,
    rhs: Option<&'a str>,
    abs_err: Option<String>,
    rel_err: Option<String>,
    pass: bool,
    reason: Option<&'a str>,
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p).with_context(|| format!("cannot create {}", p.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

pub fn emit_verification(
    reports: &[VerificationReport],
    ctx: &PrecisionContext,
    seed: u64,
    format: Format,
    path: Option<&Path>,
) -> Result<()> {
    let mut out = sink(path)?;
    match format {
        Format::Json => {
            let cases = reports
                .iter()
                .map(|r| CaseSummary {
                    id: &r.id,
                    paper_ref: &r.reference,
                    mode: mode_name(r.mode),
                    trials: r.trials,
                    failures: r.failures,
                    max_rel_err: num(r.max_rel_err),
                    worst_binding: r.worst_record().map(|w| w.binding.as_str()),
                })
                .collect();
            let report = Report {
                version: VERSION,
                precision: Precision { target_digits: ctx.target_digits, guard_digits: ctx.guard_digits },
                seed,
                cases,
            };
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                for t in &r.records {
                    w.serialize(TrialRow {
                        id: &r.id,
                        trial: t.trial,
                        mode: mode_name(t.mode),
                        binding: &t.binding,
                        lhs: t.lhs.as_deref(),
                        rhs: t.rhs.as_deref(),
                        abs_err: t.abs_err.map(num),
                        rel_err: t.rel_err.map(num),
                        pass: t.pass,
                        reason: t.reason.as_deref(),
                    })?;
                }
            }
            w.flush()?;
        }
        Format::Human => {
            for r in reports {
                let status = if r.passed() { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{:<12} {:<5} {:<4} {:>3}/{:<3} failed  max rel err {:.3e}",
                    r.id,
                    mode_name(r.mode),
                    status,
                    r.failures,
                    r.trials,
                    r.max_rel_err
                )?;
                if let Some(w) = r.worst_record().filter(|w| !w.pass) {
                    writeln!(out, "    trial {}: {}", w.trial, w.binding)?;
                    if let Some(why) = &w.reason {
                        writeln!(out, "    {}", why)?;
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            writeln!(out, "{} of {} identities passed", reports.len() - failed, reports.len())?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ListRow<'a> {
    id: &'a str,
    kind: String,
    paper_ref: &'a str,
    exact_capable: bool,
    support: String,
}

pub fn emit_list(cases: &[IdentityCase], format: Format, path: Option<&Path>) -> Result<()> {
    let rows: Vec<ListRow> = cases
        .iter()
        .map(|c| ListRow {
            id: c.id,
            kind: format!("{:?}", c.kind).to_lowercase(),
            paper_ref: c.reference,
            exact_capable: c.exact_capable,
            support: format!("{:?}", c.support).to_lowercase(),
        })
        .collect();
    let mut out = sink(path)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Human => {
            for r in &rows {
                let exact = if r.exact_capable { "exact" } else { "float" };
                writeln!(out, "{:<12} {:<14} {:<5} {}", r.id, r.kind, exact, r.paper_ref)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ProbeRow<'a> {
    id: &'a str,
    trials: usize,
    plus: usize,
    minus: usize,
    resolved: Option<i64>,
    pinned: i64,
    error: Option<String>,
}

#[derive(Serialize)]
struct ProbeReport<'a> {
    version: &'static str,
    seed: u64,
    probes: Vec<ProbeRow<'a>>,
}

pub type ProbeOutcome = (String, Result<SignResolution, hypid_core::catalog::CatalogError>);

pub fn emit_probe(results: &[ProbeOutcome], seed: u64, format: Format, path: Option<&Path>) -> Result<()> {
    let rows: Vec<ProbeRow> = results
        .iter()
        .map(|(id, r)| match r {
            Ok(s) => ProbeRow {
                id,
                trials: s.trials,
                plus: s.plus,
                minus: s.minus,
                resolved: Some(s.resolved),
                pinned: LAMBDA_SIGN,
                error: None,
            },
            Err(e) => ProbeRow { id, trials: 0, plus: 0, minus: 0, resolved: None, pinned: LAMBDA_SIGN, error: Some(e.to_string()) },
        })
        .collect();
    let mut out = sink(path)?;
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &ProbeReport { version: VERSION, seed, probes: rows })?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Human => {
            for r in &rows {
                match (&r.error, r.resolved) {
                    (Some(e), _) => writeln!(out, "{:<4} unresolved: {}", r.id, e)?,
                    (None, Some(s)) => writeln!(
                        out,
                        "{:<4} lambda sign {:+} (+1 held on {}/{}, -1 on {}/{}; pinned {:+})",
                        r.id, s, r.plus, r.trials, r.minus, r.trials, r.pinned
                    )?,
                    (None, None) => unreachable!(),
                }
            }
        }
    }
    Ok(())
}
