//! Command implementations behind the `so3period` binary. Each command
//! returns its complete standard output as a string so that output is
//! byte-for-byte reproducible and testable without spawning a process.

pub mod format;

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_traits::Zero;
use so3period::bracket::{self, BracketCache, Poly};
use so3period::link::{FramedLinkDiagram, SurgeryPresentation};
use so3period::periodicity::{
    bracket_periodicity_test, grid_experiment, grid_ns, jones_periodicity_test, manifold_periodicity_test,
    poincare_scan, primes_between, BracketMode, GridCell, PeriodicityReport, GRID_PRIMES,
};
use so3period::so3::{InvariantValue, So3Context};
use so3period::Error;

use format::{dense_map, int_map, poly_map, LinkFileV1, ReportFileV1};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unreadable, malformed or out-of-domain input; exit code 2.
    Input(String),
    /// A configured resource cap was exceeded; exit code 3.
    Cap(String),
    /// An internal consistency check failed; exit code 1.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::TooManyCrossings { .. } => CliError::Cap(msg),
            Error::MalformedDiagram(_)
            | Error::EmptyDiagram
            | Error::InvalidColor { .. }
            | Error::NotOddPrime(_)
            | Error::InvalidInput(_) => CliError::Input(msg),
            Error::NotDivisible { .. }
            | Error::DivisionByZero
            | Error::NonIntegralExponent(_)
            | Error::IntegralityViolation(_) => CliError::Internal(msg),
        }
    }
}

pub fn read_link_file(path: &Path) -> Result<FramedLinkDiagram, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    LinkFileV1::parse(&text)?.to_diagram()
}

fn write_report(path: Option<&Path>, report: &ReportFileV1) -> Result<(), CliError> {
    if let Some(path) = path {
        let mut json = report.to_json();
        json.push('\n');
        fs::write(path, json).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

/// A polynomial in `s = t^(1/2)` written in `t`, with half-integer powers as
/// `t^(k/2)`.
pub fn render_in_t(v: &Poly) -> String {
    struct T<'a>(&'a Poly);
    impl std::fmt::Display for T<'_> {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            let mut first = true;
            for (e, c) in self.0.terms() {
                let neg = c < &0.into();
                let mag = if neg { -c.clone() } else { c.clone() };
                match (first, neg) {
                    (true, true) => f.write_str("-")?,
                    (true, false) => {}
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                }
                first = false;
                let var = match (e, e % 2 == 0) {
                    (0, _) => String::new(),
                    (2, _) => "t".to_string(),
                    (_, true) => format!("t^{}", e / 2),
                    (_, false) => format!("t^({e}/2)"),
                };
                if var.is_empty() {
                    write!(f, "{mag}")?;
                } else if mag == 1.into() {
                    f.write_str(&var)?;
                } else {
                    write!(f, "{mag}{var}")?;
                }
            }
            if first {
                f.write_str("0")?;
            }
            Ok(())
        }
    }
    T(v).to_string()
}

pub fn cmd_bracket(path: &Path, renormalized: bool, cap: usize) -> Result<String, CliError> {
    let d = read_link_file(path)?;
    let v = if renormalized { bracket::bracket_renormalized(d.pd(), cap)? } else { bracket::bracket(d.pd(), cap)? };
    Ok(format!("{v}\n"))
}

pub fn cmd_jones(path: &Path, cap: usize) -> Result<String, CliError> {
    let d = read_link_file(path)?;
    let v = bracket::jones(d.pd(), cap)?;
    Ok(format!("{}\n", render_in_t(&v)))
}

fn invariant_map(v: &InvariantValue) -> format::CoefficientMap {
    match v.integral() {
        Some(i) => int_map(i.coeffs()),
        None => dense_map(v.value().coeffs(), Zero::is_zero),
    }
}

fn context(p: u64, cap: usize) -> Result<So3Context, CliError> {
    Ok(So3Context::new(p)?.with_cap(cap))
}

fn manifold_report(v: &InvariantValue, p: u64) -> Result<(PeriodicityReport, ReportFileV1), CliError> {
    let int = v.integral().ok_or_else(|| {
        CliError::Input("the manifold criterion needs a homology sphere (|det| = 1 linking matrix)".into())
    })?;
    let r = manifold_periodicity_test(int, p)?;
    let file = ReportFileV1::new(&r, invariant_map(v), v.ring_name());
    Ok((r, file))
}

/// The JSON report of a computed invariant; the verdict fields describe the
/// manifold criterion when it applies.
fn invariant_report(v: &InvariantValue, p: u64) -> Result<ReportFileV1, CliError> {
    if v.integral().is_some() {
        return Ok(manifold_report(v, p)?.1);
    }
    Ok(ReportFileV1 {
        criterion: "none".into(),
        p,
        verdict: "not applicable".into(),
        passing_j: Vec::new(),
        invariant: invariant_map(v),
        ring: v.ring_name(),
        notes: "not a homology sphere; no periodicity criterion applies".into(),
        degenerate: false,
        difference: Default::default(),
        difference_ring: String::new(),
    })
}

fn surgery_value(path: &Path, p: u64, cap: usize) -> Result<InvariantValue, CliError> {
    let d = read_link_file(path)?;
    let ctx = context(p, cap)?;
    Ok(ctx.surgery_invariant(&SurgeryPresentation::new(d), &BracketCache::new())?)
}

pub fn cmd_invariant(path: &Path, p: u64, cap: usize, report: Option<&Path>) -> Result<String, CliError> {
    let v = surgery_value(path, p, cap)?;
    write_report(report, &invariant_report(&v, p)?)?;
    Ok(format!("{v}\n"))
}

pub fn cmd_brieskorn(n: i64, p: u64, report: Option<&Path>) -> Result<String, CliError> {
    let v = context(p, bracket::DEFAULT_CROSSING_CAP)?.brieskorn_invariant(n)?;
    write_report(report, &invariant_report(&v, p)?)?;
    Ok(format!("{v}\n"))
}

/// What `check` should examine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckTarget {
    Link(std::path::PathBuf),
    Manifold(std::path::PathBuf),
    Brieskorn(i64),
    Experiment,
    PoincareScan { max_p: u64 },
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub p: Option<u64>,
    pub cap: usize,
    pub json: bool,
    pub report: Option<std::path::PathBuf>,
}

fn require_p(opts: &CheckOptions) -> Result<u64, CliError> {
    opts.p.ok_or_else(|| CliError::Input("--p is required for this check".into()))
}

fn verdict_line(r: &PeriodicityReport) -> String {
    format!("verdict: {} ({})", r.verdict, r.note())
}

fn phases(j: &[u64]) -> String {
    if j.is_empty() {
        "none".into()
    } else {
        j.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
    }
}

fn render_manifold(title: &str, v: &InvariantValue, r: &PeriodicityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{title}");
    let _ = writeln!(out, "criterion: manifold, p = {}", r.p);
    let _ = writeln!(out, "invariant: {v} in {}", v.ring_name());
    let _ = writeln!(out, "passing j: {}", phases(&r.passing_j));
    if r.degenerate {
        let _ = writeln!(out, "degenerate: invariant vanishes mod {}", r.p);
    }
    let _ = writeln!(out, "{}", verdict_line(r));
    out
}

fn emit(opts: &CheckOptions, text: String, reports: &[ReportFileV1]) -> Result<String, CliError> {
    let json = match reports {
        [single] => single.to_json(),
        many => serde_json::to_string_pretty(many).expect("reports serialize"),
    };
    if let Some(path) = &opts.report {
        fs::write(path, format!("{json}\n")).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(if opts.json { format!("{json}\n") } else { text })
}

pub fn cmd_check(target: &CheckTarget, opts: &CheckOptions) -> Result<String, CliError> {
    match target {
        CheckTarget::Link(path) => check_link(path, opts),
        CheckTarget::Manifold(path) => {
            let p = require_p(opts)?;
            let v = surgery_value(path, p, opts.cap)?;
            let (r, file) = manifold_report(&v, p)?;
            emit(opts, render_manifold(&format!("surgery presentation {}", path.display()), &v, &r), &[file])
        }
        CheckTarget::Brieskorn(n) => {
            let p = require_p(opts)?;
            let v = context(p, opts.cap)?.brieskorn_invariant(*n)?;
            let (r, file) = manifold_report(&v, p)?;
            emit(opts, render_manifold(&format!("Brieskorn sphere M_{n}"), &v, &r), &[file])
        }
        CheckTarget::Experiment => check_experiment(opts),
        CheckTarget::PoincareScan { max_p } => check_scan(*max_p, opts),
    }
}

fn check_link(path: &Path, opts: &CheckOptions) -> Result<String, CliError> {
    let p = require_p(opts)?;
    let d = read_link_file(path)?;
    let pd = d.pd();
    let jones = bracket::jones(pd, opts.cap)?;
    let br = bracket::bracket(pd, opts.cap)?;
    let mut reports = vec![(jones_periodicity_test(pd, p, opts.cap)?, poly_map(&jones), "Z[s, s^-1], t = s^2")];
    reports.push((bracket_periodicity_test(pd, p, BracketMode::WithWrithe, opts.cap)?, poly_map(&br), "Z[A, A^-1]"));
    if pd.writhe() % p as i64 == 0 {
        reports.push((bracket_periodicity_test(pd, p, BracketMode::Framed, opts.cap)?, poly_map(&br), "Z[A, A^-1]"));
    }
    let mut out = String::new();
    let _ = writeln!(out, "link {} ({} crossings, writhe {}), p = {p}", path.display(), pd.crossing_count(), pd.writhe());
    let _ = writeln!(out, "jones: {}", render_in_t(&jones));
    let _ = writeln!(out, "bracket: {br}");
    for (r, _, _) in &reports {
        let _ = writeln!(out, "{}: {} ({})", r.criterion.name(), r.verdict, r.note());
    }
    let files: Vec<ReportFileV1> =
        reports.iter().map(|(r, inv, ring)| ReportFileV1::new(r, inv.clone(), ring.to_string())).collect();
    emit(opts, out, &files)
}

fn cell_report(c: &GridCell) -> ReportFileV1 {
    let mut f = ReportFileV1::new(&c.report, int_map(c.invariant.coeffs()), format!("Z[A]/Phi_{{{}}}", 2 * c.p));
    f.notes = format!("M_{}: {}", c.n, c.report.note());
    f
}

fn check_experiment(opts: &CheckOptions) -> Result<String, CliError> {
    let g = grid_experiment(&GRID_PRIMES, &grid_ns())?;
    let mut out = String::new();
    let _ = writeln!(out, "{:>5} {:>3}  {:<9} {:<7} passing j", "n", "p", "divides", "verdict");
    for c in &g.cells {
        let _ = writeln!(
            out,
            "{:>5} {:>3}  {:<9} {:<7} {}",
            c.n,
            c.p,
            if c.divisibility { "yes" } else { "no" },
            c.report.verdict.to_string(),
            phases(&c.report.passing_j)
        );
    }
    let exceptional = g.exceptional();
    let _ = writeln!(out, "total pairs: {}", g.total());
    let _ = writeln!(out, "criterion holds: {}", g.passing());
    let _ = writeln!(out, "holds with p | n or p | 2n-1: {}", g.divisibility_passes());
    let _ = writeln!(out, "other pairs where it holds: {}", exceptional.len());
    let list: Vec<String> = exceptional.iter().map(|(n, p)| format!("({n},{p})")).collect();
    let _ = writeln!(out, "  {}", list.join(" "));
    let files: Vec<ReportFileV1> = g.cells.iter().map(cell_report).collect();
    if opts.json {
        let summary = serde_json::json!({
            "total": g.total(),
            "passing": g.passing(),
            "divisibility_passes": g.divisibility_passes(),
            "exceptional": exceptional,
            "cells": files,
        });
        let json = serde_json::to_string_pretty(&summary).expect("summary serializes");
        if let Some(path) = &opts.report {
            fs::write(path, format!("{json}\n")).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        }
        return Ok(format!("{json}\n"));
    }
    emit(opts, out, &files)
}

fn check_scan(max_p: u64, opts: &CheckOptions) -> Result<String, CliError> {
    if max_p < 5 {
        return Err(CliError::Input("--max-p must be at least 5".into()));
    }
    let cells = poincare_scan(&primes_between(5, max_p))?;
    let mut out = String::new();
    let _ = writeln!(out, "{:>3}  {:<7} {:<9} note", "p", "verdict", "passing j");
    for c in &cells {
        let _ = writeln!(
            out,
            "{:>3}  {:<7} {:<9} {}",
            c.p,
            c.report.verdict.to_string(),
            phases(&c.report.passing_j),
            c.report.note()
        );
    }
    let files: Vec<ReportFileV1> = cells.iter().map(cell_report).collect();
    emit(opts, out, &files)
}
