//! Batch enumeration over `Φ`, golden comparison and report emission.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::crflag::{concavity_verdict, Check, ConcavityVerdict};
use crate::error::{Error, Result};
use crate::exactla::DefinitenessClass;
use crate::golden::GoldenTable;
use crate::realform::RealForm;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub form: String,
    pub label: String,
    pub phi: Vec<usize>,
    pub finite_type: bool,
    pub levi: Vec<DefinitenessClass>,
    pub mot: bool,
    pub span: bool,
    pub verdict: bool,
    /// Expected verdict per golden reading.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<(String, bool)>,
    /// Whether some reading agrees; `None` outside finite type or without golden data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<ConcavityVerdict>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
}

/// All subsets of `{1..rank}` in binary-counting order.
pub fn all_phis(rank: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << rank)).map(|m| (1..=rank).filter(|j| m >> (j - 1) & 1 == 1).collect()).collect()
}

/// Verdict rows for the given subsets, evaluated in parallel; row order
/// follows `phis`. `progress` is called with the number of finished rows.
pub fn enumerate(
    form: &RealForm,
    phis: &[Vec<usize>],
    check: Check,
    progress: Option<&(dyn Fn(usize) + Sync)>,
) -> Result<Report> {
    let done = std::sync::atomic::AtomicUsize::new(0);
    let rows: Result<Vec<ReportRow>> = phis
        .par_iter()
        .map(|phi| {
            let v = concavity_verdict(form, phi, check)?;
            if let Some(p) = progress {
                p(done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1);
            }
            Ok(ReportRow {
                form: v.form.clone(),
                label: v.label.clone(),
                phi: v.phi.clone(),
                finite_type: v.finite_type,
                levi: v.levi.iter().map(|l| l.class).collect(),
                mot: v.mot_satisfied,
                span: v.span_satisfied,
                verdict: v.verdict,
                expected: Vec::new(),
                matches: None,
                detail: Some(v),
            })
        })
        .collect();
    Ok(Report { rows: rows? })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub form: String,
    pub phi: Vec<usize>,
    pub verdict: bool,
    pub expected: Vec<(String, bool)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenDiff {
    pub mismatches: Vec<Mismatch>,
    /// Per form, the readings that agree on every finite-type row.
    pub consistent_readings: Vec<(String, Vec<String>)>,
}

impl GoldenDiff {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Fill in expected verdicts and compare. A form passes when one reading
/// agrees with every finite-type row of that form; otherwise the rows that
/// disagree with the first reading are reported.
pub fn compare_golden(report: &mut Report, golden: &GoldenTable, forms: &[&RealForm]) -> Result<GoldenDiff> {
    let mut diff = GoldenDiff::default();
    for f in forms {
        let d = &f.diagram;
        let idx: Vec<usize> = (0..report.rows.len()).filter(|&i| report.rows[i].form == d.name).collect();
        if idx.is_empty() {
            continue;
        }
        for &i in &idx {
            report.rows[i].expected = golden.expected(d, &report.rows[i].phi)?;
        }
        let names: Vec<String> = report.rows[idx[0]].expected.iter().map(|e| e.0.clone()).collect();
        let good: Vec<usize> = (0..names.len())
            .filter(|&k| idx.iter().all(|&i| !report.rows[i].finite_type || report.rows[i].expected[k].1 == report.rows[i].verdict))
            .collect();
        let chosen = good.first().copied().unwrap_or(0);
        for &i in &idx {
            let row = &mut report.rows[i];
            if row.finite_type {
                let ok = row.expected[chosen].1 == row.verdict;
                row.matches = Some(ok);
                if !ok {
                    diff.mismatches.push(Mismatch {
                        form: row.form.clone(),
                        phi: row.phi.clone(),
                        verdict: row.verdict,
                        expected: row.expected.clone(),
                    });
                }
            }
        }
        diff.consistent_readings.push((d.name.clone(), good.iter().map(|&k| names[k].clone()).collect()));
    }
    Ok(diff)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" | "text" => Ok(Format::Table),
            _ => Err(Error::Format(s.to_string())),
        }
    }
}

fn phi_str(phi: &[usize]) -> String {
    phi.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn expected_str(row: &ReportRow) -> String {
    row.expected.iter().map(|(n, b)| format!("{n}={b}")).collect::<Vec<_>>().join(" ")
}

/// Class counts in order of first appearance, e.g. `psd,zero:3`.
fn levi_summary(levi: &[DefinitenessClass]) -> String {
    let mut seen: Vec<(DefinitenessClass, usize)> = Vec::new();
    for c in levi {
        match seen.iter_mut().find(|x| x.0 == *c) {
            Some(x) => x.1 += 1,
            None => seen.push((*c, 1)),
        }
    }
    seen.iter()
        .map(|(c, n)| if *n == 1 { c.to_string() } else { format!("{c}:{n}") })
        .collect::<Vec<_>>()
        .join(",")
}

fn csv_err(e: csv::Error) -> Error {
    Error::Internal(e.to_string())
}

fn opt(b: Option<bool>) -> String {
    b.map_or(String::new(), |b| b.to_string())
}

pub fn emit(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(report)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["form", "phi", "finite_type", "mot", "span", "verdict", "expected", "match"])
                .map_err(csv_err)?;
            for r in &report.rows {
                w.write_record([
                    r.form.clone(),
                    phi_str(&r.phi),
                    r.finite_type.to_string(),
                    r.mot.to_string(),
                    r.span.to_string(),
                    r.verdict.to_string(),
                    expected_str(r),
                    opt(r.matches),
                ])
                .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
        }
        Format::Table => {
            let header = ["form", "phi", "finite", "levi", "mot", "span", "verdict", "expected", "match"];
            let body: Vec<[String; 9]> = report
                .rows
                .iter()
                .map(|r| {
                    [
                        r.form.clone(),
                        format!("{{{}}}", phi_str(&r.phi).replace(' ', ",")),
                        r.finite_type.to_string(),
                        levi_summary(&r.levi),
                        r.mot.to_string(),
                        r.span.to_string(),
                        r.verdict.to_string(),
                        expected_str(r),
                        opt(r.matches),
                    ]
                })
                .collect();
            let mut width = header.map(str::len);
            for row in &body {
                for (w, c) in width.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let mut s = String::new();
            let line = |s: &mut String, cells: Vec<&str>| {
                let parts: Vec<String> = cells.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
                let _ = writeln!(s, "{}", parts.join("  ").trim_end());
            };
            line(&mut s, header.to_vec());
            for row in &body {
                line(&mut s, row.iter().map(String::as_str).collect());
            }
            Ok(s)
        }
    }
}
