use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Row, SweepReport};
use crate::error::Result;
use crate::formulas::Family;
use crate::io::write_atomic;

pub const CSV_HEADER: [&str; 14] = [
    "family",
    "l",
    "m",
    "n",
    "r",
    "case_id",
    "predicted_kind",
    "predicted_value",
    "hypothesis_value",
    "exact_value",
    "construction_status",
    "agreement",
    "nodes_explored",
    "elapsed_ms",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

fn cell(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_record(row: &Row) -> [String; 14] {
    [
        row.family.to_string(),
        cell(row.l),
        cell(row.m),
        cell(row.n),
        row.r.to_string(),
        row.case_id.clone(),
        row.predicted_kind.clone(),
        cell(row.predicted_value),
        cell(row.hypothesis_value),
        cell(row.exact_value),
        row.construction_status.as_str().to_string(),
        row.agreement.as_str().to_string(),
        row.nodes_explored.to_string(),
        row.elapsed_ms.to_string(),
    ]
}

pub fn render_csv(report: &SweepReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for row in &report.rows {
        w.write_record(csv_record(row))?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv fields are ASCII/UTF-8"))
}

pub fn render_json(report: &SweepReport) -> Result<String> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    Ok(text)
}

pub fn render_markdown(report: &SweepReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Sweep report (rdyn {})\n", report.tool_version);
    let mut families: Vec<Family> = report.rows.iter().map(|r| r.family).collect();
    families.dedup();
    for family in families {
        let _ = writeln!(out, "## {family}\n");
        out.push_str("| l | m | n | r | case | kind | predicted | hypothesis | exact | construction | agreement | nodes | ms |\n");
        out.push_str("|---|---|---|---|---|---|---|---|---|---|---|---|---|\n");
        for row in report.rows.iter().filter(|r| r.family == family) {
            let rec = csv_record(row);
            let _ = writeln!(out, "| {} |", rec[1..].join(" | "));
        }
        out.push('\n');
    }
    out.push_str("## Summary\n\n| agreement | rows |\n|---|---|\n");
    for (agreement, count) in &report.summary {
        let _ = writeln!(out, "| {} | {count} |", agreement.as_str());
    }
    if !report.stability_checks.is_empty() {
        out.push_str("\n## Stability above Δ\n\n");
        for s in &report.stability_checks {
            let above = cell(s.chi_above_max);
            let _ = writeln!(
                out,
                "- {}: χ at r={} is {}, at r={} is {}",
                s.instance,
                s.max_degree,
                s.chi_at_max,
                s.max_degree + 1,
                if above.is_empty() { "timeout" } else { &above }
            );
        }
    }
    if !report.findings.is_empty() {
        out.push_str("\n## Findings\n\n");
        for f in &report.findings {
            let at = f.r.map(|r| format!(" r={r}")).unwrap_or_default();
            let kind = serde_json::to_value(f.kind).ok();
            let kind = kind.as_ref().and_then(|v| v.as_str()).unwrap_or("finding");
            let _ = writeln!(out, "- {}{at} [{kind}]: {}", f.instance, f.detail);
        }
    }
    out
}

/// Writes the report atomically in the requested format.
pub fn emit_report(report: &SweepReport, format: ReportFormat, path: &Path) -> Result<()> {
    let text = match format {
        ReportFormat::Csv => render_csv(report)?,
        ReportFormat::Json => render_json(report)?,
        ReportFormat::Markdown => render_markdown(report),
    };
    write_atomic(path, text.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::{sweep, RSpan, Span, SweepConfig};

    fn path_star_report() -> SweepReport {
        let cfg = SweepConfig::new(Family::PathStar, RSpan::Fixed(Span::new(1, 3)))
            .with_l(Span::new(2, 3))
            .with_m(Span::single(3));
        sweep(&cfg).unwrap()
    }

    #[test]
    fn empty_report_is_header_only() {
        let mut report = path_star_report();
        report.rows.clear();
        let csv = render_csv(&report).unwrap();
        assert_eq!(csv, format!("{}\n", CSV_HEADER.join(",")));
    }

    #[test]
    fn csv_line_count_and_cells() {
        let csv = render_csv(&path_star_report()).unwrap();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines.len(), 7);
        let first: Vec<_> = lines[1].split(',').collect();
        assert_eq!(&first[..12], &[
            "path-star", "2", "3", "", "1", "case1", "exact", "4", "", "4", "valid", "match"
        ]);
        assert!(!csv.contains('"'));
    }

    #[test]
    fn json_round_trips() {
        let report = path_star_report();
        let back: SweepReport = serde_json::from_str(&render_json(&report).unwrap()).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn markdown_has_table_and_summary() {
        let md = render_markdown(&path_star_report());
        assert!(md.contains("## path-star"));
        assert!(md.contains("| 2 | 3 |  | 1 | case1 | exact | 4 |  | 4 | valid | match |"));
        assert!(md.contains("| match | 6 |"));
    }

    #[test]
    fn emits_files() {
        let dir = tempfile::tempdir().unwrap();
        let report = path_star_report();
        for (format, name) in [
            (ReportFormat::Csv, "r.csv"),
            (ReportFormat::Json, "r.json"),
            (ReportFormat::Markdown, "r.md"),
        ] {
            let path = dir.path().join(name);
            emit_report(&report, format, &path).unwrap();
            assert!(std::fs::metadata(&path).unwrap().len() > 0);
        }
        assert!(emit_report(&report, ReportFormat::Csv, &dir.path().join("x/y.csv")).is_err());
    }
}
