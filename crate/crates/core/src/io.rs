//! JSON documents for matrices, sets and reports, and text report output.
//!
//! Matrix document:
//!
//! ```json
//! {
//!   "alternatives": ["A1", "A2"],
//!   "criteria": ["C1"],
//!   "cells": [[{"truth_pos": [0.5, 0.6], "ind_pos": [0.2, 0.5], "fals_pos": [0.1, 0.7],
//!               "truth_neg": [-0.2, -0.1], "ind_neg": [-0.6, -0.2], "fals_neg": [-0.4, -0.3],
//!               "weight": 0.5}], ...]
//! }
//! ```
//!
//! Set document: `{"elements": {"x1": <cell>, ...}}`, element order preserved.

use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::error::Category;
use thiserror::Error;

use crate::engine::{OperatorChoice, PairwiseComparison, RankingReport, Trace};
use crate::error::Error;
use crate::model::{DecisionMatrix, IvbfwnNumber, IvbfwnSet, RawMatrix, RawNumber};
use crate::ranking::ComparisonResult;

pub type MatrixDocument = RawMatrix;

pub const MAX_PRECISION: usize = 12;

#[derive(Debug, Error, PartialEq)]
pub enum DocumentError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        match e.classify() {
            Category::Data => DocumentError::Schema(e.to_string()),
            Category::Syntax | Category::Eof | Category::Io => DocumentError::Syntax(e.to_string()),
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<DecisionMatrix, DocumentError> {
    let raw: RawMatrix = serde_json::from_str(text)?;
    if raw.alternatives.is_empty() {
        return Err(DocumentError::Schema(
            "`alternatives` must not be empty".into(),
        ));
    }
    if raw.criteria.is_empty() {
        return Err(DocumentError::Schema("`criteria` must not be empty".into()));
    }
    Ok(DecisionMatrix::try_from(raw)?)
}

pub fn serialize_matrix(m: &DecisionMatrix) -> String {
    serde_json::to_string_pretty(&m.to_raw()).expect("matrix serializes")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetDocument {
    elements: IndexMap<String, RawNumber>,
}

pub fn parse_set(text: &str) -> Result<IvbfwnSet, DocumentError> {
    let doc: SetDocument = serde_json::from_str(text)?;
    let mut set = IvbfwnSet::new();
    for (label, raw) in doc.elements {
        let value = IvbfwnNumber::try_from(raw)
            .map_err(|e| DocumentError::Schema(format!("element `{label}`: {e}")))?;
        set.insert(label, value);
    }
    Ok(set)
}

pub fn serialize_set(s: &IvbfwnSet) -> String {
    let doc = SetDocument {
        elements: s
            .iter()
            .map(|(l, v)| (l.to_string(), RawNumber::from(v)))
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("set serializes")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    Json,
    #[default]
    Table,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "table" => Ok(ReportFormat::Table),
            other => Err(format!("unknown format `{other}` (expected json or table)")),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlternativeEntry {
    label: String,
    aggregate: RawNumber,
    score: f64,
    accuracy: f64,
    certainty: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComparisonEntry {
    first: String,
    second: String,
    result: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportDocument {
    operator: String,
    alternatives: Vec<AlternativeEntry>,
    order: Vec<String>,
    ties: Vec<Vec<String>>,
    ranking: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comparisons: Option<Vec<ComparisonEntry>>,
}

fn comparison_name(r: ComparisonResult) -> &'static str {
    match r {
        ComparisonResult::Greater => "greater",
        ComparisonResult::Less => "less",
        ComparisonResult::Indifferent => "indifferent",
    }
}

fn report_document(r: &RankingReport) -> ReportDocument {
    ReportDocument {
        operator: r.operator.name().into(),
        alternatives: r
            .alternatives
            .iter()
            .enumerate()
            .map(|(i, label)| AlternativeEntry {
                label: label.clone(),
                aggregate: RawNumber::from(&r.aggregates[i]),
                score: r.scores[i],
                accuracy: r.accuracies[i],
                certainty: r.certainties[i],
            })
            .collect(),
        order: r.order.clone(),
        ties: r.ties.clone(),
        ranking: r.ranking_text(),
        comparisons: None,
    }
}

/// Parses a JSON report back into memory. Values are carried at full
/// precision, so this inverts the JSON form of [`emit_report`].
pub fn parse_report(text: &str) -> Result<RankingReport, DocumentError> {
    let doc: ReportDocument = serde_json::from_str(text)?;
    let operator = doc
        .operator
        .parse::<OperatorChoice>()
        .map_err(DocumentError::Schema)?;
    let aggregates = doc
        .alternatives
        .iter()
        .map(|a| IvbfwnNumber::try_from(a.aggregate))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RankingReport {
        operator,
        alternatives: doc.alternatives.iter().map(|a| a.label.clone()).collect(),
        aggregates,
        scores: doc.alternatives.iter().map(|a| a.score).collect(),
        accuracies: doc.alternatives.iter().map(|a| a.accuracy).collect(),
        certainties: doc.alternatives.iter().map(|a| a.certainty).collect(),
        order: doc.order,
        ties: doc.ties,
    })
}

/// Renders a report. JSON carries exact values with a fixed key order;
/// `precision` only affects the table.
pub fn emit_report(r: &RankingReport, format: ReportFormat, precision: usize) -> String {
    match format {
        ReportFormat::Json => to_json(&report_document(r)),
        ReportFormat::Table => report_table(r, precision),
    }
}

/// Like [`emit_report`] with the pairwise comparisons appended.
pub fn emit_trace(t: &Trace, format: ReportFormat, precision: usize) -> String {
    let report = t.report();
    let labels = t.matrix.alternatives();
    match format {
        ReportFormat::Json => {
            let mut doc = report_document(&report);
            doc.comparisons = Some(
                t.comparisons
                    .iter()
                    .map(|c| ComparisonEntry {
                        first: labels[c.first].clone(),
                        second: labels[c.second].clone(),
                        result: comparison_name(c.result).into(),
                    })
                    .collect(),
            );
            to_json(&doc)
        }
        ReportFormat::Table => {
            let mut out = report_table(&report, precision);
            out.push_str("\ncomparisons:\n");
            for &PairwiseComparison {
                first,
                second,
                result,
            } in &t.comparisons
            {
                let _ = writeln!(
                    out,
                    "  {} vs {}: {}",
                    labels[first],
                    labels[second],
                    comparison_name(result)
                );
            }
            out
        }
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
    s.push('\n');
    s
}

/// `<[lo, hi], ..., p>` with every value rounded for display.
pub fn format_number(n: &IvbfwnNumber, precision: usize) -> String {
    let parts: Vec<String> = n
        .pairs()
        .iter()
        .map(|[lo, hi]| {
            format!(
                "[{}, {}]",
                format_decimal(*lo, precision),
                format_decimal(*hi, precision)
            )
        })
        .collect();
    format!(
        "<{}, {}>",
        parts.join(", "),
        format_decimal(n.weight(), precision)
    )
}

fn report_table(r: &RankingReport, precision: usize) -> String {
    let header = ["alternative", "score", "accuracy", "certainty", "aggregate"];
    let rows: Vec<[String; 5]> = r
        .alternatives
        .iter()
        .enumerate()
        .map(|(i, label)| {
            [
                label.clone(),
                format_decimal(r.scores[i], precision),
                format_decimal(r.accuracies[i], precision),
                format_decimal(r.certainties[i], precision),
                format_number(&r.aggregates[i], precision),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "operator: {}", r.operator);
    let line = |out: &mut String, cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(k, (c, w))| {
                if k == 0 || k == cells.len() - 1 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&mut out, &header.map(String::from));
    for row in &rows {
        line(&mut out, row);
    }
    let _ = writeln!(out, "ranking: {}", r.ranking_text());
    out
}

/// Rounds half away from zero at `precision` decimal places.
///
/// Works on the shortest decimal representation of `x`, so a value written
/// as `0.125` rounds like the decimal 0.125 rather than its binary neighbour.
pub fn format_decimal(x: f64, precision: usize) -> String {
    let precision = precision.min(MAX_PRECISION);
    if !x.is_finite() || x.abs() >= 1e15 {
        return format!("{x:.precision$}");
    }
    let sci = format!("{:e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i64 = exp.parse().expect("exponent");
    let digits: Vec<u8> = mantissa
        .bytes()
        .filter(u8::is_ascii_digit)
        .map(|b| b - b'0')
        .collect();
    // digits are d0.d1d2... x 10^exp; keep those down to 10^-precision
    let keep = exp + 1 + precision as i64;
    let mut scaled: u128 = 0;
    let mut round_up = false;
    if keep >= 0 {
        for k in 0..keep as usize {
            scaled = scaled * 10 + u128::from(digits.get(k).copied().unwrap_or(0));
        }
        round_up = digits.get(keep as usize).is_some_and(|&d| d >= 5);
    }
    if round_up {
        scaled += 1;
    }
    let unit = 10u128.pow(precision as u32);
    let (int_part, frac_part) = (scaled / unit, scaled % unit);
    let sign = if x < 0.0 && scaled != 0 { "-" } else { "" };
    if precision == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0precision$}")
    }
}
