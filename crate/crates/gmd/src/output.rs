//! Plain-text, CSV and JSON renderings.

use gmd_core::gmdfun::{Cell, MatrixKind, WeightMatrix};
use serde_json::{json, Value};

use crate::config::Format;

/// Rows of labeled values, printed with the labels in the first column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Table {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: impl IntoIterator<Item = impl Into<String>>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }

    /// First column left-aligned, the others right-aligned, two spaces apart.
    pub fn text(&self) -> String {
        let all = std::iter::once(&self.header).chain(&self.rows);
        let ncols = all.clone().map(Vec::len).max().unwrap_or(0);
        let mut widths = vec![0usize; ncols];
        for row in all.clone() {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for row in all {
            let mut line = String::new();
            for (i, c) in row.iter().enumerate() {
                let pad = widths[i] - c.chars().count();
                if i == 0 {
                    line.push_str(c);
                    line.extend(std::iter::repeat(' ').take(pad));
                } else {
                    line.push_str("  ");
                    line.extend(std::iter::repeat(' ').take(pad));
                    line.push_str(c);
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        if !self.header.is_empty() {
            w.write_record(&self.header).expect("in-memory write");
        }
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8 input")
    }
}

pub fn cell_text(c: Cell) -> String {
    match c {
        Cell::Value(v) => v.to_string(),
        Cell::Infinity => "∞".into(),
        Cell::Interval { lower, upper } if lower == upper => lower.to_string(),
        Cell::Interval { lower, upper } => format!("[{lower},{upper}]"),
    }
}

pub fn cell_csv(c: Cell) -> String {
    match c {
        Cell::Value(v) => v.to_string(),
        Cell::Infinity => "inf".into(),
        Cell::Interval { lower, upper } if lower == upper => lower.to_string(),
        Cell::Interval { lower, upper } => format!("{lower}..{upper}"),
    }
}

pub fn cell_json(c: Cell) -> Value {
    match c {
        Cell::Value(v) => json!({ "value": v }),
        Cell::Infinity => json!({ "value": null, "infinite": true }),
        Cell::Interval { lower, upper } if lower == upper => json!({ "value": lower, "lower": lower, "upper": upper }),
        Cell::Interval { lower, upper } => json!({ "value": null, "lower": lower, "upper": upper }),
    }
}

pub fn kind_name(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::Delta => "weight",
        MatrixKind::Footprint => "footprint",
        MatrixKind::Vasconcelos => "vasconcelos",
    }
}

fn symbol(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::Delta => "δ",
        MatrixKind::Footprint => "fp",
        MatrixKind::Vasconcelos => "ϑ",
    }
}

/// Columns `ranks` of the matrix.
pub fn render_matrix(w: &WeightMatrix, ranks: std::ops::RangeInclusive<usize>, format: Format) -> String {
    let ranks: Vec<usize> = ranks.filter(|&r| r >= 1 && r <= w.cols()).collect();
    match format {
        Format::Json => {
            let rows: Vec<Value> = w
                .degrees()
                .map(|d| json!({ "d": d, "cells": ranks.iter().map(|&r| cell_json(w.get(d, r))).collect::<Vec<_>>() }))
                .collect();
            let v = json!({
                "matrix": kind_name(w.kind),
                "ranks": ranks,
                "rows": rows,
                "open_cells": w.open_cells(),
            });
            serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
        }
        Format::Csv | Format::Text => {
            let corner = if format == Format::Csv { "d".to_string() } else { format!("{}(d,r)", symbol(w.kind)) };
            let mut t = Table::new(std::iter::once(corner).chain(ranks.iter().map(|r| r.to_string())));
            for d in w.degrees() {
                let cell = |r: &usize| {
                    if format == Format::Csv {
                        cell_csv(w.get(d, *r))
                    } else {
                        cell_text(w.get(d, *r))
                    }
                };
                t.push(std::iter::once(d.to_string()).chain(ranks.iter().map(cell)));
            }
            if format == Format::Csv {
                t.csv()
            } else {
                let mut out = t.text();
                let open = w.open_cells();
                if open > 0 {
                    out.push_str(&format!("{open} cells beyond the budget are shown as [lower,upper]\n"));
                }
                out
            }
        }
    }
}

/// A labeled table as text or CSV, or `json` as JSON.
pub fn render_table(t: &Table, json: &Value, format: Format) -> String {
    match format {
        Format::Text => t.text(),
        Format::Csv => t.csv(),
        Format::Json => serde_json::to_string_pretty(json).expect("json values serialize") + "\n",
    }
}
