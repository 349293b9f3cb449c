//! Stable CSV and markdown rendering of feasibility rows.
//!
//! Fixed decimal formatting: two places for USD and for raw minutes/rides,
//! IRR as a percentage with one place. Distances and counts print without
//! trailing zeros.

use crate::config::OutputFormat;
use crate::scenario::SweepRow;

pub const SWEEP_HEADER: &str = "helicopter,condition,species,scenario,distance_km,investment,annual_revenue,annual_cost,npv,irr,payback,verdict,flags";

pub fn fmt_usd(x: f64) -> String {
    format!("{x:.2}")
}

/// IRR as a percentage with one decimal place.
pub fn fmt_irr(rate: Option<f64>) -> String {
    match rate {
        Some(r) => format!("{:.1}", r * 100.0),
        None => String::new(),
    }
}

/// Plain number without trailing zeros (`10`, `2.5`).
pub fn fmt_num(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

fn row_fields(row: &SweepRow) -> Vec<String> {
    let s = &row.scenario;
    let head = vec![
        s.helicopter.clone(),
        s.condition.clone(),
        s.species.clone(),
        s.dims.label(),
        fmt_num(s.distance_km),
    ];
    match &row.outcome {
        Ok(r) => head
            .into_iter()
            .chain([
                fmt_usd(r.investment),
                fmt_usd(r.annual_revenue),
                fmt_usd(r.annual_cost),
                fmt_usd(r.npv),
                fmt_irr(r.irr),
                r.payback.map(|p| p.to_string()).unwrap_or_default(),
                r.verdict.label().to_string(),
                r.flags.join(";"),
            ])
            .collect(),
        Err(e) => {
            let reason = if matches!(e, crate::error::Error::Envelope(_)) {
                "infeasible-by-range".to_string()
            } else {
                "error".to_string()
            };
            head.into_iter()
                .chain([
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    reason,
                    e.to_string().replace(',', ";"),
                ])
                .collect()
        }
    }
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row_fields(row).join(","));
        out.push('\n');
    }
    out
}

pub fn sweep_markdown(rows: &[SweepRow]) -> String {
    let headers: Vec<&str> = SWEEP_HEADER.split(',').collect();
    let mut out = format!("| {} |\n", headers.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row_fields(row).join(" | ")));
    }
    out
}

pub fn render_sweep(rows: &[SweepRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => sweep_csv(rows),
        OutputFormat::Markdown => sweep_markdown(rows),
    }
}
