//! Rendering of single evaluations and the inventory report.

use heli_feas::render::{fmt_irr, fmt_num, fmt_usd, SWEEP_HEADER};
use heli_feas::{FeasibilityRow, HelicopterSpec, InventoryReport, OutputFormat};

fn row_fields(row: &FeasibilityRow) -> Vec<String> {
    let s = &row.scenario;
    vec![
        s.helicopter.clone(),
        s.condition.clone(),
        s.species.clone(),
        s.dims.label(),
        fmt_num(s.distance_km),
        fmt_usd(row.investment),
        fmt_usd(row.annual_revenue),
        fmt_usd(row.annual_cost),
        fmt_usd(row.npv),
        fmt_irr(row.irr),
        row.payback.map(|p| p.to_string()).unwrap_or_default(),
        row.verdict.label().to_string(),
        row.flags.join(";"),
    ]
}

pub fn render_single_row(row: &FeasibilityRow, format: OutputFormat) -> String {
    let fields = row_fields(row);
    match format {
        OutputFormat::Csv => format!("{SWEEP_HEADER}\n{}\n", fields.join(",")),
        OutputFormat::Markdown => {
            let headers: Vec<&str> = SWEEP_HEADER.split(',').collect();
            let mut out = format!("| {} |\n", headers.join(" | "));
            out.push_str(&format!("|{}\n", "---|".repeat(headers.len())));
            out.push_str(&format!("| {} |\n", fields.join(" | ")));
            out
        }
    }
}

/// Inventory and rotation report. Harvest days divide tree counts by daily
/// rides without restricting to working days per year, matching the
/// published duration figures; both the one-tree-per-ride and the
/// one-section-per-ride interpretations are shown.
pub fn render_inventory(
    report: &InventoryReport,
    sections_heli: &HelicopterSpec,
    sections: &[(&str, String, u64)],
    format: OutputFormat,
) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Markdown => {
            out.push_str("# Harvest inventory and rotation\n\n");
            out.push_str(&format!(
                "Area: {:.2} ha (radius {} km) of a {} ha reserve. Rides per day: {}.\n\n",
                report.area.area_ha,
                fmt_num(report.area.radius_km),
                fmt_num(report.area.reserve_total_ha),
                report.rides_per_day
            ));
            out.push_str(&format!(
                "Diameter-band fraction: fixed {} vs lognormal-cdf {:.4}.\n\n",
                fmt_num(report.tail_fixed),
                report.tail_cdf
            ));
            out.push_str("| species | count (fixed tail) | count (cdf tail) | days (tree per ride) |\n");
            out.push_str("|---|---|---|---|\n");
            for r in &report.rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    r.species_id, r.count_fixed_tail, r.count_cdf_tail, r.duration_days
                ));
            }
            out.push_str(&format!(
                "\nTotal: {} days = {:.2} years, rounded to {} years per module.\n",
                report.total_duration_days, report.module_years_exact, report.module_years
            ));
            out.push_str(&format!(
                "Rotation: {} modules, return cycle {} years.\n\n",
                report.plan.module_count, report.plan.return_cycle_years
            ));
            out.push_str(&format!(
                "Sections per tree on the {} (one section per ride):\n\n",
                sections_heli.id
            ));
            out.push_str("| scenario | species | sections per tree |\n|---|---|---|\n");
            for (label, species, n) in sections {
                out.push_str(&format!("| {label} | {species} | {n} |\n"));
            }
        }
        OutputFormat::Csv => {
            out.push_str(&format!(
                "# area_ha={:.2} radius_km={} reserve_ha={} rides_per_day={} tail_fixed={} tail_cdf={:.4}\n",
                report.area.area_ha,
                fmt_num(report.area.radius_km),
                fmt_num(report.area.reserve_total_ha),
                report.rides_per_day,
                fmt_num(report.tail_fixed),
                report.tail_cdf
            ));
            out.push_str("species,count_fixed_tail,count_cdf_tail,days_tree_per_ride\n");
            for r in &report.rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.species_id, r.count_fixed_tail, r.count_cdf_tail, r.duration_days
                ));
            }
            out.push_str(&format!(
                "# total_days={} module_years_exact={:.4} module_years={} modules={} return_cycle_years={}\n",
                report.total_duration_days,
                report.module_years_exact,
                report.module_years,
                report.plan.module_count,
                report.plan.return_cycle_years
            ));
            out.push_str(&format!("# sections per tree on {}\n", sections_heli.id));
            out.push_str("scenario,species,sections_per_tree\n");
            for (label, species, n) in sections {
                out.push_str(&format!("{label},{species},{n}\n"));
            }
        }
    }
    out
}
