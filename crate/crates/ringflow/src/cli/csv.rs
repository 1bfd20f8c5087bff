//! CSV serialization. Every file starts with a `#` metadata comment that
//! echoes the resolved run configuration so the run can be reproduced by
//! feeding those tokens back to the parser.

use std::fs;
use std::io;
use std::path::Path;

use crate::cli::{RunConfig, SolveReport};
use crate::experiments::{NodeStudyTable, ScalingTable, SweepGrid};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Fixed-point rendering with twelve digits beyond the leading digit.
/// `1.0` becomes `1.000000000000`.
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.12}", 0.0f64);
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (12 - exp).clamp(0, 30) as usize;
    format!("{x:.decimals$}")
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_value).unwrap_or_default()
}

fn metadata_line(config: &RunConfig) -> String {
    format!(
        "# ringflow {ARTIFACT_VERSION} {}",
        config.canonical_args().join(" ")
    )
}

/// A table ready for serialization.
pub enum OutputTable<'a> {
    Solve(&'a SolveReport),
    Study(&'a NodeStudyTable),
    Scaling(&'a ScalingTable),
    Heatmap(&'a SweepGrid),
}

/// Render a table to its exact on-disk bytes.
pub fn csv_string(table: &OutputTable<'_>, config: &RunConfig) -> String {
    let mut out = String::new();
    out.push_str(&metadata_line(config));
    out.push('\n');
    match table {
        OutputTable::Solve(report) => {
            out.push_str("phi_lp,phi_exact,phi_sum,phi_integral,analytic_valid\n");
            let valid = report
                .analytic_valid
                .map(|v| v.to_string())
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                format_opt(report.phi_lp),
                format_opt(report.phi_exact),
                format_opt(report.phi_sum),
                format_opt(report.phi_integral),
                valid
            ));
        }
        OutputTable::Study(study) => {
            out.push_str(
                "j,rel_pos,info_direct,info_stepwise,info_other,info_total,\
                 power_direct,power_stepwise,power_total,\
                 depl_direct,depl_stepwise,depl_total\n",
            );
            for row in &study.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    row.j,
                    format_value(row.rel_pos),
                    format_value(row.info_direct),
                    format_value(row.info_stepwise),
                    format_value(row.info_other),
                    format_value(row.info_total),
                    format_value(row.power_direct),
                    format_value(row.power_stepwise),
                    format_value(row.power_total),
                    format_value(row.depl_direct),
                    format_value(row.depl_stepwise),
                    format_value(row.depl_total),
                ));
            }
        }
        OutputTable::Scaling(scaling) => {
            out.push_str("N,d,phi_lp,phi_exact,phi_sum,phi_integral\n");
            for row in &scaling.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    row.n,
                    format_value(row.d),
                    format_opt(row.phi_lp),
                    format_opt(row.phi_exact),
                    format_opt(row.phi_sum),
                    format_opt(row.phi_integral),
                ));
            }
        }
        OutputTable::Heatmap(grid) => {
            out.push_str("x_value,y_value,phi_lp,log10_phi,structure_ok,analytic_valid\n");
            for (yi, row) in grid.cells.iter().enumerate() {
                for (xi, cell) in row.iter().enumerate() {
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        format_value(grid.x.values[xi]),
                        format_value(grid.y.values[yi]),
                        format_value(cell.phi_lp),
                        format_value(cell.log10_phi),
                        cell.structure_ok,
                        cell.analytic_valid,
                    ));
                }
            }
        }
    }
    out
}

/// Serialize a table to `path`.
pub fn emit_csv(table: &OutputTable<'_>, config: &RunConfig, path: &Path) -> io::Result<()> {
    fs::write(path, csv_string(table, config))
}
