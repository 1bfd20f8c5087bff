//! Minimal SVG 1.1 heatmap renderer: one rectangle per grid cell on a
//! linear color ramp over `log10(phi)`, axis tick labels, and a legend.

use std::fs;
use std::io;
use std::path::Path;

use crate::experiments::SweepGrid;

const CELL_AREA_W: f64 = 620.0;
const CELL_AREA_H: f64 = 520.0;
const MARGIN_LEFT: f64 = 90.0;
const MARGIN_TOP: f64 = 40.0;
const LEGEND_X: f64 = 740.0;
const LEGEND_W: f64 = 28.0;
const WIDTH: f64 = 850.0;
const HEIGHT: f64 = 620.0;

const RAMP_LO: (u8, u8, u8) = (26, 26, 92);
const RAMP_HI: (u8, u8, u8) = (252, 248, 196);

/// Linear color ramp; `t = 0` is the darkest color (smallest value),
/// `t = 1` the lightest.
pub fn ramp_color(t: f64) -> (u8, u8, u8) {
    let t = t.clamp(0.0, 1.0);
    let lerp = |a: u8, b: u8| -> u8 { (a as f64 + t * (b as f64 - a as f64)).round() as u8 };
    (
        lerp(RAMP_LO.0, RAMP_HI.0),
        lerp(RAMP_LO.1, RAMP_HI.1),
        lerp(RAMP_LO.2, RAMP_HI.2),
    )
}

fn hex(color: (u8, u8, u8)) -> String {
    format!("#{:02x}{:02x}{:02x}", color.0, color.1, color.2)
}

/// Render the grid to an SVG document string. Color ramp endpoints come
/// from the grid's own range unless a fixed range is supplied (useful for
/// comparing figures).
pub fn svg_string(grid: &SweepGrid, fixed_range: Option<(f64, f64)>) -> String {
    let (lo, hi) = fixed_range.unwrap_or_else(|| grid.min_max_log10());
    let span = hi - lo;
    let nx = grid.x.values.len();
    let ny = grid.y.values.len();
    let cw = CELL_AREA_W / nx as f64;
    let ch = CELL_AREA_H / ny as f64;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    s.push_str(&format!(
        "<defs><linearGradient id=\"ramp\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">\
         <stop offset=\"0\" stop-color=\"{}\"/>\
         <stop offset=\"1\" stop-color=\"{}\"/>\
         </linearGradient></defs>\n",
        hex(ramp_color(0.0)),
        hex(ramp_color(1.0)),
    ));
    s.push_str(&format!(
        "<text x=\"{}\" y=\"20\" font-size=\"15\" font-family=\"sans-serif\">\
         log10(phi) over {} (x) and {} (y)</text>\n",
        MARGIN_LEFT,
        grid.x.param.name(),
        grid.y.param.name(),
    ));

    // Cells: y axis grows upward, so row 0 sits at the bottom.
    for (yi, row) in grid.cells.iter().enumerate() {
        for (xi, cell) in row.iter().enumerate() {
            let t = if span > 0.0 {
                (cell.log10_phi - lo) / span
            } else {
                0.5
            };
            let x = MARGIN_LEFT + xi as f64 * cw;
            let y = MARGIN_TOP + (ny - 1 - yi) as f64 * ch;
            s.push_str(&format!(
                "<rect class=\"cell\" x=\"{x:.2}\" y=\"{y:.2}\" width=\"{cw:.2}\" \
                 height=\"{ch:.2}\" fill=\"{}\"/>\n",
                hex(ramp_color(t)),
            ));
        }
    }

    // Axis tick labels at cell centers.
    for (xi, v) in grid.x.values.iter().enumerate() {
        let x = MARGIN_LEFT + (xi as f64 + 0.5) * cw;
        let y = MARGIN_TOP + CELL_AREA_H + 18.0;
        s.push_str(&format!(
            "<text class=\"xtick\" x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"11\" \
             font-family=\"sans-serif\" text-anchor=\"middle\">{}</text>\n",
            tick_label(*v),
        ));
    }
    for (yi, v) in grid.y.values.iter().enumerate() {
        let x = MARGIN_LEFT - 8.0;
        let y = MARGIN_TOP + (grid.y.values.len() - 1 - yi) as f64 * ch + 0.5 * ch + 4.0;
        s.push_str(&format!(
            "<text class=\"ytick\" x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"11\" \
             font-family=\"sans-serif\" text-anchor=\"end\">{}</text>\n",
            tick_label(*v),
        ));
    }

    // Legend: gradient bar with range labels.
    s.push_str(&format!(
        "<rect class=\"legend\" x=\"{LEGEND_X}\" y=\"{MARGIN_TOP}\" width=\"{LEGEND_W}\" \
         height=\"{CELL_AREA_H}\" fill=\"url(#ramp)\" stroke=\"black\" stroke-width=\"0.5\"/>\n"
    ));
    s.push_str(&format!(
        "<text class=\"legend-max\" x=\"{}\" y=\"{}\" font-size=\"11\" \
         font-family=\"sans-serif\">{}</text>\n",
        LEGEND_X + LEGEND_W + 6.0,
        MARGIN_TOP + 10.0,
        tick_label(hi),
    ));
    s.push_str(&format!(
        "<text class=\"legend-min\" x=\"{}\" y=\"{}\" font-size=\"11\" \
         font-family=\"sans-serif\">{}</text>\n",
        LEGEND_X + LEGEND_W + 6.0,
        MARGIN_TOP + CELL_AREA_H,
        tick_label(lo),
    ));
    s.push_str("</svg>\n");
    s
}

fn tick_label(v: f64) -> String {
    let rounded = format!("{v:.4}");
    let trimmed = rounded.trim_end_matches('0').trim_end_matches('.');
    if trimmed.is_empty() || trimmed == "-" {
        "0".to_string()
    } else {
        trimmed.to_string()
    }
}

/// Write the grid as an SVG file.
pub fn render_heatmap_svg(
    grid: &SweepGrid,
    fixed_range: Option<(f64, f64)>,
    path: &Path,
) -> io::Result<()> {
    fs::write(path, svg_string(grid, fixed_range))
}
