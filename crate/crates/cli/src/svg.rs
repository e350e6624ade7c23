//! SVG rendering of exact zone maps.
//!
//! The unit square maps to a fixed pixel viewport with the y axis flipped so
//! the figure matches the usual mathematical orientation. Every merged cell
//! becomes exactly one `<polygon>`; the cut line is drawn on top; the legend
//! lists only the kinds present, with a fixed kind-to-color assignment so
//! diffs stay stable across runs.

use std::fmt::Write as _;

use postulatum::square_model::{Chord, ZoneMap};
use postulatum::Point2;

const BOX: f64 = 560.0;
const MARGIN: f64 = 40.0;
const LEGEND_WIDTH: f64 = 190.0;

/// The fixed kind-to-color legend.
pub fn kind_color(label: &str) -> &'static str {
    match label {
        "elliptic" => "#e15759",
        "euclidean" => "#59a14f",
        "hyperbolic" => "#4e79a7",
        "finite_many" => "#f28e2b",
        "countably_infinite" => "#b07aa1",
        _ => "#bab0ac",
    }
}

fn px(p: &Point2) -> (f64, f64) {
    let x = MARGIN + p.x.to_f64() * BOX;
    let y = MARGIN + (1.0 - p.y.to_f64()) * BOX;
    (x, y)
}

fn fmt_px(v: f64) -> String {
    format!("{v:.2}")
}

/// Renders the map and the line to a standalone SVG document.
pub fn render_zone_map(map: &ZoneMap, line: &Chord) -> String {
    let mut kinds_present: Vec<&'static str> = Vec::new();
    for cell in &map.cells {
        let label = cell.kind.label();
        if !kinds_present.contains(&label) {
            kinds_present.push(label);
        }
    }
    // Boundary-only kinds (the Euclidean set is often 1-dimensional) still
    // belong in the legend.
    for side in &map.boundary {
        for piece in &side.pieces {
            let label = piece.kind.label();
            if !kinds_present.contains(&label) {
                kinds_present.push(label);
            }
        }
    }
    kinds_present.sort();

    let width = MARGIN * 2.0 + BOX + LEGEND_WIDTH;
    let height = MARGIN * 2.0 + BOX;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        fmt_px(width),
        fmt_px(height),
        fmt_px(width),
        fmt_px(height)
    );
    let _ = writeln!(svg, "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>");

    for cell in &map.cells {
        let points: Vec<String> = cell
            .polygon
            .iter()
            .map(|p| {
                let (x, y) = px(p);
                format!("{},{}", fmt_px(x), fmt_px(y))
            })
            .collect();
        let _ = writeln!(
            svg,
            "  <polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.75\" stroke=\"#444444\" stroke-width=\"1\"/>",
            points.join(" "),
            kind_color(cell.kind.label())
        );
    }

    // Boundary pieces whose kind differs from the surrounding area, drawn as
    // thick strokes so one-dimensional zones are visible.
    for side in &map.boundary {
        for piece in &side.pieces {
            let (x1, y1) = px(&piece.start);
            let (x2, y2) = px(&piece.end);
            let _ = writeln!(
                svg,
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"4\"/>",
                fmt_px(x1),
                fmt_px(y1),
                fmt_px(x2),
                fmt_px(y2),
                kind_color(piece.kind.label())
            );
        }
    }

    let (lx1, ly1) = px(line.q1());
    let (lx2, ly2) = px(line.q2());
    let _ = writeln!(
        svg,
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000000\" stroke-width=\"2.5\" stroke-dasharray=\"7 4\"/>",
        fmt_px(lx1),
        fmt_px(ly1),
        fmt_px(lx2),
        fmt_px(ly2)
    );

    let legend_x = MARGIN + BOX + 24.0;
    let mut legend_y = MARGIN + 10.0;
    let _ = writeln!(
        svg,
        "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"15\" font-weight=\"bold\">parallels through p</text>",
        fmt_px(legend_x),
        fmt_px(legend_y)
    );
    legend_y += 14.0;
    for label in &kinds_present {
        legend_y += 24.0;
        let _ = writeln!(
            svg,
            "  <rect x=\"{}\" y=\"{}\" width=\"16\" height=\"16\" fill=\"{}\" stroke=\"#444444\"/>",
            fmt_px(legend_x),
            fmt_px(legend_y - 12.0),
            kind_color(label)
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\">{}</text>",
            fmt_px(legend_x + 24.0),
            fmt_px(legend_y + 1.0),
            label
        );
    }

    svg.push_str("</svg>\n");
    svg
}
