//! Certificate document.
//!
//! Plain indented `key: value` text with `-` list items. Fields always appear
//! in the order written here, absent values are `none`, and rationals are
//! printed as `p/q` in lowest terms, so identical runs give identical bytes.

use std::fmt::Write;

use certhull::{HullCertificate, Point2};

use crate::run::{Mode, ScalarKind};

pub const FORMAT: &str = "certhull-certificate/1";

pub fn render_certificate(mode: Mode, scalar: ScalarKind, points: &[Point2], cert: &HullCertificate) -> String {
    let mut out = String::new();
    let eps_sq = cert.eps_sq_used.as_ref().map_or("none".to_string(), |e| e.to_string());
    // Writing to a String cannot fail.
    let _ = writeln!(out, "format: {FORMAT}");
    let _ = writeln!(out, "mode: {mode}");
    let _ = writeln!(out, "scalar: {scalar}");
    let _ = writeln!(out, "convexity: {}", cert.mode);
    let _ = writeln!(out, "eps_sq: {eps_sq}");
    let _ = writeln!(out, "fuel_spent: {}", cert.fuel_spent);
    let _ = writeln!(out, "containment: {}", cert.containment);
    let _ = writeln!(out, "points: {}", points.len());
    let _ = writeln!(out, "vertices:");
    for &i in &cert.vertex_indices {
        let p = &points[i];
        let _ = writeln!(out, "  - index: {i}");
        let _ = writeln!(out, "    x: {}", p.x);
        let _ = writeln!(out, "    y: {}", p.y);
    }
    match &cert.angle_margins {
        None => out.push_str("angle_margins: none\n"),
        Some(margins) => {
            out.push_str("angle_margins:\n");
            for (k, m) in margins.iter().enumerate() {
                let _ = writeln!(out, "  - vertex: {k}");
                let _ = writeln!(out, "    margin: {m}");
            }
        }
    }
    match &cert.edge_margins {
        None => out.push_str("edge_margins: none\n"),
        Some(edges) => {
            out.push_str("edge_margins:\n");
            for (k, margins) in edges.iter().enumerate() {
                let _ = writeln!(out, "  - edge: {k}");
                out.push_str("    margins:\n");
                for (j, m) in margins {
                    let _ = writeln!(out, "      - point: {j}");
                    let _ = writeln!(out, "        margin: {m}");
                }
            }
        }
    }
    out
}
