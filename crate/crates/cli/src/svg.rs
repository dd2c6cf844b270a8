use std::fmt::Write;

use certhull::{Point2, Polygon};

const PADDING: f64 = 0.05;

fn coord(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Standalone SVG: every input point as a circle and the hull as one closed
/// path. The y axis is flipped so the picture has the usual orientation.
pub fn render_svg(polygon: &Polygon, points: &[Point2]) -> String {
    let xy = |p: &Point2| (p.x.to_f64(), -p.y.to_f64());
    let all: Vec<(f64, f64)> = points.iter().chain(polygon.vertices()).map(xy).collect();
    let min = |f: fn(&(f64, f64)) -> f64| all.iter().map(f).fold(f64::INFINITY, f64::min);
    let max = |f: fn(&(f64, f64)) -> f64| all.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1) = (min(|p| p.0), max(|p| p.0));
    let (y0, y1) = (min(|p| p.1), max(|p| p.1));
    let (w, h) = ((x1 - x0).max(f64::MIN_POSITIVE), (y1 - y0).max(f64::MIN_POSITIVE));
    let (pad_x, pad_y) = (w * PADDING, h * PADDING);
    let scale = w.max(h);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        coord(x0 - pad_x),
        coord(y0 - pad_y),
        coord(w + 2.0 * pad_x),
        coord(h + 2.0 * pad_y)
    );
    let mut d = String::new();
    for (k, v) in polygon.vertices().iter().enumerate() {
        let (x, y) = xy(v);
        let _ = write!(d, "{}{} {} ", if k == 0 { "M " } else { "L " }, coord(x), coord(y));
    }
    d.push('Z');
    let _ = writeln!(
        out,
        r#"  <path d="{d}" fill="none" stroke="black" stroke-width="{}"/>"#,
        coord(scale * 0.005)
    );
    for p in points {
        let (x, y) = xy(p);
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}"/>"#,
            coord(x),
            coord(y),
            coord(scale * 0.01)
        );
    }
    out.push_str("</svg>\n");
    out
}
