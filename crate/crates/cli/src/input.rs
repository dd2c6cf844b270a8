use certhull::{Point2, Rat};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// One point per line, two whitespace-separated scalars each. Blank lines and
/// lines whose first non-blank character is `#` are skipped.
pub fn parse_points(text: &str) -> Result<Vec<Point2>, ParseError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let error = |message: String| ParseError { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(error(format!("expected 2 scalars, found {}", fields.len())));
        }
        let scalar = |s: &str| s.parse::<Rat>().map_err(|e| error(e.to_string()));
        points.push(Point2::new(scalar(fields[0])?, scalar(fields[1])?));
    }
    Ok(points)
}
