use std::fmt;
use std::path::PathBuf;

use certhull::geometry::noncollinearity_witness;
use certhull::geometry::GeometryError;
use certhull::hull::{
    brute_force_hull, canonicalize, convex_hull_constructive, convex_hull_oracle, verify_certificate, Verdict,
};
use certhull::principles::PrincipleError;
use certhull::{CReal, ConvexityMode, Fuel, HullCertificate, HullError, Point2, Polygon};
use thiserror::Error;

use crate::certificate::render_certificate;
use crate::input::{parse_points, ParseError};
use crate::svg::render_svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Constructive,
    Mpvee,
    Mp,
    OracleCheck,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Constructive => "constructive",
            Mode::Mpvee => "mpvee",
            Mode::Mp => "mp",
            Mode::OracleCheck => "oracle-check",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    Rational,
    Creal,
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Creal => "creal",
        })
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input_path: PathBuf,
    pub mode: Mode,
    pub fuel: Fuel,
    pub emit_certificate: Option<PathBuf>,
    pub emit_svg: Option<PathBuf>,
    pub scalar_kind: ScalarKind,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("fuel exhausted after {spent} refinements")]
    FuelExhausted { spent: u64 },
    #[error("degenerate input: {0}")]
    Degenerate(HullError),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl RunError {
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::FuelExhausted { .. } => 2,
            RunError::Usage(_) | RunError::Io { .. } | RunError::Parse { .. } | RunError::Degenerate(_) => 3,
            RunError::Verification(_) => 4,
        }
    }
}

impl From<HullError> for RunError {
    fn from(e: HullError) -> Self {
        match e {
            HullError::FuelExhausted { spent }
            | HullError::Geometry(GeometryError::Principle(PrincipleError::FuelExhausted { spent })) => {
                RunError::FuelExhausted { spent }
            }
            other => RunError::Degenerate(other),
        }
    }
}

impl From<GeometryError> for RunError {
    fn from(e: GeometryError) -> Self {
        HullError::from(e).into()
    }
}

/// Everything a successful run produces. Nothing is written to disk here.
#[derive(Clone, Debug)]
pub struct Report {
    pub polygon: Polygon,
    pub certificate: HullCertificate,
    /// Vertex lines for standard output.
    pub stdout: String,
    pub certificate_text: Option<String>,
    pub svg: Option<String>,
}

fn hull(config: &RunConfig, points: &[Point2]) -> Result<HullCertificate, RunError> {
    let lifted = || points.iter().map(Point2::lift).collect::<Vec<Point2<CReal>>>();
    let cert = match config.mode {
        Mode::Constructive | Mode::OracleCheck => {
            let witness = noncollinearity_witness(points)?;
            match config.scalar_kind {
                ScalarKind::Rational => convex_hull_constructive(points, &witness)?.1,
                ScalarKind::Creal => convex_hull_constructive(&lifted(), &witness)?.1,
            }
        }
        Mode::Mpvee | Mode::Mp => {
            let convexity = if config.mode == Mode::Mp {
                ConvexityMode::Strict
            } else {
                ConvexityMode::AlmostStrict
            };
            match config.scalar_kind {
                ScalarKind::Rational => convex_hull_oracle(points, convexity, config.fuel)?.1,
                ScalarKind::Creal => convex_hull_oracle(&lifted(), convexity, config.fuel)?.1,
            }
        }
    };
    Ok(cert)
}

fn check(points: &[Point2], polygon: &Polygon, cert: &HullCertificate) -> Result<(), RunError> {
    if let Verdict::Invalid(reason) = verify_certificate(points, polygon, cert, cert.mode) {
        return Err(RunError::Verification(format!("certificate rejected: {reason}")));
    }
    let reference = brute_force_hull(points)?;
    if reference != *polygon {
        return Err(RunError::Verification(format!(
            "hull has {} vertices, brute force finds {}",
            polygon.len(),
            reference.len()
        )));
    }
    Ok(())
}

/// Reads the input, computes the hull for the configured mode and renders
/// the requested documents.
pub fn run(config: &RunConfig) -> Result<Report, RunError> {
    if config.mode == Mode::OracleCheck && config.scalar_kind != ScalarKind::Rational {
        return Err(RunError::Usage("mode oracle-check requires --scalar rational".into()));
    }
    let text = std::fs::read_to_string(&config.input_path).map_err(|source| RunError::Io {
        path: config.input_path.clone(),
        source,
    })?;
    let points = parse_points(&text).map_err(|source| RunError::Parse {
        path: config.input_path.clone(),
        source,
    })?;

    let cert = hull(config, &points)?;
    let polygon = Polygon::new(cert.vertex_indices.iter().map(|&i| points[i].clone()).collect());
    let (polygon, certificate) = canonicalize(polygon, cert);
    if config.mode == Mode::OracleCheck {
        check(&points, &polygon, &certificate)?;
    }

    let stdout = polygon
        .vertices()
        .iter()
        .map(|v| format!("{} {}\n", v.x, v.y))
        .collect();
    let certificate_text = config
        .emit_certificate
        .as_ref()
        .map(|_| render_certificate(config.mode, config.scalar_kind, &points, &certificate));
    let svg = config.emit_svg.as_ref().map(|_| render_svg(&polygon, &points));
    Ok(Report {
        polygon,
        certificate,
        stdout,
        certificate_text,
        svg,
    })
}
