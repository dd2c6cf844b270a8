//! Front end for the `certhull` binary: input parsing, the run itself, and
//! the certificate and SVG documents it can emit.

mod certificate;
mod input;
mod run;
mod svg;

pub use certificate::render_certificate;
pub use input::{parse_points, ParseError};
pub use run::{run, Mode, Report, RunConfig, RunError, ScalarKind};
pub use svg::render_svg;
