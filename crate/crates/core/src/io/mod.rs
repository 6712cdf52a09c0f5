//! Text grammar, canonical formatting and the JSON report schema.

pub mod format;
pub mod parser;
pub mod report;

pub use format::{default_names, format_poly};
pub use parser::{
    parse_laurent, parse_mpoly, parse_pi_scalar, parse_poly, parse_scalar, ParseError,
    ParseErrorKind, PolySource, Ring,
};
