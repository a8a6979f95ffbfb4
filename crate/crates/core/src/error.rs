use std::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// An iteration failed to converge (Newton tracking, root finding, ...).
    Convergence(String),
    /// A linear system was singular or too ill-conditioned to trust.
    Singular(String),
    /// An adaptive quadrature could not meet its tolerance within budget.
    Tolerance(String),
    /// Steepest-descent contour evaluation failed; carries the contour tag.
    Contour { contour: &'static str, detail: String },
    /// A collocation matrix entry could not be computed.
    Entry { row: usize, col: usize, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(s) => write!(f, "domain error: {s}"),
            Error::Convergence(s) => write!(f, "convergence failure: {s}"),
            Error::Singular(s) => write!(f, "singular system: {s}"),
            Error::Tolerance(s) => write!(f, "tolerance not met: {s}"),
            Error::Contour { contour, detail } => {
                write!(f, "contour {contour} failed: {detail}")
            }
            Error::Entry { row, col, detail } => {
                write!(f, "entry ({row},{col}) failed: {detail}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
