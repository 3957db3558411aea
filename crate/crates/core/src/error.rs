use std::fmt;

/// Unified error type for system construction, searches, and the CLI
/// surface. Search "not found" outcomes are *not* errors; see
/// `search::WitnessOutcome`.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A system needs at least one map.
    EmptySystem,
    /// A contraction ratio outside (0, 1).
    RatioOutOfRange { context: String },
    /// An iterative solver ran out of budget before reaching tolerance.
    NoConvergence { what: &'static str },
    /// A word digit does not index a map of its system.
    InvalidDigit { digit: u8, map_count: usize },
    /// Concatenation requires the gluing square to have matching
    /// orientation products on both sides.
    OrientationMismatch,
    /// Transitivity needs the two pairs to share a square.
    NoSharedSquare,
    /// Transitivity is only valid below log 2.
    EpsilonTooLarge { eps: f64 },
    /// Padding search hit its word-length cap before balancing.
    SearchExhausted { cap: usize },
    /// Enumeration was cut off before it was exhaustive.
    BudgetExceeded { depth_reached: usize },
    /// An amplification rung could not produce its base witness.
    WitnessUnavailable { rung: usize },
    /// Projection scale must be positive.
    NonpositiveEta,
    /// A parameter outside its documented domain.
    DomainError { what: String },
    /// Malformed input file.
    ParseError { context: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySystem => write!(f, "system has no maps"),
            Error::RatioOutOfRange { context } => {
                write!(f, "contraction ratio out of (0,1): {context}")
            }
            Error::NoConvergence { what } => write!(f, "no convergence in {what}"),
            Error::InvalidDigit { digit, map_count } => {
                write!(f, "digit {digit} invalid for a system with {map_count} maps")
            }
            Error::OrientationMismatch => {
                write!(f, "gluing square has mismatched orientation products")
            }
            Error::NoSharedSquare => write!(f, "pairs do not share a square"),
            Error::EpsilonTooLarge { eps } => {
                write!(f, "epsilon {eps} is not below log 2")
            }
            Error::SearchExhausted { cap } => {
                write!(f, "padding search exhausted at word-length cap {cap}")
            }
            Error::BudgetExceeded { depth_reached } => {
                write!(f, "search budget exceeded (depth reached {depth_reached})")
            }
            Error::WitnessUnavailable { rung } => {
                write!(f, "no base witness available at amplification rung {rung}")
            }
            Error::NonpositiveEta => write!(f, "eta must be positive"),
            Error::DomainError { what } => write!(f, "domain error: {what}"),
            Error::ParseError { context } => write!(f, "parse error: {context}"),
        }
    }
}

impl std::error::Error for Error {}
