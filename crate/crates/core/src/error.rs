use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Series substituted into a composition (or exponential) has a nonzero
    /// constant term.
    CompositionAtNonzeroConstant,
    /// A coefficient beyond the retained truncation order was requested.
    OrderTooSmall { need: usize, have: usize },
    /// Operation requires a connected graph.
    Disconnected,
    /// Weighted metric requested on a graph without edge weights.
    MissingWeights,
    /// Class name not one of trees, forb_c4, forb_c5, cacti, outerplanar.
    UnknownClass(String),
    /// A sampler distribution failed its normalization or domain check.
    ParameterOutOfRange(String),
    /// Recursive sampler exceeded the frame budget; indicates a bug, not bad luck.
    SamplerRunaway,
    /// The linear system for the outerplanar scaling factor is singular.
    SingularSystem,
    /// Bisection bracket search left the series' convergence region without a
    /// sign change; the class is not subcritical.
    NoBracket,
    /// Requested size violates the span congruence n = 1 mod d.
    InfeasibleSize { n: usize, span: usize },
    /// Weight distribution admits non-positive weights.
    NonPositiveWeight,
    /// Statistic of an empty sample requested.
    EmptySample,
    /// Limit-law survival function evaluated below its supported domain.
    DomainTooSmall { x: f64, x_min: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CompositionAtNonzeroConstant => {
                write!(f, "inner series must have zero constant term")
            }
            Error::OrderTooSmall { need, have } => {
                write!(f, "series order {have} too small, need at least {need}")
            }
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::MissingWeights => write!(f, "graph has no edge weights"),
            Error::UnknownClass(name) => write!(f, "unknown graph class '{name}'"),
            Error::ParameterOutOfRange(what) => write!(f, "parameter out of range: {what}"),
            Error::SamplerRunaway => write!(f, "recursive sampler exceeded frame budget"),
            Error::SingularSystem => write!(f, "scaling-factor linear system is singular"),
            Error::NoBracket => write!(f, "no sign change found; class not subcritical"),
            Error::InfeasibleSize { n, span } => {
                write!(f, "size {n} infeasible: need n = 1 mod {span}")
            }
            Error::NonPositiveWeight => write!(f, "weight distribution admits w <= 0"),
            Error::EmptySample => write!(f, "empty sample"),
            Error::DomainTooSmall { x, x_min } => {
                write!(f, "x = {x} below supported domain x >= {x_min}")
            }
        }
    }
}

impl std::error::Error for Error {}
