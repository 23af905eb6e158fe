use thiserror::Error;

/// Errors reported by the lattice, tube, band and oracle routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("chirality vector must be nonzero")]
    ZeroChirality,
    #[error("chirality components must sum to 0, got sum {0}")]
    NonzeroSum(i64),
    #[error("chirality {0:?} violates c0 > c1 >= c2")]
    OrderingViolation([i64; 3]),
    #[error("lattice site {0:?} has coordinate sum outside {{0, 1}}")]
    InvalidSite([i64; 3]),
    #[error("translation {0:?} does not have zero coordinate sum")]
    InvalidTranslation([i64; 3]),
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },
    #[error("dispersion is not differentiable at a zero of E (k = {0:?})")]
    SingularPoint([f64; 3]),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("spectrum length mismatch: finite {finite}, analytic {analytic}")]
    LengthMismatch { finite: usize, analytic: usize },
    #[error("inconsistent adjacency at site {site}")]
    InconsistentAdjacency { site: usize },
    #[error("unknown symmetry generator '{0}'")]
    UnknownGenerator(char),
}

pub type Result<T> = std::result::Result<T, Error>;
