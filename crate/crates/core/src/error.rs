use thiserror::Error;

/// Errors raised by the geometry kernels.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad input from the caller: malformed matrices, out-of-range indices,
    /// unsupported parameter combinations.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("unsupported prime {0}: expected one of 2, 3, 5, 7")]
    UnsupportedPrime(u32),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    /// A form whose polar form has a nontrivial radical.
    #[error("degenerate form: the polar form has a radical of dimension {radical_dim}")]
    DegenerateForm { radical_dim: usize },

    /// The parameters do not describe a valid building / Kneser graph.
    #[error("invalid building spec: {0}")]
    InvalidSpec(String),

    /// A lemma hypothesis is not satisfied, so the lemma has nothing to say.
    #[error("precondition not met: {0}")]
    PreconditionUnmet(String),

    /// One of the counterexample fixtures did not check out. The fixtures
    /// are mathematically guaranteed, so this means a kernel bug or a
    /// corrupted golden file.
    #[error("fixture integrity failure in {case}: {assertion}")]
    FixtureIntegrity { case: String, assertion: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}
