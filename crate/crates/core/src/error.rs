use thiserror::Error;

/// Error type shared by all modules.
///
/// The CLI maps these onto exit codes: domain errors exit 1, usage errors
/// exit 2 (handled by the argument parser), verification failures exit 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input. `offset` is the byte position within the line
    /// at which decoding failed.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6Parse { offset: usize, message: String },

    /// The input decoded to a well-formed graph that is not a tree.
    #[error("not a tree: {0}")]
    NotATree(String),

    /// A parameter is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Enumeration or search over an order large enough to be a footgun.
    /// Overridable where the caller explicitly opts in.
    #[error(
        "refusing to enumerate trees of order {n} (guard at n = {guard}); \
         pass the override flag to proceed"
    )]
    SizeGuard { n: usize, guard: usize },

    /// The operation requires at least one edge (order >= 2); the one-vertex
    /// tree has no degree profile identities to check.
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
