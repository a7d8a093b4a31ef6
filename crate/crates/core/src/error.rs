use thiserror::Error;

/// Errors surfaced by the library.
///
/// Contract violations that can only arise from buggy callers (mixing series
/// orders, inverting a series with zero constant term) panic instead; these
/// variants cover conditions reachable from user input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A brute-force enumeration was asked to exceed its configured guard.
    #[error("{what}: requested size {requested} exceeds enumeration guard {bound}")]
    EnumerationGuard {
        what: &'static str,
        requested: u64,
        bound: u64,
    },

    /// A numeric evaluation was asked for a point outside the closed form's domain.
    #[error("domain violation: {constraint}")]
    Domain { constraint: String },

    /// A Pochhammer factor in a hypergeometric-type term vanished.
    #[error("pole: ({symbol})_{j} = 0")]
    Pole { symbol: String, j: u64 },

    /// A one-line word that is not a permutation of 1..=n.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// An inversion sequence entry out of range, or mismatched lengths.
    #[error("invalid inversion sequence: {0}")]
    InvalidInversionSequence(String),

    /// `run_suite` was called with a name outside the suite registry.
    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
