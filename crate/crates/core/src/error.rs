use thiserror::Error;

/// Errors produced by matroid construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A subset, label or parameter does not belong to the relevant universe.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Input data failed structural validation.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A rank function violated one of the matroid axioms.
    #[error("axiom {axiom} violated: {detail}")]
    AxiomViolation { axiom: Axiom, detail: String },

    /// An exponential procedure was refused because it exceeds a configured limit.
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),

    /// A parameter outside the supported range.
    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    /// A reduction procedure produced a state its construction rules out.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The three rank axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Axiom {
    /// `0 <= r(A) <= |A|`
    R1,
    /// monotonicity
    R2,
    /// submodularity
    R3,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::R1 => "R1",
            Axiom::R2 => "R2",
            Axiom::R3 => "R3",
        };
        f.write_str(s)
    }
}
