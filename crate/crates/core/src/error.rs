use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("coefficient not representable in the current tower")]
    CoefficientNotRepresentable,
    #[error("extension depth exceeded (limit {limit})")]
    ExtensionDepthExceeded { limit: usize },
    #[error("matrix is not unimodular with admissible entries")]
    NotUnimodular,
    #[error("input has a repeated factor")]
    NonReducedInput,
    #[error("inputs share a common component through the origin")]
    CommonComponent,
    #[error("maximum resolution depth exceeded")]
    MaxDepthExceeded,
    #[error("germ does not vanish at the origin")]
    NotVanishing,
    #[error("operation requires a convenient Newton boundary")]
    NotConvenient,
    #[error("operation requires non-degenerate faces")]
    DegenerateFace,
    #[error("model germ construction failed: {0}")]
    ModelConstructionFailed(String),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Stable machine-readable code for the CLI surface.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::CoefficientNotRepresentable => "CoefficientNotRepresentable",
            Error::ExtensionDepthExceeded { .. } => "ExtensionDepthExceeded",
            Error::NotUnimodular => "NotUnimodular",
            Error::NonReducedInput => "NonReducedInput",
            Error::CommonComponent => "CommonComponent",
            Error::MaxDepthExceeded => "MaxDepthExceeded",
            Error::NotVanishing => "NotVanishing",
            Error::NotConvenient => "NotConvenient",
            Error::DegenerateFace => "DegenerateFace",
            Error::ModelConstructionFailed(_) => "ModelConstructionFailed",
            Error::Invalid(_) => "Invalid",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
