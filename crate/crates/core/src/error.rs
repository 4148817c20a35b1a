use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no root set")]
    ZeroPolynomial,

    #[error("denominator is identically zero")]
    ZeroDenominator,

    #[error("constant input where a non-constant function is required")]
    ConstantInput,

    #[error("input is not a Belyi function (critical values leave {{-1, 1, inf}})")]
    NotBelyi,

    #[error("degenerate Moebius transformation (ad - bc = 0)")]
    DegenerateMoebius,

    #[error("apply circle Moebius first: 0 or inf is a critical point")]
    RotationPrecondition,

    #[error("rotation search exhausted the unit-circle grid")]
    RotationNotFound,

    #[error("continuation stalled at seed {seed} (t = {t}): corrector failed below minimum step")]
    TraceStall { seed: num_complex::Complex64, t: f64 },

    #[error("infinite intersection: the lemniscates share a component")]
    InfiniteIntersection,

    #[error("preimage intersection is infinite off the real line - decomposition case")]
    DecompositionCase,

    #[error("degree of the inner factor does not divide both outer degrees")]
    DegreeMismatch,

    #[error("composite denominator is identically zero, contradicting the certificate")]
    DegenerateCertificate,

    #[error("{0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
