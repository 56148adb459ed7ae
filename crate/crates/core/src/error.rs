use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForgeError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square")]
    NotSquare,
    #[error("elements belong to different algebras")]
    MixedAlgebras,
    #[error("algebra has no polar form")]
    MissingForm,
    #[error("algebra is not a Hurwitz algebra: {0}")]
    NotHurwitz(String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("algebra has no unity")]
    NoUnity,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("automorphism order does not divide 3")]
    NotOrderDividing3,
    #[error("parameters must be nonzero")]
    ZeroParameter,
    #[error("hypotheses fail: {0}")]
    HypothesesFail(String),
    #[error("no isotropic vector with nonzero cubic value found in the bounded search")]
    SearchExhausted,
    #[error("map is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("grading does not verify")]
    Unverified,
    #[error("homomorphism is not well defined on torsion")]
    IllDefinedHom,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("not a symmetric composition algebra")]
    NotSymmetricComposition,
    #[error("unsupported dimensions: {0}")]
    BadDimensions(String),
    #[error("incompatible inputs: {0}")]
    IncompatibleInputs(String),
    #[error("unknown scenario '{0}'")]
    UnknownScenario(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for ForgeError {
    fn from(e: std::io::Error) -> Self {
        ForgeError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, ForgeError>;
