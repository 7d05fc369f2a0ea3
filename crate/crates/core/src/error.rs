use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("invalid weight for letter `{letter}`: weights must be at least 1")]
    InvalidWeight { letter: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot parse coefficient `{0}`")]
    InvalidCoefficient(String),

    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("leading monomial/coefficient of the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid relation `{relation}`: {reason}")]
    InvalidRelation { relation: String, reason: String },

    #[error("rewrite system is not minimal: `{contained}` is a subword of `{container}`")]
    NotMinimal { contained: String, container: String },

    #[error("not a Gröbner basis: ambiguity `{word}` does not resolve")]
    NotGroebner { word: String },

    #[error("degree bound {bound} exceeded by new rule with leading monomial `{word}`")]
    BoundExceeded { word: String, bound: u64 },

    #[error("not an order ideal: `{word}` is present but its subword `{missing}` is not")]
    NotAnOim { word: String, missing: String },

    #[error("not an anti-chain: `{smaller}` is a subword of `{larger}`")]
    NotAnAntichain { smaller: String, larger: String },

    #[error("obstruction `{0}` is shorter than two letters")]
    ShortObstruction(String),

    #[error("word `{0}` is not in the poset")]
    NotInPoset(String),

    #[error("element is not in the kernel: {0}")]
    NotInKernel(String),

    #[error("leading term of the zero module element")]
    ZeroElement,

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("`{0}` is not a chain of the requested degree")]
    UnknownChain(String),

    #[error("homotopy did not terminate after {steps} steps on {element}")]
    NonTermination { steps: usize, element: String },

    #[error("invalid presentation file: {0}")]
    Json(String),
}
