use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mode mismatch: {0}")]
    ModeMismatch(&'static str),
    #[error("B- is undefined on a forest that is not a single tree")]
    NotATree,
    #[error("series constant term must be {expected}, got {found}")]
    ConstantTerm { expected: String, found: String },
    #[error("substitution requires positive valuation for a non-polynomial series")]
    ZeroValuation,
    #[error("series known only to order {have}, order {need} required")]
    SeriesTooShort { have: usize, need: usize },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("tree is not admissible")]
    NotAdmissible,
    #[error("word {0:?} is not generic")]
    NotGeneric(Vec<u8>),
    #[error("letter {letter} out of range 1..={d}")]
    LetterOutOfRange { letter: u8, d: u8 },
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error("cannot parse series {0:?}: {1}")]
    BadSeries(String, String),
    #[error("decode error at {path}: {reason}")]
    Decode { path: String, reason: String },
    #[error("element has no expression in the generator basis")]
    NotInSpan,
}

pub type Result<T> = std::result::Result<T, Error>;
